#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "wildmass/errors.hpp"
#include "wildmass/padic/cache.hpp"

using namespace wildmass;
using namespace wildmass::padic;
namespace fs = std::filesystem;

namespace {

class CacheTest : public ::testing::Test {
  protected:
    void SetUp() override
    {
        std::random_device rd;
        dir_ = fs::temp_directory_path() / ("wildmass-cache-" + std::to_string(rd()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string read(fs::path const& f)
    {
        std::ifstream in(f);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }
    void write(fs::path const& f, std::string const& text) { std::ofstream(f, std::ios::trunc) << text; }

    fs::path dir_;
};

void expect_same(std::vector<LocalFieldExt> const& a, std::vector<LocalFieldExt> const& b)
{
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].label, b[i].label);
        EXPECT_EQ(a[i].d, b[i].d);
        EXPECT_EQ(a[i].aut_count, b[i].aut_count);
        EXPECT_EQ(a[i].defining, b[i].defining);
        EXPECT_EQ(a[i].precision, b[i].precision);
    }
}

}  // namespace

TEST_F(CacheTest, RoundTrip)
{
    ExtensionCache cache(dir_);
    for (auto [p, f, e] : {std::tuple{2L, 1, 2}, {2L, 2, 2}, {3L, 1, 3}}) {
        auto exts = enumerate_extensions(p, f, e);
        cache_store(cache, {p, f, e}, exts);
        auto back = cache_load(cache, {p, f, e});
        ASSERT_TRUE(back.has_value());
        expect_same(exts, *back);
    }
}

TEST_F(CacheTest, MissingKey)
{
    ExtensionCache cache(dir_);
    EXPECT_FALSE(cache_load(cache, {7, 1, 2}).has_value());
}

TEST_F(CacheTest, TamperedFileIsRejected)
{
    ExtensionCache cache(dir_);
    cache.store({2, 1, 2}, enumerate_extensions(2, 1, 2));
    auto file = cache.file_for({2, 1, 2});
    auto text = read(file);
    auto pos = text.find("\"d\":3");
    ASSERT_NE(pos, std::string::npos);
    text[pos + 4] = '2';
    write(file, text);
    EXPECT_THROW(cache.load({2, 1, 2}), corrupt_cache);
}

TEST_F(CacheTest, TruncatedFileIsRejected)
{
    ExtensionCache cache(dir_);
    cache.store({2, 1, 2}, enumerate_extensions(2, 1, 2));
    auto file = cache.file_for({2, 1, 2});
    auto text = read(file);
    write(file, text.substr(0, text.find('\n') + 1));
    EXPECT_THROW(cache.load({2, 1, 2}), corrupt_cache);
    write(file, "not json\n");
    EXPECT_THROW(cache.load({2, 1, 2}), corrupt_cache);
}

TEST_F(CacheTest, FileForAnotherKeyIsRejected)
{
    ExtensionCache cache(dir_);
    cache.store({3, 1, 2}, enumerate_extensions(3, 1, 2));
    fs::copy_file(cache.file_for({3, 1, 2}), cache.file_for({5, 1, 2}));
    EXPECT_THROW(cache.load({5, 1, 2}), corrupt_cache);
}

TEST_F(CacheTest, HitsSkipEnumeration)
{
    ExtensionCache cache(dir_);
    auto real = enumerate_extensions(3, 1, 2);
    auto planted = real;
    planted.pop_back();
    cache.store({3, 1, 2}, planted);
    // a cache hit returns the stored list verbatim
    expect_same(enumerate_extensions_cached(3, 1, 2, {}, &cache), planted);
    fs::remove(cache.file_for({3, 1, 2}));
    expect_same(enumerate_extensions_cached(3, 1, 2, {}, &cache), real);
    EXPECT_TRUE(fs::exists(cache.file_for({3, 1, 2})));
}
