#include <map>
#include <random>

#include <gtest/gtest.h>

#include "wildmass/errors.hpp"
#include "wildmass/padic/extensions.hpp"

using namespace wildmass;
using namespace wildmass::padic;

namespace {

EnumerationOptions single_thread()
{
    EnumerationOptions o;
    o.threads = 1;
    return o;
}

std::map<std::pair<int, int>, int> inventory(std::vector<LocalFieldExt> const& exts)
{
    std::map<std::pair<int, int>, int> inv;
    for (auto const& x : exts)
        ++inv[{x.d, x.aut_count}];
    return inv;
}

EisensteinPoly eisenstein(long p, std::vector<std::int64_t> coeffs)
{
    EisensteinPoly g{p, 1, {}};
    for (auto c : coeffs)
        g.coeffs.push_back({c});
    return g;
}

}  // namespace

TEST(Precision, Bounds)
{
    EXPECT_EQ(max_disc_exponent(2, 2), 3);
    EXPECT_EQ(max_disc_exponent(3, 3), 5);
    EXPECT_EQ(max_disc_exponent(5, 2), 1);
    EXPECT_EQ(max_disc_exponent(2, 4), 11);
    EXPECT_EQ(starting_precision(2, 2), 5);
    EXPECT_EQ(krasner_digits(3, 2, 0), 4);
    EXPECT_EQ(krasner_digits(3, 2, 1), 3);
}

TEST(Eisenstein, Validation)
{
    EXPECT_NO_THROW(validate_eisenstein(eisenstein(2, {2, 0})));
    EXPECT_THROW(validate_eisenstein(eisenstein(2, {4, 0})), domain_error);
    EXPECT_THROW(validate_eisenstein(eisenstein(2, {2, 1})), domain_error);
    EXPECT_THROW(validate_eisenstein(eisenstein(3, {1, 3})), domain_error);
}

TEST(Eisenstein, OreExponentMatchesResultant)
{
    std::mt19937 rng(29);
    for (int i = 0; i < 300; ++i) {
        long p = i % 3 == 0 ? 3 : 2;
        int e = 2 + i % 4;
        std::vector<std::int64_t> coeffs(e);
        for (int k = 0; k < e; ++k)
            coeffs[k] = p * std::uniform_int_distribution<std::int64_t>(0, 60)(rng);
        if (coeffs[0] % (p * p) == 0)
            coeffs[0] += p;
        auto g = eisenstein(p, coeffs);
        int d = ore_disc_exponent(g);
        EXPECT_GE(d, e - 1);
        EXPECT_LE(d, max_disc_exponent(p, e));
        EXPECT_EQ(disc_exponent_by_resultant(g), d);
    }
}

TEST(Eisenstein, CandidatesHaveRequestedExponent)
{
    for (int d = 1; d <= 3; ++d)
        for (auto const& g : eisenstein_candidates(2, 1, 2, d)) {
            EXPECT_NO_THROW(validate_eisenstein(g));
            EXPECT_EQ(ore_disc_exponent(g), d);
        }
}

TEST(Enumeration, DyadicQuadratics)
{
    auto exts = enumerate_extensions(2, 1, 2, single_thread());
    ASSERT_EQ(exts.size(), 6u);
    EXPECT_EQ(inventory(exts), (std::map<std::pair<int, int>, int>{{{2, 2}, 2}, {{3, 2}, 4}}));
    EXPECT_EQ(exts.front().label, "2.1.2.2.1");
    EXPECT_EQ(exts.back().label, "2.1.2.3.4");
}

TEST(Enumeration, OddQuadratics)
{
    for (long p : {3L, 5L, 7L, 11L}) {
        auto exts = enumerate_extensions(p, 1, 2);
        EXPECT_EQ(inventory(exts), (std::map<std::pair<int, int>, int>{{{1, 2}, 2}})) << p;
    }
}

TEST(Enumeration, TameDegreesHaveMinimalExponent)
{
    for (auto [p, f, e] : {std::tuple{3L, 1, 2}, {5L, 1, 3}, {7L, 1, 3}, {3L, 1, 4}, {2L, 1, 3}, {2L, 2, 3}, {5L, 1, 4}})
        for (auto const& x : enumerate_extensions(p, f, e))
            EXPECT_EQ(x.d, e - 1);
}

TEST(Enumeration, SerreIdentityIsExact)
{
    for (auto [p, f, e] :
         {std::tuple{2L, 1, 2}, {3L, 1, 2}, {2L, 1, 3}, {3L, 1, 3}, {5L, 1, 2}, {2L, 2, 2}, {3L, 2, 2}, {2L, 2, 3},
          {5L, 1, 3}, {7L, 1, 3}, {5L, 1, 4}, {3L, 1, 4}}) {
        auto exts = enumerate_extensions(p, f, e);
        auto c = serre_mass_check(exts, p, f, e);
        EXPECT_TRUE(c.ok) << p << " " << f << " " << e << ": " << c.lhs << " vs " << c.rhs;
    }
    auto c = serre_mass_check(enumerate_extensions(2, 1, 2), 2, 1, 2);
    EXPECT_EQ(c.lhs, Rat(1, 2));
    auto c3 = serre_mass_check(enumerate_extensions(3, 1, 3), 3, 1, 3);
    EXPECT_EQ(c3.rhs, Rat(1, 9));
}

TEST(Enumeration, MatchesPublishedCounts)
{
    // ramified cubics over Q_3 and quadratics over the unramified quadratic extension of Q_2
    EXPECT_EQ(inventory(enumerate_extensions(3, 1, 3)),
              (std::map<std::pair<int, int>, int>{{{3, 1}, 2}, {{4, 1}, 1}, {{4, 3}, 3}, {{5, 1}, 3}}));
    EXPECT_EQ(enumerate_extensions(2, 2, 2).size(), 14u);
}

TEST(Enumeration, NonGaloisCubicOverQ2)
{
    auto exts = enumerate_extensions(2, 1, 3);
    ASSERT_EQ(exts.size(), 1u);
    EXPECT_EQ(exts[0].aut_count, 1);
    EXPECT_EQ(exts[0].d, 2);
}

TEST(Enumeration, UniformPrecisionAgrees)
{
    for (auto [p, f, e] : {std::tuple{2L, 1, 2}, {3L, 1, 2}, {5L, 1, 2}, {2L, 1, 3}, {2L, 2, 2}}) {
        EnumerationOptions uniform;
        uniform.uniform_precision = true;
        uniform.budget = slow_budget;
        auto a = enumerate_extensions(p, f, e);
        auto b = enumerate_extensions(p, f, e, uniform);
        EXPECT_EQ(inventory(a), inventory(b)) << p << " " << f << " " << e;
        ASSERT_EQ(a.size(), b.size());
        // the class lists are the same up to choice of representatives
        for (std::size_t i = 0; i < a.size(); ++i) {
            int matches = 0;
            for (auto const& y : b)
                matches += isomorphic(a[i], y);
            EXPECT_EQ(matches, 1);
        }
    }
}

TEST(Enumeration, StableUnderExtraDigits)
{
    EnumerationOptions o;
    o.verify_stability = true;
    o.budget = slow_budget;
    EXPECT_NO_THROW(enumerate_extensions(2, 1, 2, o));
    EXPECT_NO_THROW(enumerate_extensions(3, 1, 3, o));
}

TEST(Enumeration, ThreadedMatchesSerial)
{
    EnumerationOptions threaded;
    threaded.threads = 4;
    for (auto [p, f, e] : {std::tuple{2L, 1, 2}, {3L, 1, 3}, {2L, 2, 2}}) {
        auto a = enumerate_extensions(p, f, e, single_thread());
        auto b = enumerate_extensions(p, f, e, threaded);
        ASSERT_EQ(a.size(), b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            EXPECT_EQ(a[i].label, b[i].label);
            EXPECT_EQ(a[i].defining, b[i].defining);
        }
    }
}

TEST(Enumeration, Budget)
{
    EXPECT_THROW(enumerate_extensions(2, 1, 4), budget_exceeded);
    EnumerationOptions tiny;
    tiny.budget = 3;
    EXPECT_THROW(enumerate_extensions(2, 1, 2, tiny), budget_exceeded);
}

TEST(Enumeration, UnramifiedDegreeOne)
{
    auto exts = enumerate_extensions(3, 2, 1);
    ASSERT_EQ(exts.size(), 1u);
    EXPECT_EQ(exts[0].d, 0);
    EXPECT_EQ(exts[0].aut_count, 1);
}

TEST(RootCount, Examples)
{
    auto base = enumerate_extensions(3, 1, 1)[0];
    // x^2 - 2: 2 is not a square mod 3
    EXPECT_EQ(panayi_root_count({{-2}, {0}, {1}}, base), 0);
    EXPECT_EQ(panayi_root_count({{-1}, {0}, {1}}, base), 2);
    EXPECT_EQ(panayi_root_count({{-5}, {1}}, base), 1);
    for (auto const& x : enumerate_extensions(5, 1, 2)) {
        EXPECT_EQ(panayi_root_count(x.defining.as_base_poly(), x), 2);
        EXPECT_EQ(panayi_root_count({{-7}, {1}}, x), 1);
    }
    // x^2 - 3 over Q_3(sqrt 3) is Galois
    LocalFieldExt l;
    l.p = 3;
    l.e = 2;
    l.d = 1;
    l.defining = eisenstein(3, {-3, 0});
    l.precision = starting_precision(3, 2);
    EXPECT_EQ(panayi_root_count({{-3}, {0}, {1}}, l), 2);
}

TEST(Isomorphism, SymmetricOnEnumeratedPairs)
{
    for (auto [p, f, e] : {std::tuple{2L, 1, 2}, {3L, 1, 3}, {2L, 2, 2}}) {
        auto exts = enumerate_extensions(p, f, e);
        for (std::size_t i = 0; i < exts.size(); ++i)
            for (std::size_t j = 0; j < exts.size(); ++j) {
                bool ij = isomorphic(exts[i], exts[j]);
                EXPECT_EQ(ij, isomorphic(exts[j], exts[i]));
                EXPECT_EQ(ij, i == j);
            }
    }
}

TEST(Isomorphism, EveryCandidateLandsInOneClass)
{
    auto exts = enumerate_extensions(2, 1, 2);
    for (int d = 2; d <= 3; ++d)
        for (auto const& g : eisenstein_candidates(2, 1, 2, d)) {
            int hits = 0;
            for (auto const& x : exts)
                hits += x.d == d && count_roots_adaptive(x.defining, g.as_base_poly(), 5, true) > 0;
            EXPECT_EQ(hits, 1);
        }
}
