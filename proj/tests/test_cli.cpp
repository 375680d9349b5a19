#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"

using namespace wildmass::cli;

namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "wildmass");
    std::vector<char*> argv;
    for (auto& a : args)
        argv.push_back(a.data());
    std::ostringstream out, err;
    int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json invoke_json(std::vector<std::string> args, int expected_code = exit_ok)
{
    auto r = invoke(std::move(args));
    EXPECT_EQ(r.code, expected_code) << r.out << r.err;
    return nlohmann::json::parse(r.out);
}

}  // namespace

TEST(Cli, MassOfDoubledDefiningRep)
{
    auto j = invoke_json({"mass", "--group", "Sn:3", "--rep", "2sigma", "--counting", "weight"});
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["mass"], "1 + q + q^2");
    EXPECT_EQ(j["classes"].size(), 3u);
}

TEST(Cli, MassWithJsonSpecs)
{
    auto j = invoke_json({"mass", "--group", "[[2,3,1]]", "--rep", R"({"kind":"regular"})", "--q-class", "2"});
    EXPECT_EQ(j["mass"], "1");
    auto k = invoke_json({"mass", "--group", "Cyclic:3", "--rep",
                          R"({"kind":"sum","parts":[{"kind":"diagonal","characters":[["1/3"]]},{"kind":"dual","of":{"kind":"diagonal","characters":[["1/3"]]}}]})"});
    EXPECT_EQ(k["mass"], "1 + 2q");
}

TEST(Cli, PadicBhargava)
{
    auto j = invoke_json({"padic", "bhargava", "--p", "2", "--n", "2"});
    EXPECT_EQ(j["lhs"], "3/2");
    EXPECT_EQ(j["rhs"], "3/2");
    EXPECT_EQ(j["ok"], true);
    EXPECT_EQ(j["algebras"].size(), 8u);
}

TEST(Cli, PadicOtherSubcommands)
{
    EXPECT_EQ(invoke_json({"padic", "hilb", "--p", "3", "--n", "3"})["lhs"], "13");
    auto serre = invoke_json({"padic", "serre-check", "--p", "2", "--f", "2", "--e", "2"});
    EXPECT_EQ(serre["lhs"], "1/4");
    EXPECT_EQ(serre["count"], 14);
    auto pp = invoke_json({"padic", "per-partition", "--p", "2", "--n", "3"});
    EXPECT_EQ(pp["partitions"].size(), 3u);
    auto one = invoke_json({"padic", "per-partition", "--p", "2", "--n", "2", "--partition", "2"});
    EXPECT_EQ(one["partitions"][0]["lhs"], "1/2");
    auto en = invoke_json({"padic", "enumerate", "--p", "3", "--e", "2"});
    EXPECT_EQ(en["extensions"][0]["label"], "3.1.2.1.1");
}

TEST(Cli, PartitionsAndDuality)
{
    auto j = invoke_json({"partitions", "--n", "4"});
    EXPECT_EQ(j["count"], "5");
    EXPECT_EQ(j["hilbert_origin_count"], "1 + q + 2q^2 + q^3");
    EXPECT_EQ(invoke_json({"partitions", "--n", "5", "--parts", "2"})["count"], "2");
    auto d = invoke_json({"duality", "--n", "6"});
    EXPECT_EQ(d["ok"], true);
    EXPECT_EQ(d["masses_ok"], true);
}

TEST(Cli, Conductor)
{
    auto j = invoke_json({"conductor", "--p", "3", "--n", "2", "--j", "4"});
    EXPECT_EQ(j["artin"], 5);
    EXPECT_EQ(j["two_t_minus_a"], -3);
    EXPECT_EQ(j["weight_doubled"], -2);
    auto f = invoke_json({"conductor", "--n", "2", "--filtration", "[[1,1],[2,1]]"});
    EXPECT_EQ(f["artin"], "3/2");
}

TEST(Cli, McKayCheck)
{
    EXPECT_EQ(invoke_json({"mckay-check", "--group", "Sn:4", "--rep", "2sigma"})["ok"], true);
    auto bad = invoke_json({"mckay-check", "--group", "Cyclic:3", "--rep", "regular", "--expected",
                            R"({"r":1,"terms":[[0,1,1,1],[1,1,1,1]]})"},
                           exit_identity_failed);
    EXPECT_EQ(bad["difference"], "q");
    invoke_json({"mckay-check", "--group", "Sn:3", "--rep", "sigma", "--expected", R"({"r":1,"terms":[]})"},
                exit_config_error);
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(invoke({"mass", "--group", "Sn:0"}).code, exit_config_error);
    EXPECT_EQ(invoke({"mass", "--group", "Cyclic:3", "--rep", "regular", "--q", "3"}).code, exit_config_error);
    EXPECT_EQ(invoke({"nonsense"}).code, exit_config_error);
    EXPECT_EQ(invoke({"padic", "enumerate", "--p", "2", "--e", "4"}).code, exit_exhausted);
    EXPECT_EQ(invoke({"padic", "enumerate", "--p", "4", "--e", "2"}).code, exit_config_error);
    auto r = invoke({"mass", "--group", "[[1,2],[2,1,3]]"});
    EXPECT_EQ(r.code, exit_config_error);
}

TEST(Cli, Suites)
{
    auto tame = invoke_json({"verify", "--suite", "tame-mckay"});
    EXPECT_EQ(tame["ok"], true);
    auto cmp = invoke_json({"verify", "--suite", "comparisons", "--cases", "50"});
    EXPECT_EQ(cmp["ok"], true);
    auto wild = invoke_json({"verify", "--suite", "wild-mass"});
    EXPECT_EQ(wild["ok"], true);
}

TEST(Cli, ReportsAreByteStable)
{
    std::vector<std::string> args{"padic", "bhargava", "--p", "3", "--n", "3"};
    EXPECT_EQ(invoke(args).out, invoke(args).out);
    std::vector<std::string> cmp{"verify", "--suite", "comparisons", "--cases", "20", "--seed", "9"};
    EXPECT_EQ(invoke(cmp).out, invoke(cmp).out);
}

TEST(Cli, TableFormat)
{
    auto r = invoke({"--format", "table", "padic", "bhargava", "--p", "2", "--n", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("lhs: 3/2"), std::string::npos);
    auto late = invoke({"padic", "bhargava", "--p", "2", "--n", "2", "--format", "table"});
    EXPECT_EQ(late.out, r.out);
}
