#include "dlcalc/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

using namespace dlcalc;

namespace {

struct Result
{
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);)
        out.push_back(l);
    return out;
}

}  // namespace

TEST(Cli, BettiCsv)
{
    auto r = call({"betti", "--max-degree", "10", "--format", "csv"});
    EXPECT_EQ(r.code, kExitOk);
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 12u);
    EXPECT_EQ(ls[0], "degree,dimension");
    EXPECT_EQ(ls[1], "0,1");
    EXPECT_EQ(ls[11], "10,118");
}

TEST(Cli, BettiJsonAndCache)
{
    auto dir = std::filesystem::temp_directory_path() / "dlcalc-cli-test-cache";
    std::filesystem::remove_all(dir);
    ::setenv("DLCALC_CACHE_DIR", dir.c_str(), 1);
    auto first = call({"betti", "--max-degree", "6", "--format", "json", "--tail", "zero"});
    EXPECT_TRUE(std::filesystem::exists(dir / "betti-zero-6.json"));
    auto second = call({"betti", "--max-degree", "6", "--format", "json", "--tail", "zero"});
    ::unsetenv("DLCALC_CACHE_DIR");
    EXPECT_EQ(first.code, kExitOk);
    EXPECT_EQ(first.out, second.out);
    auto ls = lines(first.out);
    ASSERT_EQ(ls.size(), 7u);
    EXPECT_EQ(ls[4], R"({"degree":4,"dim":7,"factors":{"omega2-image":3,"xi-kernel":3}})");
    std::filesystem::remove_all(dir);
}

TEST(Cli, VerifyWitness)
{
    auto r = call({"verify", "--target", "prop3.10"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("p_(2,1) + p_3"), std::string::npos);
}

TEST(Cli, VerifyCountsAndJson)
{
    auto r = call({"verify", "--target", "lemma3.7", "--max-degree", "12"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("lemma3.7: PASS (10/10)"), std::string::npos);
    EXPECT_NE(r.out.find("63 of 63"), std::string::npos);
    auto j = call({"verify", "--target", "lemma3.6", "--format", "json"});
    EXPECT_EQ(j.code, kExitOk);
    EXPECT_EQ(lines(j.out).back(), R"({"pass":true,"passed":3,"target":"lemma3.6","total":3})");
}

TEST(Cli, UsageErrors)
{
    auto t = call({"verify", "--target", "thm9"});
    EXPECT_EQ(t.code, kExitUsage);
    EXPECT_NE(t.err.find("lemma3.6"), std::string::npos);
    EXPECT_TRUE(t.out.empty());
    auto v = call({"frobnicate"});
    EXPECT_EQ(v.code, kExitUsage);
    EXPECT_NE(v.err.find("map-eval"), std::string::npos);
    EXPECT_EQ(call({}).code, kExitUsage);
    EXPECT_EQ(call({"poincare", "--space", "cp-inf"}).code, kExitUsage);
    EXPECT_EQ(call({"betti", "--tail", "lifted"}).code, kExitUsage);
    EXPECT_EQ(call({"poincare", "--max-degree", "40"}).code, kExitUsage);
    EXPECT_EQ(call({"basis"}).code, kExitUsage);
    EXPECT_EQ(call({"basis", "--degree", "2", "--format", "xml"}).code, kExitUsage);
    EXPECT_EQ(call({"poincare", "--space", "bspin2", "--reduced"}).code, kExitUsage);
}

TEST(Cli, Listings)
{
    auto b = call({"basis", "--degree", "2", "--space", "rp-inf", "--reduced"});
    EXPECT_EQ(b.code, kExitOk);
    EXPECT_EQ(lines(b.out), (std::vector<std::string>{"e_1^2", "e_2"}));
    auto p = call({"primitives", "--degree", "3", "--reduced"});
    EXPECT_NE(p.out.find("p_3 = e_3 + e_1*e_2 + e_1^3"), std::string::npos);
    auto q = call({"poincare", "--space", "bspin3", "--max-degree", "4", "--format", "csv"});
    EXPECT_EQ(lines(q.out).size(), 6u);
    auto m = call({"map-eval", "--degree", "3", "--tail", "zero"});
    EXPECT_NE(m.out.find("abar_1 -> Q^2 e_1 + e_3"), std::string::npos);
    auto c = call({"map-eval", "--map", "composite", "--degree", "4"});
    EXPECT_NE(c.out.find("b_1 -> a_1^2"), std::string::npos);
    auto e = call({"map-eval", "--element", "abar_0*abar_0"});
    EXPECT_EQ(e.code, kExitOk);
}

TEST(Cli, Deterministic)
{
    for (std::vector<std::string> args : {std::vector<std::string>{"verify", "--max-degree", "6"},
                                          std::vector<std::string>{"poincare", "--max-degree", "6", "--format", "json"},
                                          std::vector<std::string>{"map-eval", "--degree", "5"}}) {
        auto a = call(args), b = call(args);
        EXPECT_EQ(a.code, b.code);
        EXPECT_EQ(a.out, b.out);
    }
}
