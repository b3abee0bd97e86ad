#include "cli.hpp"
#include "test_support.hpp"

#include "binmom/formula.hpp"
#include "binmom/oracle.hpp"
#include "binmom/scalar.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <sstream>

using namespace binmom;
using binmom::testing::golden_path;
using binmom::testing::read_file;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(const std::vector<std::string>& args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, DeriveExamples)
{
    EXPECT_EQ(run_cli({"derive", "--kind", "central", "--d", "4", "--basis", "variance"}).out,
              "3*n^2*s2^2 + n*(-6*s2^2 + s2)\n");
    EXPECT_EQ(run_cli({"derive", "--kind", "raw", "--d", "2"}).out, "n*p + n*(n-1)*p^2\n");
    EXPECT_EQ(run_cli({"derive", "--kind", "central", "--d", "2", "--basis", "p"}).out, "n*p*(1-p)\n");
}

TEST(Cli, DeriveJsonRoundTrips)
{
    const auto r = run_cli({"derive", "--kind", "central", "--d", "7", "--basis", "variance", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    const FormulaDoc f = formula_from_json(j);
    EXPECT_TRUE(f.odd_factor);
    EXPECT_EQ(j.at("latex").get<std::string>(), render_formula(f, Style::Latex));
    EXPECT_EQ(evaluate_formula(f, 9, make_rational(1, 3)),
              oracle_moment(9, make_rational(1, 3), 7, MomentKind::Central).value);
}

TEST(Cli, TableMatchesGoldenFiles)
{
    const auto text = run_cli({"table", "--kind", "central", "--basis", "variance"});
    EXPECT_EQ(text.code, 0);
    EXPECT_EQ(text.out, read_file(golden_path("central_variance_text.txt")));
}

TEST(Cli, DeterministicOutput)
{
    const std::vector<std::string> args{"table", "--kind", "raw", "--from", "0", "--to", "12", "--format", "json"};
    EXPECT_EQ(run_cli(args).out, run_cli(args).out);
}

TEST(Cli, EvalExamples)
{
    const auto a = run_cli({"eval", "--kind", "central", "--d", "4", "--n", "2", "--p", "1/2"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out.substr(0, a.out.find('\n')), "1/2");
    EXPECT_NE(a.out.find("decimal approximation: 0.5"), std::string::npos);

    const auto b = run_cli({"eval", "--kind", "raw", "--d", "1", "--n", "10", "--p", "0.3"});
    EXPECT_EQ(b.code, 0);
    EXPECT_EQ(b.out.substr(0, b.out.find('\n')), "3");
    EXPECT_FALSE(b.err.empty());
}

TEST(Cli, UsageErrorsExitTwo)
{
    EXPECT_EQ(run_cli({"derive", "--kind", "raw", "--d", "3", "--basis", "variance"}).code, cli::kUsageError);
    EXPECT_EQ(run_cli({"derive"}).code, cli::kUsageError);
    EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kUsageError);
    EXPECT_EQ(run_cli({"eval", "--kind", "raw", "--d", "2", "--n", "3", "--p", "3/2"}).code, cli::kUsageError);
    EXPECT_EQ(run_cli({"eval", "--kind", "raw", "--d", "2", "--n", "3", "--p", "x"}).code, cli::kUsageError);
    EXPECT_EQ(run_cli({"derive", "--kind", "sideways", "--d", "2"}).code, cli::kUsageError);
}

TEST(Cli, FigureDataExactColumn)
{
    const auto r = run_cli({"figure-data", "--d", "6", "--n-from", "0", "--n-to", "3", "--p-steps", "4", "--exact"});
    ASSERT_EQ(r.code, 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "n,p,value,exact");
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        std::istringstream fields(line);
        std::string n;
        std::string p;
        std::string value;
        std::string exact;
        std::getline(fields, n, ',');
        std::getline(fields, p, ',');
        std::getline(fields, value, ',');
        std::getline(fields, exact, ',');
        const Rational pr = parse_rational(p);
        const Rational want = oracle_moment(static_cast<std::uint32_t>(std::stoul(n)), pr, 6, MomentKind::Central).value;
        EXPECT_EQ(parse_rational(exact), want) << line;
        EXPECT_EQ(value, to_decimal(want)) << line;
    }
    EXPECT_EQ(rows, 4u * 5u);
}

TEST(Cli, OutFlagWritesFile)
{
    const auto path = std::filesystem::temp_directory_path() / "binmom_cli_out_test.txt";
    std::filesystem::remove(path);
    const auto r = run_cli({"derive", "--kind", "factorial", "--d", "3", "--out", path.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(read_file(path.string()), "n*(n-1)*(n-2)*p^3\n");
    std::filesystem::remove(path);
}

TEST(Cli, CheckSuitePasses)
{
    const auto r = run_cli({"check", "--suite", "algs", "--dmax", "8"});
    EXPECT_EQ(r.code, 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    EXPECT_TRUE(j.at("passed").get<bool>());
    EXPECT_NE(r.err.find("PASS"), std::string::npos);
}
