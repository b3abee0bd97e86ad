// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include "cli.hpp"
#include "test_support.hpp"

#include "binmom/moments.hpp"
#include "binmom/oracle.hpp"
#include "binmom/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace binmom;
using binmom::testing::golden_path;
using binmom::testing::read_file;
using binmom::testing::read_golden_rows;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<Outcome()> body;
};

Outcome from_suites(const std::vector<SuiteReport>& reports)
{
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first;
    for (const auto& r : reports) {
        checks += r.checks.size();
        failures += r.failures();
        for (const auto& c : r.checks) {
            if (!c.passed && first.empty()) {
                first = r.suite + ": " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
            }
        }
    }
    std::string detail = std::to_string(checks) + " checks";
    if (failures > 0) {
        detail += ", " + std::to_string(failures) + " failed, first: " + first;
    }
    return {failures == 0, detail};
}

Outcome golden_rows(const std::string& file, const std::function<FormulaDoc(std::uint32_t)>& make)
{
    const auto rows = read_golden_rows(file);
    std::size_t matched = 0;
    for (const auto& [d, want] : rows) {
        const std::string got = render_formula(make(d), Style::Latex);
        if (got != want) {
            return {false, "order " + std::to_string(d) + " differs: " + got};
        }
        ++matched;
    }
    return {matched == 9, std::to_string(matched) + " rows byte-identical"};
}

Outcome central_variance_rows()
{
    for (const Method m : {Method::Alg1, Method::Alg2}) {
        const Outcome o = golden_rows("central_variance_latex.txt",
                                      [m](std::uint32_t d) { return central_moment_variance_form(d, m); });
        if (!o.ok) {
            return {false, std::string(to_string(m)) + ": " + o.detail};
        }
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run({"table", "--kind", "central", "--basis", "variance", "--from", "2", "--to", "10"}, out, err);
    if (code != 0 || out.str() != read_file(golden_path("central_variance_text.txt"))) {
        return {false, "CLI text table differs from the reference rows"};
    }
    return {true, "9 rows byte-identical via alg1 and alg2, CLI text table matches"};
}

Outcome figure_data()
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run({"figure-data", "--d", "6", "--n-from", "0", "--n-to", "99", "--exact"}, out, err);
    if (code != 0) {
        return {false, "figure-data exited with " + std::to_string(code) + ": " + err.str()};
    }
    std::vector<std::string> lines;
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    if (line != "n,p,value,exact") {
        return {false, "unexpected header: " + line};
    }
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    if (lines.size() != 100u * 21u) {
        return {false, "expected 2100 rows, got " + std::to_string(lines.size())};
    }
    std::mt19937 rng(6);
    std::uniform_int_distribution<std::size_t> pick(0, lines.size() - 1);
    for (int i = 0; i < 20; ++i) {
        const std::string& row = lines[pick(rng)];
        std::istringstream fields(row);
        std::string n;
        std::string p;
        std::string value;
        std::string exact;
        std::getline(fields, n, ',');
        std::getline(fields, p, ',');
        std::getline(fields, value, ',');
        std::getline(fields, exact, ',');
        const Rational want =
            oracle_moment(static_cast<std::uint32_t>(std::stoul(n)), parse_rational(p), 6, MomentKind::Central).value;
        if (parse_rational(exact) != want || value != to_decimal(want)) {
            return {false, "row '" + row + "' disagrees with oracle value " + to_string(want)};
        }
    }
    return {true, "2100 rows, 20 sampled rows equal the oracle exactly"};
}

Outcome bounds()
{
    const SuiteReport rep = check_bounds(16, 64);
    Outcome o = from_suites({rep});
    o.detail += ", ratio band [" + rep.extra["ratio_band"]["min"].get<std::string>() + ", " +
                rep.extra["ratio_band"]["max"].get<std::string>() + "]";
    return o;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "central moments over (n, sigma^2) reproduce the reference LaTeX rows, orders 2..10", 5,
         central_variance_rows},
        {2, "raw moments in the binomial basis reproduce the reference LaTeX rows, orders 2..10", 5,
         [] { return golden_rows("raw_latex.txt", raw_moment_via_factorial); }},
        {3, "every derivation route equals the density oracle, n <= 12, d <= 10, six p values", 60,
         [] { return from_suites({check_oracle(10, 12)}); }},
        {4, "independent derivation routes give identical polynomials, d <= 12", 60,
         [] { return from_suites({check_routes(12)}); }},
        {5, "variance-basis bodies lie in Z[n, sigma^2] with a (1-2p) factor exactly for odd d", 60,
         [] { return from_suites({check_algorithms(12), check_symmetry(12)}); }},
        {6, "exact upper and lower moment bounds, even d <= 16, n <= 64, p in {1/10, 1/4, 1/2}", 300, bounds},
        {7, "Stirling, associated Stirling and composition identities", 60,
         [] { return from_suites({check_combinatorics(12)}); }},
        {8, "figure data for d = 6 matches the oracle exactly on sampled grid points", 60, figure_data},
    };

    bool all_ok = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_seconds) {
            o.ok = false;
            o.detail += ", over the time limit";
        }
        all_ok = all_ok && o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << " AC" << c.id << " " << c.title << " [" << o.detail << "; "
                  << std::fixed << std::setprecision(2) << secs << "s / " << std::setprecision(0)
                  << c.limit_seconds << "s]\n";
    }
    std::cout << (all_ok ? "all acceptance criteria passed" : "acceptance FAILED") << "\n";
    return all_ok ? 0 : 1;
}
