#include "binmom/verify.hpp"

#include "binmom/asymptotics.hpp"
#include "binmom/combinatorics.hpp"
#include "binmom/moments.hpp"
#include "binmom/oracle.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <utility>

namespace binmom {

bool SuiteReport::passed() const
{
    return failures() == 0;
}

std::size_t SuiteReport::failures() const
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CheckRecord& c) { return !c.passed; }));
}

void SuiteReport::record(std::string name, bool ok, std::string detail)
{
    checks.push_back(CheckRecord{std::move(name), ok, std::move(detail)});
}

nlohmann::ordered_json SuiteReport::to_json() const
{
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["passed"] = passed();
    j["checks"] = checks.size();
    j["failures"] = failures();
    nlohmann::ordered_json failed = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        if (!c.passed) {
            failed.push_back({{"name", c.name}, {"detail", c.detail}});
        }
    }
    j["failed"] = failed;
    for (const auto& [key, value] : extra.items()) {
        j[key] = value;
    }
    return j;
}

std::vector<Rational> oracle_probabilities()
{
    return {Rational(0), Rational(1), make_rational(1, 2), make_rational(1, 3), make_rational(2, 7),
            make_rational(9, 10)};
}

namespace {

struct Route {
    std::string name;
    MomentKind kind;
    std::function<FormulaDoc(std::uint32_t)> derive;
};

std::vector<Route> all_routes()
{
    return {
        {"factorial", MomentKind::Factorial, factorial_moment},
        {"raw/factorial-route", MomentKind::Raw, raw_moment_via_factorial},
        {"raw/counting-route", MomentKind::Raw, raw_moment_via_counting},
        {"central/stable", MomentKind::Central, central_moment_stable},
        {"central/fast", MomentKind::Central, [](std::uint32_t d) { return central_moment_fast(d); }},
        {"central/from-raw", MomentKind::Central, central_moment_from_raw},
        {"central/alg1", MomentKind::Central,
         [](std::uint32_t d) { return central_moment_variance_form(d, Method::Alg1); }},
        {"central/alg2", MomentKind::Central,
         [](std::uint32_t d) { return central_moment_variance_form(d, Method::Alg2); }},
    };
}

std::string label(const std::string& route, std::uint32_t d)
{
    return route + " d=" + std::to_string(d);
}

} // namespace

SuiteReport check_oracle(std::uint32_t d_max, std::uint32_t n_max)
{
    SuiteReport rep{"oracle", {}, {}};
    const auto ps = oracle_probabilities();
    for (const auto& route : all_routes()) {
        for (std::uint32_t d = 0; d <= d_max; ++d) {
            const FormulaDoc f = route.derive(d);
            std::size_t mismatches = 0;
            std::string first;
            for (std::uint32_t n = 0; n <= n_max; ++n) {
                for (const auto& p : ps) {
                    const Rational got = evaluate_formula(f, n, p);
                    const Rational want = oracle_moment(n, p, d, route.kind).value;
                    if (got != want && mismatches++ == 0) {
                        first = "n=" + std::to_string(n) + " p=" + to_string(p) + ": formula " + to_string(got) +
                                ", oracle " + to_string(want);
                    }
                }
            }
            rep.record(label(route.name, d), mismatches == 0, first);
        }
    }
    return rep;
}

SuiteReport check_routes(std::uint32_t d_max)
{
    SuiteReport rep{"routes", {}, {}};
    for (std::uint32_t d = 0; d <= d_max; ++d) {
        rep.record(label("raw factorial-route == counting-route", d),
                   raw_moment_via_factorial(d).body == raw_moment_via_counting(d).body);

        const Poly stable_pq = central_moment_stable(d).body;
        const Poly fast_pq = central_moment_fast(d).body;
        const Poly stable = to_np(stable_pq);
        const Poly from_raw = central_moment_from_raw(d).body;
        rep.record(label("central stable == fast (p,q form)", d), stable_pq == fast_pq);
        rep.record(label("central stable == from-raw (n,p form)", d), stable == from_raw);
        rep.record(label("central alg1 expansion == from-raw", d),
                   formula_in_np(central_moment_variance_form(d, Method::Alg1)) == from_raw);
        rep.record(label("central alg2 expansion == from-raw", d),
                   formula_in_np(central_moment_variance_form(d, Method::Alg2)) == from_raw);
    }
    return rep;
}

SuiteReport check_algorithms(std::uint32_t d_max)
{
    SuiteReport rep{"algs", {}, {}};
    for (std::uint32_t d = 2; d <= d_max; ++d) {
        const FormulaDoc a1 = central_moment_variance_form(d, Method::Alg1);
        const FormulaDoc a2 = central_moment_variance_form(d, Method::Alg2);
        rep.record(label("alg1 == alg2", d), a1.body == a2.body && a1.odd_factor == a2.odd_factor);
        const bool in_ns = !a1.body.contains(Var::P) && !a1.body.contains(Var::Q) && a1.body.is_integral();
        rep.record(label("variance body in Z[n,s]", d), in_ns);
        rep.record(label("odd factor iff odd d", d), a1.odd_factor == (d % 2 == 1));
    }
    return rep;
}

SuiteReport check_symmetry(std::uint32_t d_max)
{
    SuiteReport rep{"symmetry", {}, {}};
    for (std::uint32_t d = 2; d <= d_max; ++d) {
        const Poly u = central_moment_stable(d).body;
        const bool ok = d % 2 == 0 ? is_symmetric_pq(u) : is_antisymmetric_pq(u);
        rep.record(label(d % 2 == 0 ? "stable form symmetric" : "stable form antisymmetric", d), ok);
    }
    return rep;
}

SuiteReport check_bounds(std::uint32_t d_max, std::uint32_t n_max)
{
    SuiteReport rep{"bounds", {}, {}};
    const std::vector<Rational> ps{make_rational(1, 10), make_rational(1, 4), make_rational(1, 2)};
    const GridSummary grid = scan_grid(d_max, n_max, ps);
    for (const auto& row : grid.rows) {
        const std::string where =
            "d=" + std::to_string(row.d) + " n=" + std::to_string(row.n) + " p=" + to_string(row.p);
        rep.record("upper " + where, row.upper.holds,
                   row.upper.holds ? "" : to_string(row.upper.moment) + " > " + to_string(row.upper.bound));
        for (const auto& low : row.lower) {
            rep.record("lower k=" + std::to_string(low.k) + " " + where, low.holds,
                       low.holds ? "" : to_string(low.moment) + " < " + to_string(low.bound));
        }
    }
    std::ostringstream lo;
    std::ostringstream hi;
    lo.precision(12);
    hi.precision(12);
    lo << grid.min_ratio;
    hi << grid.max_ratio;
    rep.extra["ratio_band"] = {{"min", lo.str()}, {"max", hi.str()}};
    return rep;
}

SuiteReport check_combinatorics(std::uint32_t d_max)
{
    SuiteReport rep{"combinatorics", {}, {}};
    for (std::uint32_t m = 0; m <= d_max; ++m) {
        bool ok = true;
        for (std::int64_t x = 0; x <= 12; ++x) {
            Integer sum = 0;
            for (std::uint32_t j = 0; j <= m; ++j) {
                sum += stirling2(m, j) * falling_power(x, j);
            }
            Integer want;
            mpz_ui_pow_ui(want.get_mpz_t(), static_cast<unsigned long>(x), m);
            ok = ok && sum == want;
        }
        rep.record("x^m == sum_j S(m,j) x^(j falling), m=" + std::to_string(m), ok);
    }
    for (std::uint32_t d = 1; d <= d_max; ++d) {
        for (std::uint32_t k = 1; k <= d; ++k) {
            Integer any = 0;
            Integer at_least_two = 0;
            for (const auto& c : Compositions(d, k, 1)) {
                any += multinomial(d, c.parts);
            }
            for (const auto& c : compositions_min2(d, k)) {
                at_least_two += multinomial(d, c.parts);
            }
            const std::string where = "d=" + std::to_string(d) + " k=" + std::to_string(k);
            rep.record("ordered partitions == k! S(d,k), " + where, any == factorial(k) * stirling2(d, k));
            rep.record("ordered partitions (blocks>=2) == k! S2(d,k), " + where,
                       at_least_two == factorial(k) * assoc_stirling2(d, k));
            rep.record("S2(d,k) <= S(d,k), " + where, assoc_stirling2(d, k) <= stirling2(d, k));
        }
    }
    return rep;
}

} // namespace binmom
