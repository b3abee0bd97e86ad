#include "binmom/render.hpp"

#include "binmom/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace binmom {

namespace {

struct Piece {
    bool negative = false;
    Rational magnitude = 1;
    std::vector<std::string> factors;
};

std::string number(const Rational& x, Style style)
{
    if (x.get_den() == 1 || style == Style::Text) {
        return to_string(x);
    }
    return "\\frac{" + to_string(Integer(x.get_num())) + "}{" + to_string(Integer(x.get_den())) + "}";
}

std::string power(std::string_view base, std::uint32_t e, Style style)
{
    std::string s(base);
    if (e == 1) {
        return s;
    }
    return style == Style::Text ? s + "^" + std::to_string(e) : s + "^{" + std::to_string(e) + "}";
}

std::string var_power(Var v, std::uint32_t e, Style style)
{
    if (style == Style::Latex) {
        switch (v) {
        case Var::S:
            return "\\sigma^{" + std::to_string(2 * e) + "}";
        case Var::N:
            return power("n", e, style);
        case Var::P:
            return power("p", e, style);
        case Var::Q:
            return power("q", e, style);
        }
    }
    return power(var_name(v), e, style);
}

std::vector<std::string> monomial_factors(const Monomial& m, Style style)
{
    std::vector<std::string> f;
    for (Var v : kAllVars) {
        if (const auto e = m[v]; e > 0) {
            f.push_back(var_power(v, e, style));
        }
    }
    return f;
}

std::string parens(const std::string& inner, Style style)
{
    return style == Style::Text ? "(" + inner + ")" : "\\left(" + inner + "\\right)";
}

std::string join_product(const Rational& magnitude, const std::vector<std::string>& factors, Style style)
{
    const char* sep = style == Style::Text ? "*" : " ";
    std::string out;
    if (factors.empty() || magnitude != 1) {
        out = number(magnitude, style);
    }
    for (const auto& f : factors) {
        if (!out.empty()) {
            out += sep;
        }
        out += f;
    }
    return out;
}

std::string join_sum(const std::vector<Piece>& pieces, Style style)
{
    if (pieces.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& piece : pieces) {
        const std::string body = join_product(piece.magnitude, piece.factors, style);
        if (first) {
            if (piece.negative) {
                out += style == Style::Text ? "-" : "- ";
            }
            first = false;
        } else {
            out += piece.negative ? " - " : " + ";
        }
        out += body;
    }
    return out;
}

Piece piece_of(const Monomial& m, const Rational& c, Style style)
{
    return Piece{c < 0, abs(c), monomial_factors(m, style)};
}

std::vector<Piece> flat_pieces(const Poly& a, Style style)
{
    std::vector<Piece> pieces;
    for (const auto& [m, c] : a.terms()) {
        pieces.push_back(piece_of(m, c, style));
    }
    return pieces;
}

void require_np_only(const Poly& a, const char* who)
{
    if (a.contains(Var::S) || a.contains(Var::Q)) {
        throw std::invalid_argument(std::string(who) + ": polynomial must only involve n and p");
    }
}

/// Coefficients of p^e grouped as univariate polynomials in n
/// (index = exponent of n).
std::map<std::uint32_t, std::vector<Rational>> split_by_p(const Poly& a)
{
    std::map<std::uint32_t, std::vector<Rational>> groups;
    for (const auto& [m, c] : a.terms()) {
        auto& coeffs = groups[m[Var::P]];
        const auto ne = m[Var::N];
        if (coeffs.size() <= ne) {
            coeffs.resize(ne + 1, Rational(0));
        }
        coeffs[ne] += c;
    }
    return groups;
}

Rational eval_univariate(const std::vector<Rational>& coeffs, const Rational& x)
{
    Rational r = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        r = r * x + *it;
    }
    return r;
}

/// Forward differences Delta^j f(0), j = 0..deg; these are the coordinates of
/// f in the basis binom(n, j).
std::vector<Rational> binomial_coordinates(const std::vector<Rational>& coeffs)
{
    const std::size_t deg = coeffs.empty() ? 0 : coeffs.size() - 1;
    std::vector<Rational> values;
    for (std::size_t x = 0; x <= deg; ++x) {
        values.push_back(eval_univariate(coeffs, Rational(static_cast<long>(x))));
    }
    std::vector<Rational> diffs;
    for (std::size_t j = 0; j <= deg; ++j) {
        diffs.push_back(values[0]);
        for (std::size_t i = 0; i + 1 < values.size(); ++i) {
            values[i] = values[i + 1] - values[i];
        }
        values.pop_back();
    }
    return diffs;
}

Integer factorial_of(std::size_t k)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

std::vector<std::string> falling_factors(std::size_t j, Style style)
{
    if (j == 0) {
        return {};
    }
    if (style == Style::Latex) {
        return {j == 1 ? std::string("n") : "n^{\\underline{" + std::to_string(j) + "}}"};
    }
    std::vector<std::string> f{"n"};
    for (std::size_t i = 1; i < j; ++i) {
        f.push_back("(n-" + std::to_string(i) + ")");
    }
    return f;
}

} // namespace

std::string render(const Poly& a, Style style)
{
    return join_sum(flat_pieces(a, style), style);
}

std::string render_collected(const Poly& a, Var outer, Style style)
{
    // group by the exponent of `outer`, highest first
    std::map<std::uint32_t, Poly, std::greater<>> groups;
    for (const auto& [m, c] : a.terms()) {
        groups[m[outer]].add_term(m.without(outer), c);
    }

    std::vector<Piece> pieces;
    for (const auto& [e, inner] : groups) {
        if (e == 0 || inner.size() == 1) {
            for (const auto& [m, c] : inner.terms()) {
                Monomial full = m;
                full.set(outer, e);
                pieces.push_back(piece_of(full, c, style));
            }
            continue;
        }
        pieces.push_back(Piece{false, 1, {var_power(outer, e, style), parens(render(inner, style), style)}});
    }
    return join_sum(pieces, style);
}

std::string render_falling_basis(const Poly& a, Style style)
{
    require_np_only(a, "render_falling_basis");
    std::vector<Piece> pieces;
    for (const auto& [pe, coeffs] : split_by_p(a)) {
        const auto diffs = binomial_coordinates(coeffs);
        std::vector<Piece> inner;
        for (std::size_t j = diffs.size(); j-- > 0;) {
            const Rational c = diffs[j] / Rational(factorial_of(j));
            if (c != 0) {
                inner.push_back(Piece{c < 0, abs(c), falling_factors(j, style)});
            }
        }
        if (inner.empty()) {
            continue;
        }
        std::vector<std::string> p_factor;
        if (pe > 0) {
            p_factor.push_back(var_power(Var::P, pe, style));
        }
        if (inner.size() == 1) {
            Piece piece = inner.front();
            piece.factors.insert(piece.factors.end(), p_factor.begin(), p_factor.end());
            pieces.push_back(std::move(piece));
            continue;
        }
        std::vector<std::string> factors{parens(join_sum(inner, style), style)};
        factors.insert(factors.end(), p_factor.begin(), p_factor.end());
        pieces.push_back(Piece{false, 1, std::move(factors)});
    }
    return join_sum(pieces, style);
}

std::string render_binomial_basis(const Poly& a, Style style)
{
    require_np_only(a, "render_binomial_basis");
    const auto groups = split_by_p(a);
    std::vector<Piece> pieces;
    for (auto g = groups.rbegin(); g != groups.rend(); ++g) {
        const auto pe = g->first;
        const auto diffs = binomial_coordinates(g->second);
        for (std::size_t j = diffs.size(); j-- > 0;) {
            const Rational& c = diffs[j];
            if (c == 0) {
                continue;
            }
            Piece piece{c < 0, abs(c), {}};
            if (pe > 0) {
                piece.factors.push_back(var_power(Var::P, pe, style));
            }
            if (j > 0) {
                piece.factors.push_back(style == Style::Text
                                            ? "binom(n," + std::to_string(j) + ")"
                                            : "{\\binom{n}{" + std::to_string(j) + "}}");
            }
            pieces.push_back(std::move(piece));
        }
    }
    return join_sum(pieces, style);
}

std::string render_pq_factored(const Poly& a, Style style)
{
    require_np_only(a, "render_pq_factored");
    std::map<std::uint32_t, Poly, std::greater<>> groups;
    for (const auto& [m, c] : a.terms()) {
        groups[m[Var::N]].add_term(m.without(Var::N), c);
    }

    const Poly one_minus_p = Poly(1L) - p_var();
    std::vector<Piece> pieces;
    for (const auto& [ne, inner] : groups) {
        std::uint32_t p_exp = inner.terms().rbegin()->first[Var::P];
        for (const auto& [m, c] : inner.terms()) {
            p_exp = std::min(p_exp, m[Var::P]);
        }
        Poly rest = exact_div(inner, p_var().pow(p_exp));
        std::uint32_t q_exp = 0;
        while (rest.degree(Var::P) > 0 && evaluate(rest, Assignment{}.set(Var::P, Rational(1))) == 0) {
            rest = exact_div(rest, one_minus_p);
            ++q_exp;
        }

        std::vector<std::string> factors;
        if (ne > 0) {
            factors.push_back(var_power(Var::N, ne, style));
        }
        if (p_exp > 0) {
            factors.push_back(var_power(Var::P, p_exp, style));
        }
        if (q_exp > 0) {
            const std::string base = style == Style::Text ? "(1-p)" : "\\left(1 - p\\right)";
            factors.push_back(power(base, q_exp, style));
        }
        if (rest.is_constant()) {
            const Rational c = rest.coefficient(Monomial{});
            pieces.push_back(Piece{c < 0, abs(c), std::move(factors)});
            continue;
        }
        std::vector<Piece> ascending;
        for (auto it = rest.terms().rbegin(); it != rest.terms().rend(); ++it) {
            ascending.push_back(piece_of(it->first, it->second, style));
        }
        factors.push_back(parens(join_sum(ascending, style), style));
        pieces.push_back(Piece{false, 1, std::move(factors)});
    }
    return join_sum(pieces, style);
}

nlohmann::ordered_json poly_to_json(const Poly& a)
{
    nlohmann::ordered_json vars = nlohmann::ordered_json::array();
    for (Var v : kAllVars) {
        vars.push_back(std::string(var_name(v)));
    }
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [m, c] : a.terms()) {
        nlohmann::ordered_json exps = nlohmann::ordered_json::array();
        for (Var v : kAllVars) {
            exps.push_back(m[v]);
        }
        terms.push_back(nlohmann::ordered_json::array({exps, to_string(c)}));
    }
    nlohmann::ordered_json j;
    j["variables"] = vars;
    j["terms"] = terms;
    return j;
}

Poly poly_from_json(const nlohmann::ordered_json& j)
{
    try {
        const auto& vars = j.at("variables");
        if (!vars.is_array() || vars.size() != kVarCount) {
            throw std::invalid_argument("poly_from_json: expected four variables");
        }
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (vars[i].get<std::string>() != var_name(kAllVars[i])) {
                throw std::invalid_argument("poly_from_json: unexpected variable order");
            }
        }
        Poly r;
        for (const auto& term : j.at("terms")) {
            if (!term.is_array() || term.size() != 2 || !term[0].is_array() || term[0].size() != kVarCount) {
                throw std::invalid_argument("poly_from_json: malformed term");
            }
            Monomial m;
            for (std::size_t i = 0; i < kVarCount; ++i) {
                m.set(kAllVars[i], term[0][i].get<std::uint32_t>());
            }
            r.add_term(m, parse_rational(term[1].get<std::string>()));
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("poly_from_json: ") + e.what());
    }
}

} // namespace binmom
