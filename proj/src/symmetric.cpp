#include "binmom/symmetric.hpp"

#include "binmom/errors.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace binmom {

Poly ElementaryForm::at_unit_e1() const
{
    Poly r;
    for (const auto& [j, c] : by_e1_power) {
        r += c;
    }
    return r;
}

Poly ElementaryForm::expand() const
{
    const Poly e1 = p_var() + q_var();
    Poly r;
    for (const auto& [j, c] : by_e1_power) {
        r += substitute(c, Var::S, p_var() * q_var()) * e1.pow(j);
    }
    return r;
}

ElementaryForm symmetrize_pq(const Poly& a)
{
    if (a.contains(Var::S)) {
        throw std::invalid_argument("symmetrize_pq: input already contains s");
    }
    if (!is_symmetric_pq(a)) {
        throw AsymmetryError("symmetrize_pq: polynomial is not symmetric in p and q");
    }

    const Poly e1 = p_var() + q_var();
    std::vector<Poly> e1_powers{Poly(1L)};

    ElementaryForm out;
    Poly rem = a;
    while (!rem.is_zero()) {
        // lex-leading term in (p, q); its p exponent dominates its q exponent
        auto lead = rem.terms().begin();
        for (auto it = rem.terms().begin(); it != rem.terms().end(); ++it) {
            const auto& m = it->first;
            const auto& l = lead->first;
            if (m[Var::P] > l[Var::P] || (m[Var::P] == l[Var::P] && m[Var::Q] > l[Var::Q])) {
                lead = it;
            }
        }
        const Monomial m = lead->first;
        const Rational c = lead->second;
        const auto a_exp = m[Var::P];
        const auto b_exp = m[Var::Q];
        if (a_exp < b_exp) {
            throw AsymmetryError("symmetrize_pq: leading exponent pair is not ordered");
        }
        const auto j = a_exp - b_exp;
        while (e1_powers.size() <= j) {
            e1_powers.push_back(e1_powers.back() * e1);
        }

        const Monomial rest = m.without(Var::P).without(Var::Q);
        Monomial rest_s = rest;
        rest_s.set(Var::S, b_exp);
        out.by_e1_power[j].add_term(rest_s, c);

        Monomial rest_pq = rest;
        rest_pq.set(Var::P, b_exp);
        rest_pq.set(Var::Q, b_exp);
        rem -= Poly::term(rest_pq, c) * e1_powers[j];
    }

    for (auto it = out.by_e1_power.begin(); it != out.by_e1_power.end();) {
        it = it->second.is_zero() ? out.by_e1_power.erase(it) : std::next(it);
    }
    return out;
}

Poly reduce_mod_variance(const Poly& a)
{
    // p^e == lo[e] + hi[e] * p with lo, hi in Z[s]:
    // p^(e+1) = lo p + hi p^2 = -hi s + (lo + hi) p
    const auto max_e = a.degree(Var::P);
    std::vector<std::pair<Poly, Poly>> reduced{{Poly(1L), Poly()}, {Poly(), Poly(1L)}};
    while (reduced.size() <= max_e) {
        const auto& [lo, hi] = reduced.back();
        reduced.emplace_back(-(hi * s_var()), lo + hi);
    }

    Poly r;
    for (const auto& [m, c] : a.terms()) {
        const auto e = m[Var::P];
        if (e < 2) {
            r.add_term(m, c);
            continue;
        }
        const Poly rest = Poly::term(m.without(Var::P), c);
        const auto& [lo, hi] = reduced[e];
        r += rest * (lo + hi * p_var());
    }
    return r;
}

} // namespace binmom
