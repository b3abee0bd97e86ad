#include "binmom/poly.hpp"

#include "binmom/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace binmom {

std::string_view var_name(Var v)
{
    switch (v) {
    case Var::N:
        return "n";
    case Var::S:
        return "s2";
    case Var::P:
        return "p";
    case Var::Q:
        return "q";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::initializer_list<std::pair<Var, std::uint32_t>> powers)
{
    for (const auto& [v, e] : powers) {
        exp_[static_cast<std::size_t>(v)] += e;
    }
}

std::uint32_t Monomial::degree() const
{
    std::uint32_t d = 0;
    for (auto e : exp_) {
        d += e;
    }
    return d;
}

bool Monomial::divides(const Monomial& other) const
{
    for (std::size_t i = 0; i < kVarCount; ++i) {
        if (exp_[i] > other.exp_[i]) {
            return false;
        }
    }
    return true;
}

Monomial Monomial::without(Var v) const
{
    Monomial m = *this;
    m.set(v, 0);
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial m;
    for (std::size_t i = 0; i < kVarCount; ++i) {
        m.exp_[i] = a.exp_[i] + b.exp_[i];
    }
    return m;
}

Monomial operator/(const Monomial& a, const Monomial& b)
{
    Monomial m;
    for (std::size_t i = 0; i < kVarCount; ++i) {
        m.exp_[i] = a.exp_[i] - b.exp_[i];
    }
    return m;
}

bool GradedLexDescending::operator()(const Monomial& a, const Monomial& b) const
{
    const auto da = a.degree();
    const auto db = b.degree();
    if (da != db) {
        return da > db;
    }
    return a.exponents() > b.exponents();
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(long constant) : Poly(Rational(constant)) {}

Poly::Poly(const Integer& constant) : Poly(Rational(constant)) {}

Poly::Poly(const Rational& constant)
{
    if (constant != 0) {
        terms_.emplace(Monomial{}, constant);
    }
}

Poly Poly::var(Var v, std::uint32_t exponent)
{
    Monomial m;
    m.set(v, exponent);
    return term(m, Rational(1));
}

Poly Poly::term(const Monomial& m, const Rational& c)
{
    Poly r;
    r.add_term(m, c);
    return r;
}

bool Poly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::uint32_t Poly::degree() const
{
    // the leading term of a graded order has the largest total degree
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

std::uint32_t Poly::degree(Var v) const
{
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) {
        d = std::max(d, m[v]);
    }
    return d;
}

bool Poly::is_integral() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.get_den() == 1; });
}

Rational Poly::coefficient(const Monomial& m) const
{
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

const Poly::TermMap::value_type& Poly::leading_term() const
{
    if (terms_.empty()) {
        throw std::invalid_argument("leading_term of the zero polynomial");
    }
    return *terms_.begin();
}

void Poly::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

Poly& Poly::operator+=(const Poly& other)
{
    for (const auto& [m, c] : other.terms_) {
        add_term(m, c);
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& other)
{
    for (const auto& [m, c] : other.terms_) {
        add_term(m, Rational(-c));
    }
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    Poly r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            r.add_term(ma * mb, Rational(ca * cb));
        }
    }
    return r;
}

Poly& Poly::operator*=(const Poly& other)
{
    *this = *this * other;
    return *this;
}

Poly& Poly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) {
        coeff *= c;
    }
    return *this;
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& [m, c] : r.terms_) {
        c = -c;
    }
    return r;
}

Poly Poly::pow(std::uint32_t e) const
{
    Poly result(1L);
    Poly base = *this;
    while (e > 0) {
        if ((e & 1U) != 0) {
            result *= base;
        }
        e >>= 1U;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Free functions

Poly substitute(const Poly& a, Var v, const Poly& value)
{
    const auto max_e = a.degree(v);
    if (max_e == 0) {
        return a;
    }
    std::vector<Poly> powers{Poly(1L)};
    powers.reserve(max_e + 1);
    for (std::uint32_t e = 1; e <= max_e; ++e) {
        powers.push_back(powers.back() * value);
    }

    Poly r;
    for (const auto& [m, c] : a.terms()) {
        const auto e = m[v];
        if (e == 0) {
            r.add_term(m, c);
            continue;
        }
        r += Poly::term(m.without(v), c) * powers[e];
    }
    return r;
}

Poly swap_pq(const Poly& a)
{
    Poly r;
    for (const auto& [m, c] : a.terms()) {
        Monomial s = m;
        s.set(Var::P, m[Var::Q]);
        s.set(Var::Q, m[Var::P]);
        r.add_term(s, c);
    }
    return r;
}

bool is_symmetric_pq(const Poly& a)
{
    return swap_pq(a) == a;
}

bool is_antisymmetric_pq(const Poly& a)
{
    return swap_pq(a) == -a;
}

Poly exact_div(const Poly& a, const Poly& b)
{
    if (b.is_zero()) {
        throw std::invalid_argument("exact_div: division by the zero polynomial");
    }
    const auto& [lead_m, lead_c] = b.leading_term();

    // Division by the leading term under a monomial order: if b | a then every
    // intermediate remainder is a multiple of b, so its leading term must be
    // divisible by LT(b).
    Poly quotient;
    Poly remainder = a;
    while (!remainder.is_zero()) {
        const auto& [rm, rc] = remainder.leading_term();
        if (!lead_m.divides(rm)) {
            throw DivisibilityError("exact_div: divisor does not divide the dividend");
        }
        const Poly step = Poly::term(rm / lead_m, Rational(rc / lead_c));
        quotient += step;
        remainder -= step * b;
    }
    return quotient;
}

Rational evaluate(const Poly& a, const Assignment& at)
{
    std::array<std::vector<Rational>, kVarCount> powers;
    for (Var v : kAllVars) {
        const auto idx = static_cast<std::size_t>(v);
        const auto max_e = a.degree(v);
        if (max_e == 0) {
            continue;
        }
        if (!at.values[idx]) {
            throw std::invalid_argument("evaluate: no value for variable " + std::string(var_name(v)));
        }
        auto& table = powers[idx];
        table.reserve(max_e + 1);
        table.emplace_back(1);
        for (std::uint32_t e = 1; e <= max_e; ++e) {
            table.emplace_back(table.back() * *at.values[idx]);
        }
    }

    Rational sum = 0;
    for (const auto& [m, c] : a.terms()) {
        Rational t = c;
        for (Var v : kAllVars) {
            if (const auto e = m[v]; e > 0) {
                t *= powers[static_cast<std::size_t>(v)][e];
            }
        }
        sum += t;
    }
    return sum;
}

} // namespace binmom
