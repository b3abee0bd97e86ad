#pragma once

// Sparse multivariate polynomials in the four variables that occur in
// binomial moment formulas: n (trial count), s (the variance pq), p and q.
//
// Coefficients are exact rationals. Every formula the library produces ends
// up with integer coefficients, but intermediate objects such as binom(n, k)
// written as a polynomial in n do not, so the ring is Q[n, s, p, q] and
// integrality is checked where the mathematics demands it (is_integral()).

#include "binmom/scalar.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string_view>
#include <utility>

namespace binmom {

/// Variables, listed in their printing precedence n > s > p > q.
enum class Var : std::uint8_t { N = 0, S = 1, P = 2, Q = 3 };

inline constexpr std::array<Var, 4> kAllVars{Var::N, Var::S, Var::P, Var::Q};
inline constexpr std::size_t kVarCount = kAllVars.size();

std::string_view var_name(Var v);

class Monomial {
public:
    using Exponents = std::array<std::uint32_t, kVarCount>;

    constexpr Monomial() = default;
    constexpr explicit Monomial(const Exponents& e) : exp_(e) {}
    Monomial(std::initializer_list<std::pair<Var, std::uint32_t>> powers);

    std::uint32_t operator[](Var v) const { return exp_[static_cast<std::size_t>(v)]; }
    void set(Var v, std::uint32_t e) { exp_[static_cast<std::size_t>(v)] = e; }
    const Exponents& exponents() const { return exp_; }

    std::uint32_t degree() const;
    bool is_one() const { return degree() == 0; }
    bool divides(const Monomial& other) const;

    /// Same monomial with the exponent of `v` cleared.
    Monomial without(Var v) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Requires b.divides(a).
    friend Monomial operator/(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    Exponents exp_{};
};

/// Graded lexicographic order with n > s > p > q. Returns true when `a`
/// ranks strictly above `b`, so ordered containers iterate leading term first.
struct GradedLexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class Poly {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexDescending>;

    Poly() = default;
    Poly(long constant);  // NOLINT(google-explicit-constructor)
    Poly(const Rational& constant);  // NOLINT(google-explicit-constructor)
    Poly(const Integer& constant);  // NOLINT(google-explicit-constructor)

    static Poly var(Var v, std::uint32_t exponent = 1);
    static Poly term(const Monomial& m, const Rational& c);

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    /// Total degree; 0 for the zero polynomial.
    std::uint32_t degree() const;
    std::uint32_t degree(Var v) const;
    bool contains(Var v) const { return degree(v) > 0; }
    bool is_integral() const;

    Rational coefficient(const Monomial& m) const;
    /// Requires a nonzero polynomial.
    const TermMap::value_type& leading_term() const;

    /// Adds c*m in place, dropping the entry if it cancels.
    void add_term(const Monomial& m, const Rational& c);

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;

    Poly pow(std::uint32_t e) const;

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    TermMap terms_;
};

inline Poly n_var() { return Poly::var(Var::N); }
inline Poly s_var() { return Poly::var(Var::S); }
inline Poly p_var() { return Poly::var(Var::P); }
inline Poly q_var() { return Poly::var(Var::Q); }

/// Replaces every occurrence of `v` by `value`.
Poly substitute(const Poly& a, Var v, const Poly& value);

/// The involution p <-> q.
Poly swap_pq(const Poly& a);

bool is_symmetric_pq(const Poly& a);
/// Negated by the swap. Zero is both symmetric and antisymmetric; for any
/// other polynomial the two predicates are mutually exclusive.
bool is_antisymmetric_pq(const Poly& a);

/// Quotient c with a == b * c. Throws DivisibilityError when b does not divide
/// a, std::invalid_argument when b is zero.
Poly exact_div(const Poly& a, const Poly& b);

/// Values for evaluation; a variable occurring in the polynomial must have a
/// value or evaluate() throws std::invalid_argument.
struct Assignment {
    std::array<std::optional<Rational>, kVarCount> values;

    Assignment& set(Var v, const Rational& x)
    {
        values[static_cast<std::size_t>(v)] = x;
        return *this;
    }
};

Rational evaluate(const Poly& a, const Assignment& at);

} // namespace binmom
