#include "binmom/moments.hpp"

#include "binmom/errors.hpp"
#include "binmom/symmetric.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace binmom {

namespace {

FormulaDoc make_doc(MomentKind kind, std::uint32_t d, Basis basis, Method method, Poly body, std::string provenance)
{
    FormulaDoc f;
    f.query = MomentQuery{kind, d, basis, method};
    f.body = std::move(body);
    f.provenance = std::move(provenance);
    return f;
}

} // namespace

Rational density(std::uint32_t n, const Rational& p, std::uint32_t k)
{
    if (p < 0 || p > 1) {
        throw std::domain_error("density: p must lie in [0, 1]");
    }
    if (k > n) {
        throw std::domain_error("density: k must lie in [0, n]");
    }
    const Rational q = 1 - p;
    Rational pk = 1;
    Rational qk = 1;
    mpz_pow_ui(pk.get_num_mpz_t(), p.get_num_mpz_t(), k);
    mpz_pow_ui(pk.get_den_mpz_t(), p.get_den_mpz_t(), k);
    mpz_pow_ui(qk.get_num_mpz_t(), q.get_num_mpz_t(), n - k);
    mpz_pow_ui(qk.get_den_mpz_t(), q.get_den_mpz_t(), n - k);
    return Rational(binom(n, k)) * pk * qk;
}

FormulaDoc factorial_moment(std::uint32_t d)
{
    return make_doc(MomentKind::Factorial, d, Basis::P, Method::Direct,
                    falling_power(n_var(), d) * p_var().pow(d), "factorial moment n^(d falling) p^d");
}

FormulaDoc raw_moment_via_factorial(std::uint32_t d)
{
    Poly body;
    for (std::uint32_t k = 0; k <= d; ++k) {
        const Integer s = stirling2(d, k);
        if (s != 0) {
            body += Poly(s) * factorial_moment(k).body;
        }
    }
    return make_doc(MomentKind::Raw, d, Basis::P, Method::Direct, std::move(body),
                    "Stirling base change applied to factorial moments");
}

FormulaDoc raw_moment_via_counting(std::uint32_t d)
{
    Poly body = d == 0 ? Poly(1L) : Poly();
    for (std::uint32_t k = 1; k <= d; ++k) {
        Integer labeled = 0;
        for (const auto& c : Compositions(d, k, 1)) {
            labeled += multinomial(d, c.parts);
        }
        body += Poly(labeled) * binom(n_var(), k) * p_var().pow(k);
    }
    return make_doc(MomentKind::Raw, d, Basis::P, Method::Counting, std::move(body),
                    "multinomial expansion over labeled set partitions");
}

// ---------------------------------------------------------------------------

BernoulliCentralFactor BernoulliCentralFactor::make(std::uint32_t part)
{
    if (part < 2) {
        throw std::invalid_argument("BernoulliCentralFactor: part must be at least 2");
    }
    const std::uint32_t e = part - 1;
    return {part, q_var().pow(e) - (-p_var()).pow(e)};
}

Poly StableTerm::expand() const
{
    Poly r = binom(n_var(), k) * (p_var() * q_var()).pow(k) * Poly(multinomial);
    for (const auto& f : factors) {
        r *= f.value;
    }
    return r;
}

Rational StableTerm::evaluate(std::uint32_t n, const Rational& p) const
{
    const Rational q = 1 - p;
    Rational pq_k = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        pq_k *= p * q;
    }
    Rational r = Rational(binom(n, k)) * pq_k * Rational(multinomial);
    Assignment at;
    at.set(Var::P, p).set(Var::Q, q);
    for (const auto& f : factors) {
        r *= binmom::evaluate(f.value, at);
    }
    return r;
}

std::vector<StableTerm> stable_terms(std::uint32_t d)
{
    std::map<std::uint32_t, BernoulliCentralFactor> factor_cache;
    auto factor = [&](std::uint32_t part) -> const BernoulliCentralFactor& {
        auto it = factor_cache.find(part);
        if (it == factor_cache.end()) {
            it = factor_cache.emplace(part, BernoulliCentralFactor::make(part)).first;
        }
        return it->second;
    };

    std::vector<StableTerm> terms;
    for (std::uint32_t k = 1; 2 * k <= d; ++k) {
        for (const auto& c : compositions_min2(d, k)) {
            StableTerm t;
            t.k = k;
            t.composition = c;
            t.multinomial = multinomial(d, c.parts);
            for (auto part : c.parts) {
                t.factors.push_back(factor(part));
            }
            terms.push_back(std::move(t));
        }
    }
    return terms;
}

FormulaDoc central_moment_stable(std::uint32_t d)
{
    Poly body = d == 0 ? Poly(1L) : Poly();
    for (const auto& t : stable_terms(d)) {
        body += t.expand();
    }
    return make_doc(MomentKind::Central, d, Basis::P, Method::Direct, std::move(body),
                    "stable positive-term composition sum");
}

FormulaDoc central_moment_fast(std::uint32_t d, FastPathStats* stats)
{
    if (stats != nullptr) {
        stats->terms_per_k.assign(d / 2 + 1, 0);
    }

    // Terms c * p^a * q^b with b allowed to go negative while x = -p/q is
    // expanded; the (1-p)^d = q^d prefactor must bring every b back to >= 0.
    std::map<std::pair<std::uint32_t, std::int64_t>, Poly> laurent;  // (a, b) -> coefficient in Q[n]

    for (std::uint32_t k = 1; 2 * k <= d; ++k) {
        std::map<std::uint32_t, Rational> u_k;  // power of x -> coefficient
        std::size_t used = 0;
        for (std::uint32_t l = 0; l <= d; ++l) {
            const Integer choose = binom(d, l);
            for (std::uint32_t j = 0; j <= k && j <= l; ++j) {
                const Integer t = assoc_stirling2(l, j) * assoc_stirling2(d - l, k - j);
                if (t == 0) {
                    continue;
                }
                ++used;
                const Rational c(choose * t);
                u_k[l - j] += (j % 2 == 0) ? c : Rational(-c);
            }
        }
        if (stats != nullptr) {
            stats->terms_per_k[k] = used;
        }

        const Poly binom_nk = binom(n_var(), k) * Poly(factorial(k));
        for (const auto& [m, c] : u_k) {
            if (c == 0) {
                continue;
            }
            // binom(n,k) p^k * c * x^m = binom(n,k) c (-1)^m p^(k+m) q^(-m)
            const Rational signed_c = (m % 2 == 0) ? c : Rational(-c);
            laurent[{k + m, -static_cast<std::int64_t>(m)}] += binom_nk * Poly(signed_c);
        }
    }

    Poly body = d == 0 ? Poly(1L) : Poly();
    for (const auto& [exps, coeff] : laurent) {
        const std::int64_t q_exp = exps.second + static_cast<std::int64_t>(d);
        if (q_exp < 0) {
            throw ConsistencyError("central_moment_fast: q^d prefactor failed to clear a denominator");
        }
        body += coeff * p_var().pow(exps.first) * q_var().pow(static_cast<std::uint32_t>(q_exp));
    }
    return make_doc(MomentKind::Central, d, Basis::P, Method::Fast, std::move(body),
                    "associated Stirling regrouping in x = -p/q");
}

FormulaDoc central_moment_from_raw(std::uint32_t d)
{
    Poly body;
    const Poly minus_np = -(n_var() * p_var());
    for (std::uint32_t j = 0; j <= d; ++j) {
        body += Poly(binom(d, j)) * minus_np.pow(d - j) * raw_moment_via_factorial(j).body;
    }
    return make_doc(MomentKind::Central, d, Basis::P, Method::FromRaw, std::move(body),
                    "binomial expansion of E[(S - np)^d] over raw moments");
}

FormulaDoc central_moment_variance_form(std::uint32_t d, Method method)
{
    if (method != Method::Alg1 && method != Method::Alg2) {
        throw std::invalid_argument("central_moment_variance_form: method must be alg1 or alg2");
    }
    const bool odd = d % 2 == 1;
    const Poly stable = central_moment_stable(d).body;

    Poly body;
    std::string provenance;
    if (method == Method::Alg1) {
        // odd d: U is antisymmetric, so U = (q - p) * symmetric
        const Poly symmetric = odd ? exact_div(stable, q_var() - p_var()) : stable;
        body = symmetrize_pq(symmetric).at_unit_e1();
        provenance = "symmetrization in e1 = p + q, e2 = pq with e1 = 1";
    } else {
        Poly u = to_np(stable);
        if (odd) {
            u = exact_div(u, Poly(1L) - Poly(2L) * p_var());
        }
        body = reduce_mod_variance(u);
        provenance = "normal form modulo s - p(1 - p), lex order p > n > s";
    }

    if (body.contains(Var::P) || body.contains(Var::Q)) {
        throw ConsistencyError("central_moment_variance_form: result still depends on p or q");
    }
    if (!body.is_integral()) {
        throw ConsistencyError("central_moment_variance_form: non-integer coefficient");
    }

    FormulaDoc f = make_doc(MomentKind::Central, d, Basis::Variance, method, std::move(body), std::move(provenance));
    f.odd_factor = odd;
    return f;
}

FormulaDoc derive(const MomentQuery& query)
{
    query.validate();
    const auto d = query.order;
    switch (query.kind) {
    case MomentKind::Factorial:
        return factorial_moment(d);
    case MomentKind::Raw:
        return query.method == Method::Counting ? raw_moment_via_counting(d) : raw_moment_via_factorial(d);
    case MomentKind::Central:
        if (query.basis == Basis::Variance) {
            return central_moment_variance_form(d, query.method);
        }
        switch (query.method) {
        case Method::Fast:
            return central_moment_fast(d);
        case Method::FromRaw:
            return central_moment_from_raw(d);
        default:
            return central_moment_stable(d);
        }
    }
    throw std::invalid_argument("derive: unsupported query");
}

} // namespace binmom
