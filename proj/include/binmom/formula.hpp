#pragma once

// Moment queries and derived formulas, with their text/LaTeX/JSON renderings.

#include "binmom/poly.hpp"
#include "binmom/render.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace binmom {

enum class MomentKind { Raw, Central, Factorial };
enum class Basis { P, Variance };

/// Derivation route. `Direct` means: Stirling base change for raw moments,
/// the stable composition sum for central moments.
enum class Method { Direct, Counting, Fast, FromRaw, Alg1, Alg2 };

std::string_view to_string(MomentKind kind);
std::string_view to_string(Basis basis);
std::string_view to_string(Method method);

/// Inverse of to_string; throw std::invalid_argument on unknown names.
MomentKind parse_kind(std::string_view name);
Basis parse_basis(std::string_view name);
Method parse_method(std::string_view name);

struct MomentQuery {
    MomentKind kind = MomentKind::Central;
    std::uint32_t order = 2;
    Basis basis = Basis::P;
    Method method = Method::Direct;

    /// Fills in the default method for the kind/basis pair when none is
    /// given, then validates. Throws std::invalid_argument for combinations
    /// such as a variance basis on raw moments.
    static MomentQuery make(MomentKind kind, std::uint32_t order, Basis basis,
                            std::optional<Method> method = std::nullopt);

    void validate() const;

    friend bool operator==(const MomentQuery&, const MomentQuery&) = default;
};

struct FormulaDoc {
    MomentQuery query;
    /// Raw/factorial: Z[n, p]. Central p-basis: Z[n, p, q] or Z[n, p].
    /// Variance basis: Z[n, s], multiplied by (1 - 2p) when odd_factor is set.
    Poly body;
    bool odd_factor = false;
    std::string provenance;

    friend bool operator==(const FormulaDoc&, const FormulaDoc&) = default;
};

/// The formula as a single polynomial in n and p: q -> 1 - p, s -> p(1 - p)
/// and the (1 - 2p) factor multiplied in.
Poly formula_in_np(const FormulaDoc& f);

/// Substitutes q -> 1 - p.
Poly to_np(const Poly& a);

/// Central variance basis is collected in descending powers of n
/// ("3*n^2*s2^2 + n*(-6*s2^2 + s2)"); central p-basis pulls out p and (1-p)
/// factors ("n*p*(1-p)"); raw and factorial moments use falling powers of n
/// in text ("n*p + n*(n-1)*p^2") and binomial coefficients in LaTeX
/// ("2 p^{2} {\binom{n}{2}} + p {\binom{n}{1}}").
std::string render_formula(const FormulaDoc& f, Style style);

nlohmann::ordered_json formula_to_json(const FormulaDoc& f);
/// Throws std::invalid_argument on malformed documents.
FormulaDoc formula_from_json(const nlohmann::ordered_json& j);

} // namespace binmom
