#include "binmom/formula.hpp"

#include <stdexcept>
#include <string>

namespace binmom {

std::string_view to_string(MomentKind kind)
{
    switch (kind) {
    case MomentKind::Raw:
        return "raw";
    case MomentKind::Central:
        return "central";
    case MomentKind::Factorial:
        return "factorial";
    }
    return "?";
}

std::string_view to_string(Basis basis)
{
    return basis == Basis::P ? "p" : "variance";
}

std::string_view to_string(Method method)
{
    switch (method) {
    case Method::Direct:
        return "direct";
    case Method::Counting:
        return "counting";
    case Method::Fast:
        return "fast";
    case Method::FromRaw:
        return "from-raw";
    case Method::Alg1:
        return "alg1";
    case Method::Alg2:
        return "alg2";
    }
    return "?";
}

MomentKind parse_kind(std::string_view name)
{
    for (auto k : {MomentKind::Raw, MomentKind::Central, MomentKind::Factorial}) {
        if (to_string(k) == name) {
            return k;
        }
    }
    throw std::invalid_argument("unknown moment kind '" + std::string(name) + "'");
}

Basis parse_basis(std::string_view name)
{
    for (auto b : {Basis::P, Basis::Variance}) {
        if (to_string(b) == name) {
            return b;
        }
    }
    throw std::invalid_argument("unknown basis '" + std::string(name) + "'");
}

Method parse_method(std::string_view name)
{
    for (auto m : {Method::Direct, Method::Counting, Method::Fast, Method::FromRaw, Method::Alg1, Method::Alg2}) {
        if (to_string(m) == name) {
            return m;
        }
    }
    throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

MomentQuery MomentQuery::make(MomentKind kind, std::uint32_t order, Basis basis, std::optional<Method> method)
{
    MomentQuery q{kind, order, basis, Method::Direct};
    if (method) {
        q.method = *method;
    } else if (kind == MomentKind::Central && basis == Basis::Variance) {
        q.method = Method::Alg1;
    }
    q.validate();
    return q;
}

void MomentQuery::validate() const
{
    const std::string what = std::string(binmom::to_string(kind)) + " moments";
    if (basis == Basis::Variance && kind != MomentKind::Central) {
        throw std::invalid_argument("the variance basis is only defined for central moments, not " + what);
    }
    switch (kind) {
    case MomentKind::Raw:
        if (method != Method::Direct && method != Method::Counting) {
            throw std::invalid_argument("method '" + std::string(binmom::to_string(method)) + "' does not apply to " + what);
        }
        break;
    case MomentKind::Factorial:
        if (method != Method::Direct) {
            throw std::invalid_argument("method '" + std::string(binmom::to_string(method)) + "' does not apply to " + what);
        }
        break;
    case MomentKind::Central:
        if (basis == Basis::Variance && method != Method::Alg1 && method != Method::Alg2) {
            throw std::invalid_argument("the variance basis needs method alg1 or alg2");
        }
        if (basis == Basis::P && method != Method::Direct && method != Method::Fast && method != Method::FromRaw) {
            throw std::invalid_argument("central moments in the p basis use method direct, fast or from-raw");
        }
        break;
    }
}

Poly to_np(const Poly& a)
{
    return substitute(a, Var::Q, Poly(1L) - p_var());
}

Poly formula_in_np(const FormulaDoc& f)
{
    Poly r = substitute(to_np(f.body), Var::S, p_var() * (Poly(1L) - p_var()));
    if (f.odd_factor) {
        r *= Poly(1L) - Poly(2L) * p_var();
    }
    return r;
}

namespace {

std::string render_variance(const FormulaDoc& f, Style style)
{
    const std::string body = render_collected(f.body, Var::N, style);
    if (!f.odd_factor) {
        return body;
    }
    const std::string odd = style == Style::Text ? "(1-2*p)" : "\\left(- 2 p + 1\\right)";
    if (f.body.is_zero()) {
        return "0";
    }
    if (f.body.size() == 1) {
        return body + (style == Style::Text ? "*" : " ") + odd;
    }
    if (style == Style::Text) {
        return odd + "*(" + body + ")";
    }
    return odd + " \\left(" + body + "\\right)";
}

} // namespace

std::string render_formula(const FormulaDoc& f, Style style)
{
    if (f.query.basis == Basis::Variance) {
        return render_variance(f, style);
    }
    const Poly np = formula_in_np(f);
    if (f.query.kind == MomentKind::Central) {
        return render_pq_factored(np, style);
    }
    return style == Style::Text ? render_falling_basis(np, style) : render_binomial_basis(np, style);
}

nlohmann::ordered_json formula_to_json(const FormulaDoc& f)
{
    nlohmann::ordered_json j;
    j["kind"] = std::string(to_string(f.query.kind));
    j["order"] = f.query.order;
    j["basis"] = std::string(to_string(f.query.basis));
    j["method"] = std::string(to_string(f.query.method));
    j["odd_factor"] = f.odd_factor;
    j["provenance"] = f.provenance;
    const auto poly = poly_to_json(f.body);
    j["variables"] = poly["variables"];
    j["terms"] = poly["terms"];
    return j;
}

FormulaDoc formula_from_json(const nlohmann::ordered_json& j)
{
    try {
        FormulaDoc f;
        f.query.kind = parse_kind(j.at("kind").get<std::string>());
        f.query.order = j.at("order").get<std::uint32_t>();
        f.query.basis = parse_basis(j.at("basis").get<std::string>());
        f.query.method = parse_method(j.at("method").get<std::string>());
        f.query.validate();
        f.odd_factor = j.at("odd_factor").get<bool>();
        f.provenance = j.at("provenance").get<std::string>();
        nlohmann::ordered_json poly;
        poly["variables"] = j.at("variables");
        poly["terms"] = j.at("terms");
        f.body = poly_from_json(poly);
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("formula_from_json: ") + e.what());
    }
}

} // namespace binmom
