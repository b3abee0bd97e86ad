#include "cli.hpp"

#include "binmom/moments.hpp"
#include "binmom/oracle.hpp"
#include "binmom/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace binmom::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string kind = "central";
    std::uint32_t order = 2;
    std::uint32_t from = 2;
    std::uint32_t to = 10;
    std::uint32_t n = 0;
    std::string p;
    std::string basis;
    std::string method;
    std::string format = "text";
    std::string out;

    std::uint32_t n_from = 0;
    std::uint32_t n_to = 99;
    std::uint32_t p_steps = 20;
    bool exact_column = false;

    std::string suite = "all";
    std::optional<std::uint32_t> d_max;
    std::optional<std::uint32_t> n_max;
};

void require_format(const std::string& format, std::initializer_list<const char*> allowed, const char* command)
{
    for (const char* a : allowed) {
        if (format == a) {
            return;
        }
    }
    throw UsageError(std::string(command) + ": unsupported --format '" + format + "'");
}

MomentQuery query_from(const Options& o, std::uint32_t order, Basis default_basis)
{
    const MomentKind kind = parse_kind(o.kind);
    const Basis basis = o.basis.empty() ? default_basis : parse_basis(o.basis);
    std::optional<Method> method;
    if (!o.method.empty()) {
        method = parse_method(o.method);
    }
    return MomentQuery::make(kind, order, basis, method);
}

Basis default_table_basis(const Options& o)
{
    return o.kind == "central" ? Basis::Variance : Basis::P;
}

Json formula_document(const FormulaDoc& f)
{
    Json j = formula_to_json(f);
    j["text"] = render_formula(f, Style::Text);
    j["latex"] = render_formula(f, Style::Latex);
    return j;
}

std::string csv_quote(const std::string& s)
{
    std::string q = "\"";
    for (char c : s) {
        q += c;
        if (c == '"') {
            q += '"';
        }
    }
    return q + "\"";
}

Rational parse_probability(const std::string& text, std::ostream& err)
{
    Rational p;
    try {
        p = parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--p: ") + e.what());
    }
    if (text.find_first_of(".eE") != std::string::npos) {
        err << "warning: decimal p " << text << " converted exactly to " << to_string(p) << "\n";
    }
    if (p < 0 || p > 1) {
        throw std::domain_error("p must lie in [0, 1], got " + to_string(p));
    }
    return p;
}

// ---------------------------------------------------------------------------

int cmd_derive(const Options& o, std::ostream& out)
{
    require_format(o.format, {"text", "latex", "json"}, "derive");
    const FormulaDoc f = derive(query_from(o, o.order, Basis::P));
    if (o.format == "json") {
        out << formula_document(f).dump(2) << "\n";
    } else {
        out << render_formula(f, o.format == "latex" ? Style::Latex : Style::Text) << "\n";
    }
    return kSuccess;
}

int cmd_eval(const Options& o, std::ostream& out, std::ostream& err)
{
    require_format(o.format, {"text", "json"}, "eval");
    const Rational p = parse_probability(o.p, err);
    const MomentQuery q = query_from(o, o.order, o.kind == "central" ? Basis::Variance : Basis::P);
    const Rational value = evaluate_formula(derive(q), o.n, p);
    const Rational oracle = oracle_moment(o.n, p, o.order, q.kind).value;
    if (value != oracle) {
        err << "verification failure: formula gives " << to_string(value) << ", density sum gives "
            << to_string(oracle) << "\n";
        return kVerificationFailure;
    }
    if (o.format == "json") {
        Json j;
        j["kind"] = o.kind;
        j["order"] = o.order;
        j["n"] = o.n;
        j["p"] = to_string(p);
        j["value"] = to_string(value);
        j["decimal"] = to_decimal(value);
        out << j.dump(2) << "\n";
    } else {
        out << to_string(value) << "\n";
        out << "decimal approximation: " << to_decimal(value) << "\n";
    }
    return kSuccess;
}

int cmd_table(const Options& o, std::ostream& out)
{
    require_format(o.format, {"text", "latex", "json", "csv"}, "table");
    if (o.from > o.to) {
        throw UsageError("table: --from must not exceed --to");
    }
    std::vector<FormulaDoc> rows;
    for (std::uint32_t d = o.from; d <= o.to; ++d) {
        rows.push_back(derive(query_from(o, d, default_table_basis(o))));
    }

    if (o.format == "text") {
        for (const auto& f : rows) {
            out << f.query.order << "\t" << render_formula(f, Style::Text) << "\n";
        }
    } else if (o.format == "csv") {
        out << "d,formula\n";
        for (const auto& f : rows) {
            out << f.query.order << "," << csv_quote(render_formula(f, Style::Text)) << "\n";
        }
    } else if (o.format == "latex") {
        const bool central = o.kind == "central";
        out << "\\begin{tabular}{ll}\n\\toprule\n";
        out << "$d$ & $" << (central ? "\\mathbb{E}[(S-\\mathbb{E}[S])^d]" : "\\mathbb{E}[S^d]")
            << ",\\quad S\\sim\\mathrm{Binom}(n,p)$ \\\\\n\\midrule\n";
        for (const auto& f : rows) {
            out << f.query.order << " & $" << render_formula(f, Style::Latex) << "$ \\\\\n";
        }
        out << "\\bottomrule\n\\end{tabular}\n";
    } else {
        Json j;
        j["kind"] = o.kind;
        j["from"] = o.from;
        j["to"] = o.to;
        Json arr = Json::array();
        for (const auto& f : rows) {
            arr.push_back(formula_document(f));
        }
        j["rows"] = arr;
        out << j.dump(2) << "\n";
    }
    return kSuccess;
}

int cmd_figure_data(const Options& o, std::ostream& out)
{
    require_format(o.format, {"text", "csv"}, "figure-data");
    if (o.order < 2) {
        throw UsageError("figure-data: --d must be at least 2");
    }
    if (o.p_steps == 0) {
        throw UsageError("figure-data: --p-steps must be positive");
    }
    if (o.n_from > o.n_to) {
        throw UsageError("figure-data: --n-from must not exceed --n-to");
    }
    const MomentQuery q = query_from(o, o.order, o.kind == "central" ? Basis::Variance : Basis::P);
    const FormulaDoc f = derive(q);

    out << (o.exact_column ? "n,p,value,exact\n" : "n,p,value\n");
    for (std::uint32_t n = o.n_from; n <= o.n_to; ++n) {
        for (std::uint32_t i = 0; i <= o.p_steps; ++i) {
            const Rational p = make_rational(Integer(i), Integer(o.p_steps));
            const Rational v = evaluate_formula(f, n, p);
            out << n << "," << to_decimal(p) << "," << to_decimal(v);
            if (o.exact_column) {
                out << "," << to_string(v);
            }
            out << "\n";
        }
    }
    return kSuccess;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err)
{
    const auto d = [&](std::uint32_t fallback) { return o.d_max.value_or(fallback); };
    const auto n = [&](std::uint32_t fallback) { return o.n_max.value_or(fallback); };
    const bool all = o.suite == "all";

    std::vector<SuiteReport> reports;
    if (all || o.suite == "combinatorics") {
        reports.push_back(check_combinatorics(d(12)));
    }
    if (all || o.suite == "oracle") {
        reports.push_back(check_oracle(d(10), n(12)));
    }
    if (all || o.suite == "routes") {
        reports.push_back(check_routes(d(12)));
    }
    if (all || o.suite == "algs") {
        reports.push_back(check_algorithms(d(12)));
    }
    if (all || o.suite == "symmetry") {
        reports.push_back(check_symmetry(d(12)));
    }
    if (all || o.suite == "bounds") {
        reports.push_back(check_bounds(d(16), n(64)));
    }
    if (reports.empty()) {
        throw UsageError("check: unknown --suite '" + o.suite + "'");
    }

    bool passed = true;
    Json suites = Json::array();
    for (const auto& r : reports) {
        passed = passed && r.passed();
        suites.push_back(r.to_json());
        err << (r.passed() ? "PASS " : "FAIL ") << r.suite << " (" << r.checks.size() << " checks, " << r.failures()
            << " failures)\n";
    }
    Json j;
    j["passed"] = passed;
    j["suites"] = suites;
    out << j.dump(2) << "\n";
    return passed ? kSuccess : kVerificationFailure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact closed-form moments of the binomial distribution"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--kind", o.kind, "raw | central | factorial")
            ->check(CLI::IsMember({"raw", "central", "factorial"}));
        cmd->add_option("--format", o.format, "text | latex | json | csv")
            ->check(CLI::IsMember({"text", "latex", "json", "csv"}));
        cmd->add_option("--out", o.out, "write output to this file instead of standard output");
        cmd->add_option("--basis", o.basis, "p | variance")->check(CLI::IsMember({"p", "variance"}));
        cmd->add_option("--method", o.method, "direct | counting | fast | from-raw | alg1 | alg2")
            ->check(CLI::IsMember({"direct", "counting", "fast", "from-raw", "alg1", "alg2"}));
    };

    auto* derive_cmd = app.add_subcommand("derive", "print the closed-form formula of one moment");
    add_common(derive_cmd);
    derive_cmd->add_option("--d", o.order, "moment order")->required();

    auto* eval_cmd = app.add_subcommand("eval", "evaluate one moment exactly");
    add_common(eval_cmd);
    eval_cmd->add_option("--d", o.order, "moment order")->required();
    eval_cmd->add_option("--n", o.n, "number of trials")->required();
    eval_cmd->add_option("--p", o.p, "success probability, as a/b or an exact decimal")->required();

    auto* table_cmd = app.add_subcommand("table", "print formulas for a range of orders");
    add_common(table_cmd);
    table_cmd->add_option("--from", o.from, "first order (default 2)");
    table_cmd->add_option("--to", o.to, "last order (default 10)");

    auto* figure_cmd = app.add_subcommand("figure-data", "emit an (n, p, moment) grid as CSV");
    add_common(figure_cmd);
    o.order = 6;
    figure_cmd->add_option("--d", o.order, "moment order (default 6)");
    figure_cmd->add_option("--n-from", o.n_from, "first n (default 0)");
    figure_cmd->add_option("--n-to", o.n_to, "last n (default 99)");
    figure_cmd->add_option("--p-steps", o.p_steps, "p runs over i/steps, i = 0..steps (default 20)");
    figure_cmd->add_flag("--exact", o.exact_column, "append the exact rational value as a fourth column");

    auto* check_cmd = app.add_subcommand("check", "run verification suites, report as JSON");
    check_cmd->add_option("--suite", o.suite, "oracle | routes | algs | symmetry | bounds | combinatorics | all")
        ->check(CLI::IsMember({"oracle", "routes", "algs", "symmetry", "bounds", "combinatorics", "all"}));
    check_cmd->add_option("--dmax", o.d_max, "largest moment order");
    check_cmd->add_option("--nmax", o.n_max, "largest number of trials");
    check_cmd->add_option("--out", o.out, "write the report to this file instead of standard output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    }

    std::ostringstream buffer;
    int code = kSuccess;
    try {
        if (derive_cmd->parsed()) {
            code = cmd_derive(o, buffer);
        } else if (eval_cmd->parsed()) {
            code = cmd_eval(o, buffer, err);
        } else if (table_cmd->parsed()) {
            code = cmd_table(o, buffer);
        } else if (figure_cmd->parsed()) {
            code = cmd_figure_data(o, buffer);
        } else if (check_cmd->parsed()) {
            code = cmd_check(o, buffer, err);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kVerificationFailure;
    }

    if (o.out.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(o.out, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << o.out << " for writing\n";
            return kUsageError;
        }
        file << buffer.str();
    }
    return code;
}

} // namespace binmom::cli
