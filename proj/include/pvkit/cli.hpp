#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "pvkit/galois.hpp"
#include "pvkit/matgroup.hpp"
#include "pvkit/parse.hpp"
#include "pvkit/print.hpp"
#include "pvkit/ritt.hpp"
#include "pvkit/series.hpp"
#include "pvkit/wronskian.hpp"

namespace pvkit::cli {

using json = nlohmann::ordered_json;

enum class OutputFormat { text, json };

struct Command {
    std::string verb;
    std::vector<std::string> args;
    OutputFormat format = OutputFormat::text;
    std::uint64_t seed = 0;
    int precision = default_series_precision;
    std::string base_point = "0";
    std::string mod;
    unsigned var = 1;
    std::string group;
};

struct Outcome {
    int exit_code = 0;
    std::string out; // standard output
    std::string err; // standard error
};

inline const std::vector<std::string> &verbs() {
    static const std::vector<std::string> v{"derive",       "order",        "separant",    "reduce",      "member",
                                            "wronskian",    "depend",       "ode-from",    "solve-series",
                                            "classify-int", "classify-exp", "group-check", "gl-witness"};
    return v;
}

namespace detail {

// Rendered result of one verb: the text form and the json object.
struct Rendered {
    std::string text;
    json object;
};

inline void require_args(const Command &c, std::size_t lo, std::size_t hi = SIZE_MAX) {
    if (c.args.size() < lo || c.args.size() > hi)
        throw error(errc::shape_error, c.verb + ": wrong number of arguments");
}

inline std::vector<RatFunc> ratfunc_args(const Command &c, std::size_t from = 0) {
    std::vector<RatFunc> out;
    for (std::size_t i = from; i < c.args.size(); ++i) out.push_back(parse_ratfunc(c.args[i]));
    return out;
}

inline Rational rational_value(const std::string &text) {
    RatFunc f = parse_ratfunc(text);
    if (!f.is_rational()) throw error(errc::not_applicable, "expected a rational constant, got '" + text + "'");
    return f.as_rational();
}

inline std::uint32_t var_index(const Command &c) {
    if (c.var < 1 || c.var > 9) throw error(errc::shape_error, "--var must lie in 1..9");
    return c.var - 1;
}

// "1, 1/2; 0 1" -> [[1, 1/2], [0, 1]]
inline ConstMatrix parse_matrix(const std::string &text) {
    Matrix<Rational> rows;
    std::stringstream rs(text);
    std::string row;
    while (std::getline(rs, row, ';')) {
        for (char &ch : row)
            if (ch == ',') ch = ' ';
        std::stringstream es(row);
        std::vector<Rational> entries;
        std::string entry;
        while (es >> entry) entries.push_back(rational_value(entry));
        rows.push_back(std::move(entries));
    }
    if (rows.empty()) throw error(errc::shape_error, "empty matrix");
    for (const auto &r : rows)
        if (r.size() != rows.size()) throw error(errc::shape_error, "matrix must be square");
    return ConstMatrix(std::move(rows));
}

// GL<n>, SL<n>, Ga, Gm, mu<k>
inline std::pair<GroupLabel, std::size_t> parse_group(const std::string &name) {
    auto number = [&](std::size_t from) -> std::uint64_t {
        const std::string digits = name.substr(from);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 6)
            throw error(errc::not_in_catalog, "unknown group '" + name + "'");
        return std::stoull(digits);
    };
    if (name == "Ga") return {{GroupKind::unipotent_ga}, 2};
    if (name == "Gm") return {{GroupKind::diagonal_gm}, 1};
    if (name.rfind("GL", 0) == 0) return {{GroupKind::general_linear}, number(2)};
    if (name.rfind("SL", 0) == 0) return {{GroupKind::special_linear}, number(2)};
    if (name.rfind("mu", 0) == 0) return {{GroupKind::roots_of_unity, number(2)}, 1};
    throw error(errc::not_in_catalog, "unknown group '" + name + "'");
}

inline std::string parenthesized(const RatFunc &f) {
    const std::string s = to_text(f);
    const bool bare = f.is_polynomial() && s.find_first_of(" /") == std::string::npos && s[0] != '-';
    return bare ? s : "(" + s + ")";
}

inline std::string series_text(const TruncatedSeries &s) {
    const Rational &t0 = s.base_point();
    std::string var = "t";
    if (!t0.is_zero()) var = "(t " + std::string(t0.sign() > 0 ? "- " : "+ ") + t0.abs().str() + ")";
    // ascending powers, as series are usually read
    const auto &c = s.coeffs();
    std::string out;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        std::string term = pvkit::detail::scaled_text(c[k], pvkit::detail::power_text(var, static_cast<unsigned>(k)));
        if (out.empty())
            out = (c[k].sign() < 0 ? "-" : "") + term;
        else
            out += (c[k].sign() < 0 ? " - " : " + ") + term;
    }
    if (out.empty()) out = "0";
    return out + " + O(" + pvkit::detail::power_text(var, static_cast<unsigned>(s.precision() + 1)) + ")";
}

inline json certificate_json(const ReductionResult &r) {
    json cofactors = json::array();
    for (const auto &[k, c] : r.certificate) cofactors.push_back({{"derivative", k}, {"cofactor", to_text(c)}});
    return {{"sep_power", r.sep_power}, {"init_power", r.init_power}, {"cofactors", cofactors}};
}

// LinearODE from a linear homogeneous differential polynomial in x.
inline LinearODE ode_from_diffpoly(const DiffPoly &p) {
    std::map<std::uint32_t, RatFunc> by_order;
    for (const auto &[mono, c] : p.terms()) {
        if (mono.size() != 1 || mono[0].second != 1 || mono[0].first.index != 0)
            throw error(errc::not_applicable, "equation must be linear and homogeneous in x");
        by_order[mono[0].first.order] = c;
    }
    if (by_order.empty() || by_order.rbegin()->first == 0)
        throw error(errc::not_applicable, "equation must have order at least 1");
    const std::uint32_t n = by_order.rbegin()->first;
    const RatFunc lead = by_order.rbegin()->second;
    LinearODE ode;
    for (std::uint32_t k = 1; k <= n; ++k) {
        auto it = by_order.find(n - k);
        ode.coeffs.push_back(it == by_order.end() ? RatFunc(0) : it->second / lead);
    }
    return ode;
}

inline DiffPoly diffpoly_from_ode(const LinearODE &ode) {
    const auto n = static_cast<std::uint32_t>(ode.order());
    DiffPoly p = DiffPoly::variable({0, n});
    for (std::uint32_t k = 1; k <= n; ++k) p += DiffPoly::variable({0, n - k}).scaled(ode.coeffs[k - 1]);
    return p;
}

inline Rendered classification(const GaloisDescriptor &d) {
    json o;
    o["group"] = std::string(descriptor_name(d));
    std::string text(descriptor_name(d));
    if (const auto *tr = std::get_if<galois::Trivial>(&d)) {
        o["witness"] = to_text(tr->witness);
        text += "; witness = " + to_text(tr->witness);
    } else if (const auto *cy = std::get_if<galois::CyclicOfOrder>(&d)) {
        const std::string minimal = "X^" + std::to_string(cy->n) + " - c*" + parenthesized(cy->beta);
        o["n"] = cy->n;
        o["beta"] = to_text(cy->beta);
        o["minimal_polynomial"] = minimal;
        text += "; n = " + std::to_string(cy->n) + "; beta = " + to_text(cy->beta) + "; minimal polynomial " + minimal;
    }
    o["dimension"] = descriptor_dimension(d);
    text += "; dimension " + std::to_string(descriptor_dimension(d));
    return {text, o};
}

inline std::vector<RatFunc> seeded_generic_point(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto coeff = [&] { return Rational(static_cast<long>(rng() % 19) - 9); };
    for (;;) {
        std::vector<RatFunc> values;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Rational> c;
            for (std::size_t k = 0; k <= n + 2; ++k) c.push_back(coeff());
            values.push_back(RatFunc(Poly(std::move(c))));
        }
        if (!wronskian(values).is_zero()) return values;
    }
}

inline Rendered dispatch(const Command &c) {
    const std::string &v = c.verb;
    if (v == "derive") {
        require_args(c, 1, 2);
        unsigned k = 1;
        if (c.args.size() == 2) {
            Rational r = rational_value(c.args[1]);
            if (!r.is_integer() || r.sign() < 0 || r > Rational(1000))
                throw error(errc::not_applicable, "derivative count must be an integer in 0..1000");
            k = static_cast<unsigned>(r.num().get_ui());
        }
        const std::string s = to_text(dp_derive(parse_diffpoly(c.args[0]), k));
        return {s, {{"result", s}, {"kind", "diffpoly"}}};
    }
    if (v == "order") {
        require_args(c, 1, 1);
        auto ord = dp_order(parse_diffpoly(c.args[0]), var_index(c));
        if (!ord) return {"none", {{"result", nullptr}, {"kind", "order"}}};
        return {std::to_string(*ord), {{"result", *ord}, {"kind", "order"}}};
    }
    if (v == "separant") {
        require_args(c, 1, 1);
        const std::string s = to_text(dp_separant(parse_diffpoly(c.args[0]), var_index(c)));
        return {s, {{"result", s}, {"kind", "diffpoly"}}};
    }
    if (v == "reduce" || v == "member") {
        require_args(c, 1, 1);
        if (c.mod.empty()) throw error(errc::not_applicable, v + " needs --mod <diffpoly>");
        const DiffPoly q = parse_diffpoly(c.args[0]), p = parse_diffpoly(c.mod);
        const ReductionResult r = ritt_reduce(q, p, var_index(c));
        if (v == "reduce") {
            const std::string s = to_text(r.remainder);
            return {s, {{"result", s}, {"kind", "remainder"}, {"certificate", certificate_json(r)}}};
        }
        const bool member = r.remainder.is_zero();
        return {member ? "true" : "false",
                {{"result", member}, {"kind", "membership"}, {"certificate", certificate_json(r)}}};
    }
    if (v == "wronskian") {
        require_args(c, 1);
        const std::string s = to_text(wronskian(ratfunc_args(c)));
        return {s, {{"result", s}, {"kind", "ratfunc"}}};
    }
    if (v == "depend") {
        require_args(c, 1);
        auto cert = dependence_certificate(ratfunc_args(c));
        if (!cert) return {"independent", {{"result", false}, {"kind", "dependence"}}};
        json coeffs = json::array();
        std::string text = "dependent:";
        for (const auto &x : *cert) {
            coeffs.push_back(x.str());
            text += " " + x.str();
        }
        return {text, {{"result", true}, {"kind", "dependence"}, {"certificate", coeffs}}};
    }
    if (v == "ode-from") {
        require_args(c, 1);
        const LinearODE ode = ode_from_fundamental_system(ratfunc_args(c));
        json coeffs = json::array();
        for (const auto &a : ode.coeffs) coeffs.push_back(to_text(a));
        const std::string s = to_text(diffpoly_from_ode(ode));
        return {s, {{"result", s}, {"kind", "linear_ode"}, {"coefficients", coeffs}}};
    }
    if (v == "solve-series") {
        require_args(c, 1, 1);
        const LinearODE ode = ode_from_diffpoly(parse_diffpoly(c.args[0]));
        const Rational t0 = rational_value(c.base_point);
        const auto sols = fundamental_system_series(ode, t0, c.precision);
        std::string text;
        json arr = json::array();
        for (std::size_t i = 0; i < sols.size(); ++i) {
            json coeffs = json::array();
            for (const auto &x : sols[i].coeffs()) coeffs.push_back(x.str());
            arr.push_back(coeffs);
            text += (i ? "\n" : "") + std::string("y") + std::to_string(i + 1) + " = " + series_text(sols[i]);
        }
        return {text,
                {{"result", arr}, {"kind", "series"}, {"base_point", t0.str()}, {"precision", c.precision}}};
    }
    if (v == "classify-int") {
        require_args(c, 1, 1);
        return classification(classify_antiderivative_extension(parse_ratfunc(c.args[0])));
    }
    if (v == "classify-exp") {
        require_args(c, 1, 1);
        return classification(classify_exponential_extension(parse_ratfunc(c.args[0])));
    }
    if (v == "group-check") {
        require_args(c, 1);
        if (c.group.empty()) throw error(errc::not_applicable, "group-check needs --group <label>");
        auto [label, n] = parse_group(c.group);
        const AlgebraicMatrixGroup g = catalog_group(label, n);
        std::vector<ConstMatrix> samples;
        json members = json::array();
        std::string text;
        bool all = true;
        for (const auto &a : c.args) {
            samples.push_back(parse_matrix(a));
            const bool in = group_contains(g, samples.back());
            all = all && in;
            members.push_back(in);
            text += (text.empty() ? "" : " ") + std::string(in ? "true" : "false");
        }
        json o{{"result", members}, {"kind", "membership"}};
        if (all && samples.size() > 1) {
            const bool closed = group_closure_sample_check(g, samples);
            o["closure"] = closed;
            text += std::string("\nclosure: ") + (closed ? "true" : "false");
        }
        return {text, o};
    }
    if (v == "gl-witness") {
        require_args(c, 1);
        const ConstMatrix transform = parse_matrix(c.args[0]);
        const std::size_t n = transform.size();
        std::vector<RatFunc> values = c.args.size() > 1 ? ratfunc_args(c, 1) : seeded_generic_point(n, c.seed);
        if (values.size() != n) throw error(errc::shape_error, "need one value per indeterminate");
        const bool ok = gl_invariance_witness(n, transform, generic_point_from(values, static_cast<std::uint32_t>(n)));
        json point = json::array();
        for (const auto &f : values) point.push_back(to_text(f));
        return {ok ? "true" : "false", {{"result", ok}, {"kind", "gl_invariance"}, {"witness", {{"point", point}}}}};
    }
    throw error(errc::not_applicable, "unknown verb '" + v + "'");
}

inline Outcome failure(const Command &c, const error &e) {
    const int code = e.kind() == errc::syntax_error ? 2 : 1;
    if (c.format == OutputFormat::json) {
        json o{{"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
        if (const auto *se = dynamic_cast<const syntax_error *>(&e)) o["error"]["column"] = se->column();
        return {code, o.dump() + "\n", ""};
    }
    return {code, "", "error: " + std::string(to_string(e.kind())) + ": " + e.what() + "\n"};
}

} // namespace detail

/// Executes one command; output is produced only once the whole result is known.
inline Outcome run(const Command &c) {
    try {
        detail::Rendered r = detail::dispatch(c);
        return {0, (c.format == OutputFormat::json ? r.object.dump() : r.text) + "\n", ""};
    } catch (const error &e) {
        return detail::failure(c, e);
    }
}

/// Parses argv-style arguments (without the program name) into a Command.
/// Returns an Outcome instead when parsing stops early (help, bad flags).
inline std::variant<Command, Outcome> parse_arguments(std::vector<std::string> args) {
    Command c;
    CLI::App app{"Picard-Vessiot toolkit: differential algebra over Q(t)", "pvkit"};
    std::string format = "text";
    app.add_option("verb", c.verb, "operation to run")->required()->check(CLI::IsMember(verbs()));
    app.add_option("args", c.args, "operands (quote expressions)");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", c.seed, "seed for randomized choices");
    app.add_option("--precision", c.precision, "series precision N")->check(CLI::Range(0, 10000));
    app.add_option("--base-point", c.base_point, "series base point t0");
    app.add_option("--mod", c.mod, "reduction modulus P");
    app.add_option("--var", c.var, "indeterminate index i for x_i")->check(CLI::Range(1, 9));
    app.add_option("--group", c.group, "catalog group: GL<n>, SL<n>, Ga, Gm, mu<k>");
    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp &) {
        return Outcome{0, app.help(), ""};
    } catch (const CLI::ParseError &e) {
        return Outcome{2, "", "error: SyntaxError: " + std::string(e.what()) + "\n"};
    }
    c.format = format == "json" ? OutputFormat::json : OutputFormat::text;
    return c;
}

inline Outcome run_arguments(const std::vector<std::string> &args) {
    auto parsed = parse_arguments(args);
    if (auto *o = std::get_if<Outcome>(&parsed)) return *o;
    return run(std::get<Command>(parsed));
}

/// Splits a batch line on whitespace; double quotes group, backslash escapes inside quotes.
inline std::vector<std::string> tokenize(const std::string &line) {
    std::vector<std::string> out;
    std::string cur;
    bool in_token = false, quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '\\' && i + 1 < line.size())
                cur += line[++i];
            else if (ch == '"')
                quoted = false;
            else
                cur += ch;
        } else if (ch == '"') {
            quoted = in_token = true;
        } else if (std::isspace(static_cast<unsigned char>(ch))) {
            if (in_token) out.push_back(std::move(cur));
            cur.clear();
            in_token = false;
        } else {
            cur += ch;
            in_token = true;
        }
    }
    if (quoted) throw syntax_error(line.size() + 1, "unterminated quote");
    if (in_token) out.push_back(std::move(cur));
    return out;
}

/// One command per line; blank lines and lines starting with '#' are skipped.
/// The exit code is the largest of the per-line codes.
inline Outcome run_batch(std::istream &in) {
    Outcome total;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        Outcome o;
        try {
            o = run_arguments(tokenize(line));
        } catch (const syntax_error &e) {
            o = {2, "", "error: SyntaxError: " + std::string(e.what()) + "\n"};
        }
        total.exit_code = std::max(total.exit_code, o.exit_code);
        total.out += o.out;
        total.err += o.err;
    }
    return total;
}

} // namespace pvkit::cli
