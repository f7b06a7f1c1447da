#pragma once

// Command-line front end. Kept as a header so the test suite can drive run()
// in-process.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or validation error,
// 3 enumeration budget exceeded.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ptep/ptep.hpp"
#include "ptep/serialize.hpp"

namespace ptep::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2, budget_exceeded = 3 };

enum class Format { json, csv, plain };

struct GlobalOptions {
    Format format = Format::json;
    std::uint64_t budget = default_budget;
    bool payload_only = false;
};

/// What a subcommand hands back for rendering.
struct Outcome {
    json params;
    json result;
    std::string csv;
    std::string plain;
    int code = ok;
};

namespace detail {

inline std::vector<BigInt> parse_integer_list(const std::string& text, const std::string& what)
{
    std::vector<BigInt> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        if (first == std::string::npos) throw ValidationError("empty entry in " + what);
        item = item.substr(first, last - first + 1);
        const std::size_t sign = item[0] == '-' || item[0] == '+' ? 1 : 0;
        if (item.size() == sign || item.find_first_not_of("0123456789", sign) != std::string::npos)
            throw ValidationError("'" + item + "' in " + what + " is not an integer");
        out.emplace_back(item[0] == '+' ? item.substr(1) : item);
    }
    if (out.empty()) throw ValidationError(what + " is empty");
    return out;
}

inline std::string join(const std::vector<std::int64_t>& v, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

inline std::string join(const std::vector<std::uint64_t>& v, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

inline std::string join(const std::vector<BigInt>& v, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i].str();
    return out;
}

inline json violation_json(const EspReport& r)
{
    return r.first_violation ? to_json(*r.first_violation) : json(nullptr);
}

inline std::string table_csv(const PowerSumTable& t)
{
    std::string out = "m";
    for (std::size_t k = 0; k < t.class_count(); ++k) out += ",s_" + std::to_string(k);
    out += "\n";
    for (std::size_t m = 0; m < t.sums.size(); ++m) out += std::to_string(m) + "," + join(t.sums[m], ",") + "\n";
    return out;
}

inline std::string table_plain(const PowerSumTable& t)
{
    std::string out;
    for (std::size_t m = 0; m < t.sums.size(); ++m) out += "m=" + std::to_string(m) + ": " + join(t.sums[m], " ") + "\n";
    return out;
}

inline std::string verdict_plain(const EspReport& r)
{
    std::string out = "equal sums of like powers through m=" + std::to_string(r.equal_up_to);
    if (r.first_violation)
        out += "; first difference at m=" + std::to_string(r.first_violation->m) + " between S_" +
               std::to_string(r.first_violation->j) + " and S_" + std::to_string(r.first_violation->k);
    return out + "\n";
}

} // namespace detail

// ---------------------------------------------------------------------------
// ptm
// ---------------------------------------------------------------------------

inline Outcome cmd_ptm(std::int64_t p, std::int64_t n, const GlobalOptions& g)
{
    const PTMParams params(p, n, g.budget);
    const auto block = ptm_block(params);
    Outcome o;
    o.params = json{{"p", p}, {"n", n}};
    o.result = json{{"p", p}, {"n", n}, {"sequence", block}};
    o.csv = detail::join(block, ",") + "\n";
    o.plain = detail::join(block, " ") + "\n";
    return o;
}

// ---------------------------------------------------------------------------
// partition
// ---------------------------------------------------------------------------

inline Outcome cmd_partition(std::int64_t p, std::int64_t m, std::optional<std::int64_t> check_beyond,
                             const GlobalOptions& g)
{
    const auto part = prouhet_partition(PTMParams::from_degree(p, m, g.budget));
    const auto through = std::max(m, check_beyond.value_or(m));
    const auto report = verify_esp(part, through);

    Outcome o;
    o.params = json{{"p", p}, {"m", m}};
    if (check_beyond) o.params["check_beyond"] = *check_beyond;
    o.result = to_json(part, report);
    o.result["checked_through"] = through;
    o.result["first_violation"] = detail::violation_json(report);
    o.code = report.equal_up_to >= m ? ok : verification_failed;

    o.csv = detail::table_csv(report.table);
    for (std::size_t k = 0; k < part.classes.size(); ++k)
        o.plain += "S_" + std::to_string(k) + " = {" + detail::join(part.classes[k], ", ") + "}\n";
    o.plain += detail::table_plain(report.table) + detail::verdict_plain(report);
    return o;
}

// ---------------------------------------------------------------------------
// factor
// ---------------------------------------------------------------------------

template <ZModule R>
Outcome factor_outcome(const PTMParams& params, const ZeroSumVector<R>& a)
{
    const auto f = build_F(params, a);
    const auto f_rec = build_F_by_recurrence(params, a);
    const auto q = build_Q(params);
    const auto p_div = factor_F(params, a);
    const auto p_rec = build_P_recursive(params, a);

    bool vanishes = true;
    for (std::int64_t m = 0; m < params.n(); ++m)
        vanishes = vanishes && is_zero(weighted_power_sum(params, a, static_cast<std::uint64_t>(m)));

    Outcome o;
    json coeffs = json::array();
    for (const auto& e : a.entries()) coeffs.push_back(to_json(e));
    o.result["p"] = params.p();
    o.result["n"] = params.n();
    o.result["A"] = coeffs;
    o.result["F"] = to_json(f);
    o.result["Q"] = to_json(q);
    o.result["P"] = to_json(p_div);
    o.result["P_recursive"] = to_json(p_rec);
    o.result["C_indices"] = build_C_indices(params);
    o.result["rendered"] = json{{"F", to_string(f)}, {"Q", to_string(q)}, {"P", to_string(p_div)}};
    const bool f_ok = f == f_rec && poly_mul(p_div, q) == f;
    const bool p_ok = p_div == p_rec;
    o.result["F_matches_recurrence"] = f == f_rec;
    o.result["F_equals_PQ"] = poly_mul(p_div, q) == f;
    o.result["recursive_matches_division"] = p_ok;
    o.result["weighted_power_sums_vanish"] = vanishes;
    if (f.is_zero())
        o.result["vanishing_order_at_one"] = nullptr;
    else
        o.result["vanishing_order_at_one"] = vanishing_order_at_one(f);
    o.code = f_ok && p_ok && vanishes ? ok : verification_failed;

    o.csv = "poly,degree,coefficient\n";
    auto rows = [&o](const char* name, const auto& poly) {
        for (std::size_t i = 0; i < poly.size(); ++i)
            o.csv += std::string(name) + "," + std::to_string(i) + ",\"" + to_string(poly.coeffs()[i]) + "\"\n";
    };
    rows("F", f);
    rows("Q", q);
    rows("P", p_div);

    o.plain = "F = " + to_string(f) + "\nQ = " + to_string(q) + "\nP = " + to_string(p_div) + "\n" +
              "F = P*Q: " + (o.result["F_equals_PQ"].get<bool>() ? "yes" : "NO") + "\n" +
              "P by recursion = P by division: " + (p_ok ? "yes" : "NO") + "\n";
    return o;
}

enum class FactorMode { integer, symbolic, roots_of_unity };

inline Outcome cmd_factor(std::int64_t p, std::int64_t n, FactorMode mode, const std::string& coeffs,
                          const GlobalOptions& g)
{
    const PTMParams params(p, n, g.budget);
    Outcome o;
    switch (mode) {
    case FactorMode::symbolic:
        o = factor_outcome(params, symbolic_zero_sum_vector(p));
        break;
    case FactorMode::roots_of_unity:
        o = factor_outcome(params, roots_of_unity_vector(p));
        break;
    case FactorMode::integer: {
        const auto values = detail::parse_integer_list(coeffs, "--coeffs");
        if (values.size() != static_cast<std::size_t>(p))
            throw ValidationError("--coeffs needs " + std::to_string(p) + " entries, got " +
                                  std::to_string(values.size()));
        o = factor_outcome(params, integer_zero_sum_vector(values));
        break;
    }
    }
    static constexpr const char* names[] = {"integer", "symbolic", "roots_of_unity"};
    o.result["mode"] = names[static_cast<int>(mode)];
    o.params = json{{"p", p}, {"n", n}, {"mode", names[static_cast<int>(mode)]}};
    if (mode == FactorMode::integer) o.params["coeffs"] = coeffs;
    return o;
}

// ---------------------------------------------------------------------------
// lehmer
// ---------------------------------------------------------------------------

inline Outcome cmd_lehmer(std::int64_t p, const std::string& mu_text, const GlobalOptions& g)
{
    const LehmerSpec spec(p, detail::parse_integer_list(mu_text, "--mu"), g.budget);
    const auto ms = lehmer_expand(spec);
    const auto report = verify_esp(power_sum_table(ms, spec.degree()));

    bool vanishes = true;
    for (std::int64_t m = 0; m <= spec.degree(); ++m)
        vanishes = vanishes && is_zero(lehmer_weighted_sum(spec, static_cast<std::uint64_t>(m)));

    Outcome o;
    o.params = json{{"p", p}, {"mu", mu_text}};
    o.result["p"] = p;
    o.result["mu"] = to_json(spec.mu());
    o.result["m"] = spec.degree();
    o.result["classes"] = to_json(ms);
    o.result["power_sums"] = to_json(report.table);
    o.result["esp_verified_through"] = report.equal_up_to;
    o.result["first_violation"] = detail::violation_json(report);
    o.result["weighted_sums_vanish"] = vanishes;
    o.code = report.equal_up_to >= spec.degree() && vanishes ? ok : verification_failed;

    o.csv = "class,value,multiplicity\n";
    for (std::size_t k = 0; k < ms.classes.size(); ++k) {
        o.plain += "class " + std::to_string(k) + ": {";
        bool first = true;
        for (const auto& [value, count] : ms.classes[k]) {
            o.csv += std::to_string(k) + "," + value.str() + "," + std::to_string(count) + "\n";
            for (std::uint64_t c = 0; c < count; ++c) {
                o.plain += (first ? "" : ", ") + value.str();
                first = false;
            }
        }
        o.plain += "}\n";
    }
    o.plain += detail::table_plain(report.table) + detail::verdict_plain(report);
    return o;
}

// ---------------------------------------------------------------------------
// identities
// ---------------------------------------------------------------------------

inline Outcome cmd_identities(std::int64_t p, std::int64_t m, const GlobalOptions& g)
{
    const auto sides = product_identity_sides(p, m, g.budget);
    const bool product_ok = sides.product == sides.series;

    Outcome o;
    o.params = json{{"p", p}, {"m", m}};
    o.result["p"] = p;
    o.result["m"] = m;
    o.result["factors"] = m + 1;
    o.result["coefficients"] = sides.series.size();
    o.result["product_identity"] = product_ok;

    json diff = json::array();
    const auto len = std::max(sides.product.size(), sides.series.size());
    const CyclotomicElement zero(p);
    for (std::size_t i = 0; i < len; ++i) {
        const auto lhs = sides.product.coeff(i, zero);
        const auto rhs = sides.series.coeff(i, zero);
        if (lhs != rhs) diff.push_back(json{{"degree", i}, {"product", to_json(lhs)}, {"series", to_json(rhs)}});
    }
    o.result["mismatches"] = diff;

    // Both finite-sum forms of the derivatives at the origin must vanish for degrees 0..M.
    const auto params = PTMParams::from_degree(p, m, g.budget);
    const auto spec = LehmerSpec::prouhet(p, m, g.budget);
    const auto omega = roots_of_unity_vector(p);
    json checks = json::array();
    bool sums_ok = true;
    for (std::int64_t d = 0; d <= m; ++d) {
        const auto lehmer = lehmer_weighted_sum(spec, static_cast<std::uint64_t>(d));
        const auto direct = weighted_power_sum(params, omega, static_cast<std::uint64_t>(d));
        sums_ok = sums_ok && is_zero(lehmer) && is_zero(direct);
        checks.push_back(json{{"degree", d},
                              {"tuple_sum", to_json(lehmer)},
                              {"block_sum", to_json(direct)},
                              {"vanishes", is_zero(lehmer) && is_zero(direct)}});
    }
    o.result["weighted_sums"] = checks;
    o.result["all_pass"] = product_ok && sums_ok;
    o.code = product_ok && sums_ok ? ok : verification_failed;

    o.csv = "check,degree,pass\nproduct_identity,," + std::string(product_ok ? "1" : "0") + "\n";
    for (const auto& c : checks)
        o.csv += "weighted_sum," + std::to_string(c["degree"].get<std::int64_t>()) + "," +
                 (c["vanishes"].get<bool>() ? "1" : "0") + "\n";
    o.plain = "product identity with " + std::to_string(m + 1) + " factors (" + std::to_string(sides.series.size()) +
              " coefficients): " + (product_ok ? "pass" : "FAIL") + "\n";
    for (const auto& d : diff) o.plain += "  mismatch at x^" + d["degree"].dump() + "\n";
    o.plain += std::string("weighted sums vanish through m=") + std::to_string(m) + ": " + (sums_ok ? "pass" : "FAIL") +
               "\n";
    return o;
}

// ---------------------------------------------------------------------------
// dispatch
// ---------------------------------------------------------------------------

inline void emit(const std::string& command, const Outcome& o, double elapsed_ms, const GlobalOptions& g,
                 std::ostream& out)
{
    switch (g.format) {
    case Format::csv:
        out << o.csv;
        break;
    case Format::plain:
        out << o.plain;
        break;
    case Format::json:
        if (g.payload_only) {
            out << o.result.dump() << "\n";
        } else {
            json envelope;
            envelope["command"] = command;
            envelope["params"] = o.params;
            envelope["result"] = o.result;
            envelope["elapsed_ms"] = elapsed_ms;
            out << envelope.dump() << "\n";
        }
        break;
    }
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Prouhet-Tarry-Escott constructions with exact arithmetic", "ptep"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"plain", Format::plain}};
    app.add_option("--format", g.format, "Output format")->transform(CLI::CheckedTransformer(formats));
    app.add_option("--budget", g.budget, "Maximum number of enumerated terms")->check(CLI::PositiveNumber);
    app.add_flag("--payload-only", g.payload_only, "Emit the JSON result without the envelope");

    std::int64_t p = 0, n = 0, m = 0;
    std::optional<std::int64_t> check_beyond;
    std::string coeffs, mu;
    bool symbolic = false, roots = false;

    auto* ptm = app.add_subcommand("ptm", "Generalized Prouhet-Thue-Morse block v_p(0..p^N-1)");
    ptm->add_option("--p", p, "Base")->required();
    ptm->add_option("--n", n, "Block exponent N")->required();

    auto* partition = app.add_subcommand("partition", "Prouhet partition of 0..p^(M+1)-1 with power sums");
    partition->add_option("--p", p, "Base")->required();
    partition->add_option("--m", m, "Degree M")->required();
    partition->add_option("--check-beyond", check_beyond, "Also compare power sums up to this degree");

    auto* factor = app.add_subcommand("factor", "Factor F_N(x;A) = P_N(x) Q_N(x)");
    factor->add_option("--p", p, "Base")->required();
    factor->add_option("--n", n, "Block exponent N")->required();
    auto* coeffs_opt = factor->add_option("--coeffs", coeffs, "Integer zero-sum vector a_0,...,a_{p-1}");
    auto* sym_opt = factor->add_flag("--symbolic", symbolic, "Generic symbols a_0..a_{p-1}");
    auto* roots_opt = factor->add_flag("--roots-of-unity", roots, "A = (1, w, ..., w^{p-1})");
    coeffs_opt->excludes(sym_opt)->excludes(roots_opt);
    sym_opt->excludes(roots_opt);

    auto* lehmer = app.add_subcommand("lehmer", "Lehmer classes for positive weights mu_0..mu_M");
    lehmer->add_option("--p", p, "Base")->required();
    lehmer->add_option("--mu", mu, "Comma-separated positive weights")->required();

    auto* identities = app.add_subcommand("identities", "Check the root-of-unity product identity");
    identities->add_option("--p", p, "Base")->required();
    identities->add_option("--m", m, "Degree M (M+1 factors)")->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        for (auto* sub : app.get_subcommands())
            if (sub->parsed()) err << sub->help();
        return usage_error;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        Outcome o;
        std::string name;
        if (ptm->parsed()) {
            name = "ptm";
            o = cmd_ptm(p, n, g);
        } else if (partition->parsed()) {
            name = "partition";
            o = cmd_partition(p, m, check_beyond, g);
        } else if (factor->parsed()) {
            name = "factor";
            if (!symbolic && !roots && coeffs.empty())
                throw ValidationError("factor needs one of --coeffs, --symbolic or --roots-of-unity");
            const auto mode = symbolic ? FactorMode::symbolic : roots ? FactorMode::roots_of_unity : FactorMode::integer;
            o = cmd_factor(p, n, mode, coeffs, g);
        } else if (lehmer->parsed()) {
            name = "lehmer";
            o = cmd_lehmer(p, mu, g);
        } else {
            name = "identities";
            o = cmd_identities(p, m, g);
        }
        const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
        emit(name, o, elapsed.count(), g, out);
        return o.code;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return budget_exceeded;
    } catch (const NotDivisibleError& e) {
        err << "error: " << e.what() << "\n";
        return verification_failed;
    } catch (const std::logic_error& e) {
        // DomainError and ValidationError
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(std::move(args), out, err);
}

} // namespace ptep::cli
