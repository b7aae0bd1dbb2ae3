// Command-line front end: series expansion, identity verification, sign
// resolution, factor-vanish tests, quotient evaluation, closed-form and
// transformation suites, and catalog export. Exit code 0 means every emitted
// report passed, 1 means at least one fail/indeterminate, 2 means a usage,
// parse, or unknown-id problem.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qlab/qlab.hpp"

using json = nlohmann::ordered_json;
using namespace qlab;

namespace {

struct Output {
    bool as_json = false;
    std::vector<json> reports;
    std::vector<std::string> lines;
    bool all_pass = true;

    void emit(const json& j, const std::string& line, bool pass) {
        reports.push_back(j);
        lines.push_back(line);
        all_pass = all_pass && pass;
    }
    int flush() {
        if (as_json) {
            if (reports.size() == 1) {
                std::cout << reports.front().dump(2) << "\n";
            } else {
                std::cout << json(reports).dump(2) << "\n";
            }
        } else {
            for (const auto& l : lines) std::cout << l << "\n";
        }
        return all_pass ? 0 : 1;
    }
};

std::string fnz_str(const std::pair<Exponent, Rational>& fnz) {
    return fnz.second.str() + " * q^" + fnz.first.str();
}

json identity_report_json(const IdentityReport& r, long order) {
    json j;
    j["id"] = r.id;
    j["status"] = to_cstring(r.status);
    j["order"] = order;
    if (r.first_nonzero) {
        j["first_nonzero"] = {{"exponent", r.first_nonzero->first.str()},
                              {"coefficient", r.first_nonzero->second.str()}};
    }
    if (r.resolved_signs) j["resolved_signs"] = *r.resolved_signs;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

std::string identity_report_line(const IdentityReport& r, long order) {
    std::string line = r.id + ": " + to_cstring(r.status) + " (order " + std::to_string(order) + ")";
    if (r.resolved_signs) line += " signs=" + *r.resolved_signs;
    if (r.first_nonzero) line += " first nonzero " + fnz_str(*r.first_nonzero);
    if (!r.note.empty()) line += " [" + r.note + "]";
    return line;
}

void run_verify(Output& out, const std::optional<std::string>& id, long order) {
    if (id) {
        IdentityReport r = verify_identity(*id, order);
        out.emit(identity_report_json(r, order), identity_report_line(r, order), r.status == Status::pass);
        return;
    }
    for (const auto& r : verify_all(Exponent::from_int(order)))
        out.emit(identity_report_json(r, order), identity_report_line(r, order), r.status == Status::pass);
}

void run_signs(Output& out, const std::string& id, long order) {
    auto [signs, r] = resolve_signs(id, Exponent::from_int(order));
    out.emit(identity_report_json(r, order), identity_report_line(r, order), r.status == Status::pass);
}

void run_vanish(Output& out, const std::string& id, long order) {
    FactorReport r = factor_vanish_test(id, order);
    json j;
    j["id"] = r.id;
    j["status"] = r.matches_expected ? "pass" : "fail";
    j["order"] = order;
    j["vanishing"] = r.vanishing;
    j["nonvanishing"] = r.nonvanishing;
    if (!r.indeterminate.empty()) j["indeterminate"] = r.indeterminate;
    json fn = json::object();
    for (const auto& [idx, fnz] : r.first_nonzero) fn[std::to_string(idx)] = fnz_str(fnz);
    if (!fn.empty()) j["first_nonzero"] = fn;
    j["elapsed_ms"] = r.elapsed_ms;

    std::string line = r.id + ": " + (r.matches_expected ? "pass" : "fail") + " (order "
                       + std::to_string(order) + ")";
    for (auto i : r.vanishing) line += " factor" + std::to_string(i) + "=vanishing";
    for (auto i : r.nonvanishing) {
        line += " factor" + std::to_string(i) + "=nonvanishing";
        auto it = r.first_nonzero.find(i);
        if (it != r.first_nonzero.end()) line += "(" + fnz_str(it->second) + ")";
    }
    for (auto i : r.indeterminate) line += " factor" + std::to_string(i) + "=indeterminate";
    out.emit(j, line, r.matches_expected);
}

void run_eval_r(Output& out, const Rational& k, const Rational& n, bool primed, long digits) {
    auto t0 = std::chrono::steady_clock::now();
    EvalResult r = primed ? compute_r_prime(k, n, digits) : compute_r(k, n, digits);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    long certified = r.certified_digits();
    long shown = std::min(digits, certified);
    std::string name = std::string(primed ? "r'" : "r") + "(" + k.str() + "," + n.str() + ")";
    json j;
    j["id"] = name;
    j["status"] = "pass";
    j["digits"] = digits;
    j["value"] = r.value.str(shown);
    j["error_bound"] = r.error_bound.str(3);
    j["certified_digits"] = certified;
    j["elapsed_ms"] = ms;
    out.emit(j, name + " = " + r.value.str(shown) + "  (" + std::to_string(certified)
                    + " digits certified)", true);
}

void run_check_values(Output& out, const std::optional<std::string>& id, long digits) {
    std::vector<std::string> ids;
    if (id) {
        ids.push_back(*id);
    } else {
        for (const auto& d : Catalog::instance().closed_forms()) ids.push_back(d.id);
    }
    for (const auto& cid : ids) {
        ValueReport r = check_closed_form(cid, digits);
        json j;
        j["id"] = r.id;
        j["status"] = r.pass ? "pass" : "fail";
        j["digits"] = digits;
        j["value"] = r.computed.str(std::min(digits, 40L));
        j["error_bound"] = r.diff.str(3);
        j["elapsed_ms"] = r.elapsed_ms;
        out.emit(j, r.id + ": " + (r.pass ? "pass" : "fail") + "  |computed - radical| = "
                        + r.diff.str(3) + " (tolerance " + r.tolerance.str(2) + ")", r.pass);
    }
}

void run_check_transforms(Output& out, const Rational& k, const Rational& n, const Rational& m,
                          long digits) {
    TransformReport t = check_transformations(k, n, m, digits);
    for (const auto& rel : t.relations) {
        json j;
        j["id"] = rel.name + " @ k=" + k.str() + " n=" + n.str() + " m=" + m.str();
        j["status"] = rel.pass ? "pass" : "fail";
        j["digits"] = digits;
        j["error_bound"] = rel.residual.str(3);
        out.emit(j, rel.name + ": " + (rel.pass ? "pass" : "fail") + "  residual "
                        + rel.residual.str(3), rel.pass);
    }
}

void run_numeric_identity(Output& out, const std::string& id, const Rational& n, long digits) {
    NumericIdentityReport r = verify_numeric_identity(id, n, digits);
    json j;
    j["id"] = r.id;
    j["status"] = r.pass ? "pass" : "fail";
    j["digits"] = digits;
    j["n"] = r.n.str();
    j["error_bound"] = r.residual.str(3);
    j["elapsed_ms"] = r.elapsed_ms;
    out.emit(j, r.id + " at n=" + r.n.str() + ": " + (r.pass ? "pass" : "fail") + "  residual "
                    + r.residual.str(3), r.pass);
}

void run_expand(Output& out, const std::string& symbol, long order) {
    EtaQuotientSpec spec = Catalog::instance().symbol_spec(symbol);
    QSeries s = build_eta_series(spec, Exponent::from_int(order));
    json j;
    j["id"] = symbol;
    j["status"] = "pass";
    j["order"] = order;
    j["definition"] = to_string(spec);
    j["series"] = to_string(s);
    out.emit(j, to_string(s), true);
}

json expr_json(const Expr& e) { return e.str(); }

void run_export(Output& out) {
    const Catalog& cat = Catalog::instance();
    json root;
    root["identities"] = json::array();
    for (const auto& d : cat.identities()) {
        json j;
        j["id"] = d.id;
        j["mode"] = d.mode == IdentityMode::series ? "series" : "numeric";
        if (d.mode == IdentityMode::series) {
            json bs = json::array();
            for (const auto& b : d.bindings) {
                json bj;
                bj["name"] = b.name;
                if (b.eta) bj["quotient"] = to_string(*b.eta);
                if (b.expr) bj["expr"] = expr_json(*b.expr);
                bs.push_back(bj);
            }
            j["bindings"] = bs;
        } else {
            json bs = json::array();
            for (const auto& rb : d.r_bindings) {
                bs.push_back({{"name", rb.name},
                              {"k", rb.k.str()},
                              {"n_scale", rb.n_scale.str()},
                              {"primed", rb.primed}});
            }
            j["bindings"] = bs;
        }
        j["lhs"] = expr_json(d.lhs);
        j["rhs"] = expr_json(d.rhs);
        if (d.sign_slots > 0) j["sign_slots"] = d.sign_slots;
        j["anchor"] = d.anchor;
        if (!d.note.empty()) j["note"] = d.note;
        root["identities"].push_back(j);
    }
    root["closed_forms"] = json::array();
    for (const auto& d : cat.closed_forms()) {
        json j;
        j["id"] = d.id;
        j["combine"] = d.combine == Combine::single ? "single" : "product";
        json es = json::array();
        for (const auto& e : d.entries)
            es.push_back({{"k", e.k.str()}, {"n", e.n.str()}, {"primed", e.primed}});
        j["entries"] = es;
        j["radical"] = expr_json(d.radical);
        j["anchor"] = d.anchor;
        if (!d.note.empty()) j["note"] = d.note;
        root["closed_forms"].push_back(j);
    }
    root["factor_tests"] = json::array();
    for (const auto& d : cat.factor_tests()) {
        json j;
        j["id"] = d.id;
        json bs = json::array();
        for (const auto& b : d.bindings) {
            json bj;
            bj["name"] = b.name;
            if (b.eta) bj["quotient"] = to_string(*b.eta);
            bs.push_back(bj);
        }
        j["bindings"] = bs;
        json fs = json::array();
        for (const auto& f : d.factors) fs.push_back(expr_json(f));
        j["factors"] = fs;
        j["expect_vanishing"] = d.expect_vanishing;
        j["expect_nonvanishing"] = d.expect_nonvanishing;
        j["anchor"] = d.anchor;
        root["factor_tests"].push_back(j);
    }
    std::cout << root.dump(2) << "\n";
}

Rational parse_rational(const std::string& s, const char* what) {
    try {
        return Rational(s);
    } catch (const error&) {
        throw CLI::ValidationError(std::string(what) + ": cannot parse rational \"" + s + "\"");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification laboratory for the degree-21 theta-quotient relations"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable reports");

    long order = 60;
    long digits = 60;
    std::string id, symbol, k_str = "1", n_str = "1", m_str = "1";
    bool primed = false;

    auto* expand = app.add_subcommand("expand", "print the series of a catalog symbol");
    expand->add_option("--symbol", symbol, "symbol name (u, w, r, s, f<k>, fp<k>, u<k>, w<k>)")->required();
    expand->add_option("--order", order, "truncation order in q-powers");

    auto* verify = app.add_subcommand("verify", "verify series identities");
    verify->add_option("--id", id, "identity id (all series identities when omitted)");
    verify->add_option("--order", order, "verification order in q-powers");

    auto* verify_all_cmd = app.add_subcommand("verify-all", "verify every series identity");
    verify_all_cmd->add_option("--order", order, "verification order in q-powers");

    auto* signs = app.add_subcommand("signs", "resolve the sign slots of an identity");
    signs->add_option("--id", id)->required();
    signs->add_option("--order", order, "resolution order in q-powers");

    auto* vanish = app.add_subcommand("vanish", "run a factor-vanish test");
    vanish->add_option("--id", id)->required();
    vanish->add_option("--order", order, "expansion order in q-powers");

    auto* evalr = app.add_subcommand("eval-r", "evaluate a theta quotient r or r'");
    evalr->add_option("--k", k_str)->required();
    evalr->add_option("--n", n_str)->required();
    evalr->add_flag("--primed", primed, "evaluate r' instead of r");
    evalr->add_option("--digits", digits, "requested decimal digits");

    auto* values = app.add_subcommand("check-values", "closed-form value suite");
    values->add_option("--id", id, "entry id (all entries when omitted)");
    values->add_option("--digits", digits);

    auto* transforms = app.add_subcommand("check-transforms", "inversion/symmetry/composition laws");
    transforms->add_option("--k", k_str)->required();
    transforms->add_option("--n", n_str)->required();
    transforms->add_option("--m", m_str)->required();
    transforms->add_option("--digits", digits);

    auto* numid = app.add_subcommand("numeric-identity", "check a numeric-mode identity at one n");
    numid->add_option("--id", id)->required();
    numid->add_option("--n", n_str)->required();
    numid->add_option("--digits", digits);

    app.add_subcommand("export-catalog", "emit the whole catalog as JSON");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Output out;
    out.as_json = as_json;
    try {
        if (order < 1) throw domain_error("order must be at least 1");
        if (digits < 10) throw domain_error("digits must be at least 10");

        if (expand->parsed()) {
            run_expand(out, symbol, order);
        } else if (verify->parsed()) {
            run_verify(out, id.empty() ? std::nullopt : std::optional<std::string>(id), order);
        } else if (verify_all_cmd->parsed()) {
            run_verify(out, std::nullopt, order);
        } else if (signs->parsed()) {
            run_signs(out, id, order);
        } else if (vanish->parsed()) {
            run_vanish(out, id, order);
        } else if (evalr->parsed()) {
            run_eval_r(out, parse_rational(k_str, "--k"), parse_rational(n_str, "--n"), primed, digits);
        } else if (values->parsed()) {
            run_check_values(out, id.empty() ? std::nullopt : std::optional<std::string>(id), digits);
        } else if (transforms->parsed()) {
            run_check_transforms(out, parse_rational(k_str, "--k"), parse_rational(n_str, "--n"),
                                 parse_rational(m_str, "--m"), digits);
        } else if (numid->parsed()) {
            run_numeric_identity(out, id, parse_rational(n_str, "--n"), digits);
        } else {
            run_export(out);
            return 0;
        }
    } catch (const unknown_id_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return out.flush();
}
