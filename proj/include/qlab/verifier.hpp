#ifndef QLAB_VERIFIER_HPP
#define QLAB_VERIFIER_HPP

#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qlab/catalog.hpp"
#include "qlab/error.hpp"
#include "qlab/series.hpp"

namespace qlab {

enum class Status { pass, fail, indeterminate };

inline const char* to_cstring(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::indeterminate: return "indeterminate";
    }
    return "?";
}

/// Outcome of one identity check. `pass` is only reported when the residual's
/// truncation actually covers the requested order; a truncation shortfall is
/// `indeterminate`, never a silent pass.
struct IdentityReport {
    std::string id;
    Exponent order;
    Status status = Status::indeterminate;
    std::optional<std::pair<Exponent, Rational>> first_nonzero;
    std::optional<std::string> resolved_signs;  // one '+'/'-' per slot
    double elapsed_ms = 0.0;
    std::string note;
};

namespace detail {

inline Exponent initial_headroom(const std::vector<Binding>& bindings) {
    // twice the most negative lead among bound quotients, plus slack
    Int worst(0);
    for (const auto& b : bindings)
        if (b.eta && b.eta->prefactor.ticks() < worst) worst = b.eta->prefactor.ticks();
    Exponent pad(Int(-2) * worst);
    Exponent floor_pad = Exponent::from_int(8);
    return pad < floor_pad ? floor_pad : pad;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
};

/// Evaluates `expr` over the bindings with enough internal order that the
/// result is trusted through `order` (escalating on truncation contraction,
/// e.g. from square roots). Returns the last attempt even if coverage was not
/// reached; the caller classifies that as indeterminate.
inline QSeries expand_covering(const std::vector<Binding>& bindings, const Expr& expr,
                               const Exponent& order, const std::vector<int>* signs = nullptr) {
    Exponent extra = initial_headroom(bindings);
    std::optional<QSeries> last;
    for (int attempt = 0; attempt < 7; ++attempt) {
        try {
            SeriesEnv env = build_env(bindings, order + extra, signs);
            last = expr_to_series(expr, env, signs);
        } catch (const empty_series_error&) {
            // a starved truncation can empty out a series mid-expression;
            // more internal order recovers it (a genuinely zero divisor does
            // not, and surfaces after the final attempt)
            if (attempt == 6) throw;
            extra = extra * 2;
            continue;
        }
        if (!(last->valid_to() < order)) return *last;
        if (auto fnz = last->first_nonzero(); fnz && fnz->first < order) return *last;
        extra = extra * 2;
    }
    return *last;
}

inline Status classify(const QSeries& resid, const Exponent& order,
                       std::optional<std::pair<Exponent, Rational>>& first_nonzero) {
    if (auto fnz = resid.first_nonzero(); fnz && fnz->first < order) {
        first_nonzero = fnz;
        return Status::fail;
    }
    return resid.valid_to() < order ? Status::indeterminate : Status::pass;
}

inline std::string signs_string(const std::vector<int>& signs) {
    std::string s;
    for (int v : signs) s += (v < 0 ? '-' : '+');
    return s;
}

} // namespace detail

/// lhs - rhs of a series-mode identity, internally generated so that the
/// residual is trusted through `order` whenever the truncation algebra allows.
inline QSeries residual_series(const IdentityDef& ident, const Exponent& order,
                               const std::vector<int>* signs = nullptr) {
    if (ident.mode != IdentityMode::series)
        throw wrong_mode_error("identity " + ident.id + " is numeric-mode");
    if (ident.sign_slots > 0 && signs == nullptr) throw unresolved_signs_error();
    return detail::expand_covering(ident.bindings, ident.lhs - ident.rhs, order, signs);
}

inline QSeries residual_series(const std::string& id, const Exponent& order,
                               const std::vector<int>* signs = nullptr) {
    return residual_series(Catalog::instance().identity(id), order, signs);
}

/// Exhaustively tries every +- assignment of the identity's sign slots and
/// reports the unique one whose residual vanishes through `order`.
inline std::pair<std::vector<int>, IdentityReport> resolve_signs(const std::string& id,
                                                                 const Exponent& order) {
    detail::Timer timer;
    const IdentityDef& ident = Catalog::instance().identity(id);
    if (ident.mode != IdentityMode::series)
        throw wrong_mode_error("identity " + id + " is numeric-mode");
    if (ident.sign_slots <= 0) throw no_sign_slots_error();

    const long nslots = ident.sign_slots;
    std::vector<std::vector<int>> passing;
    std::vector<IdentityReport> all;
    bool any_indeterminate = false;
    for (unsigned long mask = 0; mask < (1UL << nslots); ++mask) {
        std::vector<int> signs(static_cast<std::size_t>(nslots));
        for (long i = 0; i < nslots; ++i) signs[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
        QSeries resid = residual_series(ident, order, &signs);
        IdentityReport r;
        r.id = id;
        r.order = order;
        r.status = detail::classify(resid, order, r.first_nonzero);
        r.resolved_signs = detail::signs_string(signs);
        all.push_back(r);
        if (r.status == Status::pass) passing.push_back(signs);
        if (r.status == Status::indeterminate) any_indeterminate = true;
    }

    IdentityReport out;
    out.id = id;
    out.order = order;
    if (passing.size() == 1) {
        out.status = Status::pass;
        out.resolved_signs = detail::signs_string(passing.front());
        out.elapsed_ms = timer.ms();
        return {passing.front(), out};
    }
    if (passing.empty() && any_indeterminate) {
        out.status = Status::indeterminate;
        out.note = "no assignment reaches the requested order";
    } else {
        out.status = Status::fail;
        out.note = passing.empty() ? "no sign assignment makes the residual vanish"
                                   : "ambiguous: several sign assignments pass";
        for (const auto& r : all)
            if (r.status == Status::pass) out.note += " " + *r.resolved_signs;
        // surface one concrete counterexample term
        for (const auto& r : all)
            if (r.first_nonzero) { out.first_nonzero = r.first_nonzero; break; }
    }
    out.elapsed_ms = timer.ms();
    return {{}, out};
}

/// Proves or refutes one series-mode identity through `order`. Identities with
/// sign slots are resolved first and the assignment is recorded in the report.
inline IdentityReport verify_identity(const std::string& id, const Exponent& order) {
    detail::Timer timer;
    const IdentityDef& ident = Catalog::instance().identity(id);
    if (ident.mode != IdentityMode::series)
        throw wrong_mode_error("identity " + id + " is numeric-mode; use the numeric checks");
    if (ident.sign_slots > 0) {
        auto [signs, report] = resolve_signs(id, order);
        report.elapsed_ms = timer.ms();
        return report;
    }
    IdentityReport r;
    r.id = id;
    r.order = order;
    QSeries resid = residual_series(ident, order);
    r.status = detail::classify(resid, order, r.first_nonzero);
    r.elapsed_ms = timer.ms();
    return r;
}

inline IdentityReport verify_identity(const std::string& id, long order) {
    return verify_identity(id, Exponent::from_int(order));
}

/// One report per series-mode catalog identity. Failures are reports, not errors.
inline std::vector<IdentityReport> verify_all(const Exponent& order) {
    std::vector<IdentityReport> out;
    for (const auto& d : Catalog::instance().identities())
        if (d.mode == IdentityMode::series) out.push_back(verify_identity(d.id, order));
    return out;
}

/// Factor-vanish reproduction: expands each candidate factor as a q-series and
/// classifies it as vanishing (identically zero through `order`), nonvanishing
/// (with its first nonzero term), or indeterminate on truncation shortfall.
struct FactorReport {
    std::string id;
    Exponent order;
    std::set<std::size_t> vanishing, nonvanishing, indeterminate;  // 1-based
    std::map<std::size_t, std::pair<Exponent, Rational>> first_nonzero;
    bool matches_expected = false;
    double elapsed_ms = 0.0;
};

inline FactorReport factor_vanish_test(const std::string& id, const Exponent& order) {
    detail::Timer timer;
    const FactorTestDef& def = Catalog::instance().factor_test(id);
    FactorReport rep;
    rep.id = id;
    rep.order = order;
    for (std::size_t i = 0; i < def.factors.size(); ++i) {
        QSeries s = detail::expand_covering(def.bindings, def.factors[i], order);
        std::optional<std::pair<Exponent, Rational>> fnz;
        Status st = detail::classify(s, order, fnz);
        std::size_t idx = i + 1;
        if (st == Status::pass) {
            rep.vanishing.insert(idx);
        } else if (st == Status::fail) {
            rep.nonvanishing.insert(idx);
            rep.first_nonzero.emplace(idx, *fnz);
        } else {
            rep.indeterminate.insert(idx);
        }
    }
    rep.matches_expected = true;
    for (auto i : def.expect_vanishing)
        if (rep.vanishing.count(i) == 0) rep.matches_expected = false;
    for (auto i : def.expect_nonvanishing)
        if (rep.nonvanishing.count(i) == 0) rep.matches_expected = false;
    rep.elapsed_ms = timer.ms();
    return rep;
}

inline FactorReport factor_vanish_test(const std::string& id, long order) {
    return factor_vanish_test(id, Exponent::from_int(order));
}

} // namespace qlab

#endif
