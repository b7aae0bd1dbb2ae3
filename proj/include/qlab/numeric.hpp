#ifndef QLAB_NUMERIC_HPP
#define QLAB_NUMERIC_HPP

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlab/bigreal.hpp"
#include "qlab/catalog.hpp"
#include "qlab/error.hpp"
#include "qlab/eta.hpp"
#include "qlab/series.hpp"

namespace qlab {

/// Guard digits added on top of every precision request.
constexpr long numeric_guard_digits = 20;

/// A computed value together with a rigorous bound on its error (series tail
/// plus a rounding allowance). Reported digits never exceed what the bound
/// certifies.
struct EvalResult {
    BigReal value;
    BigReal error_bound;
    long terms = 0;  // summed series terms, when the evaluation is a single sum

    /// Number of decimal digits certified by the bound, relative to the value.
    long certified_digits() const {
        if (error_bound.is_zero()) return value.digits();
        BigReal rel = error_bound / (abs(value) + error_bound);
        // smallest d with rel < 10^{-d}
        long d = 0;
        BigReal t(1, value.digits());
        BigReal tenth = BigReal(1, value.digits()) / BigReal(10, value.digits());
        while (d < value.digits() && rel < t * tenth) {
            t = t * tenth;
            ++d;
        }
        return d;
    }
};

namespace detail {

inline BigReal rounding_allowance(long working_digits) {
    return BigReal::pow10(-(working_digits - 6), working_digits);
}

/// Partial pentagonal sum of f(-x) (or the sign-twisted f(x)) at 0 < x < 1.
/// Terms are added until the geometric tail bound 2 x^E/(1-x), E the smallest
/// unsummed pentagonal exponent, drops below 10^{-(digits+guard/2)};
/// `extra_pairs` forces that many additional n beyond the stopping point.
inline EvalResult theta_sum(const BigReal& x, bool plus, long digits, long extra_pairs = 0) {
    const long W = digits + numeric_guard_digits;
    BigReal one(1, W);
    if (!(x.sign() > 0) || !(x < one)) throw domain_error("theta sum: point must lie in (0,1)");
    BigReal target = BigReal::pow10(-(digits + numeric_guard_digits / 2), W);
    BigReal sum = one;
    BigReal tail(0, W);
    long n = 1;
    long summed_pairs = 0;
    for (;; ++n) {
        long g1 = n * (3 * n - 1) / 2;
        long g2 = n * (3 * n + 1) / 2;
        BigReal t1 = pow_int(x, g1);
        BigReal t2 = pow_int(x, g2);
        bool neg1, neg2;
        if (!plus) {
            neg1 = neg2 = (n % 2 != 0);
        } else {
            neg1 = (n + g1) % 2 != 0;
            neg2 = (n + g2) % 2 != 0;
        }
        sum += neg1 ? -t1 : t1;
        sum += neg2 ? -t2 : t2;
        ++summed_pairs;
        long E = (n + 1) * (3 * (n + 1) - 1) / 2;  // smallest unsummed exponent
        tail = (BigReal(2, W) * pow_int(x, E)) / (one - x);
        if (tail < target && summed_pairs > extra_pairs) break;
        if (n > 1000000) throw domain_error("theta sum: no convergence (point too close to 1)");
    }
    BigReal bound = tail + BigReal(static_cast<long>(2 * n + 4), W) * rounding_allowance(W);
    return EvalResult{sum, bound, 2 * n + 1};
}

inline BigReal to_real(const Rational& q, long working_digits) { return BigReal(q, working_digits); }

/// x^e for a lattice exponent e, via the 24th root.
inline BigReal pow_lattice(const BigReal& x, const Exponent& e, long working_digits) {
    if (e.ticks().is_zero()) return BigReal(1, working_digits);
    BigReal x24 = rootn(x, 24);
    return pow_int(x24, e.ticks().to_long());
}

} // namespace detail

/// f(-qv^k) with a certified bound; k is an exact positive rational.
inline EvalResult eval_f_minus_at(const BigReal& qv, const Rational& k, long digits) {
    if (!(k > Rational(0))) throw domain_error("eval_f_minus_at: k must be positive");
    const long W = digits + numeric_guard_digits;
    BigReal one(1, W);
    if (!(qv.sign() > 0) || !(qv < one)) throw domain_error("eval_f_minus_at: q must lie in (0,1)");
    BigReal x = pow_int(rootn(qv, k.den().to_long()), k.num().to_long());
    return detail::theta_sum(x, false, digits);
}
inline EvalResult eval_f_minus_at(const BigReal& qv, long k, long digits) {
    return eval_f_minus_at(qv, Rational(k), digits);
}

/// f(qv^k): the sign-twisted companion.
inline EvalResult eval_f_plus_at(const BigReal& qv, const Rational& k, long digits) {
    if (!(k > Rational(0))) throw domain_error("eval_f_plus_at: k must be positive");
    const long W = digits + numeric_guard_digits;
    BigReal one(1, W);
    if (!(qv.sign() > 0) || !(qv < one)) throw domain_error("eval_f_plus_at: q must lie in (0,1)");
    BigReal x = pow_int(rootn(qv, k.den().to_long()), k.num().to_long());
    return detail::theta_sum(x, true, digits);
}
inline EvalResult eval_f_plus_at(const BigReal& qv, long k, long digits) {
    return eval_f_plus_at(qv, Rational(k), digits);
}

namespace detail {

/// Shared body of the two quotient parameterizations:
///   base = f(-.)  with q = exp(-2 pi sqrt(n/k))   (unprimed)
///   base = f(.)   with q = exp(-  pi sqrt(n/k))   (primed)
/// value = base(q) / (k^{1/4} q^{(k-1)/24} base(q^k)).
inline EvalResult compute_quotient(const Rational& k, const Rational& n, long digits, bool primed) {
    if (!(k > Rational(0)) || !(n > Rational(0)))
        throw domain_error("theta quotient: k and n must be positive");
    const long W = digits + numeric_guard_digits;
    BigReal kk(k, W), nn(n, W);
    BigReal t = BigReal::pi(W) * sqrt(nn / kk);
    if (!primed) t = BigReal(2, W) * t;
    BigReal q = exp(-t);
    BigReal qk = exp(-(t * kk));
    BigReal qpow = exp(-(t * (kk - BigReal(1, W)) / BigReal(24, W)));
    BigReal k4 = rootn(kk, 4);
    EvalResult num = theta_sum(q, primed, digits);
    EvalResult den = theta_sum(qk, primed, digits);
    BigReal value = num.value / (k4 * qpow * den.value);
    BigReal rel = num.error_bound / (abs(num.value) - num.error_bound)
                  + den.error_bound / (abs(den.value) - den.error_bound);
    BigReal bound = abs(value) * rel + (abs(value) + BigReal(1, W)) * rounding_allowance(W);
    return EvalResult{value, bound, num.terms + den.terms};
}

} // namespace detail

/// r_{k,n} = f(-q)/(k^{1/4} q^{(k-1)/24} f(-q^k)), q = exp(-2 pi sqrt(n/k)).
/// k is accepted as an exact positive rational: the symmetry law r_{k,n} = r_{n,k}
/// swaps the roles of the two parameters.
inline EvalResult compute_r(const Rational& k, const Rational& n, long digits) {
    return detail::compute_quotient(k, n, digits, false);
}

/// r'_{k,n} = f(q)/(k^{1/4} q^{(k-1)/24} f(q^k)), q = exp(-pi sqrt(n/k)).
inline EvalResult compute_r_prime(const Rational& k, const Rational& n, long digits) {
    return detail::compute_quotient(k, n, digits, true);
}

using RealEnv = std::map<std::string, BigReal>;

/// Numeric evaluation of an expression; symbols resolve through `env`.
inline BigReal expr_to_real(const Expr& e, long digits, const RealEnv* env = nullptr) {
    using K = Expr::Kind;
    const long W = digits + numeric_guard_digits;
    const auto& n = e.node();
    switch (n.kind) {
        case K::Const: return BigReal(n.cval, W);
        case K::Sym: {
            if (env != nullptr) {
                auto it = env->find(n.sym);
                if (it != env->end()) return it->second;
            }
            throw unbound_symbol_error(n.sym);
        }
        case K::Add: return expr_to_real(n.kids[0], digits, env) + expr_to_real(n.kids[1], digits, env);
        case K::Sub: return expr_to_real(n.kids[0], digits, env) - expr_to_real(n.kids[1], digits, env);
        case K::Mul: return expr_to_real(n.kids[0], digits, env) * expr_to_real(n.kids[1], digits, env);
        case K::Div: return expr_to_real(n.kids[0], digits, env) / expr_to_real(n.kids[1], digits, env);
        case K::PowInt: return pow_int(expr_to_real(n.kids[0], digits, env), n.ival);
        case K::Sqrt: return sqrt(expr_to_real(n.kids[0], digits, env));
        case K::NthRoot: return rootn(expr_to_real(n.kids[0], digits, env), n.ival);
        case K::SignSlot: throw unresolved_signs_error();
    }
    throw error("expr_to_real: unreachable");
}

struct ValueReport {
    std::string id;
    long digits = 0;
    BigReal computed, radical, diff, tolerance;
    bool pass = false;
    double elapsed_ms = 0.0;
};

/// Default comparison tolerance: 10 digits of headroom below the request.
inline BigReal closed_form_tolerance(long digits) {
    return BigReal::pow10(-(digits - 10), digits);
}

/// Compares the direct computation of a closed-form catalog entry (single
/// value or product of values) against its radical.
inline ValueReport check_closed_form(const std::string& id, long digits) {
    auto t0 = std::chrono::steady_clock::now();
    const ClosedFormDef& def = Catalog::instance().closed_form(id);
    const long W = digits + numeric_guard_digits;
    BigReal computed(1, W);
    for (const auto& e : def.entries) {
        EvalResult r = e.primed ? compute_r_prime(e.k, e.n, digits) : compute_r(e.k, e.n, digits);
        computed *= r.value;
    }
    BigReal radical = expr_to_real(def.radical, digits);
    ValueReport rep;
    rep.id = id;
    rep.digits = digits;
    rep.computed = computed;
    rep.radical = radical;
    rep.diff = abs(computed - radical);
    rep.tolerance = closed_form_tolerance(digits);
    rep.pass = rep.diff < rep.tolerance;
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

struct RelationReport {
    std::string name;
    BigReal residual, tolerance;
    bool pass = false;
};

struct TransformReport {
    Rational k, n, m;
    long digits = 0;
    std::vector<RelationReport> relations;
    bool all_pass = true;
};

/// The inversion, symmetry and composition laws of the quotient families,
/// evaluated at exact rational (k, n, m).
inline TransformReport check_transformations(const Rational& k, const Rational& n, const Rational& m,
                                             long digits) {
    if (!(k > Rational(0)) || !(n > Rational(0)) || !(m > Rational(0)))
        throw domain_error("check_transformations: k, n, m must be positive");
    TransformReport rep;
    rep.k = k;
    rep.n = n;
    rep.m = m;
    rep.digits = digits;
    BigReal one(1, digits + numeric_guard_digits);
    BigReal tol = closed_form_tolerance(digits);
    auto push = [&](const std::string& name, const BigReal& resid) {
        RelationReport r{name, abs(resid), tol, abs(resid) < tol};
        rep.all_pass = rep.all_pass && r.pass;
        rep.relations.push_back(std::move(r));
    };
    push("r(k,1/n) r(k,n) = 1", compute_r(k, Rational(1) / n, digits).value * compute_r(k, n, digits).value - one);
    push("r'(k,1/n) r'(k,n) = 1",
         compute_r_prime(k, Rational(1) / n, digits).value * compute_r_prime(k, n, digits).value - one);
    push("r(k,n) = r(n,k)", compute_r(k, n, digits).value - compute_r(n, k, digits).value);
    push("r'(k,n) = r'(n,k)", compute_r_prime(k, n, digits).value - compute_r_prime(n, k, digits).value);
    push("r(k,n/m) = r(mk,n)/r(nk,m)",
         compute_r(k, n / m, digits).value
             - compute_r(m * k, n, digits).value / compute_r(n * k, m, digits).value);
    push("r'(k,n/m) = r'(mk,n)/r'(nk,m)",
         compute_r_prime(k, n / m, digits).value
             - compute_r_prime(m * k, n, digits).value / compute_r_prime(n * k, m, digits).value);
    return rep;
}

struct NumericIdentityReport {
    std::string id;
    Rational n;
    long digits = 0;
    BigReal residual, tolerance;
    bool pass = false;
    double elapsed_ms = 0.0;
};

/// Checks a numeric-mode catalog identity at one parameter value n.
inline NumericIdentityReport verify_numeric_identity(const std::string& id, const Rational& n,
                                                     long digits) {
    auto t0 = std::chrono::steady_clock::now();
    const IdentityDef& def = Catalog::instance().identity(id);
    if (def.mode != IdentityMode::numeric)
        throw wrong_mode_error("identity " + id + " is series-mode; use verify_identity");
    if (!(n > Rational(0))) throw domain_error("verify_numeric_identity: n must be positive");
    RealEnv env;
    for (const auto& b : def.r_bindings) {
        Rational nn = b.n_scale * n;
        EvalResult r = b.primed ? compute_r_prime(b.k, nn, digits) : compute_r(b.k, nn, digits);
        env.emplace(b.name, r.value);
    }
    NumericIdentityReport rep;
    rep.id = id;
    rep.n = n;
    rep.digits = digits;
    rep.residual = abs(expr_to_real(def.lhs, digits, &env) - expr_to_real(def.rhs, digits, &env));
    rep.tolerance = closed_form_tolerance(digits);
    rep.pass = rep.residual < rep.tolerance;
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

struct CrossCheckReport {
    std::string symbol;
    Rational qv;
    long order = 0, digits = 0;
    BigReal series_value, numeric_value, diff, combined_bound;
    bool pass = false;
};

namespace detail {

/// Tail bound for the truncated expansion of an eta quotient at 0 < x < 1.
/// The unit part of a quotient of weight m (sum of |powers|) has integer
/// offsets j with |coefficient| <= (j+1)^{m-1} e^{c sqrt(m j)}, c = pi sqrt(2/3)
/// (each factor's coefficients are bounded by the partition numbers). Splicing
/// the growth geometrically from offset N = order - lead gives
///   tail <= x^order (N+1)^{m-1} e^{c sqrt(mN)} / (1 - x 2^{m-1} e^{c sqrt(m)/(2 sqrt(N))}).
inline BigReal eta_tail_bound(const EtaQuotientSpec& spec, const BigReal& x, const Exponent& order,
                              long working_digits) {
    const long W = working_digits;
    const long m = spec.weight();
    Rational span = (order - spec.prefactor).value();
    Int Nceil = fdiv(span.num() + span.den() - Int(1), span.den());
    if (Nceil.sign() <= 0) throw tail_bound_error("order does not exceed the quotient lead");
    BigReal N(Rational(Nceil), W);
    BigReal c("2.5651", W);  // rounded up from pi sqrt(2/3)
    BigReal mN = BigReal(m, W) * N;
    BigReal growth = exp(c * sqrt(BigReal(m, W)) / (BigReal(2, W) * sqrt(N)));
    BigReal ratio = x * pow_int(BigReal(2, W), m - 1) * growth;
    if (!(ratio < BigReal(1, W))) throw tail_bound_error();
    BigReal head = pow_lattice(x, order, W) * pow_int(N + BigReal(1, W), m - 1) * exp(c * sqrt(mN));
    return head / (BigReal(1, W) - ratio);
}

} // namespace detail

/// Evaluates the truncated series of a catalog symbol at qv and the exact
/// quotient of theta evaluations at the same point; passes when the difference
/// sits inside the certified combined bound.
inline CrossCheckReport cross_check_series_vs_numeric(const std::string& symbol, const Rational& qv,
                                                      long order, long digits) {
    const EtaQuotientSpec spec = Catalog::instance().symbol_spec(symbol);
    const long W = digits + numeric_guard_digits;
    if (!(qv > Rational(0)) || !(qv < Rational(1)))
        throw domain_error("cross check: q must lie in (0,1)");
    BigReal x(qv, W);

    // gate: the certified tail must be small enough for the comparison below
    // to mean anything at all
    BigReal tail = detail::eta_tail_bound(spec, x, Exponent::from_int(order), W);
    if (!(tail < BigReal::pow10(-3, W)))
        throw tail_bound_error("tail bound " + tail.str(3) + " at order " + std::to_string(order)
                               + " certifies nothing at this point");

    QSeries series = build_eta_series(spec, Exponent::from_int(order));
    BigReal sv(0, W);
    BigReal x24 = rootn(x, 24);
    for (const auto& [e, cc] : series.terms()) sv += BigReal(cc, W) * pow_int(x24, e.ticks().to_long());

    BigReal nv = detail::pow_lattice(x, spec.prefactor, W);
    BigReal rel(0, W);
    for (const auto& f : spec.factors) {
        BigReal xs = pow_int(x, f.scale);
        EvalResult ev = detail::theta_sum(xs, f.plus, digits);
        nv *= pow_int(ev.value, f.power);
        long p = f.power < 0 ? -f.power : f.power;
        rel += BigReal(p, W) * (ev.error_bound / (abs(ev.value) - ev.error_bound));
    }

    CrossCheckReport rep;
    rep.symbol = symbol;
    rep.qv = qv;
    rep.order = order;
    rep.digits = digits;
    rep.series_value = sv;
    rep.numeric_value = nv;
    rep.diff = abs(sv - nv);
    rep.combined_bound = tail + abs(nv) * rel
                         + (abs(nv) + BigReal(1, W)) * detail::rounding_allowance(W)
                         + BigReal(static_cast<long>(series.terms().size() + 4), W) * detail::rounding_allowance(W);
    rep.pass = rep.diff < rep.combined_bound;
    return rep;
}

} // namespace qlab

#endif
