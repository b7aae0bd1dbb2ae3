#ifndef QLAB_SERIES_HPP
#define QLAB_SERIES_HPP

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qlab/error.hpp"
#include "qlab/exponent.hpp"
#include "qlab/rational.hpp"

namespace qlab {

/// Truncated Puiseux series over exact rationals, exponents on the 1/24 tick
/// lattice. The series is trusted for all exponents strictly below valid_to;
/// no zero coefficient is ever stored and every stored exponent lies below
/// valid_to. Values are immutable once built: every operation returns a fresh
/// series and computes the tightest sound truncation for its result.
class QSeries {
public:
    using TermMap = std::map<Exponent, Rational>;

    explicit QSeries(Exponent valid_to) : valid_to_(std::move(valid_to)) {}
    QSeries(TermMap terms, Exponent valid_to) : valid_to_(std::move(valid_to)) {
        for (auto& [e, c] : terms)
            if (!c.is_zero() && e < valid_to_) terms_.emplace(e, c);
    }

    const TermMap& terms() const { return terms_; }
    const Exponent& valid_to() const { return valid_to_; }
    bool empty() const { return terms_.empty(); }

    /// Smallest stored exponent; throws on the zero series (no sentinel lead).
    const Exponent& lead() const {
        if (terms_.empty()) throw empty_series_error();
        return terms_.begin()->first;
    }
    const Rational& lead_coeff() const {
        if (terms_.empty()) throw empty_series_error();
        return terms_.begin()->second;
    }

    std::optional<std::pair<Exponent, Rational>> first_nonzero() const {
        if (terms_.empty()) return std::nullopt;
        return std::make_pair(terms_.begin()->first, terms_.begin()->second);
    }

    bool is_zero_below(const Exponent& order) const {
        return terms_.empty() || !(terms_.begin()->first < order);
    }

    bool same_terms(const QSeries& o) const { return terms_ == o.terms_; }

private:
    TermMap terms_;
    Exponent valid_to_;
};

/// Single term c*q^e trusted below valid_to. A zero coefficient yields the
/// empty series; otherwise valid_to must exceed e.
inline QSeries monomial(const Exponent& e, const Rational& c, const Exponent& valid_to) {
    if (!c.is_zero() && !(e < valid_to)) throw error("monomial: valid_to must exceed the exponent");
    QSeries::TermMap t;
    if (!c.is_zero()) t.emplace(e, c);
    return QSeries(std::move(t), valid_to);
}

namespace detail {
/// Truncation horizon used for exact constants: far beyond any real order so
/// that min() propagation always picks the genuine constraint.
inline const Exponent& exact_horizon() {
    static const Exponent h{Int("4000000000000000000")};
    return h;
}
} // namespace detail

/// Exact constant series (known to all orders for practical purposes).
inline QSeries constant(const Rational& c) {
    return monomial(Exponent(), c, detail::exact_horizon());
}

inline QSeries add(const QSeries& a, const QSeries& b) {
    Exponent vt = a.valid_to() < b.valid_to() ? a.valid_to() : b.valid_to();
    QSeries::TermMap t = a.terms();
    for (const auto& [e, c] : b.terms()) {
        auto it = t.find(e);
        if (it == t.end()) {
            t.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t.erase(it);
        }
    }
    return QSeries(std::move(t), vt);
}

inline QSeries negate(const QSeries& a) {
    QSeries::TermMap t;
    for (const auto& [e, c] : a.terms()) t.emplace(e, -c);
    return QSeries(std::move(t), a.valid_to());
}

inline QSeries sub(const QSeries& a, const QSeries& b) { return add(a, negate(b)); }

inline QSeries mul(const QSeries& a, const QSeries& b) {
    if (a.empty() || b.empty()) {
        Exponent vt = a.valid_to() < b.valid_to() ? a.valid_to() : b.valid_to();
        return QSeries(vt);
    }
    Exponent v1 = a.valid_to() + b.lead();
    Exponent v2 = b.valid_to() + a.lead();
    Exponent vt = v1 < v2 ? v1 : v2;
    QSeries::TermMap t;
    for (const auto& [e1, c1] : a.terms()) {
        if (!(e1 + b.lead() < vt)) break;
        for (const auto& [e2, c2] : b.terms()) {
            Exponent e = e1 + e2;
            if (!(e < vt)) break;
            auto [it, fresh] = t.emplace(e, c1 * c2);
            if (!fresh) {
                it->second += c1 * c2;
                if (it->second.is_zero()) t.erase(it);
            }
        }
    }
    return QSeries(std::move(t), vt);
}

inline QSeries mul(const QSeries& a, const Rational& c) {
    if (c.is_zero()) return QSeries(a.valid_to());
    QSeries::TermMap t;
    for (const auto& [e, k] : a.terms()) t.emplace(e, k * c);
    return QSeries(std::move(t), a.valid_to());
}

namespace detail {

struct DenseView {
    Exponent lead;
    Int stride;            // positive; exponent of slot i is lead + i*stride
    std::vector<Rational> coeff;
    std::vector<std::size_t> nonzero;  // indices with coeff != 0, ascending
};

/// Dense view of the unit-normalized offsets of a nonempty series: slot i holds
/// the coefficient at lead + i*stride where stride is the gcd of all offsets.
inline DenseView to_dense(const QSeries& a) {
    DenseView d;
    d.lead = a.lead();
    Int g(0);
    for (const auto& [e, c] : a.terms()) g = gcd(g, (e - d.lead).ticks());
    if (g.is_zero()) g = Int(Exponent::ticks_per_unit);  // single-term series
    d.stride = g;
    Int cap = (a.valid_to() - d.lead).ticks();  // offsets live in [0, cap)
    Int nslots = fdiv(cap - Int(1), g) + Int(1);
    if (!nslots.fits_long() || nslots.to_long() > 50'000'000)
        throw error("series too dense for the requested truncation");
    d.coeff.assign(static_cast<std::size_t>(nslots.to_long()), Rational(0));
    for (const auto& [e, c] : a.terms()) {
        Int idx = divexact((e - d.lead).ticks(), g);
        d.coeff[static_cast<std::size_t>(idx.to_long())] = c;
    }
    for (std::size_t i = 0; i < d.coeff.size(); ++i)
        if (!d.coeff[i].is_zero()) d.nonzero.push_back(i);
    return d;
}

} // namespace detail

/// Multiplicative inverse through the propagated truncation:
/// valid_to = a.valid_to - 2*lead(a), lead of the result is -lead(a).
inline QSeries invert(const QSeries& a) {
    if (a.empty()) throw empty_series_error("invert: zero series");
    auto d = detail::to_dense(a);
    const std::size_t n = d.coeff.size();
    std::vector<Rational> b(n, Rational(0));
    Rational inv0 = Rational(1) / d.coeff[0];
    b[0] = inv0;
    for (std::size_t i = 1; i < n; ++i) {
        Rational s(0);
        for (std::size_t j : d.nonzero) {
            if (j == 0) continue;
            if (j > i) break;
            s += d.coeff[j] * b[i - j];
        }
        if (!s.is_zero()) b[i] = -s * inv0;
    }
    Exponent vt = a.valid_to() - d.lead - d.lead;
    QSeries::TermMap t;
    for (std::size_t i = 0; i < n; ++i) {
        if (b[i].is_zero()) continue;
        Exponent e = Exponent(-d.lead.ticks() + Int(static_cast<long>(i)) * d.stride);
        t.emplace(std::move(e), std::move(b[i]));
    }
    return QSeries(std::move(t), vt);
}

inline QSeries pow_int(const QSeries& a, long n) {
    if (n == 0) return monomial(Exponent(), Rational(1), a.valid_to());
    if (n < 0) return pow_int(invert(a), -n);
    QSeries base = a;
    std::optional<QSeries> acc;
    while (n > 0) {
        if (n & 1) acc = acc ? mul(*acc, base) : base;
        n >>= 1;
        if (n > 0) base = mul(base, base);
    }
    return *acc;
}

/// Square root, positive-leading-coefficient branch. Requires an even lead
/// (in ticks) and a leading coefficient that is the square of a rational.
/// valid_to of the result is (a.valid_to + lead)/2 rounded down to the lattice.
inline QSeries sqrt(const QSeries& a) {
    if (a.empty()) throw empty_series_error("sqrt: zero series");
    if (a.lead().ticks().is_odd()) throw odd_lead_exponent_error();
    Rational b0 = a.lead_coeff().exact_sqrt();
    auto d = detail::to_dense(a);
    Exponent vt(fdiv((a.valid_to() + d.lead).ticks(), Int(2)));
    Exponent half_lead(divexact(d.lead.ticks(), Int(2)));
    const std::size_t n = d.coeff.size();
    std::vector<Rational> b(n, Rational(0));
    b[0] = b0;
    Rational inv2b0 = Rational(1) / (Rational(2) * b0);
    for (std::size_t i = 1; i < n; ++i) {
        Exponent e = half_lead + Exponent(Int(static_cast<long>(i)) * d.stride);
        if (!(e < vt)) break;
        Rational s(0);
        for (std::size_t j = 1; j < i; ++j) {
            if (b[j].is_zero()) continue;
            s += b[j] * b[i - j];
        }
        b[i] = (d.coeff[i] - s) * inv2b0;
    }
    QSeries::TermMap t;
    for (std::size_t i = 0; i < n; ++i) {
        if (b[i].is_zero()) continue;
        Exponent e = half_lead + Exponent(Int(static_cast<long>(i)) * d.stride);
        if (!(e < vt)) break;
        t.emplace(std::move(e), std::move(b[i]));
    }
    return QSeries(std::move(t), vt);
}

/// q -> -q. Defined only on the integer lattice (exponents and valid_to).
inline QSeries substitute_neg_q(const QSeries& a) {
    if (!a.valid_to().is_integer()) throw non_integer_exponent_error();
    QSeries::TermMap t;
    for (const auto& [e, c] : a.terms()) {
        if (!e.is_integer()) throw non_integer_exponent_error();
        bool odd = divexact(e.ticks(), Int(Exponent::ticks_per_unit)).is_odd();
        t.emplace(e, odd ? -c : c);
    }
    return QSeries(std::move(t), a.valid_to());
}

/// q -> q^k for a positive integer k.
inline QSeries rescale(const QSeries& a, long k) {
    if (k <= 0) throw error("rescale: k must be positive");
    QSeries::TermMap t;
    for (const auto& [e, c] : a.terms()) t.emplace(e * k, c);
    return QSeries(std::move(t), a.valid_to() * k);
}

namespace detail {
/// Generalized pentagonal exponents n(3n-1)/2 for n = 0, 1, -1, 2, -2, ...
/// calls fn(n, g_n) while k*g_n stays below the limit.
template <typename F>
inline void for_pentagonal(long k, const Exponent& order, F&& fn) {
    const Int cap = order.ticks();
    const Int scale = Int(k) * Int(Exponent::ticks_per_unit);
    for (long n = 0;; ++n) {
        Int g1 = Int(n) * Int(3 * n - 1);   // 2*g(n)
        Int g2 = Int(n) * Int(3 * n + 1);   // 2*g(-n)
        Int e1 = divexact(g1, Int(2)) * scale;
        Int e2 = divexact(g2, Int(2)) * scale;
        bool any = false;
        if (e1 < cap) {
            fn(n, divexact(g1, Int(2)));
            any = true;
        }
        if (n > 0 && e2 < cap) {
            fn(-n, divexact(g2, Int(2)));
            any = true;
        }
        if (!any && n > 0) break;
    }
}
} // namespace detail

/// f(-q^k) = sum over n of (-1)^n q^{k n(3n-1)/2}, truncated below `order`.
inline QSeries euler_f_minus(long k, const Exponent& order) {
    if (k <= 0) throw error("euler_f_minus: k must be positive");
    if (!(Exponent() < order)) throw error("euler_f_minus: order must be positive");
    QSeries::TermMap t;
    detail::for_pentagonal(k, order, [&](long n, const Int& g) {
        Rational c((n % 2 == 0) ? 1 : -1);
        t.emplace(Exponent(g * Int(k) * Int(Exponent::ticks_per_unit)), c);
    });
    return QSeries(std::move(t), order);
}

/// f(q^k): the q -> -q companion, term sign (-1)^{n + n(3n-1)/2}.
inline QSeries theta_f_plus(long k, const Exponent& order) {
    if (k <= 0) throw error("theta_f_plus: k must be positive");
    if (!(Exponent() < order)) throw error("theta_f_plus: order must be positive");
    QSeries::TermMap t;
    detail::for_pentagonal(k, order, [&](long n, const Int& g) {
        bool odd = (Int(n) + g).is_odd();
        t.emplace(Exponent(g * Int(k) * Int(Exponent::ticks_per_unit)), Rational(odd ? -1 : 1));
    });
    return QSeries(std::move(t), order);
}

/// Stored coefficient (or zero) at e; it is an error to peek at or past the
/// truncation horizon.
inline Rational coeff_at(const QSeries& a, const Exponent& e) {
    if (!(e < a.valid_to())) throw beyond_truncation_error();
    auto it = a.terms().find(e);
    return it == a.terms().end() ? Rational(0) : it->second;
}

inline Rational coeff_at(const QSeries& a, long q_power) {
    return coeff_at(a, Exponent::from_int(q_power));
}

/// Renders ascending terms: "1 - q - q^2 + q^5", fractional exponents as q^{a/b}.
inline std::string to_string(const QSeries& a) {
    if (a.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : a.terms()) {
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = (mag == Rational(1));
        bool zero_exp = e.ticks().is_zero();
        if (!unit || zero_exp) os << mag.str();
        if (!zero_exp) {
            if (!unit) os << "*";
            if (e == Exponent::from_int(1)) {
                os << "q";
            } else if (e.is_integer()) {
                os << "q^" << e.str();
            } else {
                os << "q^{" << e.str() << "}";
            }
        }
    }
    return os.str();
}

} // namespace qlab

#endif
