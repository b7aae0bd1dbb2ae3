#ifndef QLAB_ETA_HPP
#define QLAB_ETA_HPP

#include <string>
#include <vector>

#include "qlab/error.hpp"
#include "qlab/exponent.hpp"
#include "qlab/series.hpp"

namespace qlab {

/// A monomial prefactor times a product of f(+-q^k)^e factors. Every named
/// quotient in the catalog (u, w, r, s, u_r, w_r, P, Q, c, d) is one of these;
/// the leading exponent of the built series always equals the prefactor and
/// the leading coefficient is +1.
struct EtaQuotientSpec {
    struct Factor {
        bool plus = false;  // f(q^scale) when true, f(-q^scale) otherwise
        long scale = 1;     // positive
        long power = 1;     // nonzero
    };

    Exponent prefactor;
    std::vector<Factor> factors;

    /// Sum of |power| over factors; used by tail-bound arithmetic.
    long weight() const {
        long w = 0;
        for (const auto& f : factors) w += f.power < 0 ? -f.power : f.power;
        return w;
    }
};

/// Builds q^prefactor * prod f(+-q^scale)^power, valid through `order`.
inline QSeries build_eta_series(const EtaQuotientSpec& spec, const Exponent& order) {
    if (!(spec.prefactor < order)) throw error("build_eta_series: order must exceed the lead");
    for (const auto& f : spec.factors) {
        if (f.scale <= 0) throw error("build_eta_series: factor scale must be positive");
        if (f.power == 0) throw error("build_eta_series: factor power must be nonzero");
    }
    // each factor has lead 0, so the unit part needs validity order - prefactor
    Exponent need = order - spec.prefactor;
    QSeries acc = monomial(Exponent(), Rational(1), need);
    for (const auto& f : spec.factors) {
        QSeries base = f.plus ? theta_f_plus(f.scale, need) : euler_f_minus(f.scale, need);
        acc = mul(acc, pow_int(base, f.power));
    }
    QSeries::TermMap shifted;
    for (const auto& [e, c] : acc.terms()) shifted.emplace(e + spec.prefactor, c);
    return QSeries(std::move(shifted), acc.valid_to() + spec.prefactor);
}

/// Compact rendering like "q^{1/2} f1 f21 / (f3 f7)".
inline std::string to_string(const EtaQuotientSpec& spec) {
    std::string num, den;
    auto fname = [](const EtaQuotientSpec::Factor& f) {
        std::string base = (f.plus ? "fp" : "f") + std::to_string(f.scale);
        long p = f.power < 0 ? -f.power : f.power;
        if (p != 1) base += "^" + std::to_string(p);
        return base;
    };
    for (const auto& f : spec.factors) {
        std::string& side = f.power < 0 ? den : num;
        if (!side.empty()) side += " ";
        side += fname(f);
    }
    std::string pre;
    if (!spec.prefactor.ticks().is_zero()) {
        pre = spec.prefactor == Exponent::from_int(1) ? "q" : "q^{" + spec.prefactor.str() + "}";
    }
    std::string out = pre;
    if (!num.empty()) out += (out.empty() ? "" : " ") + num;
    if (out.empty()) out = "1";
    if (!den.empty()) out += " / (" + den + ")";
    return out;
}

} // namespace qlab

#endif
