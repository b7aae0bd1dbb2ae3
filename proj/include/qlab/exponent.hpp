#ifndef QLAB_EXPONENT_HPP
#define QLAB_EXPONENT_HPP

#include <ostream>
#include <string>

#include "qlab/error.hpp"
#include "qlab/int.hpp"
#include "qlab/rational.hpp"

namespace qlab {

/// Exponent on the fixed 1/24 lattice: the stored integer counts ticks of 1/24
/// of a q-power. Every exponent appearing in the catalog (1/12, 1/6, 1/4, 1/2,
/// 7/12, (k-1)/24, ...) is exactly representable.
class Exponent {
public:
    static constexpr long ticks_per_unit = 24;

    Exponent() = default;
    explicit Exponent(Int ticks) : t_(std::move(ticks)) {}

    static Exponent from_ticks(long t) { return Exponent(Int(t)); }
    static Exponent from_int(long q_power) { return Exponent(Int(q_power) * Int(ticks_per_unit)); }
    static Exponent from_int(const Int& q_power) { return Exponent(q_power * Int(ticks_per_unit)); }
    /// num/den in q-powers; den must divide 24.
    static Exponent from_ratio(long num, long den) {
        if (den == 0 || ticks_per_unit % den != 0) throw error("Exponent: denominator must divide 24");
        long s = ticks_per_unit / den;
        return Exponent(Int(num) * Int(s));
    }

    const Int& ticks() const { return t_; }
    bool is_integer() const { return t_.divisible_by(ticks_per_unit); }
    Rational value() const { return Rational(t_, Int(ticks_per_unit)); }

    friend Exponent operator+(const Exponent& a, const Exponent& b) { return Exponent(a.t_ + b.t_); }
    friend Exponent operator-(const Exponent& a, const Exponent& b) { return Exponent(a.t_ - b.t_); }
    friend Exponent operator-(const Exponent& a) { return Exponent(-a.t_); }
    friend Exponent operator*(const Exponent& a, long k) { return Exponent(a.t_ * Int(k)); }
    friend Exponent operator*(long k, const Exponent& a) { return a * k; }

    friend bool operator==(const Exponent& a, const Exponent& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Exponent& a, const Exponent& b) { return a.t_ != b.t_; }
    friend bool operator<(const Exponent& a, const Exponent& b) { return a.t_ < b.t_; }
    friend bool operator<=(const Exponent& a, const Exponent& b) { return a.t_ <= b.t_; }
    friend bool operator>(const Exponent& a, const Exponent& b) { return a.t_ > b.t_; }
    friend bool operator>=(const Exponent& a, const Exponent& b) { return a.t_ >= b.t_; }

    /// Renders "a" for integers, "a/b" otherwise (in q-powers).
    std::string str() const { return value().str(); }
    friend std::ostream& operator<<(std::ostream& os, const Exponent& e) { return os << e.str(); }

private:
    Int t_;
};

} // namespace qlab

#endif
