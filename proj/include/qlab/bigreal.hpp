#ifndef QLAB_BIGREAL_HPP
#define QLAB_BIGREAL_HPP

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "qlab/error.hpp"
#include "qlab/rational.hpp"

namespace qlab {

/// Precision-parameterized real scalar over MPFR with round-to-nearest.
/// `digits` is the working precision in decimal digits; each primitive
/// operation is correctly rounded at that precision, so results are accurate
/// to a small constant number of units in the last place.
class BigReal {
public:
    explicit BigReal(long digits = 30) : digits_(std::max(2L, digits)) {
        mpfr_init2(v_, bits(digits_));
        mpfr_set_zero(v_, 1);
    }
    BigReal(const Rational& q, long digits) : BigReal(digits) {
        mpfr_set_q(v_, q.raw(), MPFR_RNDN);
    }
    BigReal(long n, long digits) : BigReal(digits) { mpfr_set_si(v_, n, MPFR_RNDN); }
    BigReal(const std::string& s, long digits) : BigReal(digits) {
        if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0 && mpfr_nan_p(v_))
            throw error("BigReal: cannot parse \"" + s + "\"");
    }
    BigReal(const BigReal& o) : digits_(o.digits_) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigReal(BigReal&& o) noexcept : digits_(o.digits_) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
            digits_ = o.digits_;
        }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept {
        mpfr_swap(v_, o.v_);
        std::swap(digits_, o.digits_);
        return *this;
    }
    ~BigReal() { mpfr_clear(v_); }

    long digits() const { return digits_; }
    mpfr_srcptr raw() const { return v_; }

    static BigReal pi(long digits) {
        BigReal r(digits);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    static BigReal pow10(long e, long digits) {
        BigReal r(digits);
        mpfr_set_si(r.v_, 10, MPFR_RNDN);
        mpfr_pow_si(r.v_, r.v_, e, MPFR_RNDN);
        return r;
    }

    friend BigReal operator+(const BigReal& a, const BigReal& b) {
        BigReal r(std::max(a.digits_, b.digits_));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator-(const BigReal& a, const BigReal& b) {
        BigReal r(std::max(a.digits_, b.digits_));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator*(const BigReal& a, const BigReal& b) {
        BigReal r(std::max(a.digits_, b.digits_));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator/(const BigReal& a, const BigReal& b) {
        if (mpfr_zero_p(b.v_)) throw domain_error("BigReal: division by zero");
        BigReal r(std::max(a.digits_, b.digits_));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal operator-(const BigReal& a) {
        BigReal r(a.digits_);
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    BigReal& operator+=(const BigReal& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator-=(const BigReal& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    BigReal& operator*=(const BigReal& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend BigReal abs(const BigReal& a) {
        BigReal r(a.digits_);
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal sqrt(const BigReal& a) {
        if (a.sign() < 0) throw negative_radicand_error();
        BigReal r(a.digits_);
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    /// n-th root, n >= 1. Even n of a negative value is a domain error.
    friend BigReal rootn(const BigReal& a, long n) {
        if (n < 1) throw domain_error("rootn: index must be positive");
        if (a.sign() < 0 && n % 2 == 0) throw negative_radicand_error();
        BigReal r(a.digits_);
        mpfr_rootn_ui(r.v_, a.v_, static_cast<unsigned long>(n), MPFR_RNDN);
        return r;
    }
    friend BigReal exp(const BigReal& a) {
        BigReal r(a.digits_);
        mpfr_exp(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigReal pow_int(const BigReal& a, long n) {
        if (n < 0 && mpfr_zero_p(a.v_)) throw domain_error("pow_int: zero to a negative power");
        BigReal r(a.digits_);
        mpfr_pow_si(r.v_, a.v_, n, MPFR_RNDN);
        return r;
    }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    friend int cmp(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const BigReal& a, const BigReal& b) { return !(a == b); }
    friend bool operator<(const BigReal& a, const BigReal& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return cmp(a, b) >= 0; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Decimal rendering with `sig` significant digits (default: full working
    /// precision). Fixed-point for moderate magnitudes, scientific otherwise.
    std::string str(long sig = 0) const {
        if (sig <= 0) sig = digits_;
        if (sig < 2) sig = 2;
        if (mpfr_zero_p(v_)) return "0";
        mpfr_exp_t e;
        char* s = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(sig), v_, MPFR_RNDN);
        std::string digits(s);
        mpfr_free_str(s);
        std::string sign;
        if (!digits.empty() && digits[0] == '-') {
            sign = "-";
            digits.erase(0, 1);
        }
        std::ostringstream os;
        os << sign;
        if (e > 0 && e <= sig + 6) {
            if (static_cast<std::size_t>(e) >= digits.size()) {
                os << digits << std::string(static_cast<std::size_t>(e) - digits.size(), '0');
            } else {
                os << digits.substr(0, static_cast<std::size_t>(e)) << "."
                   << digits.substr(static_cast<std::size_t>(e));
            }
        } else if (e <= 0 && e > -6) {
            os << "0." << std::string(static_cast<std::size_t>(-e), '0') << digits;
        } else {
            os << "0." << digits << "e" << e;
        }
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const BigReal& a) { return os << a.str(); }

private:
    static mpfr_prec_t bits(long digits) {
        return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626) + 16);
    }
    mpfr_t v_;
    long digits_;
};

} // namespace qlab

#endif
