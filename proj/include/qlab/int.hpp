#ifndef QLAB_INT_HPP
#define QLAB_INT_HPP

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <ostream>
#include <string>
#include <utility>

#include "qlab/error.hpp"

namespace qlab {

/// Arbitrary-precision signed integer. Thin value-semantic wrapper over mpz_t.
class Int {
public:
    Int() { mpz_init(v_); }
    Int(long x) { mpz_init_set_si(v_, x); }  // NOLINT: implicit by design
    Int(int x) : Int(static_cast<long>(x)) {}
    explicit Int(const std::string& s) {
        if (mpz_init_set_str(v_, s.c_str(), 10) != 0) {
            mpz_clear(v_);
            throw error("Int: cannot parse \"" + s + "\"");
        }
    }
    Int(const Int& o) { mpz_init_set(v_, o.v_); }
    Int(Int&& o) noexcept {
        mpz_init(v_);
        mpz_swap(v_, o.v_);
    }
    Int& operator=(const Int& o) {
        if (this != &o) mpz_set(v_, o.v_);
        return *this;
    }
    Int& operator=(Int&& o) noexcept {
        mpz_swap(v_, o.v_);
        return *this;
    }
    ~Int() { mpz_clear(v_); }

    mpz_srcptr raw() const { return v_; }
    mpz_ptr raw() { return v_; }

    friend Int operator+(const Int& a, const Int& b) { Int r; mpz_add(r.v_, a.v_, b.v_); return r; }
    friend Int operator-(const Int& a, const Int& b) { Int r; mpz_sub(r.v_, a.v_, b.v_); return r; }
    friend Int operator*(const Int& a, const Int& b) { Int r; mpz_mul(r.v_, a.v_, b.v_); return r; }
    friend Int operator-(const Int& a) { Int r; mpz_neg(r.v_, a.v_); return r; }
    Int& operator+=(const Int& o) { mpz_add(v_, v_, o.v_); return *this; }
    Int& operator-=(const Int& o) { mpz_sub(v_, v_, o.v_); return *this; }
    Int& operator*=(const Int& o) { mpz_mul(v_, v_, o.v_); return *this; }

    /// Floor division (sign convention of mathematical floor, not C truncation).
    friend Int fdiv(const Int& a, const Int& b) { Int r; mpz_fdiv_q(r.v_, a.v_, b.v_); return r; }
    friend Int fmod(const Int& a, const Int& b) { Int r; mpz_fdiv_r(r.v_, a.v_, b.v_); return r; }
    friend Int divexact(const Int& a, const Int& b) { Int r; mpz_divexact(r.v_, a.v_, b.v_); return r; }
    friend Int gcd(const Int& a, const Int& b) { Int r; mpz_gcd(r.v_, a.v_, b.v_); return r; }
    friend Int abs(const Int& a) { Int r; mpz_abs(r.v_, a.v_); return r; }

    friend bool operator==(const Int& a, const Int& b) { return mpz_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Int& a, const Int& b) { return mpz_cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Int& a, const Int& b) { return mpz_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Int& a, const Int& b) { return mpz_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Int& a, const Int& b) { return mpz_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Int& a, const Int& b) { return mpz_cmp(a.v_, b.v_) >= 0; }

    int sign() const { return mpz_sgn(v_); }
    bool is_zero() const { return mpz_sgn(v_) == 0; }
    bool is_odd() const { return mpz_odd_p(v_) != 0; }
    bool divisible_by(long d) const { return mpz_divisible_ui_p(v_, static_cast<unsigned long>(d)) != 0; }
    bool is_perfect_square() const { return mpz_perfect_square_p(v_) != 0; }
    Int isqrt() const { Int r; mpz_sqrt(r.v_, v_); return r; }

    bool fits_long() const { return mpz_fits_slong_p(v_) != 0; }
    long to_long() const {
        if (!fits_long()) throw error("Int: value does not fit a machine long");
        return mpz_get_si(v_);
    }

    std::string str() const {
        char* s = mpz_get_str(nullptr, 10, v_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }
    friend std::ostream& operator<<(std::ostream& os, const Int& a) { return os << a.str(); }

private:
    mpz_t v_;
};

inline Int pow(const Int& a, unsigned long e) {
    Int r;
    mpz_pow_ui(r.raw(), a.raw(), e);
    return r;
}

} // namespace qlab

#endif
