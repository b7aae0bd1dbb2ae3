#ifndef QLAB_RATIONAL_HPP
#define QLAB_RATIONAL_HPP

#include <gmp.h>

#include <ostream>
#include <string>
#include <utility>

#include "qlab/error.hpp"
#include "qlab/int.hpp"

namespace qlab {

/// Exact rational scalar. Always canonical: lowest terms, positive denominator,
/// zero stored as 0/1 (mpq invariants).
class Rational {
public:
    Rational() { mpq_init(v_); }
    Rational(long n) {
        mpq_init(v_);
        mpq_set_si(v_, n, 1);
    }
    Rational(int n) : Rational(static_cast<long>(n)) {}
    Rational(long n, long d) {
        if (d == 0) throw error("Rational: zero denominator");
        mpq_init(v_);
        mpq_set_si(v_, n, 1);
        mpq_t den;
        mpq_init(den);
        mpq_set_si(den, d, 1);
        mpq_div(v_, v_, den);
        mpq_clear(den);
    }
    Rational(const Int& n, const Int& d) {
        if (d.is_zero()) throw error("Rational: zero denominator");
        mpq_init(v_);
        mpz_set(mpq_numref(v_), n.raw());
        mpz_set(mpq_denref(v_), d.raw());
        mpq_canonicalize(v_);
    }
    explicit Rational(const Int& n) {
        mpq_init(v_);
        mpz_set(mpq_numref(v_), n.raw());
    }
    /// Parses "p" or "p/q".
    explicit Rational(const std::string& s) {
        mpq_init(v_);
        if (mpq_set_str(v_, s.c_str(), 10) != 0 || mpz_sgn(mpq_denref(v_)) == 0) {
            mpq_clear(v_);
            throw error("Rational: cannot parse \"" + s + "\"");
        }
        mpq_canonicalize(v_);
    }
    Rational(const Rational& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(v_, o.v_);
        return *this;
    }
    ~Rational() { mpq_clear(v_); }

    mpq_srcptr raw() const { return v_; }

    Int num() const { Int r; mpz_set(r.raw(), mpq_numref(v_)); return r; }
    Int den() const { Int r; mpz_set(r.raw(), mpq_denref(v_)); return r; }

    friend Rational operator+(const Rational& a, const Rational& b) { Rational r; mpq_add(r.v_, a.v_, b.v_); return r; }
    friend Rational operator-(const Rational& a, const Rational& b) { Rational r; mpq_sub(r.v_, a.v_, b.v_); return r; }
    friend Rational operator*(const Rational& a, const Rational& b) { Rational r; mpq_mul(r.v_, a.v_, b.v_); return r; }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw error("Rational: division by zero");
        Rational r;
        mpq_div(r.v_, a.v_, b.v_);
        return r;
    }
    friend Rational operator-(const Rational& a) { Rational r; mpq_neg(r.v_, a.v_); return r; }
    Rational& operator+=(const Rational& o) { mpq_add(v_, v_, o.v_); return *this; }
    Rational& operator-=(const Rational& o) { mpq_sub(v_, v_, o.v_); return *this; }
    Rational& operator*=(const Rational& o) { mpq_mul(v_, v_, o.v_); return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_, b.v_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) >= 0; }

    int sign() const { return mpq_sgn(v_); }
    bool is_zero() const { return mpq_sgn(v_) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }

    /// Exact square root, or throws if numerator/denominator are not both squares.
    Rational exact_sqrt() const {
        if (sign() < 0) throw non_square_lead_error("negative rational has no rational square root");
        Int n = num(), d = den();
        if (!n.is_perfect_square() || !d.is_perfect_square()) throw non_square_lead_error();
        return Rational(n.isqrt(), d.isqrt());
    }

    std::string str() const {
        if (is_integer()) return num().str();
        return num().str() + "/" + den().str();
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.str(); }

private:
    mpq_t v_;
};

inline Rational pow(const Rational& a, long e) {
    if (e == 0) return Rational(1);
    bool inv = e < 0;
    unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rational r(qlab::pow(a.num(), k), qlab::pow(a.den(), k));
    if (inv) {
        if (r.is_zero()) throw error("Rational: zero to a negative power");
        return Rational(1) / r;
    }
    return r;
}

} // namespace qlab

#endif
