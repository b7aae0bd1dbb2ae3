#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlab/numeric.hpp"

using namespace qlab;

namespace {
BigReal br(const char* s, long d = 60) { return BigReal(s, d); }
}  // namespace

TEST_CASE("pentagonal sums at real points") {
    long d = 35;
    // f(-1/2), frozen from an independent 60-digit evaluation
    EvalResult r = eval_f_minus_at(BigReal(Rational(1, 2), d + 20), 1L, d);
    CHECK(abs(r.value - br("0.28878809508660242127889972192923078", d + 20)) < BigReal::pow10(-33, d));
    CHECK(r.error_bound < BigReal::pow10(-d, d));
    CHECK(r.error_bound.sign() >= 0);

    // f(0.3), sign-twisted companion
    EvalResult p = eval_f_plus_at(BigReal(Rational(3, 10), d + 20), 1L, d);
    CHECK(abs(p.value - br("1.2073507829110705251182829722888274", d + 20)) < BigReal::pow10(-32, d));

    // near zero the value collapses to 1 with a vanishing bound
    EvalResult tiny = eval_f_minus_at(BigReal::pow10(-30, d + 20), 1L, d);
    CHECK(abs(tiny.value - BigReal(1, d)) < BigReal::pow10(-29, d));

    // slow point still converges (exponents grow quadratically)
    EvalResult slow = eval_f_minus_at(BigReal(Rational(99, 100), 50), 1L, 30);
    CHECK(slow.error_bound < BigReal::pow10(-30, 50));
    CHECK(slow.value.sign() > 0);

    CHECK_THROWS_AS(eval_f_minus_at(BigReal(0, 40), 1L, 30), domain_error);
    CHECK_THROWS_AS(eval_f_minus_at(BigReal(1, 40), 1L, 30), domain_error);
    CHECK_THROWS_AS(eval_f_minus_at(BigReal(Rational(1, 2), 40), Rational(-2), 30), domain_error);
}

TEST_CASE("f(q) equals the alternating substitution of f(-q)") {
    long d = 40;
    const long W = d + numeric_guard_digits;
    BigReal x(Rational(3, 10), W);
    EvalResult plus = eval_f_plus_at(x, 1L, d);
    // independent route: sum (-1)^n (-x)^{g(n)} term by term
    BigReal s(1, W);
    for (long n = 1; n < 40; ++n) {
        long g1 = n * (3 * n - 1) / 2, g2 = n * (3 * n + 1) / 2;
        BigReal t1 = pow_int(-x, g1), t2 = pow_int(-x, g2);
        if (n % 2 != 0) {
            s -= t1 + t2;
        } else {
            s += t1 + t2;
        }
    }
    CHECK(abs(plus.value - s) < BigReal::pow10(-(d - 2), W));
}

TEST_CASE("tail-bound honesty: more terms never move the value past the bound") {
    long d = 35;
    for (const char* pt : {"0.5", "0.2", "0.85"}) {
        BigReal x(pt, d + 20);
        EvalResult a = detail::theta_sum(x, false, d);
        EvalResult b = detail::theta_sum(x, false, d, /*extra_pairs=*/60);
        CHECK(abs(a.value - b.value) <= a.error_bound);
        EvalResult ap = detail::theta_sum(x, true, d);
        EvalResult bp = detail::theta_sum(x, true, d, 60);
        CHECK(abs(ap.value - bp.value) <= ap.error_bound);
    }
}

TEST_CASE("theta quotients") {
    long d = 50;
    EvalResult r71 = compute_r(7, 1, d);
    CHECK(abs(r71.value - BigReal(1, d)) < BigReal::pow10(-49, d));
    EvalResult rp71 = compute_r_prime(7, 1, d);
    CHECK(abs(rp71.value - BigReal(1, d)) < BigReal::pow10(-49, d));

    EvalResult r76 = compute_r(7, 6, d);
    CHECK(abs(r76.value - br("2.62428302823008778935935709019167362338646403")) < BigReal::pow10(-44, d));
    CHECK(r76.certified_digits() >= 45);

    EvalResult rp79 = compute_r_prime(7, 9, d);
    CHECK(abs(rp79.value - br("1.53922233842043318569275317012889189366426136")) < BigReal::pow10(-44, d));

    // positivity across a spread of arguments
    for (auto [k, n] : {std::pair<long, long>{2, 5}, {3, 2}, {5, 12}, {7, 30}}) {
        CHECK(compute_r(k, n, 30).value.sign() > 0);
        CHECK(compute_r_prime(k, n, 30).value.sign() > 0);
    }

    // precision stability: d and d+30 agree to 10^{-(d-1)}
    EvalResult hi = compute_r(7, 6, d + 30);
    CHECK(abs(hi.value - r76.value) < BigReal::pow10(-(d - 1), d + 30));

    CHECK_THROWS_AS(compute_r(7, Rational(-1), d), domain_error);
    CHECK_THROWS_AS(compute_r(Rational(0), 1, d), domain_error);
}

TEST_CASE("closed forms compare computation against their radicals") {
    ValueReport p4 = check_closed_form("P4", 50);
    CHECK(p4.pass);
    CHECK(p4.diff < BigReal::pow10(-40, 50));

    ValueReport s9 = check_closed_form("S9", 50);
    CHECK(s9.pass);
    CHECK(s9.diff < BigReal::pow10(-40, 50));

    ValueReport p25 = check_closed_form("P25", 50);
    CHECK(p25.pass);

    ValueReport s3 = check_closed_form("S3", 40);
    CHECK(s3.pass);

    ValueReport s79p = check_closed_form("S79P", 40);
    CHECK(s79p.pass);

    CHECK_THROWS_AS(check_closed_form("S99", 40), unknown_id_error);
}

TEST_CASE("transformation laws at exact rational points") {
    TransformReport t = check_transformations(7, 6, 2, 50);
    CHECK(t.all_pass);
    CHECK(t.relations.size() == 6);
    for (const auto& rel : t.relations) CHECK(rel.residual < BigReal::pow10(-45, 50));

    TransformReport t2 = check_transformations(3, 7, Rational(5, 2), 40);
    CHECK(t2.all_pass);

    // the composition r(2,21) = r(7,6) r(3,2/7)
    long d = 50;
    BigReal lhs = compute_r(2, 21, d).value;
    BigReal rhs = compute_r(7, 6, d).value * compute_r(3, Rational(2, 7), d).value;
    CHECK(abs(lhs - rhs) < BigReal::pow10(-45, d));

    CHECK_THROWS_AS(check_transformations(Rational(-1), 1, 1, 40), domain_error);
}

TEST_CASE("numeric-mode identities at sampled n") {
    for (const char* id : {"R7R9", "R7R9P", "R3R49", "R3R49P"}) {
        for (Rational n : {Rational(1, 21), Rational(1, 6), Rational(1), Rational(2)}) {
            NumericIdentityReport rep = verify_numeric_identity(id, n, 40);
            CHECK(rep.pass);
            CHECK(rep.residual < BigReal::pow10(-35, 40));
        }
    }
    CHECK_THROWS_AS(verify_numeric_identity("W2", Rational(1), 40), wrong_mode_error);
    CHECK_THROWS_AS(verify_numeric_identity("NOPE", Rational(1), 40), unknown_id_error);
    CHECK_THROWS_AS(verify_numeric_identity("R7R9", Rational(-1), 40), domain_error);
}

TEST_CASE("series and numeric evaluation agree inside the certified bound") {
    for (const char* name : {"u", "w1", "r", "s"}) {
        CrossCheckReport rep = cross_check_series_vs_numeric(name, Rational(3, 100), 30, 40);
        CHECK(rep.pass);
        CHECK(rep.diff <= rep.combined_bound);
    }
    CHECK(cross_check_series_vs_numeric("w1", Rational(5, 100), 30, 40).pass);
    CHECK_THROWS_AS(cross_check_series_vs_numeric("u", Rational(9, 10), 10, 40), tail_bound_error);
    CHECK_THROWS_AS(cross_check_series_vs_numeric("NOPE", Rational(1, 10), 10, 40), unknown_id_error);
    CHECK_THROWS_AS(cross_check_series_vs_numeric("u", Rational(2), 10, 40), domain_error);
}
