#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qlab/catalog.hpp"
#include "qlab/numeric.hpp"

#include "oracle.hpp"

using namespace qlab;

namespace {
Exponent qo(long n) { return Exponent::from_int(n); }
const Catalog& cat() { return Catalog::instance(); }
}  // namespace

TEST_CASE("quotient u against the dense Euler-product oracle") {
    // u = q f7 f21 / (f1 f3), expanded brute force on dense vectors
    const std::size_t N = 24;
    oracle::Poly num = oracle::mul_capped(oracle::euler_product_f(7, N), oracle::euler_product_f(21, N), N);
    oracle::Poly den = oracle::mul_capped(oracle::euler_product_f(1, N), oracle::euler_product_f(3, N), N);
    oracle::Poly unit = oracle::mul_capped(num, oracle::inv_capped(den, N), N);

    QSeries u = build_eta_series(cat().symbol_spec("u"), qo(20));
    CHECK(u.lead() == qo(1));
    CHECK(u.lead_coeff() == Rational(1));
    for (long e = 1; e < 20; ++e)
        CHECK(coeff_at(u, e) == unit[static_cast<std::size_t>(e - 1)]);
    // leading stretch, frozen from the oracle
    CHECK(coeff_at(u, 2L) == Rational(1));
    CHECK(coeff_at(u, 3L) == Rational(2));
    CHECK(coeff_at(u, 4L) == Rational(4));
    CHECK(coeff_at(u, 5L) == Rational(6));
    CHECK(coeff_at(u, 6L) == Rational(9));
    CHECK(coeff_at(u, 7L) == Rational(16));
    CHECK(coeff_at(u, 8L) == Rational(21));
}

TEST_CASE("named quotient leads match their prefactors") {
    for (const char* name : {"u", "v", "w", "r", "s", "c", "d", "u1", "u2", "u3", "u5", "u7",
                             "w1", "w2", "w3", "w5", "w7", "f1", "f21", "fp3"}) {
        EtaQuotientSpec spec = cat().symbol_spec(name);
        QSeries s = build_eta_series(spec, spec.prefactor + qo(6));
        CHECK(s.lead() == spec.prefactor);
        CHECK(s.lead_coeff() == Rational(1));
    }
    CHECK(cat().symbol_spec("w1").prefactor == Exponent::from_ratio(1, 2));
    CHECK(cat().symbol_spec("u1").prefactor == qo(-1));
    CHECK_THROWS_AS(cat().symbol_spec("NOPE"), unknown_id_error);
    CHECK_THROWS_AS(cat().symbol_spec("u0"), unknown_id_error);
}

TEST_CASE("u1 is the reciprocal of u") {
    QSeries u = build_eta_series(cat().symbol_spec("u"), qo(24));
    QSeries u1 = build_eta_series(cat().symbol_spec("u1"), qo(24));
    QSeries prod = mul(u, u1);
    CHECK(prod.terms().size() == 1);
    CHECK(coeff_at(prod, 0L) == Rational(1));
}

TEST_CASE("expr_to_series evaluates both routes of the degree-7 relation") {
    const IdentityDef& d = cat().identity("L21-7");
    SeriesEnv env = build_env(d.bindings, qo(24));
    QSeries lhs = expr_to_series(d.lhs, env);
    QSeries rhs = expr_to_series(d.rhs, env);
    Exponent cut = qo(20);
    CHECK(oracle::terms_equal_below(lhs, rhs, cut));

    QSeries five = expr_to_series(lit(5), env);
    CHECK(five.terms().size() == 1);
    CHECK(coeff_at(five, 0L) == Rational(5));

    CHECK_THROWS_AS(expr_to_series(sym("nope"), env), unbound_symbol_error);
    CHECK_THROWS_AS(expr_to_series(nth_root(lit(2), 3), env), wrong_mode_error);
}

TEST_CASE("sqrt of a bound product has the halved lead") {
    const IdentityDef& d = cat().identity("W3");
    std::vector<int> signs{1};
    SeriesEnv env = build_env(d.bindings, qo(24), &signs);
    QSeries sp = expr_to_series(sqrt(sym("P")), env, &signs);
    CHECK(sp.lead() == qo(-2));  // P = u1 u3 leads at -4
    QSeries back = mul(sp, sp);
    CHECK(oracle::terms_equal_below(back, env.at("P"), back.valid_to()));
}

TEST_CASE("expr_to_real evaluates radicals") {
    long d = 50;
    BigReal v = expr_to_real(sqrt(lit(3)) + sqrt(lit(2)), d);
    CHECK(abs(v - BigReal("3.1462643699419723423291350657155704455124771291873", d))
          < BigReal::pow10(-45, d));

    BigReal s1 = expr_to_real(cat().closed_form("S1").radical, d);
    CHECK(abs(s1 - BigReal("2.62428302823008778935935709019167362338646403", d)) < BigReal::pow10(-40, d));

    CHECK(expr_to_real(lit(1), d) == BigReal(1, d));
    CHECK_THROWS_AS(expr_to_real(sym("P"), d), unbound_symbol_error);
    CHECK_THROWS_AS(expr_to_real(sqrt(lit(-2)), d), negative_radicand_error);
}

TEST_CASE("catalog inventory and closure") {
    std::set<std::string> ids;
    for (const auto& d : cat().identities()) ids.insert(d.id);
    std::set<std::string> expected{"E15", "L21-7", "L21-3", "L9A", "L9B", "L15", "R1", "R2SQ",
                                   "R3SQ", "CUBED", "MN", "W2", "W3", "W5", "W7", "U2", "U3",
                                   "U5", "U7", "R7R9", "R7R9P", "R3R49", "R3R49P"};
    CHECK(ids == expected);
    CHECK(ids.size() == 23);

    long series_count = 0;
    for (const auto& d : cat().identities()) {
        if (d.mode == IdentityMode::series) {
            ++series_count;
            // closure: every referenced symbol is bound exactly once, in order
            std::set<std::string> bound;
            for (const auto& b : d.bindings) {
                CHECK(bound.count(b.name) == 0);
                if (b.expr) {
                    std::set<std::string> used;
                    b.expr->collect_symbols(used);
                    for (const auto& s : used) CHECK(bound.count(s) == 1);
                }
                bound.insert(b.name);
            }
            std::set<std::string> used;
            d.lhs.collect_symbols(used);
            d.rhs.collect_symbols(used);
            for (const auto& s : used) CHECK(bound.count(s) == 1);
            // series identities never contain n-th roots
            CHECK_FALSE(d.lhs.contains_kind(Expr::Kind::NthRoot));
            CHECK_FALSE(d.rhs.contains_kind(Expr::Kind::NthRoot));
            CHECK(d.sign_slots == std::max(d.lhs.slot_count(), d.rhs.slot_count()));
        } else {
            CHECK_FALSE(d.r_bindings.empty());
            for (const auto& rb : d.r_bindings) {
                CHECK(rb.k > Rational(0));
                CHECK(rb.n_scale > Rational(0));
            }
        }
        CHECK_FALSE(d.anchor.empty());
    }
    CHECK(series_count == 19);

    CHECK(cat().identity("W2").anchor
          == "u1^3 - 2 u1^2 u2 - u1 u2 - 7 u1^2 u2^2 - 2 u1 u2^2 + u2^3 = 0");
    CHECK_THROWS_AS(cat().identity("NOPE"), unknown_id_error);
}

TEST_CASE("closed-form inventory") {
    std::set<std::string> ids;
    for (const auto& d : cat().closed_forms()) ids.insert(d.id);
    std::set<std::string> expected{"S1", "S2", "S3", "S4", "S5", "S6", "S7", "S8", "S9", "S10",
                                   "S11", "S12", "S13", "S14", "S15", "S79", "S79P",
                                   "P2", "P4", "P6", "P8", "P10", "P12", "P15", "P17", "P21",
                                   "P23", "P25", "P27", "P28", "P29", "P30"};
    CHECK(ids == expected);
    CHECK(ids.size() >= 29);
    for (const auto& d : cat().closed_forms()) {
        std::set<std::string> syms;
        d.radical.collect_symbols(syms);
        CHECK(syms.empty());  // radicals are pure constants
        CHECK_FALSE(d.entries.empty());
        if (d.combine == Combine::single) CHECK(d.entries.size() == 1);
        for (const auto& e : d.entries) {
            CHECK(e.k > Rational(0));
            CHECK(e.n > Rational(0));
        }
    }
    CHECK_THROWS_AS(cat().closed_form("S99"), unknown_id_error);
}

TEST_CASE("factor-test inventory") {
    CHECK(cat().factor_tests().size() == 2);
    for (const auto& d : cat().factor_tests()) {
        CHECK_FALSE(d.factors.empty());
        for (auto i : d.expect_vanishing) {
            CHECK(i >= 1);
            CHECK(i <= d.factors.size());
            CHECK(d.expect_nonvanishing.count(i) == 0);  // disjoint index sets
        }
        for (auto i : d.expect_nonvanishing) {
            CHECK(i >= 1);
            CHECK(i <= d.factors.size());
        }
    }
    CHECK(cat().factor_test("F-W2-FACTORS").factors.size() == 1);
    CHECK(cat().factor_test("F-U2-FACTORS").factors.size() == 2);
    CHECK_THROWS_AS(cat().factor_test("F-NOPE"), unknown_id_error);
}

TEST_CASE("every bound quotient leads at its prefactor with coefficient one") {
    auto check_bindings = [](const std::vector<Binding>& bs) {
        for (const auto& b : bs) {
            if (!b.eta) continue;
            QSeries s = build_eta_series(*b.eta, b.eta->prefactor + qo(4));
            CHECK(s.lead() == b.eta->prefactor);
            CHECK(s.lead_coeff() == Rational(1));
        }
    };
    for (const auto& d : cat().identities()) check_bindings(d.bindings);
    for (const auto& d : cat().factor_tests()) check_bindings(d.bindings);
}

TEST_CASE("every series identity evaluates on both sides at order 60") {
    for (const auto& d : cat().identities()) {
        if (d.mode != IdentityMode::series) continue;
        std::vector<int> signs(static_cast<std::size_t>(d.sign_slots), 1);
        SeriesEnv env = build_env(d.bindings, qo(60), d.sign_slots ? &signs : nullptr);
        CHECK_NOTHROW(expr_to_series(d.lhs, env, d.sign_slots ? &signs : nullptr));
        CHECK_NOTHROW(expr_to_series(d.rhs, env, d.sign_slots ? &signs : nullptr));
    }
}
