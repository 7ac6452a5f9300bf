#include "doctest.h"

#include "affinegerm/errors.hpp"
#include "affinegerm/series.hpp"
#include "affinegerm/trans_jet.hpp"

using namespace ag;

namespace {

LaurentJet X(int n = 16) { return LaurentJet::x(n); }
LaurentJet Y(int n = 16) { return LaurentJet::y(n); }
LaurentJet C(const QComplex& c, int n = 16) { return LaurentJet(c, n); }

Rational binom(int n, int k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Rational(r);
}

Rational factorial(int n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return Rational(r);
}

}  // namespace

TEST_CASE("qcomplex arithmetic and text") {
    QComplex a(Rational(1, 2), Rational(-3, 4));
    QComplex b = QComplex::frac(2, 3);
    CHECK((a * a.inverse()) == QComplex(1));
    CHECK((a + b - b) == a);
    CHECK(a.to_string() == "1/2-3/4*i");
    CHECK(QComplex::parse("1/2-3/4*i") == a);
    CHECK(QComplex::parse("-i") == -QComplex::i());
    CHECK(QComplex::parse("7") == QComplex(7));
    CHECK_THROWS_AS(QComplex::parse("0.5"), Error);
    CHECK(QComplex(Rational(2, 3)) < QComplex(1));
}

TEST_CASE("exact square roots in Q(i)") {
    CHECK(*exact_sqrt(QComplex(-4)) == QComplex(Rational(0), Rational(2)));
    QComplex z(Rational(3), Rational(4));
    auto r = exact_sqrt(z);
    REQUIRE(r);
    CHECK(*r * *r == z);
    CHECK_FALSE(exact_sqrt(QComplex(2)));
    CHECK(*exact_sqrt(QComplex(Rational(9, 16))) == QComplex(Rational(3, 4)));
    CHECK(*exact_power(QComplex(4), QComplex(Rational(-3, 2))) == QComplex(Rational(1, 8)));
}

TEST_CASE("products track certified order") {
    LaurentJet a = C(1) + X();
    LaurentJet b = Y().mul_y(-4) * 3;  // 3 y^-3, certified to 12
    CHECK(b.order() == 12);
    LaurentJet p = a * b;
    CHECK(p.order() == std::min(16 + (-3), 12 + 0));
    CHECK(p.coeff(1, -3) == QComplex(3));
    CHECK_THROWS_AS(p.is_zero_to(20), Error);
    CHECK(X().dx().order() == 15);
}

TEST_CASE("unit inverse matches binomial expansion") {
    LaurentJet u = C(1) + X() + Y();
    LaurentJet v = u.inverse();
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; a + b <= 6; ++b) {
            Rational expect = binom(a + b, a) * ((a + b) % 2 ? -1 : 1);
            CHECK(v.coeff(a, b) == QComplex(expect));
        }
    CHECK((u * v) == C(1));
}

TEST_CASE("inverse of a pole times a unit") {
    LaurentJet f = (C(2) + X()).mul_y(-3);
    LaurentJet g = f.inverse();
    CHECK(g.min_y() == 3);
    CHECK((f * g).truncated(10) == C(1, 10));
    CHECK_THROWS_AS((X() + Y()).inverse(), Error);
}

TEST_CASE("exp and log are inverse and match factorials") {
    LaurentJet e = exp_series(X());
    for (int k = 0; k <= 10; ++k) CHECK(e.coeff(k, 0) == QComplex(1 / factorial(k)));
    LaurentJet f = X() * 2 + Y() * Y() - X() * Y() * QComplex(Rational(1, 3));
    CHECK(log_series(exp_series(f)) == f);
    LaurentJet u = C(1) + X() + Y() * Y();
    CHECK(exp_series(log_series(u)) == u);
    CHECK(unit_power(C(1) + X(), QComplex(Rational(1, 2))).coeff(2, 0) == QComplex(Rational(-1, 8)));
}

TEST_CASE("newton solve: square root and Lambert series") {
    auto u = SeriesExpr::unknown();
    auto sq = newton_implicit_solve(u * u - SeriesExpr::constant(C(1) + X()), 1, 12);
    CHECK((sq * sq) == (C(1, 12) + X(12)));
    // u = x e^u is the tree function, u = sum n^(n-1)/n! x^n.
    auto w = newton_implicit_solve(u - SeriesExpr::constant(X(12)) * u.exp(), 0, 12);
    for (int n = 1; n <= 12; ++n) {
        mpz_class p;
        mpz_pow_ui(p.get_mpz_t(), mpz_class(n).get_mpz_t(), n - 1);
        CHECK(w.coeff(n, 0) == QComplex(Rational(p) / factorial(n)));
    }
    CHECK_THROWS_AS(newton_implicit_solve(u * u - SeriesExpr::constant(X()), 0, 8), Error);
}

TEST_CASE("trans jets: powers, logs and derivatives") {
    TransJet h = TransJet::power_of_y(QComplex(Rational(1, 2)));
    CHECK((h * h) == TransJet(Y()));
    TransJet dh = h.dy();
    CHECK(dh == TransJet::power_of_y(QComplex(Rational(-1, 2))) * QComplex(Rational(1, 2)));
    TransJet l = TransJet::log_y();
    CHECK(l.dy() == TransJet(Y().mul_y(-2)));
    TransJet yl = TransJet(Y()) * l;
    CHECK(yl.dy() == l + TransJet(C(1)));
    TransJet g = TransJet::term(C(1) + X(), QComplex(Rational(3, 2)), 0);
    CHECK((g * g.inverse()) == TransJet(C(1, 14)));
    CHECK_THROWS_AS(l.inverse(), Error);
    CHECK(TransJet::power_of_y(QComplex(Rational(-1, 2))).to_string() == "y^(-1/2)");
}

TEST_CASE("composition with divisor-preserving maps") {
    LaurentJet p1 = X() + Y();
    LaurentJet p2 = Y() * (C(1) + X());
    LaurentJet f = Y().mul_y(-2);  // 1/y
    LaurentJet g = f.compose(p1, p2);
    CHECK((g * p2) == C(1, 14));
    LaurentJet h = (X() * X() + Y()).compose(p1, p2);
    CHECK(h == p1 * p1 + p2);
    CHECK_THROWS_AS(f.compose(p1, X() + Y()), Error);
    TransJet s = TransJet::power_of_y(QComplex(Rational(1, 2)));
    TransJet t = s.compose(p1, p2);
    CHECK((t * t) == TransJet(p2));
}

TEST_CASE("canonical text") {
    LaurentJet f = C(QComplex(Rational(3, 2))) - X() * Y().mul_y(-2) + X() * X() * QComplex(Rational(0), Rational(2));
    CHECK(f.to_string() == "-x*y^-1 + 3/2 + 2*i*x^2");
}
