#include "doctest.h"

#include "affinegerm/errors.hpp"
#include "affinegerm/pencil.hpp"
#include "affinegerm/web.hpp"
#include "models.hpp"
#include "random_jets.hpp"

using namespace ag;
using namespace agtest;

namespace {

constexpr int N = 10;
LaurentJet X() { return LaurentJet::x(N); }
LaurentJet Y() { return LaurentJet::y(N); }
LaurentJet C(const QComplex& c) { return LaurentJet(c, N); }
TransJet T(const LaurentJet& f) { return TransJet(f); }
TransJet K(const QComplex& c) { return TransJet(c, N); }

template <class F>
ErrorKind error_of(F f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::ParseError;
}

// dy - e dx: the foliation with slope e.
Form1 slope(const TransJet& e) { return Form1(-e, K(1)); }
Form1 slope(const QComplex& e) { return slope(K(e)); }

SplitWeb members(const Pencil& p, const std::vector<QComplex>& ts) {
    SplitWeb w;
    for (auto& t : ts) w.foliations.push_back(p.member(t));
    return w;
}

Form1 rand_holo_form() {
    return Form1(T(rand_jet(N, 3, 2) + C(rand_nonzero(3))), T(rand_jet(N, 3, 2) + C(rand_nonzero(3))));
}

SplitWeb rand_transversal_web(int d) {
    for (;;) {
        SplitWeb w;
        for (int k = 0; k < d; ++k) w.foliations.push_back(rand_holo_form());
        bool ok = true;
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                if (wedge(w.foliations[i], w.foliations[j]).c.base(0, 0).constant_term().is_zero()) ok = false;
        if (ok) return w;
    }
}

const SplitWeb kBent{{Form1::dx(N), T(C(1) + X() * Y()) * Form1::dy(N),
                      Form1::dx(N) + T(C(1) + X() * Y()) * Form1::dy(N)}};

}  // namespace

TEST_CASE("discriminant examples") {
    Discriminant d = discriminant(ImplicitWeb{{T(-Y()), K(0), K(1)}});
    CHECK(d.value == T(Y() * QComplex(4)));
    CHECK(d.y_order == QComplex(1));

    // 1 - y^4 z^4: roots i^k / y, disc = a^(2d-2) prod_{i<j} (r_i - r_j)^2
    constexpr int M = 16;
    auto y4 = TransJet(-LaurentJet::y(M).pow(4));
    d = discriminant(ImplicitWeb{{TransJet(1, M), TransJet(M), TransJet(M), TransJet(M), y4}});
    CHECK(d.y_order == QComplex(12));
    std::vector<QComplex> zeta = {1, QComplex(0, 1), -1, QComplex(0, -1)};
    QComplex prod = 1;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j) prod = prod * (zeta[i] - zeta[j]) * (zeta[i] - zeta[j]);
    CHECK(d.value == TransJet(LaurentJet::y(M).pow(12) * prod));

    SplitWeb flat{{slope(0), slope(1), slope(2)}};
    d = discriminant(to_implicit(flat));
    CHECK(d.value == K(4));
    CHECK(d.y_order == QComplex(0));

    CHECK(error_of([] { discriminant(ImplicitWeb{{T(Y() * Y()), T(Y() * QComplex(-2)), K(1)}}); }) ==
          ErrorKind::NonReducedWeb);
}

TEST_CASE("cross_ratio examples") {
    SplitWeb w{{slope(0), slope(1), slope(2), slope(3)}};
    CHECK(cross_ratio(w, 0, 1, 2, 3) == K(QComplex::frac(4, 3)));

    QComplex t = 3;
    w = SplitWeb{{slope(0), slope(1), Form1::dx(N), slope(t)}};
    // third slope at infinity: (e2 - e4) / (e1 - e4)
    CHECK(cross_ratio(w, 0, 1, 2, 3) == K((t - QComplex(1)) * t.inverse()));

    Pencil p{Form1::dx(N), TransJet::power_of_y(QComplex::frac(1, 2), N) * Form1::dy(N)};
    w = members(p, {1, 2, 3, 4});
    TransJet cr = cross_ratio(w, 0, 1, 2, 3);
    CHECK(cr == K(QComplex::frac(4, 3)));
    CHECK(ext_d(cr).is_zero());

    w = SplitWeb{{slope(0), slope(1), slope(1), slope(3)}};
    CHECK(error_of([&] { cross_ratio(w, 0, 1, 2, 3); }) == ErrorKind::CoincidentSlopes);
}

TEST_CASE("constant_cross_ratio examples") {
    for (auto& m : {AffineModel::I(QComplex::frac(1, 3)), AffineModel::III(1), AffineModel::IV(2, 1)})
        CHECK(constant_cross_ratio(members(model_pencil(m, N), {1, 2, 3, 5, -1})));
    SplitWeb w{{Form1::dx(N), Form1::dy(N), Form1::dx(N) + Form1::dy(N), Form1::dx(N) + T(C(1) + X()) * Form1::dy(N)}};
    CHECK_FALSE(constant_cross_ratio(w));
    CHECK(constant_cross_ratio(kBent));
}

TEST_CASE("fit_riccati examples") {
    auto r = fit_riccati(ImplicitWeb{{K(1), K(0), K(0), K(0), T(-Y().pow(4))}});
    REQUIRE(r);
    CHECK(*r == row1(1, N));

    QComplex half = QComplex::frac(1, 2);
    Pencil p = model_pencil(AffineModel::I(half), N);
    SplitWeb w = members(p, {1, 2, 3});
    r = fit_riccati(to_implicit(w));
    REQUIRE(r);
    CHECK(*r == induced_riccati(p));
    CHECK(*r == row1(half, N));

    SplitWeb bad{{Form1::dx(N), Form1::dy(N), Form1::dx(N) + Form1::dy(N),
                  Form1::dx(N) + T(C(1) + X()) * Form1::dy(N)}};
    CHECK_FALSE(fit_riccati(to_implicit(bad)));
    CHECK_FALSE(fit_riccati(bad));

    CHECK(error_of([] { fit_riccati(ImplicitWeb{{K(1), K(0), T(Y())}}); }) == ErrorKind::UnderdeterminedFit);
}

TEST_CASE("split to implicit to fit recovers the inducing Riccati") {
    std::vector<AffineModel> ms = {AffineModel::I(QComplex::frac(1, 2)), AffineModel::I(-2), AffineModel::II(2),
                                   AffineModel::III(1), AffineModel::IV(2, 1)};
    for (auto& m : ms) {
        CAPTURE(m.to_string());
        Pencil p = model_pencil(m, N);
        Riccati want = induced_riccati(p);
        for (int d = 3; d <= 4; ++d) {
            std::vector<QComplex> ts = {1, 2, -1, 3};
            ts.resize(d);
            SplitWeb w = members(p, ts);
            auto r = fit_riccati(to_implicit(w));
            REQUIRE(r);
            CHECK(*r == want);
            auto s = fit_riccati(w);
            REQUIRE(s);
            CHECK(*s == want);
        }
    }
}

TEST_CASE("fit succeeds iff the cross-ratio is constant") {
    for (int k = 0; k < 20; ++k) {
        SplitWeb w = rand_transversal_web(3 + k % 2);
        if (k % 4 == 1) {
            // four members of the pencil spanned by the first two foliations
            w.foliations[2] = w.foliations[0] + rand_nonzero(3) * w.foliations[1];
            w.foliations[3] = w.foliations[0] + rand_nonzero(3) * w.foliations[1];
        }
        bool constant = constant_cross_ratio(w);
        CHECK(fit_riccati(w).has_value() == constant);
        if (w.degree() == 3) CHECK(constant);
    }
}

TEST_CASE("fit rejects a perturbed model web with singular minors") {
    // (1 + y z^2)(1 + 2 y z^2) + (x/7) z^4: no 3x3 minor is a unit, the system is inconsistent
    constexpr int M = 16;
    LaurentJet y = LaurentJet::y(M);
    ImplicitWeb w{{TransJet(1, M), TransJet(M), TransJet(y * QComplex(3)), TransJet(M),
                   TransJet(y * y * QComplex(2) + LaurentJet::x(M) * QComplex::frac(1, 7))}};
    CHECK_FALSE(fit_riccati(w).has_value());
    w.coeffs[4] = TransJet(y * y * QComplex(2));
    CHECK(fit_riccati(w).has_value());
}

TEST_CASE("blaschke_curvature examples") {
    SplitWeb w{{Form1::dx(N), Form1::dy(N), -Form1::dx(N) - Form1::dy(N)}};
    CHECK(blaschke_curvature(w).is_zero());

    LaurentJet u = C(1) + X() * Y();
    w = SplitWeb{{Form1::dx(N), T(u) * Form1::dy(N), -Form1::dx(N) - T(u) * Form1::dy(N)}};
    CHECK(blaschke_curvature(w) == Form2(T(-u.pow(-2))));

    // model III(1) at the regular point (0, 1), with y = 1 + Y
    LaurentJet y = C(1) + Y();
    Form1 w0 = Form1::dx(N) - T(y * log_series(y)) * Form1::dy(N), winf = T(y) * Form1::dy(N);
    w = SplitWeb{{w0, w0 + winf, w0 + QComplex(2) * winf}};
    CHECK(blaschke_curvature(w).is_zero());

    w = SplitWeb{{Form1::dx(N), Form1::dx(N) + T(Y()) * Form1::dy(N), Form1::dy(N)}};
    CHECK(error_of([&] { blaschke_curvature(w); }) == ErrorKind::NotTransversal);
}

TEST_CASE("blaschke curvature is proportional to d kappa") {
    std::optional<QComplex> ratio;
    int compared = 0;
    for (int k = 0; k < 40 && compared < 20; ++k) {
        SplitWeb w = rand_transversal_web(3);
        Form2 kb = blaschke_curvature(w);
        auto r = fit_riccati(w);
        REQUIRE(r);
        Form2 dk = torsion(*r).dkappa;
        CHECK(kb.is_zero() == dk.is_zero());
        if (!dk.c.is_invertible() || dk.c.to_laurent().min_y() != 0) continue;
        TransJet q = kb.c * dk.c.inverse();
        REQUIRE(q.is_laurent());
        CHECK_FALSE(q.to_laurent().depends_on_x());
        CHECK_FALSE(q.to_laurent().depends_on_y());
        QComplex c = q.to_laurent().constant_term();
        if (!ratio) ratio = c;
        CHECK(c == *ratio);
        ++compared;
    }
    CHECK(compared >= 10);
    MESSAGE("blaschke / dkappa = " << (ratio ? ratio->to_string() : std::string("n/a")));
}

TEST_CASE("is_hexagonal examples") {
    for (auto& nu : {QComplex::frac(1, 2), QComplex(1), QComplex(-2)}) {
        SplitWeb w = members(model_pencil(AffineModel::I(nu), N), {1, 2, 3, 4});
        CHECK(is_hexagonal(w));
        CHECK(is_hexagonal(to_implicit(w)));
    }
    CHECK_FALSE(is_hexagonal(kBent));
    CHECK_FALSE(blaschke_curvature(kBent).is_zero());
    SplitWeb flat{{slope(0), slope(1), slope(2), slope(5)}};
    CHECK(is_hexagonal(flat));
    SplitWeb bad{{Form1::dx(N), Form1::dy(N), Form1::dx(N) + Form1::dy(N),
                  Form1::dx(N) + T(C(1) + X()) * Form1::dy(N)}};
    CHECK(error_of([&] { is_hexagonal(bad); }) == ErrorKind::NonConstantCrossRatio);
    for (int k = 0; k < 10; ++k) {
        SplitWeb w = rand_transversal_web(3);
        CHECK(is_hexagonal(w) == blaschke_curvature(w).is_zero());
    }
}
