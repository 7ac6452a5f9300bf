#include "doctest.h"

#include "affinegerm/classify.hpp"
#include "affinegerm/errors.hpp"
#include "models.hpp"
#include "random_jets.hpp"

#include <algorithm>

using namespace ag;
using namespace agtest;

namespace {

constexpr int N = 10;
LaurentJet X() { return LaurentJet::x(N); }
LaurentJet Y() { return LaurentJet::y(N); }
LaurentJet C(const QComplex& c) { return LaurentJet(c, N); }
TransJet T(const LaurentJet& f) { return TransJet(f); }

template <class F>
ErrorKind error_of(F f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::ParseError;
}

std::vector<AffineModel> model_grid() {
    std::vector<AffineModel> v;
    for (QComplex nu : {QComplex::frac(1, 2), QComplex(-2), QComplex(5), QComplex(1, 1), QComplex::frac(-7, 3),
                        QComplex(-1)})
        v.push_back(AffineModel::I(nu));
    for (int n = 2; n <= 4; ++n) v.push_back(AffineModel::II(n));
    for (int n = 0; n <= 3; ++n) v.push_back(AffineModel::III(n));
    for (int n = 1; n <= 3; ++n)
        for (int c = 0; c <= 1; ++c)
            if (!AffineModel::IV(n, c).excluded()) v.push_back(AffineModel::IV(n, c));
    return v;
}

Riccati model_riccati(const AffineModel& m) { return induced_riccati(model_pencil(m, N)); }

}  // namespace

TEST_CASE("classify_affine examples") {
    NormalFormModel c = classify_affine(model_riccati(AffineModel::I(QComplex::frac(3, 2))));
    CHECK(c.model == AffineModel::I(QComplex::frac(3, 2)));
    CHECK(c.monodromy.kind == MonodromyClass::Kind::Multiplicative);
    CHECK(c.monodromy.lambda == QComplex::frac(1, 2));

    c = classify_affine(model_riccati(AffineModel::II(2)));
    CHECK(c.model == AffineModel::II(2));
    CHECK(c.monodromy.kind == MonodromyClass::Kind::Identity);

    c = classify_affine(model_riccati(AffineModel::IV(2, 0)));
    CHECK(c.model == AffineModel::IV(2, 0));
    CHECK(c.monodromy.kind == MonodromyClass::Kind::Parabolic);
    CHECK(c.certificate.logarithmic);
}

TEST_CASE("classify round trip over the model grid") {
    for (auto& m : model_grid()) {
        CAPTURE(m.to_string());
        NormalFormModel c = classify_affine(model_riccati(m));
        CHECK(c.model == m);
        CHECK(c.certificate.reference == model_riccati(m));
    }
}

TEST_CASE("IV(1,0) is conjugate to IV(1,1)") {
    CHECK(classify_affine(model_riccati(AffineModel::IV(1, 0))).model == AffineModel::IV(1, 1));
}

TEST_CASE("monodromy_class examples") {
    MonodromyClass m = monodromy_class(row1(QComplex::frac(1, 2), N));
    CHECK(m.kind == MonodromyClass::Kind::Multiplicative);
    CHECK(m.lambda == QComplex::frac(1, 2));
    for (int n = 1; n <= 3; ++n) CHECK(monodromy_class(row3(n, N)).kind == MonodromyClass::Kind::Parabolic);
    CHECK(monodromy_class(Riccati::zero(N)).kind == MonodromyClass::Kind::Identity);
    CHECK(monodromy_class(model_riccati(AffineModel::I(-3))).kind == MonodromyClass::Kind::Identity);
}

TEST_CASE("classification is invariant under coordinate changes") {
    std::vector<AffineModel> ms = {AffineModel::I(QComplex::frac(1, 2)), AffineModel::I(-2), AffineModel::II(2),
                                   AffineModel::III(1), AffineModel::IV(2, 1), AffineModel::IV(2, 0)};
    for (int k = 0; k < 20; ++k) {
        const AffineModel& m = ms[k % ms.size()];
        CoordinateChange phi = rand_change(N);
        CAPTURE(m.to_string());
        Riccati r = change_coordinates(model_riccati(m), phi);
        CHECK(classify_affine(r).model == m);
    }
}

TEST_CASE("classify_affine errors") {
    Riccati bent = Riccati::zero(N);
    LaurentJet u = C(1) + X() * Y();
    bent.beta = Form1(T(Y() * u.inverse()), T(X() * u.inverse()));
    CHECK(error_of([&] { classify_affine(bent); }) == ErrorKind::NotTorsionFree);

    Riccati polar = Riccati::zero(N);
    polar.beta = Form1(TransJet(N), T(Y().pow(-2)));
    CHECK(error_of([&] { classify_affine(polar); }) == ErrorKind::NotLogarithmic);

    CHECK(error_of([] { classify_affine(Riccati::zero(N)); }) == ErrorKind::NonGeneric);
}

namespace {

ImplicitWeb web_from_members(const WebPencil& p, const std::vector<QComplex>& ts, int order = N) {
    std::vector<TransJet> prod{TransJet(1, order)};
    for (auto& t : ts) {
        auto m = p.member(t);
        std::vector<TransJet> r(prod.size() + m.size() - 1, TransJet(order));
        for (size_t i = 0; i < prod.size(); ++i)
            for (size_t j = 0; j < m.size(); ++j) r[i + j] += prod[i] * TransJet(m[j]);
        prod = r;
    }
    return {prod};
}

std::vector<QComplex> sorted(std::vector<QComplex> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("classify_web examples") {
    // dx^4 - y^2 dy^4
    ImplicitWeb w{{T(C(1)), TransJet(N), TransJet(N), TransJet(N), T(-Y() * Y())}};
    WebClassification c = classify_web(w);
    CHECK(c.model == WebModel{WebModel::Family::WebI, 1, 2, 0});
    CHECK(c.decomposition.member_degree == 2);
    CHECK(c.decomposition.t_values == sorted({1, -1}));

    SplitWeb s;
    for (int t = 1; t <= 3; ++t) s.foliations.push_back(Form1(T(Y() * Y()), T((C(1) + Y()) * QComplex(t))));
    c = classify_web(s);
    CHECK(c.model == WebModel{WebModel::Family::WebIII, 0, 0, 1});
    CHECK(c.affine.model == AffineModel::II(2));
    CHECK(c.decomposition.t_values == sorted({1, 2, 3}));

    WebPencil p = model_pencil(WebModel{WebModel::Family::WebII, 1, 1, 0}, N);
    c = classify_web(web_from_members(p, {1, -1, 2}));
    CHECK(c.model == WebModel{WebModel::Family::WebII, 1, 1, 0});
    CHECK(c.decomposition.t_values == sorted({1, -1, 2}));
}

TEST_CASE("classify_web round trip over web models") {
    std::vector<WebModel> ms = {{WebModel::Family::WebI, 1, 2, 0},  {WebModel::Family::WebI, 2, 3, 0},
                                {WebModel::Family::WebI, 1, 1, 0},  {WebModel::Family::WebII, 1, 2, 0},
                                {WebModel::Family::WebII, 3, 2, 0}, {WebModel::Family::WebIII, 0, 0, 1},
                                {WebModel::Family::WebIII, 0, 0, 2}};
    for (auto& m : ms) {
        CAPTURE(m.to_string());
        std::vector<QComplex> ts = {1, 2, -3};
        if (m.family != WebModel::Family::WebIII && m.q > 1) ts.resize(2);
        // members of high y-degree lose order when rescaled, so work deeper
        WebClassification c = classify_web(web_from_members(model_pencil(m, 20), ts, 20));
        CHECK(c.model == m);
        CHECK(c.nu.is_real());
        CHECK(c.decomposition.in_model_coordinates);
        CHECK(c.decomposition.t_values == sorted(ts));
    }
}

TEST_CASE("classify_web errors") {
    SplitWeb s;
    Pencil p = model_pencil(AffineModel::III(1), N);
    for (int t = 1; t <= 3; ++t) s.foliations.push_back(p.member(t));
    CHECK(error_of([&] { classify_web(s); }) == ErrorKind::ParabolicMonodromy);

    SplitWeb bad{{Form1::dx(N), Form1::dy(N), Form1::dx(N) + Form1::dy(N),
                  Form1::dx(N) + T(C(1) + X()) * Form1::dy(N)}};
    CHECK(error_of([&] { classify_web(bad); }) == ErrorKind::NonConstantCrossRatio);
}
