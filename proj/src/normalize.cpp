#include "affinegerm/normalize.hpp"

#include "affinegerm/errors.hpp"
#include "affinegerm/series.hpp"

namespace ag {

namespace {

void require_unit(const LaurentJet& u) {
    if (u.min_y() < 0 || u.depends_on_y()) fail(ErrorKind::DomainError, "expected a jet in x only");
    if (u.constant_term().is_zero()) fail(ErrorKind::NotInvertible, "u(0) must be nonzero");
}

LaurentJet x_to_y(const LaurentJet& f) {
    return f.compose(LaurentJet::y(f.order()), LaurentJet::x(f.order()));
}

}  // namespace

PowerConjugation conjugate_power_function(const QComplex& nu, const LaurentJet& h) {
    if (nu.is_zero()) fail(ErrorKind::ZeroExponent, "nu must be nonzero");
    require_unit(h);
    QComplex h0 = h.constant_term();
    LaurentJet u = unit_power(h * h0.inverse(), nu.inverse());
    return {u.mul_x(1), h0};
}

LaurentJet briot_bouquet_phi(const QComplex& nu, const LaurentJet& u) {
    require_unit(u);
    QComplex c = nu + QComplex(1);
    if (c.is_integer() && c.to_long() <= 0)
        fail(ErrorKind::ResonantExponent, "k + nu + 1 vanishes for some k >= 0 (nu = " + nu.to_string() + ")");
    int order = u.order();
    LaurentJet uh = u * u.constant_term().inverse();
    LaurentJet g(order);
    for (int k = 1; k <= order; ++k) {
        LaurentJet e = exp_series(g * (-c)) * uh;
        g.set_coeff(k, 0, e.coeff(k, 0) * (QComplex(k) + c).inverse());
    }
    return exp_series(g).mul_x(1);
}

std::string OneFormModel::to_string() const {
    switch (kind) {
        case Kind::PowerForm: return "PowerForm(nu=" + nu.to_string() + ", c=" + coeff.to_string() + ")";
        case Kind::LogPole: return "LogPole(lambda=" + lambda.to_string() + ")";
        case Kind::HigherPole:
            return "HigherPole(n=" + std::to_string(n) + ", c=" + coeff.to_string() +
                   ", lambda=" + lambda.to_string() + ")";
    }
    return "";
}

Form1 one_form_in_y(const QComplex& nu, const LaurentJet& u) {
    int order = u.order();
    return {TransJet(order), TransJet::power_of_y(nu, order) * TransJet(x_to_y(u))};
}

Form1 model_form_in_y(const OneFormModel& m, int order) {
    switch (m.kind) {
        case OneFormModel::Kind::PowerForm:
            return {TransJet(order), TransJet::power_of_y(m.nu, order) * m.coeff};
        case OneFormModel::Kind::LogPole: return Form1::log_dy(m.lambda, order);
        case OneFormModel::Kind::HigherPole:
            return Form1(TransJet(order), TransJet::power_of_y(-m.n, order) * m.coeff) +
                   Form1::log_dy(m.lambda, order);
    }
    return {};
}

Form1 pullback_1d(const Form1& w, const LaurentJet& phi) {
    return pullback(w, CoordinateChange{LaurentJet::x(phi.order()), x_to_y(phi)});
}

OneFormNormalization normalize_one_form(const QComplex& nu, const LaurentJet& u) {
    require_unit(u);
    int order = u.order();
    QComplex u0 = u.constant_term();
    OneFormNormalization r;
    OneFormModel& m = r.model;
    if (!nu.is_integer() || nu.to_long() >= 0) {
        m.kind = OneFormModel::Kind::PowerForm;
        m.nu = nu;
        m.coeff = u0;
        r.phi = briot_bouquet_phi(nu, u);
    } else if (nu.to_long() == -1) {
        m.kind = OneFormModel::Kind::LogPole;
        m.lambda = u0;
        LaurentJet h = u * u0.inverse() - LaurentJet(1, order);
        r.phi = exp_series(h.mul_x(-1).integrate_x()).mul_x(1);
    } else {
        int n = static_cast<int>(-nu.to_long());
        LaurentJet uh = u * u0.inverse();
        QComplex lam = uh.coeff(n - 1, 0);
        m.kind = OneFormModel::Kind::HigherPole;
        m.n = n;
        m.coeff = u0;
        m.lambda = lam * u0;
        // d(x^(1-n) H / (1-n)) = x^-n (uh - lam x^(n-1)) dx
        LaurentJet big_h(order);
        for (int k = 0; k <= order; ++k) {
            if (k == n - 1) continue;
            QComplex f = QComplex(1) - QComplex::frac(k, n - 1);
            big_h.set_coeff(k, 0, uh.coeff(k, 0) * f.inverse());
        }
        LaurentJet xlam = LaurentJet::monomial(lam * QComplex(n - 1), n - 1, 0, order);
        SeriesExpr w = SeriesExpr::unknown();
        SeriesExpr eq = w.pow(1 - n) - SeriesExpr::constant(xlam) * w.log() - SeriesExpr::constant(big_h);
        r.phi = newton_implicit_solve(eq, 1, order).mul_x(1);
    }
    Form1 back = pullback_1d(model_form_in_y(m, order), r.phi);
    if (!(back == one_form_in_y(nu, u)))
        fail(ErrorKind::DomainError, "normalization failed its pullback check for " + m.to_string());
    return r;
}

int tangency_order(const TransJet& f, const TransJet& g) {
    Form1 df = ext_d(f), dg = ext_d(g);
    auto smooth = [](const Form1& w) {
        return !w.a.base(0, 0).constant_term().is_zero() || !w.b.base(0, 0).constant_term().is_zero();
    };
    if (!smooth(df) || !smooth(dg)) fail(ErrorKind::NotSmoothFoliation, "first integral is singular at 0");
    Form2 w = wedge(df, dg);
    if (w.is_zero()) fail(ErrorKind::IdenticalFoliations, "df ^ dg vanishes identically");
    if (!w.c.is_laurent()) fail(ErrorKind::DomainError, "tangency order needs Laurent first integrals");
    return w.c.to_laurent().min_y();
}

}  // namespace ag
