#include "affinegerm/riccati.hpp"

#include "affinegerm/errors.hpp"
#include "affinegerm/fuchsian.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

namespace ag {

namespace {

Form1 zero_form(int order) { return {TransJet(order), TransJet(order)}; }

TransJet half() { return TransJet(QComplex::frac(1, 2), 1 << 20); }

}  // namespace

Riccati Riccati::zero(int order) { return {zero_form(order), zero_form(order), zero_form(order)}; }

Mobius Mobius::identity(int order) {
    return {TransJet(1, order), TransJet(order), TransJet(order), TransJet(1, order)};
}

Mobius Mobius::inversion(int order) {
    return {TransJet(order), TransJet(1, order), TransJet(1, order), TransJet(order)};
}

Mobius Mobius::after(const Mobius& m) const {
    return {a * m.a + b * m.c, a * m.b + b * m.d, c * m.a + d * m.c, c * m.b + d * m.d};
}

FrobeniusDefects frobenius_defects(const Riccati& r) {
    const Form1 &al = r.alpha, &be = r.beta, &ga = r.gamma;
    Form2 two_ag(wedge(al, ga).c * QComplex(2));
    return {ext_d(al) + wedge(al, be), ext_d(be) + two_ag, ext_d(ga) + wedge(be, ga)};
}

bool frobenius_check(const Riccati& r) {
    auto d = frobenius_defects(r);
    return d.d_alpha.is_zero() && d.d_beta.is_zero() && d.d_gamma.is_zero();
}

Riccati from_connection(const ConnectionMatrix& t) {
    return {-t(0, 1), t(1, 1) - t(0, 0), t(1, 0)};
}

TorsionData torsion(const Riccati& r) {
    const Form1 &al = r.alpha, &be = r.beta, &ga = r.gamma;
    Form1 kappa(ga.b * QComplex(2) - be.a, be.b - al.a * QComplex(2));
    return {kappa, ext_d(kappa)};
}

bool is_torsion_free(const Riccati& r) { return torsion(r).dkappa.is_zero(); }

ConnectionMatrix lift_torsion_free(const Riccati& r) {
    Form1 k = torsion(r).kappa;
    return ConnectionMatrix(half() * (k - r.beta), -r.alpha, r.gamma, half() * (k + r.beta));
}

ConnectionMatrix lift_trace_free(const Riccati& r) {
    return ConnectionMatrix(-(half() * r.beta), -r.alpha, r.gamma, half() * r.beta);
}

bool is_logarithmic(const Riccati& r) {
    for (const Form1* f : {&r.alpha, &r.beta, &r.gamma})
        if (pole_order(f->a) > 1 || pole_order(f->b) > 1 || pole_order(ext_d(*f).c) > 1) return false;
    return true;
}

Riccati substitute_mobius(const Riccati& r, const Mobius& m) {
    const TransJet &A = m.a, &B = m.b, &C = m.c, &D = m.d;
    TransJet delta = m.det();
    if (!delta.is_invertible())
        fail(ErrorKind::DegenerateGauge, "Mobius determinant is not a monomial times a unit");
    TransJet inv = delta.inverse();
    Form1 dA = ext_d(A), dB = ext_d(B), dC = ext_d(C), dD = ext_d(D);
    const Form1 &al = r.alpha, &be = r.beta, &ga = r.gamma;
    TransJet two(2, 1 << 20);
    Form1 na = C * dA - A * dC + (A * A) * al + (A * C) * be + (C * C) * ga;
    Form1 nb = D * dA + C * dB - A * dD - B * dC + (two * A * B) * al + (A * D + B * C) * be +
               (two * C * D) * ga;
    Form1 ng = D * dB - B * dD + (B * B) * al + (B * D) * be + (D * D) * ga;
    return {inv * na, inv * nb, inv * ng};
}

Riccati gauge_mobius(const Riccati& r, const Mobius& g) {
    return substitute_mobius(r, Mobius{g.d, -g.b, -g.c, g.a});
}

Riccati change_coordinates(const Riccati& r, const CoordinateChange& phi) {
    Riccati pulled{pullback(r.alpha, phi), pullback(r.beta, phi), pullback(r.gamma, phi)};
    const LaurentJet &p1 = phi.p1, &p2 = phi.p2;
    return substitute_mobius(pulled, Mobius{TransJet(p2.dy()), TransJet(p2.dx()), TransJet(p1.dy()),
                                             TransJet(p1.dx())});
}

std::string Section::to_string() const {
    if (is_infinity()) return "infinity";
    LaurentJet one(1, q.order());
    if (q == one) return p.to_string();
    return "(" + p.to_string() + ")/(" + q.to_string() + ")";
}

Form1 section_defect(const Riccati& r, const Section& s) {
    TransJet p(s.p), q(s.q);
    return q * ext_d(p) - p * ext_d(q) + (p * p) * r.alpha + (p * q) * r.beta + (q * q) * r.gamma;
}

bool is_invariant(const Riccati& r, const Section& s) { return section_defect(r, s).is_zero(); }

namespace {

void require_log_integrable(const Riccati& r) {
    if (!r.is_laurent()) fail(ErrorKind::NotLogarithmic, "Riccati coefficients must be Laurent jets");
    if (!is_logarithmic(r)) fail(ErrorKind::NotLogarithmic, "Riccati form is not logarithmic along y=0");
    if (!frobenius_check(r)) fail(ErrorKind::NotIntegrable, "Riccati form fails the Frobenius condition");
}

bool is_trivial(const Riccati& r) { return r.alpha.is_zero() && r.beta.is_zero() && r.gamma.is_zero(); }

Section normalize_section(LaurentJet p, LaurentJet q) {
    int k = std::min(p.min_y(), q.min_y());
    p = p.mul_y(-k);
    q = q.mul_y(-k);
    if (q.is_zero()) return Section::infinity(p.order());
    if (q.is_invertible() && q.min_y() == 0) {
        LaurentJet s = p * q.inverse();
        return {s, LaurentJet(1, s.order())};
    }
    if (p.is_invertible() && p.min_y() == 0) {
        LaurentJet w = q * p.inverse();
        return {LaurentJet(1, w.order()), w};
    }
    return {p, q};
}

Section section_from(const ConnectionMatrix& theta, const DualSolution& s) {
    auto w = extend_off_axis(theta, s);
    return normalize_section(-w[0], w[1]);
}

QComplex at_origin(const LaurentJet& f) { return f.coeff(0, 0); }

// Sections separated at the origin: p_a q_b - p_b q_a is a unit.
bool separated(const Section& a, const Section& b) {
    LaurentJet d = a.p * b.q - b.p * a.q;
    return !at_origin(d).is_zero() && d.is_holomorphic();
}

struct Basis {
    ConnectionMatrix theta;
    DualBasis dual;
};

Basis local_basis(const Riccati& r) {
    Basis b;
    b.theta = lift_trace_free(r);
    b.dual = solve_dual_at_divisor(b.theta, r.order());
    return b;
}

}  // namespace

SectionSet invariant_sections(const Riccati& r) {
    require_log_integrable(r);
    SectionSet out;
    if (is_trivial(r)) {
        out.all_invariant = true;
        return out;
    }
    Basis b = local_basis(r);
    for (auto& s : b.dual.log_free) {
        Section sec = section_from(b.theta, s);
        if (!is_invariant(r, sec)) fail(ErrorKind::NonGeneric, "section failed verification: " + sec.to_string());
        out.sections.push_back(sec);
    }
    out.all_invariant = b.dual.integer_difference && !b.dual.logarithmic();
    return out;
}

std::string FiberModel::to_string() const {
    if (kind == Kind::Diagonal) return "Diagonal(" + lambda.to_string() + ")";
    return "Resonant(" + std::to_string(n) + ")";
}

Riccati fiber_model_riccati(const FiberModel& m, int order) {
    Riccati r = Riccati::zero(order);
    if (m.kind == FiberModel::Kind::Diagonal) {
        r.beta = Form1::log_dy(-m.lambda, order);
    } else {
        r.beta = Form1::log_dy(QComplex(-m.n), order);
        r.gamma = Form1(TransJet(order), TransJet(LaurentJet::monomial(-1, 0, m.n - 1, order)));
    }
    return r;
}

namespace {

// w = (q_a z - p_a) / (q_b z - p_b): section a -> 0, section b -> infinity.
Mobius sending(const Section& a, const Section& b) {
    return {TransJet(a.q), TransJet(-a.p), TransJet(b.q), TransJet(-b.p)};
}

Mobius scale(const LaurentJet& e) {
    int n = e.order();
    return {TransJet(e), TransJet(n), TransJet(n), TransJet(1, n)};
}

// exp(F - F(0)) for a holomorphic primitive F.
LaurentJet exp_primitive(const LaurentJet& f) {
    if (!f.is_holomorphic())
        fail(ErrorKind::NonGeneric, "closed part has a pole; normal form is not regular");
    LaurentJet g = f;
    g.set_coeff(0, 0, 0);
    return exp_series(g);
}

// The normal form together with the input gauged into it, built up from the
// partial gauges so the dense gauge is applied only once.
struct Gauged {
    FiberNormalForm form;
    Riccati result;
};

// w = 1/z exchanges the sections sent to 0 and infinity.
Riccati swap_chart(const Riccati& r) { return {-r.gamma, -r.beta, -r.alpha}; }

Gauged diagonal_from(const Riccati& r1, const Mobius& m0) {
    if (!r1.alpha.is_zero() || !r1.gamma.is_zero())
        fail(ErrorKind::NonGeneric, "invariant sections did not diagonalize the form");
    Primitive p = integrate_closed(r1.beta);
    Gauged out;
    out.form.model.kind = FiberModel::Kind::Diagonal;
    out.form.model.lambda = -p.residue;
    Mobius s = scale(exp_primitive(p.f));
    out.form.gauge = s.after(m0);
    out.result = gauge_mobius(r1, s);
    return out;
}

Gauged diagonal_form(const Riccati& r, const Section& sa, const Section& sb) {
    Mobius m0 = sending(sa, sb);
    Riccati r1 = gauge_mobius(r, m0);
    Gauged out = diagonal_from(r1, m0);
    if (out.form.model.lambda < QComplex(0))
        out = diagonal_from(swap_chart(r1), Mobius{m0.c, m0.d, m0.a, m0.b});
    return out;
}

Gauged resonant_form(const Riccati& r, const Section& s) {
    int order = r.order();
    // Auxiliary constant section distinct from s at the origin.
    Section aux = Section::finite(LaurentJet(0, order));
    for (int c = 0;; ++c) {
        aux = Section::finite(LaurentJet(c, order));
        if (separated(aux, s)) break;
        if (c > 3) fail(ErrorKind::NonGeneric, "invariant section degenerates at the origin");
    }
    Mobius m0 = sending(aux, s);
    Riccati r1 = gauge_mobius(r, m0);
    if (!r1.alpha.is_zero()) fail(ErrorKind::NonGeneric, "parabolic section is not invariant after gauge");
    Primitive pb = integrate_closed(r1.beta);
    if (!pb.residue.is_integer() || pb.residue.to_long() > 0)
        fail(ErrorKind::NonGeneric, "unexpected residue " + pb.residue.to_string() + " at the resonant point");
    int n = static_cast<int>(-pb.residue.to_long());
    Mobius sc = scale(exp_primitive(pb.f));
    Mobius m1 = sc.after(m0);
    Riccati r2 = gauge_mobius(r1, sc);
    LaurentJet g1 = r2.gamma.a.to_laurent().mul_y(-n), g2 = r2.gamma.b.to_laurent().mul_y(-n);
    Primitive pg = integrate_closed(Form1(TransJet(g1), TransJet(g2)));
    QComplex k = -pg.residue;
    if (k.is_zero()) fail(ErrorKind::NonGeneric, "resonance is removable; expected a parabolic point");
    LaurentJet b = -pg.f.mul_y(n);
    int no = b.order();
    Mobius shift{TransJet(k.inverse(), no), TransJet(-b * k.inverse()), TransJet(no), TransJet(1, no)};
    Gauged out;
    out.form.model.kind = FiberModel::Kind::Resonant;
    out.form.model.n = n;
    out.form.gauge = shift.after(m1);
    out.result = gauge_mobius(r2, shift);
    return out;
}

}  // namespace

FiberNormalForm fiberwise_normal_form(const Riccati& r) {
    require_log_integrable(r);
    return detail::fiberwise_normal_form_checked(r);
}

FiberNormalForm detail::fiberwise_normal_form_checked(const Riccati& r) {
    int order = r.order();
    FiberNormalForm out;
    if (is_trivial(r)) {
        out.model.kind = FiberModel::Kind::Diagonal;
        out.model.lambda = 0;
        out.gauge = Mobius::identity(order);
        return out;
    }
    Basis b = local_basis(r);
    Gauged g;
    if (b.dual.logarithmic()) {
        g = resonant_form(r, section_from(b.theta, b.dual.log_free.at(0)));
    } else {
        // With trivial monodromy any two independent solutions will do; try a few
        // combinations until the sections separate at the origin.
        // The extension off the axis is linear, so combinations are formed afterwards.
        std::vector<std::array<LaurentJet, 2>> ext;
        for (auto& s : b.dual.log_free) ext.push_back(extend_off_axis(b.theta, s));
        if (b.dual.integer_difference && ext.size() == 2)
            for (int t : {1, -1, 2}) ext.push_back({ext[0][0] + ext[1][0] * QComplex(t), ext[0][1] + ext[1][1] * QComplex(t)});
        std::vector<std::optional<Section>> secs(ext.size());
        auto sec = [&](size_t i) -> const Section& {
            if (!secs[i]) secs[i] = normalize_section(-ext[i][0], ext[i][1]);
            return *secs[i];
        };
        bool found = false;
        for (size_t i = 0; i < ext.size() && !found; ++i)
            for (size_t j = i + 1; j < ext.size() && !found; ++j)
                if (separated(sec(i), sec(j))) {
                    g = diagonal_form(r, sec(i), sec(j));
                    found = true;
                }
        if (!found) fail(ErrorKind::NonGeneric, "invariant sections meet at the origin");
    }
    if (!(g.result == fiber_model_riccati(g.form.model, order)))
        fail(ErrorKind::NonGeneric, "normal-form gauge failed verification");
    return g.form;
}

std::string MonodromyClass::to_string() const {
    switch (kind) {
        case Kind::Identity: return "Identity";
        case Kind::Multiplicative: return "Multiplicative(" + lambda.to_string() + ")";
        case Kind::Parabolic: return "Parabolic";
    }
    return "";
}

std::string riccati_to_string(const Riccati& r) {
    return "alpha: " + r.alpha.to_string() + "\nbeta: " + r.beta.to_string() + "\ngamma: " + r.gamma.to_string();
}

}  // namespace ag
