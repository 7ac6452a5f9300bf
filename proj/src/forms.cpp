#include "affinegerm/forms.hpp"

#include "affinegerm/errors.hpp"

#include <algorithm>
#include <cmath>

namespace ag {

Form1 Form1::log_dy(const QComplex& r, int order) {
    return {TransJet(order), TransJet(LaurentJet::monomial(r, 0, -1, order))};
}

Form1& Form1::operator+=(const Form1& o) {
    a += o.a;
    b += o.b;
    return *this;
}

Form1& Form1::operator-=(const Form1& o) {
    a -= o.a;
    b -= o.b;
    return *this;
}

namespace {

void append_terms(std::string& s, bool& first, const TransJet& f, const std::string& diff) {
    for (auto& [k, base] : f.terms())
        for (auto& [key, c] : base.sorted_terms()) {
            std::string mono =
                trans_monomial_string(key.first, k.nu + QComplex(key.second), k.log_degree);
            s += coeff_times(c, mono.empty() ? diff : mono + "*" + diff, first);
            first = false;
        }
}

}  // namespace

std::string Form1::to_string() const {
    std::string s;
    bool first = true;
    append_terms(s, first, a, "dx");
    append_terms(s, first, b, "dy");
    return first ? "0" : s;
}

std::string Form2::to_string() const {
    std::string s;
    bool first = true;
    append_terms(s, first, c, "dx^dy");
    return first ? "0" : s;
}

bool CoordinateChange::divisor_preserving() const {
    if (p2.is_zero() || p2.min_y() < 1) return false;
    return !p2.mul_y(-1).constant_term().is_zero();
}

CoordinateChange CoordinateChange::after(const CoordinateChange& inner) const {
    return {p1.compose(inner.p1, inner.p2), p2.compose(inner.p1, inner.p2)};
}

Form1 ext_d(const TransJet& f) { return {f.dx(), f.dy()}; }

Form2 ext_d(const Form1& w) { return Form2(w.b.dx() - w.a.dy()); }

Form2 wedge(const Form1& u, const Form1& v) { return Form2(u.a * v.b - u.b * v.a); }

namespace {

void check_jacobian(const CoordinateChange& phi) {
    QComplex det = phi.p1.coeff(1, 0) * phi.p2.coeff(0, 1) - phi.p1.coeff(0, 1) * phi.p2.coeff(1, 0);
    if (det.is_zero()) fail(ErrorKind::SingularJacobian, "coordinate change has singular linear part");
}

bool singular_along_divisor(const TransJet& f) {
    if (!f.is_laurent()) return true;
    return f.to_laurent().min_y() < 0 && !f.is_zero();
}

void check_divisor(const CoordinateChange& phi, std::initializer_list<const TransJet*> fs) {
    for (auto* f : fs)
        if (singular_along_divisor(*f) && !phi.divisor_preserving())
            fail(ErrorKind::NotDivisorPreserving,
                 "form is singular along y=0 but the second component is not y times a unit");
}

}  // namespace

TransJet pullback(const TransJet& f, const CoordinateChange& phi) {
    check_jacobian(phi);
    check_divisor(phi, {&f});
    return f.compose(phi.p1, phi.p2);
}

Form1 pullback(const Form1& w, const CoordinateChange& phi) {
    check_jacobian(phi);
    check_divisor(phi, {&w.a, &w.b});
    TransJet a = w.a.compose(phi.p1, phi.p2);
    TransJet b = w.b.compose(phi.p1, phi.p2);
    return {a * TransJet(phi.p1.dx()) + b * TransJet(phi.p2.dx()),
            a * TransJet(phi.p1.dy()) + b * TransJet(phi.p2.dy())};
}

Form2 pullback(const Form2& w, const CoordinateChange& phi) {
    check_jacobian(phi);
    check_divisor(phi, {&w.c});
    LaurentJet jac = phi.p1.dx() * phi.p2.dy() - phi.p1.dy() * phi.p2.dx();
    return Form2(w.c.compose(phi.p1, phi.p2) * TransJet(jac));
}

int pole_order(const TransJet& f) {
    int p = 0;
    for (auto& [key, base] : f.terms()) {
        (void)key;
        // ceil(-(j + re nu)) with 0 <= re nu < 1 equals -j for j < 0.
        int pole = std::max(0, -base.min_y());
        p = std::max(p, pole);
    }
    return p;
}

PoleData pole_data(const Form1& w) {
    PoleData d;
    d.order = std::max(pole_order(w.a), pole_order(w.b));
    for (auto& [k, base] : w.b.terms())
        if (k.nu.is_zero() && k.log_degree > 0 && !base.y_coeff(-1).is_zero())
            fail(ErrorKind::ResidueUndefined, "dy/y coefficient carries log y");
    d.residue = w.b.base(0, 0).y_coeff(-1);
    d.logarithmic_form = d.order <= 1 && pole_order(ext_d(w).c) <= 1;
    return d;
}

bool is_closed(const Form1& w) { return ext_d(w).is_zero(); }

Primitive integrate_closed(const Form1& w) {
    LaurentJet a = w.a.to_laurent(), b = w.b.to_laurent();
    LaurentJet r = b.y_coeff(-1);
    if (r.depends_on_x()) fail(ErrorKind::NotIntegrable, "residue along y=0 depends on x");
    QComplex res = r.constant_term();
    LaurentJet f = (b - LaurentJet::monomial(res, 0, -1, b.order())).integrate_y();
    LaurentJet rest = a - f.dx();
    if (rest.depends_on_y()) fail(ErrorKind::NotIntegrable, "form is not closed");
    return {f + rest.integrate_x(), res};
}

}  // namespace ag
