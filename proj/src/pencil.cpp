#include "affinegerm/pencil.hpp"

#include "affinegerm/errors.hpp"

#include <numeric>

namespace ag {

namespace {

std::pair<QComplex, int> lowest_exponent(const TransJet& f) {
    std::pair<QComplex, int> best{0, 0};
    bool first = true;
    for (auto& [k, b] : f.terms()) {
        QComplex e = k.nu + QComplex(b.min_y());
        if (first || e < best.first || (e == best.first && k.log_degree > best.second)) best = {e, k.log_degree};
        first = false;
    }
    return best;
}

TransJet y_power(const QComplex& nu, int order) { return TransJet::power_of_y(nu, order); }

}  // namespace

PencilReport validate_pencil(const Pencil& p) {
    PencilReport r;
    r.wedge = wedge(p.omega0, p.omegaInf);
    if (r.wedge.is_zero()) fail(ErrorKind::DegeneratePencil, "omega0 ^ omegaInf vanishes identically");
    r.omega0_closed = is_closed(p.omega0);
    r.omegaInf_closed = is_closed(p.omegaInf);
    auto [e, m] = lowest_exponent(r.wedge.c);
    r.divisor_order = e;
    r.divisor_log_degree = m;
    return r;
}

TransJet pencil_delta(const Pencil& p) { return p.omega0.a * p.omegaInf.b - p.omega0.b * p.omegaInf.a; }

Riccati induced_riccati(const Pencil& p) {
    const TransJet &f0 = p.omega0.a, &g0 = p.omega0.b, &fi = p.omegaInf.a, &gi = p.omegaInf.b;
    TransJet delta = f0 * gi - g0 * fi;
    if (delta.is_zero()) fail(ErrorKind::DeltaNotInvertible, "delta vanishes identically");
    if (!delta.is_invertible())
        fail(ErrorKind::DeltaNotInvertible, "delta is not a monomial times a unit: " + delta.to_string());
    TransJet inv = delta.inverse();
    Form1 df0 = ext_d(f0), dg0 = ext_d(g0), dfi = ext_d(fi), dgi = ext_d(gi);
    return {inv * (g0 * dgi - gi * dg0), inv * (f0 * dgi - gi * df0 + g0 * dfi - fi * dg0),
            inv * (f0 * dfi - fi * df0)};
}

std::string AffineModel::to_string() const {
    switch (kind) {
        case Kind::I: return "I(" + nu.to_string() + ")";
        case Kind::II: return "II(" + std::to_string(n) + ")";
        case Kind::III: return "III(" + std::to_string(n) + ")";
        case Kind::IV: return "IV(" + std::to_string(n) + "," + std::to_string(c) + ")";
    }
    return "";
}

Pencil model_pencil(const AffineModel& m, int order) {
    Form1 dx = Form1::dx(order), dy = Form1::dy(order);
    switch (m.kind) {
        case AffineModel::Kind::I:
            if (m.nu.is_zero()) fail(ErrorKind::ParameterOutOfRange, "model I needs nu != 0");
            return {dx, y_power(m.nu, order) * dy};
        case AffineModel::Kind::II:
            if (m.n <= 1) fail(ErrorKind::ParameterOutOfRange, "model II needs n > 1");
            return {dx, (y_power(-m.n, order) + y_power(-1, order)) * dy};
        case AffineModel::Kind::III: {
            if (m.n < 0) fail(ErrorKind::ParameterOutOfRange, "model III needs n >= 0");
            TransJet yn = y_power(m.n, order);
            return {dx - (yn * TransJet::log_y(order)) * dy, yn * dy};
        }
        case AffineModel::Kind::IV: {
            if (m.n < 1 || (m.c != 0 && m.c != 1))
                fail(ErrorKind::ParameterOutOfRange, "model IV needs n >= 1 and c in {0, 1}");
            TransJet cx = TransJet(LaurentJet(m.c, order) - LaurentJet::x(order));
            TransJet b = y_power(-m.n, order) + cx * y_power(-1, order);
            return {Form1(-TransJet::log_y(order), b), dx};
        }
    }
    return {};
}

std::string WebModel::to_string() const {
    switch (family) {
        case Family::WebI: return "WebI(" + std::to_string(p) + "," + std::to_string(q) + ")";
        case Family::WebII: return "WebII(" + std::to_string(p) + "," + std::to_string(q) + ")";
        case Family::WebIII: return "WebIII(" + std::to_string(n) + ")";
    }
    return "";
}

std::vector<LaurentJet> WebPencil::member(const QComplex& t) const {
    size_t d = std::max(p0.size(), pinf.size());
    int order = default_order();
    if (!p0.empty()) order = p0[0].order();
    std::vector<LaurentJet> r(d, LaurentJet(order));
    for (size_t k = 0; k < p0.size(); ++k) r[k] += p0[k];
    for (size_t k = 0; k < pinf.size(); ++k) r[k] += pinf[k] * t;
    return r;
}

WebPencil model_pencil(const WebModel& m, int order) {
    auto mono = [order](int j) { return LaurentJet::monomial(1, 0, j, order); };
    auto zpoly = [order](int deg, const LaurentJet& lead) {
        std::vector<LaurentJet> v(deg + 1, LaurentJet(order));
        v[deg] = lead;
        return v;
    };
    switch (m.family) {
        case WebModel::Family::WebI:
        case WebModel::Family::WebII:
            if (m.p <= 0 || m.q <= 0 || std::gcd(m.p, m.q) != 1)
                fail(ErrorKind::ParameterOutOfRange, "web model needs coprime positive (p, q)");
            if (m.family == WebModel::Family::WebI) return {zpoly(0, mono(0)), zpoly(m.q, mono(m.p))};
            return {zpoly(0, mono(m.p)), zpoly(m.q, mono(0))};
        case WebModel::Family::WebIII: {
            if (m.n <= 0) fail(ErrorKind::ParameterOutOfRange, "WebIII needs n > 0");
            return {zpoly(0, mono(m.n + 1)), zpoly(1, mono(0) + mono(m.n))};
        }
    }
    return {};
}

Form1 section_defect(const Riccati& r, const TransSection& s) {
    const TransJet &p = s.p, &q = s.q;
    return q * ext_d(p) - p * ext_d(q) + (p * p) * r.alpha + (p * q) * r.beta + (q * q) * r.gamma;
}

Riccati riccati_from_three_sections(const TransSection& z1, const TransSection& z2,
                                    const TransSection& z3) {
    auto cross = [](const TransSection& u, const TransSection& v) { return u.p * v.q - v.p * u.q; };
    TransJet d23 = cross(z2, z3), d21 = cross(z2, z1), d31 = cross(z3, z1);
    if (d23.is_zero() || d21.is_zero() || d31.is_zero())
        fail(ErrorKind::SectionsNotDistinct, "two of the sections coincide");
    // numerator (z q1 - p1) d23, denominator (z q3 - p3) d21
    Pencil p{Form1(-(z1.p * d23), z1.q * d23), Form1(-(z3.p * d21), z3.q * d21)};
    return induced_riccati(p);
}

}  // namespace ag
