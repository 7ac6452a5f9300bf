#pragma once

#include "affinegerm/riccati.hpp"

#include <string>
#include <vector>

namespace ag {

// Members omega0 + t * omegaInf.  With the opposite sign convention the
// induced Riccati is the same after t -> -t.
struct Pencil {
    Form1 omega0, omegaInf;
    Form1 member(const QComplex& t) const { return omega0 + t * omegaInf; }
};

struct PencilReport {
    bool omega0_closed = false;
    bool omegaInf_closed = false;
    Form2 wedge;
    // Lowest y-exponent of omega0 ^ omegaInf, and the log power attached to it.
    QComplex divisor_order;
    int divisor_log_degree = 0;
    bool flat() const { return omega0_closed && omegaInf_closed; }
};

PencilReport validate_pencil(const Pencil& p);
// f0 g_inf - g0 f_inf
TransJet pencil_delta(const Pencil& p);
Riccati induced_riccati(const Pencil& p);

struct AffineModel {
    enum class Kind { I, II, III, IV } kind = Kind::I;
    QComplex nu;  // I
    int n = 0;    // II, III, IV
    int c = 0;    // IV

    static AffineModel I(const QComplex& nu) { return {Kind::I, nu, 0, 0}; }
    static AffineModel II(int n) { return {Kind::II, {}, n, 0}; }
    static AffineModel III(int n) { return {Kind::III, {}, n, 0}; }
    static AffineModel IV(int n, int c) { return {Kind::IV, {}, n, c}; }
    // IV(1, 0) is accepted by model_pencil but is not on the model list.
    bool excluded() const { return kind == Kind::IV && n == 1 && c == 0; }
    std::string to_string() const;
    friend bool operator==(const AffineModel& a, const AffineModel& b) {
        return a.kind == b.kind && a.nu == b.nu && a.n == b.n && a.c == b.c;
    }
};

// I:   dx + t y^nu dy
// II:  dx + t (y^-n + y^-1) dy, n > 1
// III: dx - y^n log(y) dy + t y^n dy, n >= 0
// IV:  y^-n dy + (c - x) y^-1 dy - log(y) dx + t dx, n >= 1, c in {0, 1}
Pencil model_pencil(const AffineModel& m, int order = default_order());

struct WebModel {
    enum class Family { WebI, WebII, WebIII } family = Family::WebI;
    int p = 0, q = 0;  // WebI, WebII
    int n = 0;         // WebIII
    std::string to_string() const;
    friend bool operator==(const WebModel& a, const WebModel& b) {
        return a.family == b.family && a.p == b.p && a.q == b.q && a.n == b.n;
    }
};

// Family of implicit webs P0(z) + t Pinf(z) = 0, z = dy/dx; coefficients are
// listed by ascending power of z.
struct WebPencil {
    std::vector<LaurentJet> p0, pinf;
    std::vector<LaurentJet> member(const QComplex& t) const;
};

// WebI:   dx^q + t y^p dy^q
// WebII:  y^p dx^q + t dy^q
// WebIII: y^(n+1) dx + t (1 + y^n) dy
WebPencil model_pencil(const WebModel& m, int order = default_order());

// Projective section z = p / q over Puiseux-log jets.
struct TransSection {
    TransJet p, q;
    static TransSection finite(const TransJet& z) { return {z, TransJet(1, z.order())}; }
    static TransSection infinity(int order = default_order()) { return {TransJet(1, order), TransJet(order)}; }
};

Form1 section_defect(const Riccati& r, const TransSection& s);

// Riccati with first integral ((z - z1)(z2 - z3)) / ((z - z3)(z2 - z1)).
Riccati riccati_from_three_sections(const TransSection& z1, const TransSection& z2,
                                    const TransSection& z3);

}  // namespace ag
