#pragma once

#include "affinegerm/connection.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ag {

// dz + alpha z^2 + beta z + gamma, z = dy/dx.
struct Riccati {
    Form1 alpha, beta, gamma;

    static Riccati zero(int order = default_order());
    int order() const { return std::min({alpha.order(), beta.order(), gamma.order()}); }
    bool is_laurent() const { return alpha.is_laurent() && beta.is_laurent() && gamma.is_laurent(); }
    Riccati truncated(int n) const { return {alpha.truncated(n), beta.truncated(n), gamma.truncated(n)}; }
    friend bool operator==(const Riccati& p, const Riccati& q) {
        return p.alpha == q.alpha && p.beta == q.beta && p.gamma == q.gamma;
    }
};

struct TorsionData {
    Form1 kappa;
    Form2 dkappa;
};

// z -> (a z + b) / (c z + d)
struct Mobius {
    TransJet a, b, c, d;

    static Mobius identity(int order = default_order());
    static Mobius inversion(int order = default_order());
    TransJet det() const { return a * d - b * c; }
    // (this o inner)(z) = this(inner(z))
    Mobius after(const Mobius& inner) const;
};

struct FrobeniusDefects {
    Form2 d_alpha, d_beta, d_gamma;  // d alpha + alpha^beta, d beta + 2 alpha^gamma, d gamma + beta^gamma
};

FrobeniusDefects frobenius_defects(const Riccati& r);
bool frobenius_check(const Riccati& r);
Riccati from_connection(const ConnectionMatrix& theta);
TorsionData torsion(const Riccati& r);
bool is_torsion_free(const Riccati& r);
ConnectionMatrix lift_torsion_free(const Riccati& r);
ConnectionMatrix lift_trace_free(const Riccati& r);
bool is_logarithmic(const Riccati& r);

// New fiber coordinate w = g(z).
Riccati gauge_mobius(const Riccati& r, const Mobius& g);
// Substitutes z = (A w + B) / (C w + D).
Riccati substitute_mobius(const Riccati& r, const Mobius& m);
// Riccati in new base coordinates (X, Y) with (x, y) = phi(X, Y); the slope
// transforms by the Jacobian of phi.
Riccati change_coordinates(const Riccati& r, const CoordinateChange& phi);

// Projective section z = p / q (q = 0 is the section at infinity).
struct Section {
    LaurentJet p, q;
    static Section finite(const LaurentJet& s) { return {s, LaurentJet(1, s.order())}; }
    static Section infinity(int order = default_order()) { return {LaurentJet(1, order), LaurentJet(order)}; }
    bool is_infinity() const { return q.is_zero(); }
    std::string to_string() const;
};

// q dp - p dq + alpha p^2 + beta p q + gamma q^2
Form1 section_defect(const Riccati& r, const Section& s);
bool is_invariant(const Riccati& r, const Section& s);

struct SectionSet {
    bool all_invariant = false;
    std::vector<Section> sections;
};
SectionSet invariant_sections(const Riccati& r);

struct FiberModel {
    enum class Kind { Diagonal, Resonant } kind = Kind::Diagonal;
    QComplex lambda;  // Diagonal
    int n = 0;        // Resonant
    std::string to_string() const;
};
// Diagonal(l): dz = l z dy/y.  Resonant(n): dz = (n z + y^n) dy/y.
Riccati fiber_model_riccati(const FiberModel& m, int order = default_order());

struct FiberNormalForm {
    FiberModel model;
    Mobius gauge;
};
FiberNormalForm fiberwise_normal_form(const Riccati& r);
namespace detail {
// Same, for callers that have already checked r is logarithmic and integrable.
FiberNormalForm fiberwise_normal_form_checked(const Riccati& r);
}

struct MonodromyClass {
    enum class Kind { Identity, Multiplicative, Parabolic } kind = Kind::Identity;
    QComplex lambda;  // representative with 0 <= re < 1
    std::string to_string() const;
};

std::string riccati_to_string(const Riccati& r);

}  // namespace ag
