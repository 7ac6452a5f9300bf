#pragma once

#include "affinegerm/connection.hpp"

#include <array>
#include <vector>

namespace ag {

// Row solution L = y^mu (w + log(y) v) of dL = L theta restricted to x = 0.
// Component 0 pairs with dx, component 1 with dy.
struct DualSolution {
    QComplex mu;
    std::array<LaurentJet, 2> w, v;
    bool has_log() const { return !v[0].is_zero() || !v[1].is_zero(); }
    // Coefficient of y^e in component c of the log-free part (e - mu integer).
    QComplex w_coeff(int c, const QComplex& e) const;
};

struct DualBasis {
    std::array<QComplex, 2> exponents;  // eigenvalues of the residue matrix, re-sorted
    bool integer_difference = false;
    std::vector<DualSolution> solutions;
    // Basis of the solutions without log terms (all of them unless logarithmic()).
    std::vector<DualSolution> log_free;
    bool logarithmic() const;
};

// Residue matrix A(0) with A(y) = y * theta(d/dy)(0, y).
Mat2<QComplex> residue_matrix(const ConnectionMatrix& theta);

// Frobenius solve along the divisor with `terms` coefficients past the exponent.
DualBasis solve_dual_at_divisor(const ConnectionMatrix& theta, int terms);

// For a log-free solution returns W with L = y^mu W on a neighbourhood of 0.
std::array<LaurentJet, 2> extend_off_axis(const ConnectionMatrix& theta, const DualSolution& s);

}  // namespace ag
