#pragma once

#include "affinegerm/riccati.hpp"

#include <optional>
#include <vector>

namespace ag {

// Foliations a_i dx + b_i dy = 0 with slopes e_i = -a_i / b_i.
struct SplitWeb {
    std::vector<Form1> foliations;
    size_t degree() const { return foliations.size(); }
};

// a_0 + a_1 z + ... + a_d z^d = 0, z = dy/dx.
struct ImplicitWeb {
    std::vector<TransJet> coeffs;
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    std::string to_string() const;
};

// Product of the factors b_i z + a_i.
ImplicitWeb to_implicit(const SplitWeb& w);

struct Discriminant {
    TransJet value;  // (-1)^(d(d-1)/2) Res_z(P, P') / a_d
    QComplex y_order;
};
Discriminant discriminant(const ImplicitWeb& w);

// (e_i - e_k)(e_j - e_l) / ((e_j - e_k)(e_i - e_l)); slope infinity when b = 0.
TransJet cross_ratio(const SplitWeb& w, int i, int j, int k, int l);
bool constant_cross_ratio(const SplitWeb& w);

std::optional<Riccati> fit_riccati(const ImplicitWeb& w);
std::optional<Riccati> fit_riccati(const SplitWeb& w);

Form2 blaschke_curvature(const SplitWeb& w);
bool is_hexagonal(const SplitWeb& w);
bool is_hexagonal(const ImplicitWeb& w);

}  // namespace ag
