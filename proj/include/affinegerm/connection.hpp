#pragma once

#include "affinegerm/forms.hpp"

#include <array>

namespace ag {

template <class T>
using Mat2 = std::array<std::array<T, 2>, 2>;

// nabla = d + theta, theta_ij = Gamma^i_{1j} dx + Gamma^i_{2j} dy.
struct ConnectionMatrix {
    Mat2<Form1> theta;

    ConnectionMatrix() = default;
    ConnectionMatrix(Form1 t11, Form1 t12, Form1 t21, Form1 t22)
        : theta{{{std::move(t11), std::move(t12)}, {std::move(t21), std::move(t22)}}} {}
    static ConnectionMatrix zero(int order = default_order());

    const Form1& operator()(int i, int j) const { return theta[i][j]; }
    Form1& operator()(int i, int j) { return theta[i][j]; }
    int order() const;
};

Mat2<Form2> curvature(const ConnectionMatrix& theta);
bool is_flat(const ConnectionMatrix& theta);
bool torsion_condition(const ConnectionMatrix& theta);

// M with M(0) = I and dM + theta M = 0.
Mat2<LaurentJet> horizontal_frame(const ConnectionMatrix& theta);

}  // namespace ag
