#include "affinegerm/connection.hpp"

#include "affinegerm/errors.hpp"

#include <algorithm>

namespace ag {

ConnectionMatrix ConnectionMatrix::zero(int order) {
    Form1 z{TransJet(order), TransJet(order)};
    return ConnectionMatrix(z, z, z, z);
}

int ConnectionMatrix::order() const {
    int n = theta[0][0].order();
    for (auto& row : theta)
        for (auto& f : row) n = std::min(n, f.order());
    return n;
}

Mat2<Form2> curvature(const ConnectionMatrix& t) {
    Mat2<Form2> k;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            k[i][j] = ext_d(t(i, j)) + wedge(t(i, 0), t(0, j)) + wedge(t(i, 1), t(1, j));
    return k;
}

bool is_flat(const ConnectionMatrix& t) {
    auto k = curvature(t);
    for (auto& row : k)
        for (auto& f : row)
            if (!f.is_zero()) return false;
    return true;
}

bool torsion_condition(const ConnectionMatrix& t) {
    return t(0, 0).b == t(0, 1).a && t(1, 0).b == t(1, 1).a;
}

namespace {

LaurentJet degree_part(const LaurentJet& f, int d) {
    LaurentJet r(f.order());
    for (auto& [k, c] : f.terms())
        if (k.first + k.second == d) r.set_coeff(k.first, k.second, c);
    return r;
}

}  // namespace

Mat2<LaurentJet> horizontal_frame(const ConnectionMatrix& t) {
    int n = t.order();
    Mat2<LaurentJet> a, b;  // dx- and dy-coefficients of theta
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const Form1& f = t(i, j);
            if (!f.is_laurent() || !f.a.to_laurent().is_holomorphic() || !f.b.to_laurent().is_holomorphic())
                fail(ErrorKind::PolarInput, "horizontal frames need a holomorphic connection");
            a[i][j] = f.a.to_laurent();
            b[i][j] = f.b.to_laurent();
        }
    Mat2<LaurentJet> m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m[i][j] = LaurentJet(i == j ? 1 : 0, n + 1);
    LaurentJet x = LaurentJet::x(n + 1), y = LaurentJet::y(n + 1);
    for (int d = 0; d < n + 1; ++d) {
        Mat2<LaurentJet> next;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                LaurentJet ra = -(a[i][0] * m[0][j] + a[i][1] * m[1][j]);
                LaurentJet rb = -(b[i][0] * m[0][j] + b[i][1] * m[1][j]);
                ra = degree_part(ra, d);
                rb = degree_part(rb, d);
                if (d > 0 && !(rb.dx() - ra.dy()).is_zero())
                    fail(ErrorKind::NotFlat,
                         "horizontal frame obstructed at degree " + std::to_string(d));
                next[i][j] = (x * ra + y * rb) * QComplex(d + 1).inverse();
            }
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m[i][j] += next[i][j].with_exact_order(n + 1);
    }
    for (auto& row : m)
        for (auto& f : row) f = f.with_exact_order(n + 1);
    return m;
}

}  // namespace ag
