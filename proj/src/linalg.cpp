#include "affinegerm/linalg.hpp"

#include <utility>

namespace ag {

std::vector<int> row_reduce(Mat& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    int rows = static_cast<int>(a.size()), cols = static_cast<int>(a[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int k = r; k < rows; ++k)
            if (!a[k][c].is_zero()) {
                p = k;
                break;
            }
        if (p < 0) continue;
        std::swap(a[r], a[p]);
        QComplex inv = a[r][c].inverse();
        std::vector<int> nz;  // the systems here are sparse
        for (int j = c; j < cols; ++j)
            if (!a[r][j].is_zero()) {
                a[r][j] *= inv;
                nz.push_back(j);
            }
        for (int k = 0; k < rows; ++k) {
            if (k == r || a[k][c].is_zero()) continue;
            QComplex f = -a[k][c];
            for (int j : nz) a[k][j].add_product(f, a[r][j]);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(Mat a) { return static_cast<int>(row_reduce(a).size()); }

std::vector<Vec> nullspace(Mat a, int cols) {
    std::vector<int> piv = row_reduce(a);
    std::vector<bool> is_piv(cols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<Vec> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        Vec v(cols);
        v[f] = 1;
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][f];
        basis.push_back(v);
    }
    return basis;
}

std::optional<Vec> solve(Mat a, const Vec& b) {
    int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
    for (size_t r = 0; r < a.size(); ++r) a[r].push_back(b[r]);
    std::vector<int> piv = row_reduce(a);
    if (!piv.empty() && piv.back() == cols) return std::nullopt;
    Vec x(cols);
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = a[r][cols];
    return x;
}

QComplex determinant(Mat a) {
    int n = static_cast<int>(a.size());
    QComplex det(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int k = c; k < n; ++k)
            if (!a[k][c].is_zero()) {
                p = k;
                break;
            }
        if (p < 0) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        QComplex inv = a[c][c].inverse();
        for (int k = c + 1; k < n; ++k) {
            if (a[k][c].is_zero()) continue;
            QComplex f = a[k][c] * inv;
            for (int j = c; j < n; ++j) a[k][j] -= f * a[c][j];
        }
    }
    return det;
}

}  // namespace ag
