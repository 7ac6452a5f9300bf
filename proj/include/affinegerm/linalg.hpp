#pragma once

#include "affinegerm/qcomplex.hpp"

#include <optional>
#include <vector>

namespace ag {

using Vec = std::vector<QComplex>;
using Mat = std::vector<Vec>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> row_reduce(Mat& a);
int rank(Mat a);
// Basis of {v : a v = 0}.
std::vector<Vec> nullspace(Mat a, int cols);
std::optional<Vec> solve(Mat a, const Vec& b);
QComplex determinant(Mat a);

}  // namespace ag
