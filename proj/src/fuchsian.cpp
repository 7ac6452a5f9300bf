#include "affinegerm/fuchsian.hpp"

#include "affinegerm/errors.hpp"
#include "affinegerm/linalg.hpp"

#include <algorithm>
#include <vector>

namespace ag {

QComplex DualSolution::w_coeff(int c, const QComplex& e) const {
    QComplex k = e - mu;
    if (!k.is_integer()) return 0;
    return w[c].coeff(0, static_cast<int>(k.to_long()));
}

bool DualBasis::logarithmic() const {
    for (auto& s : solutions)
        if (s.has_log()) return true;
    return false;
}

namespace {

std::vector<Mat2<QComplex>> axis_series(const ConnectionMatrix& theta, int terms) {
    std::vector<Mat2<QComplex>> a(terms + 1);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            const TransJet& b = theta(r, c).b;
            if (!b.is_laurent())
                fail(ErrorKind::NotLogarithmic, "connection has transcendental coefficients");
            LaurentJet s = b.to_laurent().at_x0().mul_y(1);
            if (s.min_y() < 0)
                fail(ErrorKind::NotLogarithmic, "connection has a pole of order > 1 along y=0");
            if (s.order() < terms)
                fail(ErrorKind::OrderExceeded, "connection not certified to the requested depth");
            for (int k = 0; k <= terms; ++k) a[k][r][c] = s.coeff(0, k);
        }
    return a;
}

std::vector<DualSolution> pair_solve(const std::vector<Mat2<QComplex>>& a, const QComplex& mu, int terms,
                                     bool log_free) {
    // Slots: w0 w1 v0 v1, or just w0 w1 when the log part is forced to vanish.
    int slots = log_free ? 2 : 4;
    int cols = slots * (terms + 1);
    Mat m;
    // Highest coefficients first so the free variables of the echelon form are the
    // leading Frobenius coefficients.
    auto col = [terms, slots](int k, int slot) { return slots * (terms - k) + slot; };
    for (int k = 0; k <= terms; ++k)
        for (int c = 0; c < 2; ++c) {
            Vec ev(cols), ew(cols);
            QComplex s = mu + QComplex(k);
            ew[col(k, c)] += s;
            if (!log_free) {
                ev[col(k, 2 + c)] += s;
                ew[col(k, 2 + c)] += 1;
            }
            for (int j = 0; j <= k; ++j)
                for (int r = 0; r < 2; ++r) {
                    const QComplex& ajrc = a[j][r][c];
                    if (ajrc.is_zero()) continue;
                    if (!log_free) ev[col(k - j, 2 + r)] -= ajrc;
                    ew[col(k - j, r)] -= ajrc;
                }
            if (!log_free) m.push_back(ev);
            m.push_back(ew);
        }
    std::vector<DualSolution> out;
    for (auto& v : nullspace(m, cols)) {
        DualSolution s;
        s.mu = mu;
        for (int c = 0; c < 2; ++c) {
            s.w[c] = LaurentJet(terms);
            s.v[c] = LaurentJet(terms);
            for (int k = 0; k <= terms; ++k) {
                s.w[c].set_coeff(0, k, v[col(k, c)]);
                if (!log_free) s.v[c].set_coeff(0, k, v[col(k, 2 + c)]);
            }
        }
        out.push_back(s);
    }
    return out;
}

}  // namespace

Mat2<QComplex> residue_matrix(const ConnectionMatrix& theta) { return axis_series(theta, 0)[0]; }

DualBasis solve_dual_at_divisor(const ConnectionMatrix& theta, int terms) {
    if (terms < 1) fail(ErrorKind::OrderExceeded, "connection known to order " + std::to_string(terms));
    auto a = axis_series(theta, terms);
    const auto& a0 = a[0];
    QComplex tr = a0[0][0] + a0[1][1];
    QComplex det = a0[0][0] * a0[1][1] - a0[0][1] * a0[1][0];
    auto sq = exact_sqrt(tr * tr - det * QComplex(4));
    if (!sq) fail(ErrorKind::NonGeneric, "local exponents are not in Q(i)");
    QComplex e1 = (tr + *sq) * QComplex::frac(1, 2), e2 = (tr - *sq) * QComplex::frac(1, 2);
    if (e1 < e2) std::swap(e1, e2);
    DualBasis basis;
    basis.exponents = {e1, e2};
    basis.integer_difference = (e1 - e2).is_integer();
    if (basis.integer_difference) {
        long p = (e1 - e2).to_long();
        if (p > terms) fail(ErrorKind::NonGeneric, "resonance beyond the search bound");
        basis.solutions = pair_solve(a, e2, terms, false);
        basis.log_free = pair_solve(a, e2, terms, true);
    } else {
        // no resonance, so no logs
        for (const QComplex& e : {e1, e2})
            for (auto& s : pair_solve(a, e, terms, true)) basis.solutions.push_back(s);
        basis.log_free = basis.solutions;
    }
    if (basis.solutions.size() != 2)
        fail(ErrorKind::NonGeneric, "local solve degenerated (" + std::to_string(basis.solutions.size()) +
                                        " solutions)");
    return basis;
}

std::array<LaurentJet, 2> extend_off_axis(const ConnectionMatrix& theta, const DualSolution& s) {
    if (s.has_log()) fail(ErrorKind::DomainError, "only log-free solutions extend to sections");
    Mat2<LaurentJet> tx;
    int n = std::min(theta.order(), s.w[0].order());
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            const TransJet& f = theta(r, c).a;
            if (!f.is_laurent() || !f.to_laurent().is_holomorphic())
                fail(ErrorKind::NotLogarithmic, "dx-part of the connection is singular along y=0");
            tx[r][c] = f.to_laurent();
        }
    std::array<LaurentJet, 2> w0 = {s.w[0].truncated(n), s.w[1].truncated(n)};
    int shift = std::max(w0[0].max_pole(), w0[1].max_pole());
    // d_x w = w tx, solved one power of x at a time on y-series slices.
    int top = n + shift + 1;
    auto slice = [&](const LaurentJet& f, int i, int ord) {
        LaurentJet s(ord);
        for (auto& [k, c] : f.terms())
            if (k.first == i) s.add_coeff(0, k.second, c);
        return s;
    };
    std::vector<std::array<LaurentJet, 2>> ws(top + 1);
    std::vector<Mat2<LaurentJet>> ts(top + 1);
    for (int i = 0; i <= top; ++i) {
        for (int c = 0; c < 2; ++c) ws[i][c] = slice(w0[c], i, n - i);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) ts[i][r][c] = slice(tx[r][c], i, n + shift);
    }
    for (int i = 0; i < top; ++i) {
        QComplex inv = QComplex(i + 1).inverse();
        for (int c = 0; c < 2; ++c) {
            LaurentJet acc(n - i - 1);
            for (int j = 0; j <= i; ++j)
                for (int r = 0; r < 2; ++r) acc += (ws[j][r] * ts[i - j][r][c]).truncated(n - i - 1);
            acc *= inv;
            ws[i + 1][c] = (ws[i + 1][c] + acc).truncated(n - i - 1);
        }
    }
    std::array<LaurentJet, 2> w = {LaurentJet(n), LaurentJet(n)};
    for (int i = 0; i <= top; ++i)
        for (int c = 0; c < 2; ++c)
            for (auto& [k, v] : ws[i][c].terms()) w[c].add_coeff(i, k.second, v);
    // one more Picard step fixes the certified order
    std::array<LaurentJet, 2> out;
    for (int c = 0; c < 2; ++c)
        out[c] = (w0[c] + (w[0] * tx[0][c] + w[1] * tx[1][c]).integrate_x()).truncated(n);
    return out;
}

}  // namespace ag
