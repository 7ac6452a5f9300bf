#include "affinegerm/web.hpp"

#include "affinegerm/errors.hpp"
#include "affinegerm/pencil.hpp"

#include <functional>
#include <map>

namespace ag {

namespace {

using Poly = std::vector<TransJet>;  // ascending powers of z

int order_of(const Poly& p) {
    int n = p.empty() ? default_order() : p[0].order();
    for (auto& c : p) n = std::min(n, c.order());
    return n;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, TransJet(std::min(order_of(a), order_of(b))));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Poly dz(const Poly& p) {
    Poly r;
    for (size_t k = 1; k < p.size(); ++k) r.push_back(p[k] * QComplex(static_cast<long>(k)));
    if (r.empty()) r.push_back(TransJet(order_of(p)));
    return r;
}

// Remainder modulo a monic polynomial m of degree d (length d).
Poly reduce(Poly p, const Poly& m) {
    size_t d = m.size() - 1;
    for (size_t k = p.size(); k-- > d;) {
        TransJet c = p[k];
        if (c.is_zero()) continue;
        for (size_t j = 0; j <= d; ++j) p[k - d + j] -= c * m[j];
    }
    p.resize(d, TransJet(order_of(m)));
    return p;
}

// Division-free determinant by cofactor expansion over column subsets.
TransJet determinant(const std::vector<Poly>& m) {
    size_t n = m.size();
    if (n == 0) return TransJet(1, 1 << 20);
    std::map<std::pair<size_t, unsigned>, TransJet> memo;
    std::function<TransJet(size_t, unsigned)> rec = [&](size_t row, unsigned used) -> TransJet {
        if (row == n) return TransJet(1, 1 << 20);
        auto key = std::make_pair(row, used);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        TransJet sum(order_of(m[row]));
        int seen = 0;
        for (size_t c = 0; c < n; ++c) {
            if (used & (1u << c)) continue;
            if (!m[row][c].is_zero()) {
                TransJet t = m[row][c] * rec(row + 1, used | (1u << c));
                sum += seen % 2 == 0 ? t : -t;
            }
            ++seen;
        }
        memo.emplace(key, sum);
        return sum;
    };
    return rec(0, 0);
}

// w^d P(t + 1/w)
Poly shift_chart(const Poly& p, const QComplex& t) {
    size_t d = p.size() - 1;
    int order = order_of(p);
    Poly r(d + 1, TransJet(order));
    for (size_t k = 0; k <= d; ++k) {
        Poly term{p[k]};
        for (size_t j = 0; j < k; ++j) term = poly_mul(term, {TransJet(1, order), TransJet(t, order)});
        for (size_t j = 0; j < term.size(); ++j) r[j + d - k] += term[j];
    }
    return r;
}

TransJet eval_at(const Poly& p, const QComplex& t) {
    TransJet r(order_of(p));
    for (size_t k = p.size(); k-- > 0;) r = r * TransJet(t, 1 << 20) + p[k];
    return r;
}

const QComplex kShifts[] = {0, 1, -1, 2, -2, 3, QComplex(0, 1)};

QComplex lowest_exponent(const TransJet& f) {
    QComplex best;
    bool first = true;
    for (auto& [k, b] : f.terms()) {
        QComplex e = k.nu + QComplex(b.min_y());
        if (first || e < best) best = e;
        first = false;
    }
    return best;
}

TransJet det3(const std::array<std::array<TransJet, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Cramer solve of a x = rhs.
std::array<TransJet, 3> cramer3(const std::array<std::array<TransJet, 3>, 3>& a, const std::array<TransJet, 3>& rhs,
                                const TransJet& det_inv) {
    std::array<TransJet, 3> out;
    for (int c = 0; c < 3; ++c) {
        auto m = a;
        for (int r = 0; r < 3; ++r) m[r][c] = rhs[r];
        out[c] = det3(m) * det_inv;
    }
    return out;
}

TransSection section_of(const Form1& w) { return {-w.a, w.b}; }

}  // namespace

std::string ImplicitWeb::to_string() const {
    std::string s;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + coeffs[k].to_string() + ")";
        if (k == 1) s += "*z";
        if (k > 1) s += "*z^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
}

ImplicitWeb to_implicit(const SplitWeb& w) {
    Poly p{TransJet(1, 1 << 20)};
    for (auto& f : w.foliations) p = poly_mul(p, {f.a, f.b});
    return {p};
}

Discriminant discriminant(const ImplicitWeb& w) {
    Poly p = w.coeffs;
    int d = w.degree();
    if (d < 1) fail(ErrorKind::DomainError, "web polynomial has degree < 1");
    bool all_zero = true;
    for (auto& c : p) all_zero = all_zero && c.is_zero();
    if (all_zero) fail(ErrorKind::NonReducedWeb, "web polynomial vanishes identically");
    // The chart change z = t + 1/w has determinant -1 and leaves the discriminant unchanged.
    if (!p[d].is_invertible()) {
        bool done = false;
        for (const QComplex& t : kShifts)
            if (eval_at(p, t).is_invertible()) {
                p = shift_chart(p, t);
                done = true;
                break;
            }
        if (!done) fail(ErrorKind::DomainError, "no chart with an invertible leading coefficient");
    }
    Poly q = dz(p);
    int n = 2 * d - 1, order = order_of(p);
    std::vector<Poly> m(n, Poly(n, TransJet(order)));
    for (int r = 0; r < d - 1; ++r)
        for (int k = 0; k <= d; ++k) m[r][r + d - k] = p[k];
    for (int r = 0; r < d; ++r)
        for (int k = 0; k <= d - 1; ++k) m[d - 1 + r][r + d - 1 - k] = q[k];
    TransJet res = determinant(m) * p[d].inverse();
    if ((d * (d - 1) / 2) % 2) res = -res;
    if (res.is_zero()) fail(ErrorKind::NonReducedWeb, "discriminant vanishes identically");
    return {res, lowest_exponent(res)};
}

TransJet cross_ratio(const SplitWeb& w, int i, int j, int k, int l) {
    auto diff = [&](int u, int v) {
        TransSection a = section_of(w.foliations.at(u)), b = section_of(w.foliations.at(v));
        TransJet r = a.p * b.q - b.p * a.q;
        if (r.is_zero()) fail(ErrorKind::CoincidentSlopes, "foliations " + std::to_string(u) + " and " +
                                                               std::to_string(v) + " coincide");
        return r;
    };
    TransJet num = diff(i, k) * diff(j, l), den = diff(j, k) * diff(i, l);
    return num * den.inverse();
}

bool constant_cross_ratio(const SplitWeb& w) {
    int d = static_cast<int>(w.degree());
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            for (int k = j + 1; k < d; ++k)
                for (int l = k + 1; l < d; ++l)
                    if (!ext_d(cross_ratio(w, i, j, k, l)).is_zero()) return false;
    return true;
}

std::optional<Riccati> fit_riccati(const SplitWeb& w) {
    if (w.degree() < 3) fail(ErrorKind::UnderdeterminedFit, "a Riccati needs at least three leaves");
    std::vector<TransSection> s;
    for (auto& f : w.foliations) s.push_back(section_of(f));
    Riccati r = riccati_from_three_sections(s[0], s[1], s[2]);
    for (size_t k = 3; k < s.size(); ++k)
        if (!section_defect(r, s[k]).is_zero()) return std::nullopt;
    return r;
}

std::optional<Riccati> fit_riccati(const ImplicitWeb& w) {
    int d = w.degree();
    if (d < 3) fail(ErrorKind::UnderdeterminedFit, "a Riccati needs at least three leaves");
    Poly p = w.coeffs;
    std::optional<QComplex> shift;
    if (!p[d].is_invertible()) {
        for (const QComplex& t : kShifts)
            if (eval_at(p, t).is_invertible()) {
                shift = t;
                break;
            }
        if (!shift) fail(ErrorKind::DomainError, "no chart with an invertible leading coefficient");
        p = shift_chart(p, *shift);
    }
    // z = y^m v balances the valuations of a_0 and a_d, so distinct roots become units.
    QComplex m;
    if (!p[0].is_zero()) m = (lowest_exponent(p[0]) - lowest_exponent(p[d])) * QComplex::frac(1, d);
    if (!m.is_zero())
        for (int k = 1; k <= d; ++k) p[k] = p[k] * TransJet::power_of_y(m * QComplex(k), p[k].order());
    int order = order_of(p);
    TransJet inv = p[d].inverse();
    for (auto& c : p) c = c * inv;
    Poly pz = dz(p);
    std::array<Poly, 3> rk;
    Poly zk{TransJet(1, order)};
    for (int k = 0; k < 3; ++k) {
        rk[k] = reduce(poly_mul(zk, pz), p);
        zk.insert(zk.begin(), TransJet(order));
    }
    // coefficients (gamma, beta, alpha) along dx and dy
    std::array<std::array<TransJet, 3>, 2> sol;
    for (int dir = 0; dir < 2; ++dir) {
        Poly rhs;
        for (int k = 0; k < d; ++k) rhs.push_back(dir == 0 ? p[k].dx() : p[k].dy());
        bool solved = false, all_zero = true;
        // first nonzero minor: its adjugate tests consistency without dividing
        std::optional<std::array<int, 3>> singular_rows;
        TransJet singular_det;
        std::array<TransJet, 3> singular_num;
        for (int i = 0; i < d && !solved; ++i)
            for (int j = i + 1; j < d && !solved; ++j)
                for (int k = j + 1; k < d && !solved; ++k) {
                    std::array<int, 3> rows{i, j, k};
                    std::array<std::array<TransJet, 3>, 3> a;
                    std::array<TransJet, 3> b;
                    for (int r = 0; r < 3; ++r) {
                        for (int c = 0; c < 3; ++c) a[r][c] = rk[c][rows[r]];
                        b[r] = rhs[rows[r]];
                    }
                    TransJet det = det3(a);
                    if (!det.is_zero()) all_zero = false;
                    if (!det.is_invertible()) {
                        if (!det.is_zero() && !singular_rows) {
                            singular_rows = rows;
                            singular_det = det;
                            singular_num = cramer3(a, b, TransJet(1, det.order()));
                        }
                        continue;
                    }
                    sol[dir] = cramer3(a, b, det.inverse());
                    solved = true;
                }
        if (!solved) {
            if (all_zero) fail(ErrorKind::UnderdeterminedFit, "tangency system is degenerate");
            for (int r = 0; r < d; ++r) {
                TransJet e = singular_det * rhs[r];
                for (int c = 0; c < 3; ++c) e -= singular_num[c] * rk[c][r];
                if (!e.is_zero()) return std::nullopt;
            }
            fail(ErrorKind::DomainError, "the fitted Riccati has poles off y = 0");
        }
        for (int r = 0; r < d; ++r) {
            TransJet e = rhs[r];
            for (int c = 0; c < 3; ++c) e -= sol[dir][c] * rk[c][r];
            if (!e.is_zero()) return std::nullopt;
        }
    }
    Riccati r{Form1(sol[0][2], sol[1][2]), Form1(sol[0][1], sol[1][1]), Form1(sol[0][0], sol[1][0])};
    if (!m.is_zero()) {
        int o = r.order();
        r = substitute_mobius(r, Mobius{TransJet::power_of_y(-m, o), TransJet(o), TransJet(o), TransJet(1, o)});
    }
    if (shift) {
        int o = r.order();
        r = substitute_mobius(r, Mobius{TransJet(o), TransJet(1, o), TransJet(1, o), TransJet(-*shift, o)});
    }
    return r;
}

Form2 blaschke_curvature(const SplitWeb& w) {
    if (w.degree() != 3) fail(ErrorKind::DomainError, "Blaschke curvature needs exactly three foliations");
    const Form1 &w1 = w.foliations[0], &w2 = w.foliations[1], &w3 = w.foliations[2];
    auto unit_wedge = [](const Form1& u, const Form1& v) {
        TransJet c = wedge(u, v).c;
        if (!c.is_laurent() || !c.to_laurent().is_holomorphic() || c.to_laurent().constant_term().is_zero())
            fail(ErrorKind::NotTransversal, "foliations are not transversal at the origin");
        return c;
    };
    TransJet c12 = unit_wedge(w1, w2);
    unit_wedge(w1, w3);
    unit_wedge(w2, w3);
    TransJet inv = c12.inverse();
    Form1 v1 = (-(wedge(w3, w2).c * inv)) * w1, v2 = (-(wedge(w1, w3).c * inv)) * w2;
    TransJet c1 = ext_d(v1).c, c2 = ext_d(v2).c;
    TransJet dinv = wedge(v1, v2).c.inverse();
    Form1 g((v1.a * c2 - v2.a * c1) * dinv, (v1.b * c2 - v2.b * c1) * dinv);
    return ext_d(g);
}

bool is_hexagonal(const SplitWeb& w) {
    auto r = fit_riccati(w);
    if (!r) fail(ErrorKind::NonConstantCrossRatio, "web is not contained in a pencil");
    return torsion(*r).dkappa.is_zero();
}

bool is_hexagonal(const ImplicitWeb& w) {
    auto r = fit_riccati(w);
    if (!r) fail(ErrorKind::NonConstantCrossRatio, "web is not contained in a pencil");
    return torsion(*r).dkappa.is_zero();
}

}  // namespace ag
