#pragma once

#include "affinegerm/qcomplex.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ag {

constexpr int kDefaultOrder = 16;

// Process-wide default truncation order (kDefaultOrder unless overridden).
int default_order();
void set_default_order(int n);

// Truncated series sum c_ij x^i y^j with i >= 0 and j bounded below.
// Every coefficient with i + j <= order() is exact; nothing above is stored.
class LaurentJet {
public:
    using Key = std::pair<int, int>;  // (power of x, power of y)
    using Terms = std::map<Key, QComplex>;

    LaurentJet() : order_(default_order()) {}
    explicit LaurentJet(int order) : order_(order) {}
    LaurentJet(const QComplex& c, int order);

    static LaurentJet constant(const QComplex& c, int order = default_order());
    static LaurentJet monomial(const QComplex& c, int i, int j, int order = default_order());
    static LaurentJet x(int order = default_order()) { return monomial(1, 1, 0, order); }
    static LaurentJet y(int order = default_order()) { return monomial(1, 0, 1, order); }

    int order() const { return order_; }
    const Terms& terms() const { return terms_; }
    QComplex coeff(int i, int j) const;
    void set_coeff(int i, int j, const QComplex& c);
    void add_coeff(int i, int j, const QComplex& c);

    // Drops certification down to n (never raises it).
    LaurentJet truncated(int n) const;
    // Declares the stored terms exact up to n; only valid for inputs known in closed form.
    LaurentJet with_exact_order(int n) const;

    // Min total degree over nonzero terms, order()+1 for the zero jet.
    int valuation() const;
    // Min power of y among nonzero terms; INT_MAX for the zero jet.
    int min_y() const;
    int max_pole() const;
    bool is_zero() const { return terms_.empty(); }
    bool is_holomorphic() const { return min_y() >= 0; }
    // Zero up to (and including) total degree n; throws OrderExceeded past order().
    bool is_zero_to(int n) const;
    bool equals_to(const LaurentJet& o, int n) const;
    QComplex constant_term() const { return coeff(0, 0); }

    LaurentJet& operator+=(const LaurentJet& o);
    LaurentJet& operator-=(const LaurentJet& o);
    LaurentJet& operator*=(const QComplex& c);
    friend LaurentJet operator+(LaurentJet a, const LaurentJet& b) { return a += b; }
    friend LaurentJet operator-(LaurentJet a, const LaurentJet& b) { return a -= b; }
    friend LaurentJet operator*(const LaurentJet& a, const LaurentJet& b);
    friend LaurentJet operator*(LaurentJet a, const QComplex& c) { return a *= c; }
    friend LaurentJet operator*(const QComplex& c, LaurentJet a) { return a *= c; }
    LaurentJet operator-() const;
    // Equality up to the common certified order.
    friend bool operator==(const LaurentJet& a, const LaurentJet& b);

    LaurentJet dx() const;
    LaurentJet dy() const;
    LaurentJet mul_y(int k) const;
    // k < 0 divides exactly by x^-k.
    LaurentJet mul_x(int k) const;
    LaurentJet pow(long n) const;

    // Inverse of y^k * u with u a holomorphic unit.
    LaurentJet inverse() const;
    bool is_invertible() const;
    // Factor y^k * u; requires the jet to be invertible.
    std::pair<int, LaurentJet> split_monomial() const;

    // Restriction to x = 0 (a series in y).
    LaurentJet at_x0() const;
    // Coefficient of y^j as a series in x.
    LaurentJet y_coeff(int j) const;
    // Coefficient of x^i as a series in y.
    LaurentJet x_coeff(int i) const;
    bool depends_on_x() const;
    bool depends_on_y() const;

    // Formal antiderivatives (no constant of integration).
    LaurentJet integrate_x() const;
    // Requires no y^-1 terms.
    LaurentJet integrate_y() const;

    // Composition f(p1, p2) with p1(0)=0 and p2 = y*unit when f has poles.
    LaurentJet compose(const LaurentJet& p1, const LaurentJet& p2) const;

    // Terms sorted by total degree, then by increasing power of y.
    std::vector<std::pair<Key, QComplex>> sorted_terms() const;
    // Canonical text in x, y (e.g. "1 + (3/2)*x*y^-1").
    std::string to_string() const;

private:
    void truncate_in_place();
    Terms terms_;
    int order_;
};

// Homogeneous pieces by total degree.
std::map<int, LaurentJet> homogeneous_parts(const LaurentJet& f);

// exp(f) for f holomorphic with f(0)=0.
LaurentJet exp_series(const LaurentJet& f);
// log(u) for u holomorphic with u(0)=1.
LaurentJet log_series(const LaurentJet& u);
// u^e for u holomorphic with u(0)=1.
LaurentJet unit_power(const LaurentJet& u, const QComplex& e);

std::string monomial_string(int i, int j);
std::string coeff_times(const QComplex& c, const std::string& mono, bool first);

}  // namespace ag
