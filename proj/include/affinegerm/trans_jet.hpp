#pragma once

#include "affinegerm/laurent_jet.hpp"

#include <map>
#include <string>

namespace ag {

struct TransKey {
    QComplex nu;  // 0 <= re(nu) < 1
    int log_degree = 0;
    friend bool operator<(const TransKey& a, const TransKey& b) {
        if (a.nu != b.nu) return a.nu < b.nu;
        return a.log_degree < b.log_degree;
    }
    friend bool operator==(const TransKey& a, const TransKey& b) {
        return a.nu == b.nu && a.log_degree == b.log_degree;
    }
};

// Splits nu = frac + k with 0 <= re(frac) < 1 and integer k.
std::pair<QComplex, int> split_exponent(const QComplex& nu);

// Finite sum of LaurentJet * y^nu * (log y)^m.
class TransJet {
public:
    using Terms = std::map<TransKey, LaurentJet>;

    TransJet() : order_(default_order()) {}
    explicit TransJet(int order) : order_(order) {}
    TransJet(const LaurentJet& base);
    TransJet(const QComplex& c, int order) : TransJet(LaurentJet(c, order)) {}

    static TransJet term(const LaurentJet& base, const QComplex& nu, int log_degree);
    static TransJet power_of_y(const QComplex& nu, int order = default_order());
    static TransJet log_y(int order = default_order());

    int order() const { return order_; }
    const Terms& terms() const { return terms_; }
    LaurentJet base(const QComplex& nu, int log_degree) const;
    int max_log_degree() const;
    bool is_laurent() const;
    LaurentJet to_laurent() const;
    bool is_zero() const { return terms_.empty(); }
    bool is_zero_to(int n) const;
    TransJet truncated(int n) const;

    TransJet& operator+=(const TransJet& o);
    TransJet& operator-=(const TransJet& o);
    TransJet& operator*=(const QComplex& c);
    friend TransJet operator+(TransJet a, const TransJet& b) { return a += b; }
    friend TransJet operator-(TransJet a, const TransJet& b) { return a -= b; }
    friend TransJet operator*(const TransJet& a, const TransJet& b);
    friend TransJet operator*(TransJet a, const QComplex& c) { return a *= c; }
    friend TransJet operator*(const QComplex& c, TransJet a) { return a *= c; }
    TransJet operator-() const { return *this * QComplex(-1); }
    friend bool operator==(const TransJet& a, const TransJet& b) { return (a - b).is_zero(); }

    TransJet dx() const;
    TransJet dy() const;
    TransJet mul_y(int k) const;
    TransJet at_x0() const;
    // Single term without logarithm only.
    TransJet inverse() const;
    bool is_invertible() const;

    // Pullback of a function along (p1, p2) with p2 = y*u.
    TransJet compose(const LaurentJet& p1, const LaurentJet& p2) const;

    std::string to_string() const;

private:
    void add_term(const TransKey& k, const LaurentJet& base);
    void clamp();
    Terms terms_;
    int order_;
};

// Printable monomial x^i * y^q * log(y)^m.
std::string trans_monomial_string(int i, const QComplex& q, int m);

}  // namespace ag
