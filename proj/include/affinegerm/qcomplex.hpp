#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace ag {

using Rational = mpq_class;

// Exact element of Q(i).
class QComplex {
public:
    QComplex() = default;
    QComplex(long v) : re_(v) {}
    QComplex(const Rational& re) : re_(re) {}
    QComplex(const Rational& re, const Rational& im) : re_(re), im_(im) {}
    static QComplex frac(long num, long den);

    static QComplex i() { return QComplex(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_rational() const { return is_real(); }
    bool is_integer() const;
    // Requires is_integer().
    long to_long() const;

    QComplex conj() const { return QComplex(re_, -im_); }
    Rational norm2() const { return re_ * re_ + im_ * im_; }
    QComplex inverse() const;
    QComplex pow(long n) const;

    QComplex& operator+=(const QComplex& o);
    QComplex& operator-=(const QComplex& o);
    QComplex& operator*=(const QComplex& o);
    QComplex& operator/=(const QComplex& o);
    // *this += a * b without temporaries on the real path
    QComplex& add_product(const QComplex& a, const QComplex& b);

    friend QComplex operator+(QComplex a, const QComplex& b) { return a += b; }
    friend QComplex operator-(QComplex a, const QComplex& b) { return a -= b; }
    friend QComplex operator*(QComplex a, const QComplex& b) { return a *= b; }
    friend QComplex operator/(QComplex a, const QComplex& b) { return a /= b; }
    QComplex operator-() const { return QComplex(-re_, -im_); }

    friend bool operator==(const QComplex& a, const QComplex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const QComplex& a, const QComplex& b) { return !(a == b); }
    // Lexicographic on (re, im).
    friend bool operator<(const QComplex& a, const QComplex& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    // "p/q", "p/q*i", "p/q+r/s*i".
    std::string to_string() const;
    static QComplex parse(const std::string& s);

private:
    Rational re_{0};
    Rational im_{0};
};

// Floor of the real part; requires a rational real part.
long floor_re(const QComplex& v);

std::optional<Rational> rational_sqrt(const Rational& a);
std::optional<QComplex> exact_sqrt(const QComplex& a);
// n-th root of a rational when it is rational; sign handled for odd n.
std::optional<Rational> rational_root(const Rational& a, unsigned long n);
// base^e for rational e when exactly representable in Q(i).
std::optional<QComplex> exact_power(const QComplex& base, const QComplex& e);

}  // namespace ag
