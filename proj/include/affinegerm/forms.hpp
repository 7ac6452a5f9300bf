#pragma once

#include "affinegerm/trans_jet.hpp"

#include <string>

namespace ag {

using Form0 = TransJet;

// a dx + b dy
struct Form1 {
    TransJet a, b;

    Form1() = default;
    Form1(TransJet a_, TransJet b_) : a(std::move(a_)), b(std::move(b_)) {}
    static Form1 dx(int order = default_order()) { return {TransJet(1, order), TransJet(order)}; }
    static Form1 dy(int order = default_order()) { return {TransJet(order), TransJet(1, order)}; }
    // r dy/y
    static Form1 log_dy(const QComplex& r, int order = default_order());

    int order() const { return std::min(a.order(), b.order()); }
    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool is_laurent() const { return a.is_laurent() && b.is_laurent(); }
    Form1 truncated(int n) const { return {a.truncated(n), b.truncated(n)}; }

    Form1& operator+=(const Form1& o);
    Form1& operator-=(const Form1& o);
    friend Form1 operator+(Form1 p, const Form1& q) { return p += q; }
    friend Form1 operator-(Form1 p, const Form1& q) { return p -= q; }
    Form1 operator-() const { return {-a, -b}; }
    friend Form1 operator*(const TransJet& f, const Form1& w) { return {f * w.a, f * w.b}; }
    friend Form1 operator*(const QComplex& c, const Form1& w) { return {w.a * c, w.b * c}; }
    friend bool operator==(const Form1& p, const Form1& q) { return p.a == q.a && p.b == q.b; }

    std::string to_string() const;
};

// c dx^dy
struct Form2 {
    TransJet c;

    Form2() = default;
    explicit Form2(TransJet c_) : c(std::move(c_)) {}
    int order() const { return c.order(); }
    bool is_zero() const { return c.is_zero(); }
    Form2& operator+=(const Form2& o) {
        c += o.c;
        return *this;
    }
    friend Form2 operator+(Form2 p, const Form2& q) { return p += q; }
    friend Form2 operator-(Form2 p, const Form2& q) { return Form2(p.c - q.c); }
    friend Form2 operator*(const TransJet& f, const Form2& w) { return Form2(f * w.c); }
    friend bool operator==(const Form2& p, const Form2& q) { return p.c == q.c; }
    std::string to_string() const;
};

struct PoleData {
    int order = 0;
    LaurentJet residue;
    bool logarithmic_form = true;
};

// A formal coordinate change (x, y) -> (p1(x, y), p2(x, y)).
struct CoordinateChange {
    LaurentJet p1, p2;
    static CoordinateChange identity(int order = default_order()) {
        return {LaurentJet::x(order), LaurentJet::y(order)};
    }
    bool divisor_preserving() const;
    // (this o inner)(x, y) = this(inner(x, y)).
    CoordinateChange after(const CoordinateChange& inner) const;
};

Form1 ext_d(const TransJet& f);
Form2 ext_d(const Form1& w);
Form2 wedge(const Form1& u, const Form1& v);
// Contraction with the coordinate fields.
inline const TransJet& eval_dx(const Form1& w) { return w.a; }
inline const TransJet& eval_dy(const Form1& w) { return w.b; }

TransJet pullback(const TransJet& f, const CoordinateChange& phi);
Form1 pullback(const Form1& w, const CoordinateChange& phi);
Form2 pullback(const Form2& w, const CoordinateChange& phi);

// Pole order of a function along y = 0 (ceiling for fractional exponents).
int pole_order(const TransJet& f);
PoleData pole_data(const Form1& w);
bool is_closed(const Form1& w);

// Writes a closed Laurent form as dF + r dy/y; requires ext_d(w) == 0.
struct Primitive {
    LaurentJet f;
    QComplex residue;
};
Primitive integrate_closed(const Form1& w);

}  // namespace ag
