#pragma once

#include "affinegerm/forms.hpp"

#include <random>

namespace agtest {

using namespace ag;

inline std::mt19937& rng() {
    static std::mt19937 g(20240611u);
    return g;
}

inline int rand_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline QComplex rand_rational(int span = 5) {
    int num = rand_int(-span, span);
    int den = rand_int(1, 3);
    return QComplex::frac(num, den);
}

inline QComplex rand_nonzero(int span = 5) {
    for (;;) {
        QComplex c = rand_rational(span);
        if (!c.is_zero()) return c;
    }
}

// Sparse jet with a handful of terms of total degree <= deg and y-pole <= pole.
inline LaurentJet rand_jet(int order, int terms = 4, int deg = 3, int pole = 0) {
    LaurentJet f(order);
    for (int t = 0; t < terms; ++t) {
        int j = rand_int(-pole, deg);
        int i = rand_int(0, std::max(0, deg - std::max(j, 0)));
        f.add_coeff(i, j, rand_rational());
    }
    return f;
}

inline LaurentJet rand_unit(int order, int terms = 3, int deg = 2) {
    LaurentJet u = rand_jet(order, terms, deg);
    u.set_coeff(0, 0, 1);
    return u;
}

inline TransJet rand_trans(int order) {
    static const QComplex nus[] = {0, QComplex::frac(1, 2), QComplex::frac(1, 3),
                                   QComplex(Rational(0), Rational(1, 2))};
    TransJet f(order);
    int classes = rand_int(1, 3);
    for (int c = 0; c < classes; ++c)
        f += TransJet::term(rand_jet(order, 3, 2, 1), nus[rand_int(0, 3)], rand_int(0, 1));
    return f;
}

// Divisor-preserving change (x, y) -> (a x + ..., y u) with u(0) = unit0.
inline CoordinateChange rand_change(int order, bool unit_at_one = true) {
    LaurentJet x = LaurentJet::x(order), y = LaurentJet::y(order);
    LaurentJet p1 = x * rand_nonzero(3) + y * rand_rational(2);
    for (int t = 0; t < 2; ++t) {
        int i = rand_int(0, 2);
        p1.add_coeff(i, 2 - i, rand_rational(2));
    }
    LaurentJet u = rand_jet(order, 2, 1);
    u.set_coeff(0, 0, unit_at_one ? QComplex(1) : rand_nonzero(3));
    return {p1, y * u};
}

}  // namespace agtest
