#pragma once

#include "affinegerm/laurent_jet.hpp"

#include <memory>

namespace ag {

// Expression F(u) built from jet constants and one unknown series u.
class SeriesExpr {
public:
    enum class Op { Const, Unknown, Add, Sub, Mul, Pow, Log, Exp };

    static SeriesExpr unknown();
    static SeriesExpr constant(const LaurentJet& c);
    static SeriesExpr constant(const QComplex& c) { return constant(LaurentJet(c, 1 << 20)); }

    friend SeriesExpr operator+(const SeriesExpr& a, const SeriesExpr& b);
    friend SeriesExpr operator-(const SeriesExpr& a, const SeriesExpr& b);
    friend SeriesExpr operator*(const SeriesExpr& a, const SeriesExpr& b);
    SeriesExpr pow(int n) const;
    SeriesExpr log() const;
    SeriesExpr exp() const;

    LaurentJet eval(const LaurentJet& u) const;
    SeriesExpr derivative() const;

private:
    struct Node;
    explicit SeriesExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// Solves F(u) = 0 with u(0) = u0 by Newton iteration on series; the result
// satisfies F(u) == 0 through the returned order.
LaurentJet newton_implicit_solve(const SeriesExpr& f, const QComplex& u0, int order = default_order());

}  // namespace ag
