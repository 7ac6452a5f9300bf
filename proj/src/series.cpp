#include "affinegerm/series.hpp"

#include "affinegerm/errors.hpp"

namespace ag {

struct SeriesExpr::Node {
    Op op;
    LaurentJet value;
    int power = 0;
    std::shared_ptr<const Node> a, b;
};

SeriesExpr SeriesExpr::unknown() {
    return SeriesExpr(std::make_shared<const Node>(Node{Op::Unknown, LaurentJet(), 0, nullptr, nullptr}));
}

SeriesExpr SeriesExpr::constant(const LaurentJet& c) {
    return SeriesExpr(std::make_shared<const Node>(Node{Op::Const, c, 0, nullptr, nullptr}));
}

SeriesExpr operator+(const SeriesExpr& a, const SeriesExpr& b) {
    using N = SeriesExpr::Node;
    return SeriesExpr(std::make_shared<const N>(N{SeriesExpr::Op::Add, LaurentJet(), 0, a.node_, b.node_}));
}

SeriesExpr operator-(const SeriesExpr& a, const SeriesExpr& b) {
    using N = SeriesExpr::Node;
    return SeriesExpr(std::make_shared<const N>(N{SeriesExpr::Op::Sub, LaurentJet(), 0, a.node_, b.node_}));
}

SeriesExpr operator*(const SeriesExpr& a, const SeriesExpr& b) {
    using N = SeriesExpr::Node;
    return SeriesExpr(std::make_shared<const N>(N{SeriesExpr::Op::Mul, LaurentJet(), 0, a.node_, b.node_}));
}

SeriesExpr SeriesExpr::pow(int n) const {
    return SeriesExpr(std::make_shared<const Node>(Node{Op::Pow, LaurentJet(), n, node_, nullptr}));
}

SeriesExpr SeriesExpr::log() const {
    return SeriesExpr(std::make_shared<const Node>(Node{Op::Log, LaurentJet(), 0, node_, nullptr}));
}

SeriesExpr SeriesExpr::exp() const {
    return SeriesExpr(std::make_shared<const Node>(Node{Op::Exp, LaurentJet(), 0, node_, nullptr}));
}

LaurentJet SeriesExpr::eval(const LaurentJet& u) const {
    const Node& n = *node_;
    switch (n.op) {
        case Op::Const: return n.value.truncated(u.order());
        case Op::Unknown: return u;
        case Op::Add: return SeriesExpr(n.a).eval(u) + SeriesExpr(n.b).eval(u);
        case Op::Sub: return SeriesExpr(n.a).eval(u) - SeriesExpr(n.b).eval(u);
        case Op::Mul: return SeriesExpr(n.a).eval(u) * SeriesExpr(n.b).eval(u);
        case Op::Pow: return SeriesExpr(n.a).eval(u).pow(n.power);
        case Op::Log: return log_series(SeriesExpr(n.a).eval(u));
        case Op::Exp: {
            LaurentJet e = SeriesExpr(n.a).eval(u);
            if (!e.constant_term().is_zero())
                fail(ErrorKind::DomainError, "exp of a series with nonzero constant term");
            return exp_series(e);
        }
    }
    return u;
}

SeriesExpr SeriesExpr::derivative() const {
    const Node& n = *node_;
    SeriesExpr a(n.a), b(n.b);
    switch (n.op) {
        case Op::Const: return constant(QComplex(0));
        case Op::Unknown: return constant(QComplex(1));
        case Op::Add: return a.derivative() + b.derivative();
        case Op::Sub: return a.derivative() - b.derivative();
        case Op::Mul: return a.derivative() * b + a * b.derivative();
        case Op::Pow:
            if (n.power == 0) return constant(QComplex(0));
            return constant(QComplex(n.power)) * a.pow(n.power - 1) * a.derivative();
        case Op::Log: return a.derivative() * a.pow(-1);
        case Op::Exp: return *this * a.derivative();
    }
    return *this;
}

LaurentJet newton_implicit_solve(const SeriesExpr& f, const QComplex& u0, int order) {
    LaurentJet u(u0, order);
    SeriesExpr df = f.derivative();
    LaurentJet r0 = f.eval(LaurentJet(u0, 0));
    if (!r0.constant_term().is_zero())
        fail(ErrorKind::DomainError, "F(0, u0) != 0");
    LaurentJet d0 = df.eval(LaurentJet(u0, 0));
    if (d0.constant_term().is_zero()) fail(ErrorKind::SingularJacobian, "dF/du vanishes at (0, u0)");
    // Each step at least doubles the certified agreement; 2 + log2(order) steps suffice.
    for (int it = 0; it < 64; ++it) {
        LaurentJet r = f.eval(u);
        if (r.order() < order)
            fail(ErrorKind::OrderExceeded, "coefficients of F are not certified to the requested order");
        if (r.truncated(order).is_zero()) return u;
        u = (u - r * df.eval(u).inverse()).truncated(order);
    }
    fail(ErrorKind::DomainError, "Newton iteration did not converge");
}

}  // namespace ag
