#include "affinegerm/trans_jet.hpp"

#include "affinegerm/errors.hpp"

#include <algorithm>

namespace ag {

std::pair<QComplex, int> split_exponent(const QComplex& nu) {
    long k = floor_re(nu);
    return {nu - QComplex(k), static_cast<int>(k)};
}

TransJet::TransJet(const LaurentJet& base) : order_(base.order()) {
    if (!base.is_zero()) terms_[TransKey{}] = base;
}

TransJet TransJet::term(const LaurentJet& base, const QComplex& nu, int log_degree) {
    if (log_degree < 0) fail(ErrorKind::DomainError, "negative log degree");
    auto [frac, k] = split_exponent(nu);
    LaurentJet b = base.mul_y(k);
    TransJet r(b.order());
    r.add_term(TransKey{frac, log_degree}, b);
    return r;
}

TransJet TransJet::power_of_y(const QComplex& nu, int order) {
    return term(LaurentJet(1, order), nu, 0);
}

TransJet TransJet::log_y(int order) { return term(LaurentJet(1, order), 0, 1); }

void TransJet::add_term(const TransKey& k, const LaurentJet& base) {
    if (base.order() < order_) {
        order_ = base.order();
        clamp();
    }
    LaurentJet b = base.truncated(order_);
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        if (!b.is_zero()) terms_.emplace(k, b);
        return;
    }
    it->second += b;
    if (it->second.is_zero()) terms_.erase(it);
}

void TransJet::clamp() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second = it->second.truncated(order_);
        if (it->second.is_zero()) it = terms_.erase(it);
        else ++it;
    }
}

LaurentJet TransJet::base(const QComplex& nu, int log_degree) const {
    auto it = terms_.find(TransKey{nu, log_degree});
    return it == terms_.end() ? LaurentJet(order_) : it->second;
}

int TransJet::max_log_degree() const {
    int m = 0;
    for (auto& [k, b] : terms_) m = std::max(m, k.log_degree);
    return m;
}

bool TransJet::is_laurent() const {
    for (auto& [k, b] : terms_)
        if (!(k == TransKey{})) return false;
    return true;
}

LaurentJet TransJet::to_laurent() const {
    if (!is_laurent()) fail(ErrorKind::DomainError, "expected a Laurent jet, got " + to_string());
    return base(0, 0);
}

bool TransJet::is_zero_to(int n) const {
    if (n > order_) fail(ErrorKind::OrderExceeded, "comparison beyond certified order");
    for (auto& [k, b] : terms_)
        if (!b.is_zero_to(n)) return false;
    return true;
}

TransJet TransJet::truncated(int n) const {
    TransJet r = *this;
    if (n < r.order_) {
        r.order_ = n;
        r.clamp();
    }
    return r;
}

TransJet& TransJet::operator+=(const TransJet& o) {
    if (o.order_ < order_) {
        order_ = o.order_;
        clamp();
    }
    for (auto& [k, b] : o.terms_) add_term(k, b);
    return *this;
}

TransJet& TransJet::operator-=(const TransJet& o) { return *this += -o; }

TransJet& TransJet::operator*=(const QComplex& c) {
    if (c.is_zero()) terms_.clear();
    for (auto& [k, b] : terms_) b *= c;
    return *this;
}

TransJet operator*(const TransJet& a, const TransJet& b) {
    if (a.is_laurent() && b.is_laurent()) return TransJet(a.base(0, 0) * b.base(0, 0));
    auto val = [](const TransJet& t) {
        int v = t.order_ + 1;
        for (auto& [k, x] : t.terms_) v = std::min(v, x.valuation());
        return v;
    };
    TransJet r(std::min(a.order_ + val(b), b.order_ + val(a)));
    for (auto& [ka, ba] : a.terms_)
        for (auto& [kb, bb] : b.terms_) {
            auto [frac, k] = split_exponent(ka.nu + kb.nu);
            r.add_term(TransKey{frac, ka.log_degree + kb.log_degree}, (ba * bb).mul_y(k));
        }
    return r;
}

TransJet TransJet::dx() const {
    TransJet r(order_ - 1);
    for (auto& [k, b] : terms_) r.add_term(k, b.dx());
    return r;
}

TransJet TransJet::dy() const {
    TransJet r(order_ - 1);
    for (auto& [k, b] : terms_) {
        r.add_term(k, b.dy() + b.mul_y(-1) * k.nu);
        if (k.log_degree > 0)
            r.add_term(TransKey{k.nu, k.log_degree - 1}, b.mul_y(-1) * QComplex(k.log_degree));
    }
    return r;
}

TransJet TransJet::mul_y(int k) const {
    TransJet r(order_ + k);
    for (auto& [key, b] : terms_) r.add_term(key, b.mul_y(k));
    return r;
}

TransJet TransJet::at_x0() const {
    TransJet r(order_);
    for (auto& [key, b] : terms_) r.add_term(key, b.at_x0());
    return r;
}

bool TransJet::is_invertible() const {
    return terms_.size() == 1 && terms_.begin()->first.log_degree == 0 &&
           terms_.begin()->second.is_invertible();
}

TransJet TransJet::inverse() const {
    if (terms_.size() != 1 || terms_.begin()->first.log_degree != 0)
        fail(ErrorKind::NotInvertible, "only y^nu times a unit can be inverted: " + to_string());
    auto& [k, b] = *terms_.begin();
    return term(b.inverse(), -k.nu, 0);
}

TransJet TransJet::compose(const LaurentJet& p1, const LaurentJet& p2) const {
    if (is_laurent()) return TransJet(base(0, 0).compose(p1, p2));
    if (p2.min_y() < 1 || p2.mul_y(-1).constant_term().is_zero())
        fail(ErrorKind::NotDivisorPreserving, "second component must be y times a unit");
    LaurentJet u = p2.mul_y(-1);
    QComplex u0 = u.constant_term();
    LaurentJet unit = u * u0.inverse();
    TransJet r(order_);
    for (auto& [k, b] : terms_) {
        TransJet t(b.compose(p1, p2));
        if (!k.nu.is_zero()) {
            auto c = exact_power(u0, k.nu);
            if (!c)
                fail(ErrorKind::DomainError,
                     "(" + u0.to_string() + ")^(" + k.nu.to_string() + ") is not exact");
            t = t * TransJet::term(unit_power(unit, k.nu) * *c, k.nu, 0);
        }
        if (k.log_degree > 0) {
            if (u0 != QComplex(1))
                fail(ErrorKind::DomainError, "log y pulls back exactly only when p2/y is 1 at the origin");
            TransJet lg = log_y(u.order()) + TransJet(log_series(u));
            for (int m = 0; m < k.log_degree; ++m) t = t * lg;
        }
        r += t;
    }
    return r;
}

std::string trans_monomial_string(int i, const QComplex& q, int m) {
    std::string s;
    if (q.is_integer()) {
        s = monomial_string(i, static_cast<int>(q.to_long()));
    } else {
        s = monomial_string(i, 0);
        if (!s.empty()) s += "*";
        s += "y^(" + q.to_string() + ")";
    }
    if (m > 0) {
        if (!s.empty()) s += "*";
        s += "log(y)";
        if (m > 1) s += "^" + std::to_string(m);
    }
    return s;
}

std::string TransJet::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [k, b] : terms_)
        for (auto& [key, c] : b.sorted_terms()) {
            s += coeff_times(c, trans_monomial_string(key.first, k.nu + QComplex(key.second), k.log_degree),
                             first);
            first = false;
        }
    return s;
}

}  // namespace ag
