#include "affinegerm/laurent_jet.hpp"

#include "affinegerm/errors.hpp"

#include <algorithm>
#include <climits>
#include <vector>

namespace ag {

namespace {
int g_default_order = kDefaultOrder;
}

int default_order() { return g_default_order; }
void set_default_order(int n) {
    if (n < 1) fail(ErrorKind::DomainError, "order must be positive");
    g_default_order = n;
}

LaurentJet::LaurentJet(const QComplex& c, int order) : order_(order) {
    if (!c.is_zero() && order >= 0) terms_[{0, 0}] = c;
}

LaurentJet LaurentJet::constant(const QComplex& c, int order) { return LaurentJet(c, order); }

LaurentJet LaurentJet::monomial(const QComplex& c, int i, int j, int order) {
    LaurentJet r(order);
    r.set_coeff(i, j, c);
    return r;
}

QComplex LaurentJet::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? QComplex() : it->second;
}

void LaurentJet::set_coeff(int i, int j, const QComplex& c) {
    if (i < 0) fail(ErrorKind::DomainError, "negative power of x");
    if (i + j > order_) return;
    if (c.is_zero()) terms_.erase({i, j});
    else terms_[{i, j}] = c;
}

void LaurentJet::add_coeff(int i, int j, const QComplex& c) {
    if (c.is_zero() || i + j > order_) return;
    auto [it, fresh] = terms_.try_emplace({i, j}, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void LaurentJet::truncate_in_place() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.first + it->first.second > order_ || it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

LaurentJet LaurentJet::truncated(int n) const {
    LaurentJet r = *this;
    r.order_ = std::min(order_, n);
    r.truncate_in_place();
    return r;
}

LaurentJet LaurentJet::with_exact_order(int n) const {
    LaurentJet r = *this;
    r.order_ = n;
    r.truncate_in_place();
    return r;
}

int LaurentJet::valuation() const {
    int v = order_ + 1;
    for (auto& [k, c] : terms_) v = std::min(v, k.first + k.second);
    return v;
}

int LaurentJet::min_y() const {
    int m = INT_MAX;
    for (auto& [k, c] : terms_) m = std::min(m, k.second);
    return m;
}

int LaurentJet::max_pole() const {
    int m = min_y();
    return m < 0 ? -m : 0;
}

bool LaurentJet::is_zero_to(int n) const {
    if (n > order_)
        fail(ErrorKind::OrderExceeded, "comparison at order " + std::to_string(n) +
                                           " beyond certified order " + std::to_string(order_));
    for (auto& [k, c] : terms_)
        if (k.first + k.second <= n) return false;
    return true;
}

bool LaurentJet::equals_to(const LaurentJet& o, int n) const { return (*this - o).is_zero_to(n); }

LaurentJet& LaurentJet::operator+=(const LaurentJet& o) {
    order_ = std::min(order_, o.order_);
    truncate_in_place();
    for (auto& [k, c] : o.terms_) add_coeff(k.first, k.second, c);
    return *this;
}

LaurentJet& LaurentJet::operator-=(const LaurentJet& o) {
    order_ = std::min(order_, o.order_);
    truncate_in_place();
    for (auto& [k, c] : o.terms_) add_coeff(k.first, k.second, -c);
    return *this;
}

LaurentJet& LaurentJet::operator*=(const QComplex& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

LaurentJet LaurentJet::operator-() const {
    LaurentJet r = *this;
    for (auto& [k, v] : r.terms_) v = -v;
    return r;
}

LaurentJet operator*(const LaurentJet& a, const LaurentJet& b) {
    int n = std::min(a.order_ + b.valuation(), b.order_ + a.valuation());
    LaurentJet r(n);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    // sparse inputs go straight into the map; otherwise accumulate on a dense
    // (x, y) grid and insert in key order
    int y0 = a.min_y() + b.min_y();
    int nx = n - y0 + 1;
    if (nx <= 0) return r;
    int ny = nx;
    if (a.terms_.size() * b.terms_.size() < static_cast<size_t>(nx) * ny) {
        for (auto& [ka, ca] : a.terms_) {
            int da = ka.first + ka.second;
            for (auto& [kb, cb] : b.terms_) {
                if (da + kb.first + kb.second > n) continue;
                r.terms_[{ka.first + kb.first, ka.second + kb.second}].add_product(ca, cb);
            }
        }
        std::erase_if(r.terms_, [](const auto& t) { return t.second.is_zero(); });
        return r;
    }
    std::vector<QComplex> acc(static_cast<size_t>(nx) * ny);
    std::vector<char> used(acc.size(), 0);
    for (auto& [ka, ca] : a.terms_) {
        int da = ka.first + ka.second;
        for (auto& [kb, cb] : b.terms_) {
            if (da + kb.first + kb.second > n) continue;
            size_t k = static_cast<size_t>(ka.first + kb.first) * ny + (ka.second + kb.second - y0);
            acc[k].add_product(ca, cb);
            used[k] = 1;
        }
    }
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
            size_t k = static_cast<size_t>(i) * ny + j;
            if (used[k] && !acc[k].is_zero()) 
                r.terms_.emplace_hint(r.terms_.end(), LaurentJet::Key{i, j + y0}, std::move(acc[k]));
        }
    return r;
}

bool operator==(const LaurentJet& a, const LaurentJet& b) { return (a - b).is_zero(); }

LaurentJet LaurentJet::dx() const {
    LaurentJet r(order_ - 1);
    for (auto& [k, c] : terms_)
        if (k.first > 0) r.add_coeff(k.first - 1, k.second, c * QComplex(k.first));
    return r;
}

LaurentJet LaurentJet::dy() const {
    LaurentJet r(order_ - 1);
    for (auto& [k, c] : terms_)
        if (k.second != 0) r.add_coeff(k.first, k.second - 1, c * QComplex(k.second));
    return r;
}

LaurentJet LaurentJet::mul_y(int k) const {
    LaurentJet r(order_ + k);
    for (auto& [key, c] : terms_) r.terms_[{key.first, key.second + k}] = c;
    return r;
}

LaurentJet LaurentJet::mul_x(int k) const {
    LaurentJet r(order_ + k);
    if (k < 0)
        for (auto& [key, c] : terms_)
            if (key.first + k < 0) fail(ErrorKind::DomainError, "negative power of x");
    for (auto& [key, c] : terms_) r.terms_[{key.first + k, key.second}] = c;
    return r;
}

LaurentJet LaurentJet::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    if (n == 0) return LaurentJet(1, order_ - std::min(0, valuation()));
    LaurentJet r = *this, b = *this;
    --n;
    while (n) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

bool LaurentJet::is_invertible() const {
    if (terms_.empty()) return false;
    int k = min_y();
    auto it = terms_.find({0, k});
    return it != terms_.end();
}

std::pair<int, LaurentJet> LaurentJet::split_monomial() const {
    if (!is_invertible())
        fail(ErrorKind::NotInvertible, "jet is not a monomial in y times a unit: " + to_string());
    int k = min_y();
    return {k, mul_y(-k)};
}

LaurentJet LaurentJet::inverse() const {
    auto [k, u] = split_monomial();
    int n = u.order_;
    std::vector<std::vector<std::pair<Key, QComplex>>> ud(std::max(n + 1, 1));
    for (auto& [key, c] : u.terms_) ud[key.first + key.second].push_back({key, c});
    QComplex inv0 = u.coeff(0, 0).inverse();
    LaurentJet v(n);
    std::vector<std::map<Key, QComplex>> vd(std::max(n + 1, 1));
    vd[0][{0, 0}] = inv0;
    for (int d = 1; d <= n; ++d) {
        std::map<Key, QComplex> acc;
        for (int e = 1; e <= d; ++e)
            for (auto& [ku, cu] : ud[e])
                for (auto& [kv, cv] : vd[d - e]) acc[{ku.first + kv.first, ku.second + kv.second}] += cu * cv;
        for (auto& [key, c] : acc)
            if (!c.is_zero()) vd[d][key] = -(c * inv0);
    }
    for (int d = 0; d <= n; ++d)
        for (auto& [key, c] : vd[d]) v.terms_[key] = c;
    return v.mul_y(-k);
}

LaurentJet LaurentJet::at_x0() const {
    LaurentJet r(order_);
    for (auto& [k, c] : terms_)
        if (k.first == 0) r.terms_[k] = c;
    return r;
}

LaurentJet LaurentJet::y_coeff(int j) const {
    LaurentJet r(order_ - j);
    for (auto& [k, c] : terms_)
        if (k.second == j) r.terms_[{k.first, 0}] = c;
    return r;
}

LaurentJet LaurentJet::x_coeff(int i) const {
    LaurentJet r(order_ - i);
    for (auto& [k, c] : terms_)
        if (k.first == i) r.terms_[{0, k.second}] = c;
    return r;
}

bool LaurentJet::depends_on_x() const {
    for (auto& [k, c] : terms_)
        if (k.first > 0) return true;
    return false;
}

bool LaurentJet::depends_on_y() const {
    for (auto& [k, c] : terms_)
        if (k.second != 0) return true;
    return false;
}

LaurentJet LaurentJet::integrate_x() const {
    LaurentJet r(order_ + 1);
    for (auto& [k, c] : terms_) r.terms_[{k.first + 1, k.second}] = c / QComplex(k.first + 1);
    return r;
}

LaurentJet LaurentJet::integrate_y() const {
    LaurentJet r(order_ + 1);
    for (auto& [k, c] : terms_) {
        if (k.second == -1)
            fail(ErrorKind::ResidueUndefined, "y^-1 term has no Laurent antiderivative");
        r.terms_[{k.first, k.second + 1}] = c / QComplex(k.second + 1);
    }
    return r;
}

namespace {

LaurentJet compose_holomorphic(const LaurentJet& f, const LaurentJet& p1, const LaurentJet& p2) {
    std::map<int, std::map<int, QComplex>> by_y;
    for (auto& [k, c] : f.terms()) by_y[k.second][k.first] = c;
    LaurentJet acc(f.order());
    int top = by_y.empty() ? 0 : by_y.rbegin()->first;
    for (int j = top; j >= 0; --j) {
        if (j != top) acc = acc * p2;
        auto it = by_y.find(j);
        if (it == by_y.end()) continue;
        LaurentJet a(f.order());
        int itop = it->second.rbegin()->first;
        for (int i = itop; i >= 0; --i) {
            if (i != itop) a = a * p1;
            auto c = it->second.find(i);
            if (c != it->second.end()) a += LaurentJet(c->second, f.order());
        }
        acc += a;
    }
    return acc;
}

}  // namespace

LaurentJet LaurentJet::compose(const LaurentJet& p1, const LaurentJet& p2) const {
    if (!p1.coeff(0, 0).is_zero() || !p2.coeff(0, 0).is_zero() || !p1.is_holomorphic() ||
        !p2.is_holomorphic())
        fail(ErrorKind::DomainError, "coordinate change must fix the origin");
    int pole = max_pole();
    if (pole == 0) return compose_holomorphic(*this, p1, p2);
    if (p2.min_y() < 1 || p2.is_zero())
        fail(ErrorKind::NotDivisorPreserving, "second component must be y times a unit");
    LaurentJet u = p2.mul_y(-1);
    if (u.coeff(0, 0).is_zero())
        fail(ErrorKind::NotDivisorPreserving, "second component must be y times a unit");
    LaurentJet h = compose_holomorphic(mul_y(pole), p1, p2);
    return (h * u.inverse().pow(pole)).mul_y(-pole);
}

std::vector<std::pair<LaurentJet::Key, QComplex>> LaurentJet::sorted_terms() const {
    std::vector<std::pair<Key, QComplex>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](auto& a, auto& b) {
        int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da < db;
        return a.first.second < b.first.second;
    });
    return v;
}

std::string monomial_string(int i, int j) {
    std::string s;
    if (i == 1) s = "x";
    else if (i > 1) s = "x^" + std::to_string(i);
    if (j != 0) {
        if (!s.empty()) s += "*";
        s += "y";
        if (j != 1) s += "^" + std::to_string(j);
    }
    return s;
}

namespace {

std::string factor_string(const QComplex& c) {
    auto rat = [](const Rational& r) {
        return r.get_den() == 1 ? r.get_str() : "(" + r.get_str() + ")";
    };
    if (c.is_real()) return rat(c.re());
    if (sgn(c.re()) == 0) return c.im() == 1 ? "i" : rat(c.im()) + "*i";
    return "(" + c.to_string() + ")";
}

}  // namespace

std::string coeff_times(const QComplex& c, const std::string& mono, bool first) {
    bool neg = sgn(c.re()) < 0 || (sgn(c.re()) == 0 && sgn(c.im()) < 0);
    QComplex a = neg ? -c : c;
    std::string f = factor_string(a);
    std::string body;
    if (mono.empty()) body = a.is_real() ? a.re().get_str() : f;
    else if (a == QComplex(1)) body = mono;
    else body = f + "*" + mono;
    if (first) return neg ? "-" + body : body;
    return (neg ? " - " : " + ") + body;
}

std::string LaurentJet::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [k, c] : sorted_terms()) {
        s += coeff_times(c, monomial_string(k.first, k.second), first);
        first = false;
    }
    return s;
}

std::map<int, LaurentJet> homogeneous_parts(const LaurentJet& f) {
    std::map<int, LaurentJet> parts;
    for (auto& [k, c] : f.terms()) {
        auto [it, fresh] = parts.try_emplace(k.first + k.second, LaurentJet(f.order()));
        it->second.set_coeff(k.first, k.second, c);
    }
    return parts;
}

LaurentJet exp_series(const LaurentJet& f) {
    if (!f.is_holomorphic() || !f.constant_term().is_zero())
        fail(ErrorKind::DomainError, "exp needs a holomorphic jet vanishing at the origin");
    int n = f.order();
    auto fd = homogeneous_parts(f);
    std::vector<LaurentJet> e(std::max(n + 1, 1), LaurentJet(n));
    e[0] = LaurentJet(1, n);
    for (int d = 1; d <= n; ++d) {
        LaurentJet acc(n);
        for (auto& [k, part] : fd)
            if (k <= d) acc += (part * e[d - k]) * QComplex(k);
        e[d] = acc * QComplex(d).inverse();
    }
    LaurentJet r(n);
    for (auto& p : e) r += p;
    return r;
}

LaurentJet log_series(const LaurentJet& u) {
    if (!u.is_holomorphic() || u.constant_term() != QComplex(1))
        fail(ErrorKind::DomainError, "log needs a holomorphic unit with value 1 at the origin");
    int n = u.order();
    auto ud = homogeneous_parts(u);
    std::vector<LaurentJet> l(std::max(n + 1, 1), LaurentJet(n));
    for (int d = 1; d <= n; ++d) {
        LaurentJet acc(n);
        if (ud.count(d)) acc += ud.at(d) * QComplex(d);
        for (int e = 1; e < d; ++e) {
            auto it = ud.find(d - e);
            if (it != ud.end()) acc -= (l[e] * it->second) * QComplex(e);
        }
        l[d] = acc * QComplex(d).inverse();
    }
    LaurentJet r(n);
    for (auto& p : l) r += p;
    return r;
}

LaurentJet unit_power(const LaurentJet& u, const QComplex& e) {
    if (e.is_integer()) return u.pow(e.to_long());
    return exp_series(log_series(u) * e);
}

}  // namespace ag
