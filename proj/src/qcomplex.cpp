#include "affinegerm/qcomplex.hpp"

#include "affinegerm/errors.hpp"

#include <cctype>

namespace ag {

QComplex QComplex::frac(long num, long den) {
    if (den == 0) fail(ErrorKind::DomainError, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return QComplex(r);
}

bool QComplex::is_integer() const {
    return sgn(im_) == 0 && re_.get_den() == 1;
}

long QComplex::to_long() const {
    if (!is_integer() || !re_.get_num().fits_slong_p())
        fail(ErrorKind::DomainError, "value is not a machine integer: " + to_string());
    return re_.get_num().get_si();
}

QComplex QComplex::inverse() const {
    Rational n = norm2();
    if (sgn(n) == 0) fail(ErrorKind::NotInvertible, "division by zero in Q(i)");
    return QComplex(re_ / n, -im_ / n);
}

QComplex QComplex::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    QComplex r(1), b = *this;
    while (n) {
        if (n & 1) r *= b;
        n >>= 1;
        if (n) b *= b;
    }
    return r;
}

QComplex& QComplex::operator+=(const QComplex& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
}

QComplex& QComplex::operator-=(const QComplex& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
}

QComplex& QComplex::add_product(const QComplex& a, const QComplex& b) {
    thread_local Rational t;
    if (sgn(a.im_) == 0 && sgn(b.im_) == 0) {
        mpq_mul(t.get_mpq_t(), a.re_.get_mpq_t(), b.re_.get_mpq_t());
        re_ += t;
        return *this;
    }
    return *this += a * b;
}

QComplex& QComplex::operator*=(const QComplex& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = r;
    im_ = i;
    return *this;
}

QComplex& QComplex::operator/=(const QComplex& o) {
    if (sgn(o.im_) == 0) {
        if (sgn(o.re_) == 0) fail(ErrorKind::NotInvertible, "division by zero in Q(i)");
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::string QComplex::to_string() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string ims;
    if (im_ == 1) ims = "i";
    else if (im_ == -1) ims = "-i";
    else ims = im_.get_str() + "*i";
    if (sgn(re_) == 0) return ims;
    if (sgn(im_) > 0) return re_.get_str() + "+" + ims;
    return re_.get_str() + ims;
}

namespace {

Rational parse_rational(const std::string& s) {
    if (s.empty()) fail(ErrorKind::ParseError, "empty number");
    size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool slash = false;
    if (start >= s.size()) fail(ErrorKind::ParseError, "bad number '" + s + "'");
    for (size_t k = start; k < s.size(); ++k) {
        if (s[k] == '/' && !slash && k > start && k + 1 < s.size()) {
            slash = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            fail(ErrorKind::ParseError, "bad number '" + s + "'");
    }
    Rational r(s[0] == '+' ? s.substr(1) : s);
    if (r.get_den() == 0) fail(ErrorKind::ParseError, "zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

Rational parse_imag(const std::string& s) {
    if (s == "i" || s == "+i") return 1;
    if (s == "-i") return -1;
    if (s.size() < 3 || s.substr(s.size() - 2) != "*i")
        fail(ErrorKind::ParseError, "bad imaginary part '" + s + "'");
    return parse_rational(s.substr(0, s.size() - 2));
}

}  // namespace

QComplex QComplex::parse(const std::string& s) {
    if (s.empty() || s.back() != 'i') return QComplex(parse_rational(s));
    size_t split = std::string::npos;
    for (size_t k = 1; k < s.size(); ++k)
        if (s[k] == '+' || s[k] == '-') split = k;
    if (split == std::string::npos) return QComplex(Rational(0), parse_imag(s));
    return QComplex(parse_rational(s.substr(0, split)), parse_imag(s.substr(split)));
}

long floor_re(const QComplex& v) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v.re().get_num_mpz_t(), v.re().get_den_mpz_t());
    if (!q.fits_slong_p()) fail(ErrorKind::DomainError, "exponent too large");
    return q.get_si();
}

namespace {

std::optional<mpz_class> int_root(const mpz_class& a, unsigned long n) {
    mpz_class r;
    if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), n) == 0) return std::nullopt;
    return r;
}

}  // namespace

std::optional<Rational> rational_root(const Rational& a, unsigned long n) {
    if (n == 0) return std::nullopt;
    if (sgn(a) < 0 && n % 2 == 0) return std::nullopt;
    auto num = int_root(a.get_num(), n);
    auto den = int_root(a.get_den(), n);
    if (!num || !den) return std::nullopt;
    Rational r(*num, *den);
    r.canonicalize();
    return r;
}

std::optional<Rational> rational_sqrt(const Rational& a) {
    if (sgn(a) < 0) return std::nullopt;
    return rational_root(a, 2);
}

std::optional<QComplex> exact_sqrt(const QComplex& a) {
    if (a.is_real()) {
        if (sgn(a.re()) >= 0) {
            auto r = rational_sqrt(a.re());
            if (!r) return std::nullopt;
            return QComplex(*r);
        }
        auto r = rational_sqrt(-a.re());
        if (!r) return std::nullopt;
        return QComplex(Rational(0), *r);
    }
    auto m = rational_sqrt(a.norm2());
    if (!m) return std::nullopt;
    auto p = rational_sqrt((a.re() + *m) / 2);
    if (!p || sgn(*p) == 0) return std::nullopt;
    Rational q = a.im() / (2 * *p);
    return QComplex(*p, q);
}

std::optional<QComplex> exact_power(const QComplex& base, const QComplex& e) {
    if (e.is_integer()) return base.pow(e.to_long());
    if (base == QComplex(1)) return QComplex(1);
    if (!e.is_real() || !base.is_real() || sgn(base.re()) <= 0) return std::nullopt;
    const Rational& r = e.re();
    if (!r.get_den().fits_ulong_p() || !r.get_num().fits_slong_p()) return std::nullopt;
    auto root = rational_root(base.re(), r.get_den().get_ui());
    if (!root) return std::nullopt;
    return QComplex(*root).pow(r.get_num().get_si());
}

}  // namespace ag
