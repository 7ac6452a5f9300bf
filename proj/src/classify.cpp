#include "affinegerm/classify.hpp"

#include "affinegerm/errors.hpp"
#include "affinegerm/fuchsian.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

namespace ag {

namespace {

MonodromyClass monodromy_from(const FiberModel& f) {
    MonodromyClass m;
    if (f.kind == FiberModel::Kind::Resonant) {
        m.kind = MonodromyClass::Kind::Parabolic;
    } else if (f.lambda.is_integer()) {
        m.kind = MonodromyClass::Kind::Identity;
    } else {
        m.kind = MonodromyClass::Kind::Multiplicative;
        m.lambda = split_exponent(f.lambda).first;
    }
    return m;
}

bool same_fiber(const FiberModel& a, const FiberModel& b) {
    if (a.kind != b.kind) return false;
    return a.kind == FiberModel::Kind::Diagonal ? a.lambda == b.lambda : a.n == b.n;
}

bool consistent(const AffineModel& m, const MonodromyClass& mc) {
    using K = MonodromyClass::Kind;
    switch (m.kind) {
        case AffineModel::Kind::I: return mc.kind == (m.nu.is_integer() ? K::Identity : K::Multiplicative);
        case AffineModel::Kind::II: return mc.kind == K::Identity;
        default: return mc.kind == K::Parabolic;
    }
}

QComplex constant_residue(const Form1& w, const char* name) {
    LaurentJet r = pole_data(w).residue;
    if (r.depends_on_x()) fail(ErrorKind::NonGeneric, std::string("residue of ") + name + " depends on x");
    return r.constant_term();
}

// Lower-exponent solution: the logarithmic one if any, else one with a nonzero leading term.
const DualSolution& lower_solution(const DualBasis& b) {
    for (auto& s : b.solutions)
        if (b.logarithmic() ? s.has_log() : !(s.w[0].coeff(0, 0).is_zero() && s.w[1].coeff(0, 0).is_zero()))
            return s;
    fail(ErrorKind::NonGeneric, "no solution with the lower local exponent");
}

// The models recur constantly, so their fiber normal forms are memoized.
FiberNormalForm reference_fiber(const AffineModel& m, const Riccati& reference) {
    static std::mutex lock;
    static std::map<std::pair<std::string, int>, FiberNormalForm> cache;
    std::pair<std::string, int> key{m.to_string(), reference.order()};
    {
        std::lock_guard<std::mutex> g(lock);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    FiberNormalForm f = fiberwise_normal_form(reference);
    std::lock_guard<std::mutex> g(lock);
    return cache.emplace(key, f).first->second;
}

}  // namespace

std::string NormalFormModel::to_string() const { return model.to_string() + " " + monodromy.to_string(); }

MonodromyClass monodromy_class(const FiberModel& f) { return monodromy_from(f); }
MonodromyClass monodromy_class(const Riccati& r) { return monodromy_from(fiberwise_normal_form(r).model); }

NormalFormModel classify_affine(const Riccati& r) {
    if (!r.is_laurent() || !is_logarithmic(r))
        fail(ErrorKind::NotLogarithmic, "Riccati form is not logarithmic along y=0");
    if (!frobenius_check(r)) fail(ErrorKind::NotIntegrable, "Riccati form fails the Frobenius condition");
    if (!is_torsion_free(r)) fail(ErrorKind::NotTorsionFree, "d kappa does not vanish");

    NormalFormModel out;
    ClassificationCertificate& cert = out.certificate;
    cert.nu = constant_residue(r.beta, "beta");
    if (!constant_residue(r.gamma, "gamma").is_zero())
        fail(ErrorKind::NonGeneric, "the divisor direction z=0 is not fixed by the residue");

    const QComplex& nu = cert.nu;
    AffineModel& m = out.model;
    if (!nu.is_integer()) {
        m = AffineModel::I(nu);
    } else {
        long k = nu.to_long();
        ConnectionMatrix theta = lift_torsion_free(r);
        DualBasis b = solve_dual_at_divisor(theta, r.order());
        cert.logarithmic = b.logarithmic();
        const DualSolution& s = lower_solution(b);
        if (k < 0) cert.residue = s.w[1].coeff(0, static_cast<int>(-k - 1));
        int n = static_cast<int>(k < 0 ? -k : k);
        if (cert.logarithmic) {
            if (k >= 0) {
                m = AffineModel::III(n);
            } else if (n == 1) {
                // (1 + c - x) dy/y: every nonzero residue is conjugate to c = 1
                if (cert.residue.is_zero()) fail(ErrorKind::NonGeneric, "residue vanishes at the origin for n = 1");
                m = AffineModel::IV(1, 1);
            } else {
                m = AffineModel::IV(n, cert.residue.is_zero() ? 0 : 1);
            }
        } else if (k == 0) {
            fail(ErrorKind::NonGeneric, "no singular affine structure along y=0 (exponents 0, 0 without logs)");
        } else if (k < -1 && !cert.residue.is_zero()) {
            m = AffineModel::II(n);
        } else {
            m = AffineModel::I(nu);
        }
    }

    cert.reference = induced_riccati(model_pencil(m, r.order()));
    cert.input_fiber = detail::fiberwise_normal_form_checked(r);
    cert.reference_fiber = reference_fiber(m, cert.reference);
    if (!same_fiber(cert.input_fiber.model, cert.reference_fiber.model))
        fail(ErrorKind::DomainError, "certificate mismatch: input " + cert.input_fiber.model.to_string() +
                                         ", model " + cert.reference_fiber.model.to_string());
    out.monodromy = monodromy_from(cert.input_fiber.model);
    if (!consistent(m, out.monodromy))
        fail(ErrorKind::DomainError, "monodromy " + out.monodromy.to_string() + " contradicts " + m.to_string());
    return out;
}

}  // namespace ag

namespace ag {

namespace {

using Poly = std::vector<QComplex>;  // ascending

QComplex eval(const Poly& p, const QComplex& u) {
    QComplex r;
    for (size_t k = p.size(); k-- > 0;) r = r * u + p[k];
    return r;
}

// Divides by (u - root).
Poly deflate(const Poly& p, const QComplex& root) {
    Poly q(p.size() - 1);
    QComplex carry;
    for (size_t k = p.size(); k-- > 1;) {
        carry = carry * root + p[k];
        q[k - 1] = carry;
    }
    return q;
}

std::vector<long> divisors(const mpz_class& n) {
    std::vector<long> out;
    mpz_class a = abs(n);
    if (a == 0 || a > 1000000) return out;
    long v = a.get_si();
    for (long d = 1; d <= v; ++d)
        if (v % d == 0) out.push_back(d);
    return out;
}

// Roots in Q(i): rational-root search for rational coefficients, then the quadratic formula.
std::optional<std::vector<QComplex>> exact_roots(Poly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    std::vector<QComplex> roots;
    bool real = true;
    for (auto& c : p) real = real && c.is_real();
    while (real && p.size() > 3) {
        if (p[0].is_zero()) {
            roots.push_back(0);
            p.erase(p.begin());
            continue;
        }
        mpz_class den = 1;
        for (auto& c : p) den = lcm(den, c.re().get_den());
        std::vector<long> tops = divisors(mpz_class(p.front().re() * den));
        std::vector<long> bottoms = divisors(mpz_class(p.back().re() * den));
        std::optional<QComplex> hit;
        for (long a : tops)
            for (long b : bottoms)
                for (int sign : {1, -1})
                    if (!hit && eval(p, QComplex::frac(sign * a, b)).is_zero()) hit = QComplex::frac(sign * a, b);
        if (!hit) break;
        roots.push_back(*hit);
        p = deflate(p, *hit);
    }
    if (p.size() > 3) return std::nullopt;
    if (p.size() == 3) {
        QComplex a = p[2], b = p[1], c = p[0];
        auto s = exact_sqrt(b * b - QComplex(4) * a * c);
        if (!s) return std::nullopt;
        QComplex two_a_inv = (QComplex(2) * a).inverse();
        roots.push_back((-b + *s) * two_a_inv);
        roots.push_back((-b - *s) * two_a_inv);
    } else if (p.size() == 2) {
        roots.push_back(-p[0] * p[1].inverse());
    }
    return roots;
}

// P = a_0 prod (1 + t_m u) with u = s z^q.
WebDecomposition decompose(const ImplicitWeb& w, int q, const TransJet& s) {
    WebDecomposition out;
    int d = w.degree();
    out.member_degree = q;
    out.members = d / q;
    const TransJet& a0 = w.coeffs[0];
    if (d % q != 0 || !a0.is_invertible() || !s.is_invertible()) return out;
    TransJet a0_inv = a0.inverse(), s_inv = s.inverse(), sk_inv(1, 1 << 20);
    Poly qpoly;
    for (int j = 0; j <= d; ++j) {
        if (j % q != 0) {
            if (!w.coeffs[j].is_zero()) return out;
            continue;
        }
        TransJet c = w.coeffs[j] * a0_inv * sk_inv;
        sk_inv = sk_inv * s_inv;
        if (!c.is_laurent() || c.to_laurent().depends_on_x() || c.to_laurent().depends_on_y()) return out;
        qpoly.push_back(c.to_laurent().constant_term());
    }
    out.in_model_coordinates = true;
    auto roots = exact_roots(qpoly);
    if (!roots) return out;
    for (auto& r : *roots) out.t_values.push_back(-r.inverse());
    std::sort(out.t_values.begin(), out.t_values.end());
    return out;
}

WebClassification classify_fitted(const Riccati& r, const ImplicitWeb& w) {
    WebClassification out;
    out.affine = classify_affine(r);
    const AffineModel& m = out.affine.model;
    int order = r.order();
    WebModel& wm = out.model;
    switch (m.kind) {
        case AffineModel::Kind::III:
        case AffineModel::Kind::IV:
            fail(ErrorKind::ParabolicMonodromy, "fitted Riccati is " + m.to_string() + " (parabolic monodromy)");
        case AffineModel::Kind::II:
            wm.family = WebModel::Family::WebIII;
            wm.n = m.n - 1;
            out.nu = QComplex(-m.n);
            out.decomposition =
                decompose(w, 1, TransJet((LaurentJet(1, order) + LaurentJet::monomial(1, 0, wm.n, order)) *
                                         LaurentJet::monomial(1, 0, -wm.n - 1, order)));
            return out;
        case AffineModel::Kind::I: break;
    }
    out.nu = m.nu;
    if (!m.nu.is_real()) fail(ErrorKind::NonFiniteMonodromy, "exponent " + m.nu.to_string() + " is not real");
    Rational v = m.nu.re();
    wm.q = static_cast<int>(v.get_den().get_si());
    wm.p = static_cast<int>(mpz_class(abs(v.get_num())).get_si());
    wm.family = v > 0 ? WebModel::Family::WebI : WebModel::Family::WebII;
    int sign = v > 0 ? 1 : -1;
    out.decomposition = decompose(w, wm.q, TransJet::power_of_y(QComplex(sign * wm.p), order));
    return out;
}

}  // namespace

std::string WebClassification::to_string() const {
    std::string s = model.to_string() + " nu=" + nu.to_string();
    if (!decomposition.t_values.empty()) {
        s += " t={";
        for (size_t k = 0; k < decomposition.t_values.size(); ++k)
            s += (k ? "," : "") + decomposition.t_values[k].to_string();
        s += "}";
    }
    return s;
}

WebClassification classify_web(const ImplicitWeb& w) {
    auto r = fit_riccati(w);
    if (!r) fail(ErrorKind::NonConstantCrossRatio, "web is not contained in a pencil of foliations");
    return classify_fitted(*r, w);
}

WebClassification classify_web(const SplitWeb& w) {
    auto r = fit_riccati(w);
    if (!r) fail(ErrorKind::NonConstantCrossRatio, "web is not contained in a pencil of foliations");
    return classify_fitted(*r, to_implicit(w));
}

}  // namespace ag
