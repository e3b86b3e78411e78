#include "rlrs/poly.hpp"

#include <sstream>

namespace rlrs {

CRat operator+(const CRat& a, const CRat& b) { return {a.re + b.re, a.im + b.im}; }
CRat operator-(const CRat& a, const CRat& b) { return {a.re - b.re, a.im - b.im}; }
CRat operator-(const CRat& a) { return {-a.re, -a.im}; }
CRat operator*(const CRat& a, const CRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
CRat operator/(const CRat& a, const CRat& b) {
    Rational d = b.norm2();
    if (d == 0) throw std::domain_error("complex division by zero");
    CRat n = a * b.conj();
    return {n.re / d, n.im / d};
}
bool operator==(const CRat& a, const CRat& b) { return a.re == b.re && a.im == b.im; }

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, size_t k) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::eval(const Rational& x) const {
    Rational acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

CRat Poly::eval(const CRat& x) const {
    CRat acc;
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * x;
        acc.re += c_[i];
    }
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Rational l = leading();
    std::vector<Rational> d(c_);
    for (auto& v : d) v /= l;
    return Poly(std::move(d));
}

Poly Poly::primitive() const {
    if (is_zero()) return *this;
    Integer l = 1;
    for (const auto& v : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    Integer g = 0;
    for (const auto& v : c_) {
        Integer n = v.get_num() * (l / v.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    if (leading() < 0) g = -g;
    std::vector<Rational> d(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) d[i] = Rational(c_[i].get_num() * (l / c_[i].get_den()) / g);
    return Poly(std::move(d));
}

Poly Poly::scale_arg(const Rational& lambda) const {
    std::vector<Rational> d(c_);
    Rational p(1);
    for (auto& v : d) {
        v *= p;
        p *= lambda;
    }
    return Poly(std::move(d));
}

Poly Poly::shift(const Rational& s) const {
    // Taylor shift by repeated synthetic division.
    std::vector<Rational> d(c_);
    size_t n = d.size();
    for (size_t i = 0; i + 1 < n; ++i)
        for (size_t j = n - 1; j > i; --j) d[j - 1] += s * d[j];
    return Poly(std::move(d));
}

Poly Poly::reverse() const {
    std::vector<Rational> d(c_.rbegin(), c_.rend());
    return Poly(std::move(d));
}

Poly Poly::substitute_square() const {
    if (is_zero()) return *this;
    std::vector<Rational> d(2 * c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) d[2 * i] = c_[i];
    return Poly(std::move(d));
}

Poly Poly::negate_arg() const {
    std::vector<Rational> d(c_);
    for (size_t i = 1; i < d.size(); i += 2) d[i] = -d[i];
    return Poly(std::move(d));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> d(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) d[i] += b.c_[i];
    return Poly(std::move(d));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rational> d(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) d[i] -= b.c_[i];
    return Poly(std::move(d));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> d(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(d));
}

Poly operator*(const Rational& s, const Poly& a) {
    std::vector<Rational> d(a.c_);
    for (auto& v : d) v *= s;
    return Poly(std::move(d));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> r(a.coeffs());
    long db = b.degree();
    long da = a.degree();
    if (da < db) return {Poly(), a};
    std::vector<Rational> q(static_cast<size_t>(da - db + 1));
    const Rational& lb = b.leading();
    for (long i = da; i >= db; --i) {
        Rational f = r[static_cast<size_t>(i)] / lb;
        q[static_cast<size_t>(i - db)] = f;
        if (f == 0) continue;
        for (long j = 0; j <= db; ++j) r[static_cast<size_t>(i - db + j)] -= f * b.coeffs()[static_cast<size_t>(j)];
    }
    r.resize(static_cast<size_t>(db));
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a.primitive(), y = b.primitive();
    while (!y.is_zero()) {
        Poly r = (x % y).primitive();
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly squarefree_part(const Poly& p) {
    if (p.degree() <= 0) return p.monic();
    return (p / gcd(p, p.derivative())).monic();
}

std::vector<Poly> yun(const Poly& p) {
    std::vector<Poly> out;
    if (p.degree() <= 0) return out;
    Poly f = p.monic();
    Poly fp = f.derivative();
    Poly a = gcd(f, fp);
    Poly b = f / a;
    Poly c = fp / a;
    Poly d = c - b.derivative();
    while (b.degree() > 0) {
        Poly g = gcd(b, d);
        out.push_back(g.monic());
        b = b / g;
        c = d / g;
        d = c - b.derivative();
    }
    while (!out.empty() && out.back().degree() == 0) out.pop_back();
    return out;
}

Poly cyclotomic(unsigned n) {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
    Poly num = Poly::monomial(Rational(1), n) - Poly::constant(Rational(1));
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) num = num / cyclotomic(d);
    return num;
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = p.degree(); i >= 0; --i) {
        const Rational& c = p.coeffs()[static_cast<size_t>(i)];
        if (c == 0) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        Rational a = abs(c);
        if (a != 1 || i == 0) os << to_string(a);
        if (i > 0) os << (a != 1 ? "*x" : "x");
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

}  // namespace rlrs
