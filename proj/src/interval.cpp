#include "rlrs/interval.hpp"

#include <algorithm>

namespace rlrs {

RealInterval::RealInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw std::invalid_argument("interval with lo > hi");
}

Rational RealInterval::mag() const { return std::max(abs(lo_), abs(hi_)); }

Rational RealInterval::mig() const {
    if (contains(Rational(0))) return Rational(0);
    return std::min(abs(lo_), abs(hi_));
}

RealInterval RealInterval::rounded(long bits) const {
    return {round_down(lo_, bits), round_up(hi_, bits)};
}

RealInterval RealInterval::rounded_rel(long bits) const {
    Rational lo = lo_ >= 0 ? round_down_rel(lo_, bits) : Rational(-round_up_rel(-lo_, bits));
    Rational hi = hi_ >= 0 ? round_up_rel(hi_, bits) : Rational(-round_down_rel(-hi_, bits));
    return {lo, hi};
}

RealInterval RealInterval::sqr() const {
    Rational a = lo_ * lo_, b = hi_ * hi_;
    if (contains(Rational(0))) return {Rational(0), std::max(a, b)};
    return {std::min(a, b), std::max(a, b)};
}

RealInterval RealInterval::inv() const {
    if (contains(Rational(0))) throw std::domain_error("interval inverse of zero-containing interval");
    return {1 / hi_, 1 / lo_};
}

RealInterval operator+(const RealInterval& a, const RealInterval& b) { return {a.lo_ + b.lo_, a.hi_ + b.hi_}; }
RealInterval operator-(const RealInterval& a, const RealInterval& b) { return {a.lo_ - b.hi_, a.hi_ - b.lo_}; }
RealInterval operator-(const RealInterval& a) { return {-a.hi_, -a.lo_}; }

RealInterval operator*(const RealInterval& a, const RealInterval& b) {
    if (a.lo_ == a.hi_ && b.lo_ == b.hi_) return RealInterval(a.lo_ * b.lo_);
    Rational p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_, p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

RealInterval operator/(const RealInterval& a, const RealInterval& b) { return a * b.inv(); }

RealInterval hull(const RealInterval& a, const RealInterval& b) {
    return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

RealInterval min(const RealInterval& a, const RealInterval& b) {
    return {std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi())};
}

RealInterval pow(const RealInterval& a, unsigned long e, long bits) {
    RealInterval r(Rational(1)), b = a;
    while (e) {
        if (e & 1) r = (r * b).rounded_rel(bits);
        e >>= 1;
        if (e) b = b.sqr().rounded_rel(bits);
    }
    return r;
}

Rational ComplexInterval::mag(long bits) const {
    Rational r = re_.mag(), i = im_.mag();
    return sqrt_up(r * r + i * i, bits);
}

Rational ComplexInterval::mig(long bits) const {
    Rational r = re_.mig(), i = im_.mig();
    return sqrt_down(r * r + i * i, bits);
}

Rational ComplexInterval::width() const { return std::max(re_.width(), im_.width()); }

ComplexInterval ComplexInterval::inv() const {
    RealInterval n = norm2();
    return {re_ / n, -im_ / n};
}

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
ComplexInterval operator-(const ComplexInterval& a) { return {-a.re_, -a.im_}; }

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

ComplexInterval operator*(const RealInterval& s, const ComplexInterval& a) { return {s * a.re_, s * a.im_}; }

ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) { return a * b.inv(); }

ComplexInterval pow(const ComplexInterval& a, unsigned long e, long bits) {
    ComplexInterval r(RealInterval(Rational(1))), b = a;
    while (e) {
        if (e & 1) r = (r * b).rounded_rel(bits);
        e >>= 1;
        if (e) b = (b * b).rounded_rel(bits);
    }
    return r;
}

ComplexInterval eval(const Poly& p, const ComplexInterval& z, long bits) {
    ComplexInterval acc;
    const auto& c = p.coeffs();
    for (size_t i = c.size(); i-- > 0;) acc = (acc * z + ComplexInterval(CRat(c[i]))).rounded(bits);
    return acc;
}

RealInterval eval(const Poly& p, const RealInterval& x, long bits) {
    RealInterval acc;
    const auto& c = p.coeffs();
    for (size_t i = c.size(); i-- > 0;) acc = (acc * x + RealInterval(c[i])).rounded(bits);
    return acc;
}

std::string to_string(const RealInterval& x) { return "[" + to_string(x.lo()) + ", " + to_string(x.hi()) + "]"; }

}  // namespace rlrs
