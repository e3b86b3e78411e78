#pragma once

#include <string>

#include "rlrs/poly.hpp"
#include "rlrs/rational.hpp"

namespace rlrs {

// Closed real interval with rational endpoints; lo <= hi.
class RealInterval {
public:
    RealInterval() = default;
    RealInterval(const Rational& x) : lo_(x), hi_(x) {}
    RealInterval(Rational lo, Rational hi);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational mid() const { return (lo_ + hi_) / 2; }
    Rational rad() const { return (hi_ - lo_) / 2; }
    Rational width() const { return hi_ - lo_; }
    // Upper bound of |x| over the interval.
    Rational mag() const;
    // Lower bound of |x| over the interval.
    Rational mig() const;

    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const RealInterval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool overlaps(const RealInterval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }
    bool positive() const { return lo_ > 0; }
    bool negative() const { return hi_ < 0; }

    // Outward rounding of the endpoints to multiples of 2^-bits.
    RealInterval rounded(long bits) const;
    // Outward rounding keeping `bits` significant bits per endpoint.
    RealInterval rounded_rel(long bits) const;

    RealInterval widened(const Rational& r) const { return {lo_ - r, hi_ + r}; }
    RealInterval sqr() const;
    RealInterval inv() const;

    friend RealInterval operator+(const RealInterval& a, const RealInterval& b);
    friend RealInterval operator-(const RealInterval& a, const RealInterval& b);
    friend RealInterval operator-(const RealInterval& a);
    friend RealInterval operator*(const RealInterval& a, const RealInterval& b);
    friend RealInterval operator/(const RealInterval& a, const RealInterval& b);

private:
    Rational lo_, hi_;
};

RealInterval hull(const RealInterval& a, const RealInterval& b);
RealInterval min(const RealInterval& a, const RealInterval& b);
RealInterval pow(const RealInterval& a, unsigned long e, long bits);

// Axis-aligned complex box.
class ComplexInterval {
public:
    ComplexInterval() = default;
    ComplexInterval(RealInterval re, RealInterval im = RealInterval()) : re_(std::move(re)), im_(std::move(im)) {}
    ComplexInterval(const CRat& z) : re_(z.re), im_(z.im) {}

    const RealInterval& re() const { return re_; }
    const RealInterval& im() const { return im_; }
    CRat mid() const { return {re_.mid(), im_.mid()}; }

    ComplexInterval conj() const { return {re_, -im_}; }
    RealInterval norm2() const { return re_.sqr() + im_.sqr(); }
    // Upper bound of |z|.
    Rational mag(long bits = 64) const;
    // Lower bound of |z|.
    Rational mig(long bits = 64) const;
    // Upper bound for the largest side.
    Rational width() const;
    bool contains(const CRat& z) const { return re_.contains(z.re) && im_.contains(z.im); }
    bool contains(const ComplexInterval& z) const { return re_.contains(z.re_) && im_.contains(z.im_); }
    bool overlaps(const ComplexInterval& z) const { return re_.overlaps(z.re_) && im_.overlaps(z.im_); }
    bool contains_zero() const { return re_.contains(Rational(0)) && im_.contains(Rational(0)); }

    ComplexInterval rounded(long bits) const { return {re_.rounded(bits), im_.rounded(bits)}; }
    ComplexInterval rounded_rel(long bits) const { return {re_.rounded_rel(bits), im_.rounded_rel(bits)}; }
    ComplexInterval inv() const;

    friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
    friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
    friend ComplexInterval operator-(const ComplexInterval& a);
    friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
    friend ComplexInterval operator*(const RealInterval& s, const ComplexInterval& a);
    friend ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b);

private:
    RealInterval re_, im_;
};

ComplexInterval pow(const ComplexInterval& a, unsigned long e, long bits);
// Interval Horner evaluation with rounding to `bits` after each step.
ComplexInterval eval(const Poly& p, const ComplexInterval& z, long bits);
RealInterval eval(const Poly& p, const RealInterval& x, long bits);

std::string to_string(const RealInterval& x);

}  // namespace rlrs
