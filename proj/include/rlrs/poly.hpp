#pragma once

#include <utility>
#include <vector>

#include "rlrs/rational.hpp"

namespace rlrs {

// Exact complex rational.
struct CRat {
    Rational re, im;

    CRat() = default;
    CRat(Rational r) : re(std::move(r)) {}
    CRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    CRat conj() const { return {re, -im}; }
    Rational norm2() const { return re * re + im * im; }
    bool is_zero() const { return re == 0 && im == 0; }
};

CRat operator+(const CRat& a, const CRat& b);
CRat operator-(const CRat& a, const CRat& b);
CRat operator-(const CRat& a);
CRat operator*(const CRat& a, const CRat& b);
CRat operator/(const CRat& a, const CRat& b);
bool operator==(const CRat& a, const CRat& b);

// Dense univariate polynomial over Q, coefficients low to high, no trailing zeros.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, size_t k);
    static Poly x() { return monomial(Rational(1), 1); }

    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const Rational& leading() const { return c_.back(); }

    Rational eval(const Rational& x) const;
    CRat eval(const CRat& x) const;

    Poly derivative() const;
    Poly monic() const;
    // Integer coefficients with gcd 1 and positive leading coefficient.
    Poly primitive() const;
    // p(lambda * x).
    Poly scale_arg(const Rational& lambda) const;
    // p(x + s).
    Poly shift(const Rational& s) const;
    // x^deg p(1/x).
    Poly reverse() const;
    // p(x^2).
    Poly substitute_square() const;
    // p(-x).
    Poly negate_arg() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& s, const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<Rational> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
// Monic gcd (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);
Poly squarefree_part(const Poly& p);

// Yun decomposition: p = lc * prod_k factors[k-1]^k, each factor monic squarefree, pairwise coprime.
std::vector<Poly> yun(const Poly& p);

// N-th cyclotomic polynomial.
Poly cyclotomic(unsigned n);

std::string to_string(const Poly& p);

}  // namespace rlrs
