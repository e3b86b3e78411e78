#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "rlrs/matrix.hpp"
#include "rlrs/roots.hpp"

namespace rlrs {

// An algebraic number: a squarefree primitive integer polynomial together with an open disk
// that holds exactly one of its roots. Refinements are cached; the value never changes.
class AlgebraicNumber {
public:
    AlgebraicNumber();  // zero
    AlgebraicNumber(const Poly& poly, const RootDisk& disk);

    static AlgebraicNumber rational(const Rational& q);
    static AlgebraicNumber gaussian(const CRat& z);
    // The root of p (any polynomial) lying in every enclosure returned by `enclose`.
    static AlgebraicNumber from_enclosure(const Poly& p, const std::function<ComplexInterval(long)>& enclose);

    const Poly& poly() const { return poly_; }
    long degree() const { return poly_.degree(); }
    RootDisk disk() const;
    // Box of width at most 2^-bits.
    ComplexInterval enclosure(long bits) const;
    std::complex<long double> approx() const;

    std::optional<Rational> as_rational() const;
    bool is_real() const;
    bool is_zero() const;
    bool is_one() const;
    // Sign of a real number.
    int sign() const;

private:
    struct Cache;
    Poly poly_;
    std::shared_ptr<Cache> cache_;
};

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber operator-(const AlgebraicNumber& a);
AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b);
AlgebraicNumber conj(const AlgebraicNumber& a);
AlgebraicNumber inverse(const AlgebraicNumber& a);
AlgebraicNumber pow(const AlgebraicNumber& a, unsigned long e);
// |a|^2 as a real algebraic number.
AlgebraicNumber norm2(const AlgebraicNumber& a);
AlgebraicNumber real_part(const AlgebraicNumber& a);
// Positive square root of a positive real.
AlgebraicNumber sqrt_positive(const AlgebraicNumber& a);
// A(gamma) where gamma is a root of s (s squarefree, any degree).
AlgebraicNumber eval_at_root(const Poly& a, const Poly& s, const AlgebraicNumber& gamma);

// Exact test of a(gamma) = 0.
bool vanishes_at(const Poly& a, const AlgebraicNumber& gamma);

bool equal(const AlgebraicNumber& a, const AlgebraicNumber& b);
// Sign of a - b for real a, b.
int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);

// All distinct roots of p (multiplicities dropped), sorted by real part then imaginary part, descending.
std::vector<AlgebraicNumber> roots_of(const Poly& p);

// True when the two enclosed numbers are the same root of q (both are roots of q, q squarefree).
bool same_root(const Poly& q, const std::function<ComplexInterval(long)>& a,
               const std::function<ComplexInterval(long)>& b);

// Order of a as a root of unity, or 0 when it is not one.
unsigned root_of_unity_order(const AlgebraicNumber& a);

std::string to_string(const AlgebraicNumber& a);

}  // namespace rlrs
