#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "rlrs/interval.hpp"

namespace rlrs {

// Isolating disk: the open disk |z - center| < radius holds exactly one root.
struct RootDisk {
    CRat center;
    Rational radius;
};

// Pellet test: true when the open disk holds exactly k roots of p (counted with multiplicity)
// and none on its boundary.
bool pellet_test(const Poly& p, const CRat& center, const Rational& radius, unsigned k);

// Tightens an isolating disk of a simple root of p until radius <= 2^-bits.
RootDisk refine_disk(const Poly& p, const RootDisk& disk, long bits);

// Isolating disks for all roots of a squarefree p. Real roots get real centers;
// non-real disks avoid the real axis.
std::vector<RootDisk> isolate_roots(const Poly& p);

// Finds the isolating disk of a simple root of p known to lie in every enclosure.
RootDisk certify_enclosed_root(const Poly& p, const std::function<ComplexInterval(long)>& enclose);

// Untrusted root approximations (Aberth iteration in long double).
std::vector<std::complex<long double>> approximate_roots(const Poly& p);

}  // namespace rlrs
