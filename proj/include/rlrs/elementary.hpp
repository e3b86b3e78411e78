#pragma once

#include <utility>

#include "rlrs/interval.hpp"

namespace rlrs {

// Enclosure of pi with width <= 2^-bits.
RealInterval pi_interval(long bits);

RealInterval sqrt_interval(const RealInterval& x, long bits);

// Enclosures of cos(2*pi*t) and sin(2*pi*t); t is measured in turns.
std::pair<RealInterval, RealInterval> cos_sin_turns(const RealInterval& t, long bits);

// Argument of x + iy in turns, in (-1/2, 1/2]; (x, y) != (0, 0).
RealInterval arg_turns(const Rational& x, const Rational& y, long bits);
// Argument of a box that excludes the origin and does not straddle the negative real axis.
RealInterval arg_turns(const ComplexInterval& z, long bits);

// e^{2 pi i t}.
ComplexInterval unit_turns(const RealInterval& t, long bits);

}  // namespace rlrs
