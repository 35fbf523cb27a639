#pragma once

#include <cstdint>
#include <vector>

#include "quadpell/solver.hpp"

namespace quadpell {

// (x, y) with x^2 - d y^2 = (-1)^r.
struct RationalPoint {
  std::int64_t d;
  Rat x, y;
  int r;
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

// Parity r predicted from the exponents alone.
int parity_index(const PellContext& ctx, const Spectrum& spec, const Representation& rep);

RationalPoint generate_rational(const PellContext& ctx, const Spectrum& spec, const Representation& rep);
Representation decompose_rational(const PellContext& ctx, const Spectrum& spec, const Rat& x, const Rat& y);

// Points from representations using at most max_terms primes of the spectrum,
// each with the least exponent making l_p n_p even, on x^2 - d y^2 = (-1)^r.
// Sorted by denominator, then x, then y.
std::vector<RationalPoint> enumerate_rational(const PellContext& ctx, const Spectrum& spec, int r,
                                              int max_terms, NRange range);

}  // namespace quadpell
