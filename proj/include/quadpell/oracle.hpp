#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quadpell/rational.hpp"

namespace quadpell::oracle {

struct SearchBox {
  std::int64_t y_bound = 0;
  std::int64_t denominator_bound = 0;
};

struct BruteHit {
  std::int64_t x, y;
  int sign;                 // x^2 - d y^2 = sign * z
  bool strictly_primitive;  // gcd(x, d y) = 1
};

// All x >= 0, 0 <= y <= box.y_bound with x^2 - d y^2 = +-z, ordered by (y, x).
std::vector<BruteHit> brute_solutions(std::int64_t d, std::int64_t z, SearchBox box);

struct BruteXi {
  int l;
  std::int64_t x, y;
  int sign;
};

// Smallest (l, y) strictly primitive hit; sign convention decided by a boxed
// search for x^2 - d y^2 = -1.
std::optional<BruteXi> brute_xi(std::int64_t d, std::int64_t p, int l_max, SearchBox box);

struct BrutePoint {
  std::int64_t X, Y, Z;  // x = X/Z, y = Y/Z in lowest terms
};

// Points on x^2 - d y^2 = (-1)^r with 1 <= Z <= denominator_bound and
// |Y| <= y_bound, all sign variants.
std::vector<BrutePoint> brute_rational_pell(std::int64_t d, int r, SearchBox box);

enum class Tri { False, True, Indeterminate };

Tri tangent_bisector_check(const Rat& a, const Rat& b, const Rat& c);

}  // namespace quadpell::oracle
