#include "quadpell/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace quadpell::oracle {

namespace {

__extension__ typedef __int128 i128;

constexpr i128 kLimit = static_cast<i128>(1) << 120;

// floor(sqrt(n)) for 0 <= n < 2^124, or -1 if n is not a perfect square.
std::int64_t square_root(i128 n) {
  if (n < 0) return -1;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<i128>(r) * r > n) --r;
  while (static_cast<i128>(r + 1) * (r + 1) <= n) ++r;
  return static_cast<i128>(r) * r == n ? r : -1;
}

i128 checked_square(std::int64_t v) {
  i128 s = static_cast<i128>(v) * v;
  if (s > kLimit) throw std::overflow_error("oracle search box too large");
  return s;
}

i128 ipow(std::int64_t p, int l) {
  i128 r = 1;
  for (int k = 0; k < l; ++k) {
    r *= p;
    if (r > kLimit) throw std::overflow_error("oracle prime power too large");
  }
  return r;
}

bool has_neg_pell(std::int64_t d, std::int64_t y_bound) {
  for (std::int64_t y = 1; y <= y_bound; ++y)
    if (square_root(d * checked_square(y) - 1) >= 0) return true;
  return false;
}

}  // namespace

std::vector<BruteHit> brute_solutions(std::int64_t d, std::int64_t z, SearchBox box) {
  std::vector<BruteHit> out;
  for (std::int64_t y = 0; y <= box.y_bound; ++y) {
    const i128 dy2 = d * checked_square(y);
    for (int sign : {1, -1}) {
      const std::int64_t x = square_root(dy2 + sign * static_cast<i128>(z));
      if (x < 0) continue;
      if (sign < 0 && z == 0) continue;
      const bool strict = std::gcd(x, d * y) == 1;
      out.push_back({x, y, sign, strict});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const BruteHit& s, const BruteHit& t) {
    return s.y != t.y ? s.y < t.y : s.x < t.x;
  });
  return out;
}

std::optional<BruteXi> brute_xi(std::int64_t d, std::int64_t p, int l_max, SearchBox box) {
  const bool plus_only = has_neg_pell(d, box.y_bound);
  for (int l = 1; l <= l_max; ++l) {
    const i128 pl = ipow(p, l);
    for (std::int64_t y = 1; y <= box.y_bound; ++y) {
      const i128 dy2 = d * checked_square(y);
      for (int sign : {1, -1}) {
        if (sign < 0 && plus_only) continue;
        const std::int64_t x = square_root(dy2 + sign * pl);
        if (x >= 0 && std::gcd(x, d * y) == 1) return BruteXi{l, x, y, sign};
      }
    }
  }
  return std::nullopt;
}

std::vector<BrutePoint> brute_rational_pell(std::int64_t d, int r, SearchBox box) {
  const int sign = r % 2 == 0 ? 1 : -1;
  std::vector<BrutePoint> out;
  for (std::int64_t Z = 1; Z <= box.denominator_bound; ++Z) {
    const i128 z2 = checked_square(Z);
    for (std::int64_t Y = 0; Y <= box.y_bound; ++Y) {
      const std::int64_t X = square_root(d * checked_square(Y) + sign * z2);
      if (X < 0 || std::gcd(std::gcd(X, Y), Z) != 1) continue;
      for (std::int64_t sx : {1, -1}) {
        if (sx < 0 && X == 0) continue;
        for (std::int64_t sy : {1, -1}) {
          if (sy < 0 && Y == 0) continue;
          out.push_back({sx * X, sy * Y, Z});
        }
      }
    }
  }
  return out;
}

Tri tangent_bisector_check(const Rat& a, const Rat& b, const Rat& c) {
  bool any_defined = false;
  auto branch = [&](const Rat& s) {
    const Rat da = Rat(1) + a * s;
    const Rat db = Rat(1) + b * s;
    if (da.is_zero() || db.is_zero()) return false;
    any_defined = true;
    return (s - a) / da == (b - s) / db;
  };
  if (branch(c)) return Tri::True;
  if (!c.is_zero() && branch(Rat(-1) / c)) return Tri::True;
  return any_defined ? Tri::False : Tri::Indeterminate;
}

}  // namespace quadpell::oracle
