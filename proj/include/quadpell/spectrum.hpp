#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>

#include "quadpell/pellcore.hpp"

namespace quadpell {

// Minimal strictly primitive solution x + y sqrt(d) of x^2 - d y^2 = +-p^l.
struct XiEntry {
  std::int64_t p;
  int l;
  QuadElem xi;
  int norm_sign;

  BigInt x() const { return xi.a().num(); }
  BigInt y() const { return xi.b().num(); }
  BigInt norm() const { return norm_sign * pow(BigInt(static_cast<long>(p)), static_cast<unsigned long>(l)); }
};

struct Spectrum {
  std::int64_t d = 0;
  std::set<std::int64_t> covered;            // primes examined
  std::map<std::int64_t, XiEntry> entries;   // examined primes lying in S(d)
  std::set<std::int64_t> s_minus;            // entries with negative norm

  bool covers(std::int64_t p) const { return covered.count(p) != 0; }
  const XiEntry* find(std::int64_t p) const;
  // Throws SpectrumNotCovering / InvalidArgument when p is unexamined or outside S(d).
  const XiEntry& at(std::int64_t p) const;
};

bool in_S(const PellContext& ctx, std::int64_t p);
// Largest exponent the minimal-l search has to try for p.
int max_level(const PellContext& ctx, std::int64_t p);
std::optional<XiEntry> xi(const PellContext& ctx, std::int64_t p);

// All primes p <= pmax.
Spectrum spectrum(const PellContext& ctx, std::int64_t pmax);
// Exactly the prime divisors of z.
Spectrum spectrum_for(const PellContext& ctx, const BigInt& z);

}  // namespace quadpell
