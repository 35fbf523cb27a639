#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "quadpell/arith.hpp"
#include "quadpell/quadfield.hpp"

namespace quadpell {

struct CFExpansion {
  BigInt a0;
  std::vector<BigInt> period;
};

CFExpansion continued_fraction_sqrt(std::int64_t d);

// Arithmetic facts about Q(sqrt(d)) needed by every other module.
struct PellContext {
  std::int64_t d;
  std::int64_t disc;   // field discriminant
  QuadElem eta;        // fundamental unit of O_K, eta > 1
  QuadElem eps;        // fundamental solution f1 + g1 sqrt(d) of |x^2 - d y^2| = 1
  int norm_eta;
  bool eta_in_zd;
  bool neg_pell_integral;
  bool neg_pell_rational;
  long h;

  BigInt f1() const { return eps.a().num(); }
  BigInt g1() const { return eps.b().num(); }
};

PellContext make_context(std::int64_t d);

// (f_n, g_n) with f_n + g_n sqrt(d) = eps^n, n >= 1.
std::pair<BigInt, BigInt> pell_sequence(const PellContext& ctx, long n);

// True when p splits or ramifies in O_K.
bool splits(std::int64_t d, std::int64_t p);
long class_number(std::int64_t d);
// x^2 - d y^2 = -1 has a rational point iff no prime p = 3 (mod 4) divides d.
bool neg_pell_rational(std::int64_t d);

// Thread-safe memo of contexts keyed by d.
class ContextCache {
 public:
  std::shared_ptr<const PellContext> get(std::int64_t d);

 private:
  std::shared_mutex mutex_;
  std::map<std::int64_t, std::shared_ptr<const PellContext>> contexts_;
};

}  // namespace quadpell
