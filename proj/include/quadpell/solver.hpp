#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadpell/spectrum.hpp"

namespace quadpell {

enum class CaseTag { A1, A1Prime, A2, A2Prime, B1, B2 };
const char* to_string(CaseTag tag);

struct ExistenceVerdict {
  // Whether a strictly primitive solution of x^2 - d y^2 = +-z exists.
  bool exists = false;
  // Outcome of the prime-by-prime closed-form criterion; see README for
  // the cases where it differs from `exists`.
  bool criterion_holds = false;
  std::map<std::int64_t, CaseTag> case_tags;
  std::map<std::int64_t, long> witness_exponents;
};

enum class Conj { Xi, XiBar };

struct Term {
  long exponent;
  Conj choice;
  friend bool operator==(const Term&, const Term&) = default;
};

// sign * 2^m * eta^n * prod (xi_p or xi_p')^{n_p} * core * scale.
// core is set only when the xi-products cannot absorb the ideal class of
// the solution; m is 1 - n_2 when d = 1 (mod 8) and 2 | z.
struct Representation {
  std::int64_t d = 0;
  int sign = 1;
  long m = 0;
  long n = 0;
  std::map<std::int64_t, Term> terms;
  std::optional<QuadElem> core;
  Rat scale = Rat(1);

  friend bool operator==(const Representation&, const Representation&) = default;
};

struct NRange {
  long lo = 0;
  long hi = 0;
};

enum class Purpose { Strict, Square, Rational };

struct Validation {
  bool valid = true;
  std::vector<std::string> problems;
};

QuadElem evaluate(const PellContext& ctx, const Spectrum& spec, const Representation& rep);

ExistenceVerdict strict_exists(const PellContext& ctx, const Spectrum& spec, const BigInt& z);

// Strictly primitive solutions of |x^2 - d y^2| = z with eta-exponent in range,
// normalized to y >= 0 and sorted by (y, x).
std::vector<std::pair<BigInt, BigInt>> generate_strict(const PellContext& ctx, const Spectrum& spec,
                                                       const BigInt& z, NRange range);
// All solutions of |x^2 - d y^2| = z^2, same normalization.
std::vector<std::pair<BigInt, BigInt>> generate_square(const PellContext& ctx, const Spectrum& spec,
                                                       const BigInt& z, NRange range);

Representation decompose_strict(const PellContext& ctx, const Spectrum& spec, const BigInt& x,
                                const BigInt& y);
Representation decompose_square(const PellContext& ctx, const Spectrum& spec, const BigInt& x,
                                const BigInt& y);
// Splits a nonzero element of O_K into sign * eta^n * gamma with gamma canonical.
Representation decompose_units(const PellContext& ctx, const QuadElem& alpha);

Validation validate_representation(const PellContext& ctx, const Spectrum& spec,
                                   const Representation& rep, Purpose purpose = Purpose::Strict);

bool strictly_primitive(std::int64_t d, const BigInt& x, const BigInt& y);

}  // namespace quadpell
