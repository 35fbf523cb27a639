#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quadpell/pellcore.hpp"

namespace quadpell {

// Slopes of two lines through the origin and of a bisector c.
struct BisectorTriple {
  Rat a, b, c;
  bool trivial = false;
  friend bool operator==(const BisectorTriple&, const BisectorTriple&) = default;
};

bool verify_star(const Rat& a, const Rat& b, const Rat& c);

// a^2 + 1 = d a2^2 and b^2 + 1 = d b2^2 with a2, b2 > 0.
struct PairClassification {
  std::int64_t d;
  Rat a2, b2;
};

std::optional<PairClassification> classify_pair(const Rat& a, const Rat& b);

// A branch is empty when its denominator vanishes.
struct BisectorPair {
  std::optional<Rat> c_plus, c_minus;
};

struct Bisection {
  Rat c_plus, c_minus;
  std::int64_t d;
  bool case_one() const { return d == 1; }
};

// nullopt means no rational bisector exists.
std::optional<Bisection> bisect(const Rat& a, const Rat& b);

BisectorPair from_pell_points(const Rat& a1, const Rat& a2, const Rat& b1, const Rat& b2, std::int64_t d);

// Pythagorean-parameter family; each entry is (a, b, c) for one branch.
std::vector<BisectorTriple> case1_generate(const BigInt& l, const BigInt& m, const BigInt& n);
// alpha, beta: distinct points of x^2 - d y^2 = -1 written as x + y sqrt(d).
std::vector<BisectorTriple> case2_generate(const QuadElem& alpha, const QuadElem& beta);

BisectorTriple integral_generate(const PellContext& ctx, long m, long n);
BisectorTriple integral_generate2(long n);

}  // namespace quadpell
