#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "quadpell/arith.hpp"

namespace quadpell {

// a x^2 + b xy + c y^2 of positive non-square discriminant b^2 - 4ac.
struct Form {
  BigInt a, b, c;
  BigInt discriminant() const { return b * b - 4 * a * c; }
  BigInt eval(const BigInt& x, const BigInt& y) const { return a * x * x + b * x * y + c * y * y; }
  friend bool operator==(const Form&, const Form&) = default;
};

bool operator<(const Form& f, const Form& g);

// Integer 2x2 matrix acting on forms by substitution: (f o M)(x, y) = f(M (x, y)^T).
struct Mat2 {
  BigInt m00 = 1, m01 = 0, m10 = 0, m11 = 1;
};

Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 inverse_sl2(const Mat2& m);
Form act(const Form& f, const Mat2& m);

bool is_primitive(const Form& f);
bool is_reduced(const Form& f);
// One normalized reduction step; optionally accumulates the substitution used.
Form rho(const Form& f, Mat2* acc = nullptr);
// Reduces f, returning g and M with f o M = g.
std::pair<Form, Mat2> reduce(const Form& f);

// All primitive reduced forms of the discriminant, in canonical order.
std::vector<Form> reduced_forms(const BigInt& discriminant);
// Number of proper equivalence classes of primitive forms.
long narrow_class_number(const BigInt& discriminant);

// Proper representations of n by x^2 - d y^2, one per class of solutions under
// the proper automorphs; empty when n has no primitive representation.
std::vector<std::pair<BigInt, BigInt>> primitive_representations(std::int64_t d, const BigInt& n);

}  // namespace quadpell
