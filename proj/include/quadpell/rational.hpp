#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

#include "quadpell/arith.hpp"

namespace quadpell {

// Exact rational number, always in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(const BigInt& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  template <class Expr>
  Rat(const __gmp_expr<mpz_t, Expr>& n) : v_(BigInt(n)) {}  // NOLINT(google-explicit-constructor)
  Rat(const BigInt& num, const BigInt& den);

  // Accepts "p", "-p", "p/q".
  static Rat parse(std::string_view text);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  std::string str() const;
  const mpq_class& raw() const { return v_; }

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Rat(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

Rat abs(const Rat& r);
Rat pow(const Rat& base, long exponent);

}  // namespace quadpell
