#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "quadpell/rational.hpp"

namespace quadpell {

enum class RingTag { ZSqrtD, OK };

enum class Notation { Unicode, Ascii };

// a + b*sqrt(d) with rational coordinates, d square-free and > 1.
class QuadElem {
 public:
  QuadElem(std::int64_t d, Rat a, Rat b = Rat());

  static QuadElem one(std::int64_t d) { return QuadElem(Trusted{}, d, Rat(1), Rat()); }

  std::int64_t d() const { return d_; }
  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  friend bool operator==(const QuadElem&, const QuadElem&) = default;

 private:
  struct Trusted {};
  QuadElem(Trusted, std::int64_t d, Rat a, Rat b) : d_(d), a_(std::move(a)), b_(std::move(b)) {}

  friend QuadElem add(const QuadElem&, const QuadElem&);
  friend QuadElem sub(const QuadElem&, const QuadElem&);
  friend QuadElem mul(const QuadElem&, const QuadElem&);
  friend QuadElem scale(const QuadElem&, const Rat&);
  friend QuadElem conj(const QuadElem&);

  std::int64_t d_;
  Rat a_;
  Rat b_;
};

QuadElem add(const QuadElem& x, const QuadElem& y);
QuadElem sub(const QuadElem& x, const QuadElem& y);
QuadElem mul(const QuadElem& x, const QuadElem& y);
QuadElem scale(const QuadElem& x, const Rat& r);
QuadElem conj(const QuadElem& x);
Rat norm(const QuadElem& x);
Rat trace(const QuadElem& x);
// Negative exponents go through conj/norm; the zero element has no inverse.
QuadElem pow(const QuadElem& x, long k);
QuadElem inverse(const QuadElem& x);
bool in_ring(const QuadElem& x, RingTag ring);
// The quotient x / y when it lies in the ring, nullopt otherwise.
std::optional<QuadElem> exact_div(const QuadElem& x, const QuadElem& y, RingTag ring);

// Exact sign of the real number a + b*sqrt(d).
int real_sign(const QuadElem& x);

std::string render(const QuadElem& x, Notation notation = Notation::Unicode);

inline QuadElem operator+(const QuadElem& x, const QuadElem& y) { return add(x, y); }
inline QuadElem operator-(const QuadElem& x, const QuadElem& y) { return sub(x, y); }
inline QuadElem operator*(const QuadElem& x, const QuadElem& y) { return mul(x, y); }
inline QuadElem operator-(const QuadElem& x) { return scale(x, Rat(-1)); }

}  // namespace quadpell
