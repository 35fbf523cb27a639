#include "quadpell/quadfield.hpp"

#include "quadpell/errors.hpp"

namespace quadpell {

namespace {

void require_same_field(const QuadElem& x, const QuadElem& y) {
  if (x.d() != y.d())
    throw DomainError(ErrorKind::MismatchedField,
                      "elements of Q(sqrt(" + std::to_string(x.d()) + ")) and Q(sqrt(" +
                          std::to_string(y.d()) + "))");
}

bool is_half_odd(const Rat& r) { return r.den() == 2; }

}  // namespace

QuadElem::QuadElem(std::int64_t d, Rat a, Rat b) : d_(d), a_(std::move(a)), b_(std::move(b)) {
  if (d <= 1 || !is_square_free(d))
    throw DomainError(ErrorKind::NotSquareFree, "d = " + std::to_string(d) + " is not a square-free integer > 1");
}

QuadElem add(const QuadElem& x, const QuadElem& y) {
  require_same_field(x, y);
  return QuadElem(QuadElem::Trusted{}, x.d_, x.a_ + y.a_, x.b_ + y.b_);
}

QuadElem sub(const QuadElem& x, const QuadElem& y) {
  require_same_field(x, y);
  return QuadElem(QuadElem::Trusted{}, x.d_, x.a_ - y.a_, x.b_ - y.b_);
}

QuadElem mul(const QuadElem& x, const QuadElem& y) {
  require_same_field(x, y);
  Rat a = x.a_ * y.a_ + x.b_ * y.b_ * Rat(static_cast<long>(x.d_));
  Rat b = x.a_ * y.b_ + x.b_ * y.a_;
  return QuadElem(QuadElem::Trusted{}, x.d_, std::move(a), std::move(b));
}

QuadElem scale(const QuadElem& x, const Rat& r) {
  return QuadElem(QuadElem::Trusted{}, x.d_, x.a_ * r, x.b_ * r);
}

QuadElem conj(const QuadElem& x) { return QuadElem(QuadElem::Trusted{}, x.d_, x.a_, -x.b_); }

Rat norm(const QuadElem& x) {
  return x.a() * x.a() - x.b() * x.b() * Rat(static_cast<long>(x.d()));
}

Rat trace(const QuadElem& x) { return x.a() + x.a(); }

QuadElem inverse(const QuadElem& x) {
  Rat n = norm(x);
  if (n.is_zero()) throw DomainError(ErrorKind::ZeroNormDivisor, "zero has no inverse");
  return scale(conj(x), Rat(1) / n);
}

QuadElem pow(const QuadElem& x, long k) {
  if (k < 0) return pow(inverse(x), -k);
  QuadElem out = QuadElem::one(x.d());
  QuadElem base = x;
  auto e = static_cast<unsigned long>(k);
  while (e > 0) {
    if (e & 1UL) out = mul(out, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return out;
}

bool in_ring(const QuadElem& x, RingTag ring) {
  if (x.a().is_integer() && x.b().is_integer()) return true;
  if (ring == RingTag::ZSqrtD || x.d() % 4 != 1) return false;
  return is_half_odd(x.a()) && is_half_odd(x.b());
}

std::optional<QuadElem> exact_div(const QuadElem& x, const QuadElem& y, RingTag ring) {
  require_same_field(x, y);
  if (norm(y).is_zero()) throw DomainError(ErrorKind::ZeroNormDivisor, "division by zero");
  QuadElem q = mul(x, inverse(y));
  if (!in_ring(q, ring)) return std::nullopt;
  return q;
}

int real_sign(const QuadElem& x) {
  int sa = x.a().sign();
  int sb = x.b().sign();
  if (sa == 0) return sb;
  if (sb == 0 || sa == sb) return sa;
  // Opposite signs: compare a^2 with d*b^2.
  Rat diff = x.a() * x.a() - x.b() * x.b() * Rat(static_cast<long>(x.d()));
  return diff.sign() > 0 ? sa : sb;
}

std::string render(const QuadElem& x, Notation notation) {
  BigInt L = lcm(x.a().den(), x.b().den());
  BigInt A = x.a().num() * (L / x.a().den());
  BigInt B = x.b().num() * (L / x.b().den());
  if (sgn(A) == 0 && sgn(B) == 0) return "0";
  std::string radical = notation == Notation::Ascii ? "sqrt(" + std::to_string(x.d()) + ")"
                                                    : "√" + std::to_string(x.d());
  std::string num;
  if (sgn(A) != 0) num = A.get_str();
  if (sgn(B) != 0) {
    if (sgn(B) < 0)
      num += "-";
    else if (!num.empty())
      num += "+";
    BigInt absB = abs(B);
    if (absB != 1) num += absB.get_str();
    num += radical;
  }
  if (L == 1) return num;
  if (sgn(A) != 0 && sgn(B) != 0) return "(" + num + ")/" + L.get_str();
  return num + "/" + L.get_str();
}

}  // namespace quadpell
