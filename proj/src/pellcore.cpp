#include "quadpell/pellcore.hpp"

#include <functional>
#include <mutex>

#include "quadpell/errors.hpp"
#include "quadpell/forms.hpp"

namespace quadpell {

namespace {

void require_d(std::int64_t d) {
  if (d <= 1 || !is_square_free(d))
    throw DomainError(ErrorKind::NotSquareFree, "d = " + std::to_string(d) + " is not a square-free integer > 1");
}

// Walks the convergents p/q of (P0 + sqrt(d)) / Q0 until visit returns true.
void walk_convergents(std::int64_t d, const BigInt& P0, const BigInt& Q0,
                      const std::function<bool(const BigInt&, const BigInt&)>& visit) {
  const BigInt D(static_cast<long>(d));
  const BigInt s = isqrt(D);
  BigInt P = P0, Q = Q0;
  BigInt p_prev = 1, p = 0, q_prev = 0, q = 1;
  const long limit = 8 * d + 64;
  for (long step = 0; step < limit; ++step) {
    if (sgn(Q) <= 0) throw InternalInconsistency("non-positive continued fraction denominator");
    BigInt a = floor_div(P + s, Q);
    BigInt pn = a * p_prev + p;
    BigInt qn = a * q_prev + q;
    p = p_prev;
    q = q_prev;
    p_prev = pn;
    q_prev = qn;
    if (visit(p_prev, q_prev)) return;
    P = a * Q - P;
    Q = (D - P * P) / Q;
  }
  throw InternalInconsistency("continued fraction did not reach a unit");
}

}  // namespace

CFExpansion continued_fraction_sqrt(std::int64_t d) {
  require_d(d);
  const BigInt D(static_cast<long>(d));
  CFExpansion cf;
  cf.a0 = isqrt(D);
  BigInt P = 0, Q = 1, a = cf.a0;
  do {
    P = a * Q - P;
    Q = (D - P * P) / Q;
    a = (cf.a0 + P) / Q;
    cf.period.push_back(a);
  } while (Q != 1);
  return cf;
}

bool splits(std::int64_t d, std::int64_t p) {
  require_d(d);
  if (!is_prime(p)) throw DomainError(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  const std::int64_t disc = d % 4 == 1 ? d : 4 * d;
  return kronecker(BigInt(static_cast<long>(disc)), p) >= 0;
}

long class_number(std::int64_t d) {
  return make_context(d).h;
}

bool neg_pell_rational(std::int64_t d) {
  require_d(d);
  for (const auto& [p, e] : factor(BigInt(static_cast<long>(d))))
    if (mod_floor(p, 4) == 3) return false;
  return true;
}

PellContext make_context(std::int64_t d) {
  require_d(d);
  const std::int64_t disc = d % 4 == 1 ? d : 4 * d;
  const BigInt D(static_cast<long>(d));

  std::optional<QuadElem> eps;
  walk_convergents(d, 0, 1, [&](const BigInt& p, const BigInt& q) {
    BigInt n = p * p - D * q * q;
    if (n != 1 && n != -1) return false;
    eps = QuadElem(d, Rat(p), Rat(q));
    return true;
  });

  QuadElem eta = *eps;
  if (d % 4 == 1) {
    std::optional<QuadElem> half;
    walk_convergents(d, 1, 2, [&](const BigInt& p, const BigInt& q) {
      BigInt x = 2 * p - q;
      BigInt n = x * x - D * q * q;
      if (n != 4 && n != -4) return false;
      half = QuadElem(d, Rat(x, 2), Rat(q, 2));
      return true;
    });
    eta = *half;
  }
  if (!(eta == *eps) && !(pow(eta, 3) == *eps))
    throw InternalInconsistency("fundamental unit and Pell solution disagree for d = " + std::to_string(d));

  const int norm_eta = norm(eta).sign();
  const long narrow = narrow_class_number(BigInt(static_cast<long>(disc)));
  const long h = norm_eta < 0 ? narrow : narrow / 2;
  return PellContext{d,
                     disc,
                     eta,
                     *eps,
                     norm_eta,
                     in_ring(eta, RingTag::ZSqrtD),
                     norm_eta < 0,
                     neg_pell_rational(d),
                     h};
}

std::pair<BigInt, BigInt> pell_sequence(const PellContext& ctx, long n) {
  if (n < 1) throw DomainError(ErrorKind::InvalidArgument, "pell_sequence index must be >= 1");
  QuadElem e = pow(ctx.eps, n);
  return {e.a().num(), e.b().num()};
}

std::shared_ptr<const PellContext> ContextCache::get(std::int64_t d) {
  {
    std::shared_lock lock(mutex_);
    auto it = contexts_.find(d);
    if (it != contexts_.end()) return it->second;
  }
  auto ctx = std::make_shared<const PellContext>(make_context(d));
  std::unique_lock lock(mutex_);
  return contexts_.emplace(d, std::move(ctx)).first->second;
}

}  // namespace quadpell
