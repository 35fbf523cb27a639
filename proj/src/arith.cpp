#include "quadpell/arith.hpp"

#include <stdexcept>

#include "quadpell/errors.hpp"

namespace quadpell {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotSquareFree: return "NotSquareFree";
    case ErrorKind::MismatchedField: return "MismatchedField";
    case ErrorKind::ZeroNormDivisor: return "ZeroNormDivisor";
    case ErrorKind::NotStrictlyPrimitive: return "NotStrictlyPrimitive";
    case ErrorKind::NotSquareNorm: return "NotSquareNorm";
    case ErrorKind::NoStrictSolution: return "NoStrictSolution";
    case ErrorKind::NoIntegralNegativePell: return "NoIntegralNegativePell";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::SpectrumNotCovering: return "SpectrumNotCovering";
    case ErrorKind::TrivialPair: return "TrivialPair";
    case ErrorKind::NoRationalBisector: return "NoRationalBisector";
  }
  return "Unknown";
}

BigInt isqrt(const BigInt& n) {
  if (sgn(n) < 0) throw DomainError(ErrorKind::InvalidArgument, "isqrt of a negative number");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

BigInt isqrt_ceil(const BigInt& n) {
  BigInt r = isqrt(n);
  if (r * r < n) ++r;
  return r;
}

std::optional<BigInt> exact_sqrt(const BigInt& n) {
  if (sgn(n) < 0 || !mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  return isqrt(n);
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

BigInt mod_floor(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t k = 3; k * k <= n; k += 2)
    if (n % k == 0) return false;
  return true;
}

bool is_square_free(std::int64_t n) {
  if (n < 1) return false;
  for (std::int64_t k = 2; k * k <= n; ++k) {
    if (n % (k * k) == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
  std::vector<std::int64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (std::int64_t k = 2; k <= bound; ++k) {
    if (composite[k]) continue;
    out.push_back(k);
    for (std::int64_t j = k * k; j <= bound; j += k) composite[j] = true;
  }
  return out;
}

std::vector<std::pair<BigInt, unsigned>> factor(BigInt n) {
  if (sgn(n) == 0) throw DomainError(ErrorKind::InvalidArgument, "cannot factor zero");
  n = abs(n);
  std::vector<std::pair<BigInt, unsigned>> out;
  auto strip = [&](const BigInt& p) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  };
  strip(2);
  for (BigInt p = 3; p * p <= n; p += 2) strip(p);
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

BigInt square_free_kernel(const BigInt& n) {
  BigInt k = 1;
  for (const auto& [p, e] : factor(n))
    if (e % 2 == 1) k *= p;
  return k;
}

unsigned ord(BigInt n, long p) {
  if (sgn(n) == 0) throw DomainError(ErrorKind::InvalidArgument, "ord of zero");
  unsigned e = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
    n /= p;
    ++e;
  }
  return e;
}

int jacobi(const BigInt& a, const BigInt& n) {
  return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

int kronecker(const BigInt& D, std::int64_t p) {
  if (p == 2) {
    if (mpz_even_p(D.get_mpz_t())) return 0;
    BigInt r = mod_floor(D, 8);
    return (r == 1 || r == 7) ? 1 : -1;
  }
  return mpz_kronecker(D.get_mpz_t(), BigInt(static_cast<long>(p)).get_mpz_t());
}

bool fits_int64(const BigInt& n) { return mpz_fits_slong_p(n.get_mpz_t()) != 0; }

std::int64_t to_int64(const BigInt& n) {
  if (!fits_int64(n)) throw DomainError(ErrorKind::InvalidArgument, "integer out of 64-bit range");
  return n.get_si();
}

BigInt parse_bigint(const std::string& text) {
  BigInt r;
  if (text.empty() || r.set_str(text, 10) != 0)
    throw DomainError(ErrorKind::InvalidArgument, "not an integer: " + text);
  return r;
}

}  // namespace quadpell
