#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quadpell {

using BigInt = mpz_class;

// floor(sqrt(n)) for n >= 0.
BigInt isqrt(const BigInt& n);
// ceil(sqrt(n)) for n >= 0.
BigInt isqrt_ceil(const BigInt& n);
std::optional<BigInt> exact_sqrt(const BigInt& n);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
BigInt pow(const BigInt& base, unsigned long exponent);
// Floor division and the matching nonnegative remainder for b > 0.
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt mod_floor(const BigInt& a, const BigInt& b);

bool is_prime(std::int64_t n);
bool is_square_free(std::int64_t n);
std::vector<std::int64_t> primes_up_to(std::int64_t bound);

// Trial division; fine for the desk-scale inputs this library targets.
std::vector<std::pair<BigInt, unsigned>> factor(BigInt n);
BigInt square_free_kernel(const BigInt& n);
unsigned ord(BigInt n, long p);

int jacobi(const BigInt& a, const BigInt& n);
// Kronecker symbol (D/p) for a prime p, including p = 2.
int kronecker(const BigInt& D, std::int64_t p);

bool fits_int64(const BigInt& n);
std::int64_t to_int64(const BigInt& n);
BigInt parse_bigint(const std::string& text);

}  // namespace quadpell
