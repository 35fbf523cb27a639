#include <doctest.h>

#include "quadpell/errors.hpp"
#include "quadpell/oracle.hpp"
#include "quadpell/spectrum.hpp"

using namespace quadpell;

TEST_CASE("xi for single primes") {
  const PellContext c34 = make_context(34);
  auto e11 = xi(c34, 11);
  REQUIRE(e11);
  CHECK(e11->l == 2);
  CHECK(e11->x() == 27);
  CHECK(e11->y() == 5);
  CHECK(e11->norm() == -121);
  auto e3 = xi(c34, 3);
  REQUIRE(e3);
  CHECK(e3->xi == QuadElem(34, Rat(5), Rat(1)));
  CHECK_FALSE(xi(c34, 7));
  CHECK_FALSE(xi(c34, 2));
  CHECK_FALSE(xi(c34, 17));
  CHECK_THROWS_AS(xi(c34, 9), DomainError);

  auto e17 = xi(make_context(17), 2);
  REQUIRE(e17);
  CHECK(e17->l == 3);
  CHECK(e17->xi == QuadElem(17, Rat(5), Rat(1)));
}

TEST_CASE("spectra for reference fields") {
  const PellContext c34 = make_context(34);
  const Spectrum s34 = spectrum(c34, 97);
  CHECK(s34.s_minus == std::set<std::int64_t>{3, 5, 11, 29, 37, 61});
  CHECK(s34.covers(7));
  CHECK_FALSE(s34.covers(101));
  CHECK_THROWS_AS(s34.at(101), DomainError);
  CHECK_THROWS_AS(s34.at(7), DomainError);

  const Spectrum s10 = spectrum(make_context(10), 97);
  std::set<std::int64_t> keys;
  for (const auto& [p, e] : s10.entries) keys.insert(p);
  CHECK(keys == std::set<std::int64_t>{3, 13, 31, 37, 41, 43, 53, 67, 71, 79, 83, 89});
  CHECK(s10.s_minus.empty());
}

TEST_CASE("two lies in S(d) exactly when +-2 is represented, for d = 3 (mod 4)") {
  CHECK(in_S(make_context(3), 2));
  CHECK(in_S(make_context(7), 2));
  CHECK_FALSE(in_S(make_context(15), 2));
  CHECK_FALSE(in_S(make_context(35), 2));
  auto e = xi(make_context(3), 2);
  REQUIRE(e);
  CHECK(e->l == 1);
  CHECK(e->norm() == -2);
}

TEST_CASE("entries agree with an independent brute-force search") {
  for (std::int64_t d : {2, 3, 5, 6, 7, 10, 13, 14, 17, 21, 26, 29, 33, 34, 37}) {
    const PellContext ctx = make_context(d);
    const Spectrum spec = spectrum(ctx, 97);
    for (std::int64_t p : primes_up_to(97)) {
      CAPTURE(d);
      CAPTURE(p);
      const int lmax = max_level(ctx, p);
      auto brute = oracle::brute_xi(d, p, lmax, {20000, 0});
      const XiEntry* e = spec.find(p);
      REQUIRE(bool(brute) == (e != nullptr));
      if (!e) continue;
      CHECK(e->l == brute->l);
      CHECK(e->x() == brute->x);
      CHECK(e->y() == brute->y);
      CHECK(e->norm_sign == brute->sign);
      CHECK(e->l <= lmax);
      CHECK(norm(e->xi) == Rat(e->norm()));
      CHECK(gcd(e->x(), BigInt(static_cast<long>(d)) * e->y()) == 1);
    }
  }
}

TEST_CASE("bounds on l") {
  CHECK(max_level(make_context(17), 2) == 3);
  CHECK(max_level(make_context(5), 2) == 2);
  CHECK(max_level(make_context(37), 3) == 3);
  CHECK(max_level(make_context(34), 3) == 2);
}

TEST_CASE("xi_2 against powers of eta when eta is half-integral") {
  for (std::int64_t d : {5, 13, 29, 53, 61}) {
    CAPTURE(d);
    const PellContext ctx = make_context(d);
    REQUIRE_FALSE(ctx.eta_in_zd);
    auto e = xi(ctx, 2);
    REQUIRE(e);
    CHECK(e->l == 2);
    CHECK(e->xi != scale(ctx.eta, Rat(2)));
    CHECK(e->xi == scale(pow(ctx.eta, 2), Rat(2)));
  }
}
