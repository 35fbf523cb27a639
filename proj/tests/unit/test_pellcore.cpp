#include <doctest.h>

#include <thread>

#include "quadpell/errors.hpp"
#include "quadpell/pellcore.hpp"

using namespace quadpell;

namespace {
std::vector<BigInt> big(std::initializer_list<long> v) { return {v.begin(), v.end()}; }
}  // namespace

TEST_CASE("continued fractions of square roots") {
  auto cf2 = continued_fraction_sqrt(2);
  CHECK(cf2.a0 == 1);
  CHECK(cf2.period == big({2}));
  auto cf13 = continued_fraction_sqrt(13);
  CHECK(cf13.a0 == 3);
  CHECK(cf13.period == big({1, 1, 1, 1, 6}));
  auto cf34 = continued_fraction_sqrt(34);
  CHECK(cf34.a0 == 5);
  CHECK(cf34.period == big({1, 4, 1, 10}));
  CHECK_THROWS_AS(continued_fraction_sqrt(9), DomainError);
}

TEST_CASE("contexts") {
  const PellContext c34 = make_context(34);
  CHECK(c34.f1() == 35);
  CHECK(c34.g1() == 6);
  CHECK(c34.h == 2);
  CHECK(c34.disc == 136);
  CHECK(c34.norm_eta == 1);
  CHECK_FALSE(c34.neg_pell_integral);
  CHECK(c34.neg_pell_rational);
  CHECK(c34.eta == c34.eps);

  const PellContext c5 = make_context(5);
  CHECK(c5.eta == QuadElem(5, Rat(BigInt(1), 2), Rat(BigInt(1), 2)));
  CHECK(c5.eps == QuadElem(5, Rat(2), Rat(1)));
  CHECK_FALSE(c5.eta_in_zd);
  CHECK(c5.disc == 5);

  const PellContext c37 = make_context(37);
  CHECK(c37.eta_in_zd);
  CHECK(c37.eta == QuadElem(37, Rat(6), Rat(1)));

  CHECK(make_context(3).h == 1);
  CHECK(make_context(79).h == 3);
  CHECK(make_context(2).h == 1);
  CHECK(make_context(10).h == 2);
  CHECK_THROWS_AS(make_context(12), DomainError);
}

TEST_CASE("pell sequence") {
  const PellContext c2 = make_context(2);
  CHECK(pell_sequence(c2, 3) == std::make_pair(BigInt(7), BigInt(5)));
  CHECK(pell_sequence(make_context(5), 2) == std::make_pair(BigInt(9), BigInt(4)));
  CHECK_THROWS_AS(pell_sequence(c2, 0), DomainError);
}

TEST_CASE("splitting and rational negative Pell") {
  CHECK(splits(34, 3));
  CHECK(splits(34, 2));
  CHECK_FALSE(splits(34, 7));
  CHECK_FALSE(splits(5, 2));
  CHECK(splits(17, 2));
  CHECK(neg_pell_rational(34));
  CHECK_FALSE(neg_pell_rational(3));
  CHECK_FALSE(neg_pell_rational(21));
  CHECK(class_number(34) == 2);
}

TEST_CASE("context cache shares one instance") {
  ContextCache cache;
  std::vector<std::thread> threads;
  std::vector<std::shared_ptr<const PellContext>> seen(4);
  for (int i = 0; i < 4; ++i) threads.emplace_back([&, i] { seen[i] = cache.get(34); });
  for (auto& t : threads) t.join();
  CHECK(seen[0]->h == 2);
  for (const auto& s : seen) CHECK(s == cache.get(34));
}
