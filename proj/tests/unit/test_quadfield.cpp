#include <doctest.h>

#include "quadpell/errors.hpp"
#include "quadpell/quadfield.hpp"

using namespace quadpell;

namespace {
QuadElem q(std::int64_t d, long a, long b) { return QuadElem(d, Rat(a), Rat(b)); }
QuadElem half(std::int64_t d, long a, long b) { return QuadElem(d, Rat(BigInt(a), 2), Rat(BigInt(b), 2)); }
}  // namespace

TEST_CASE("construction validates d") {
  CHECK_THROWS_AS(q(4, 1, 1), DomainError);
  CHECK_THROWS_AS(q(1, 1, 1), DomainError);
  CHECK_THROWS_AS(q(18, 1, 1), DomainError);
  try {
    q(12, 1, 1);
  } catch (const DomainError& e) {
    CHECK(e.kind() == ErrorKind::NotSquareFree);
  }
}

TEST_CASE("ring operations") {
  const QuadElem eta = q(34, 35, 6);
  CHECK(norm(eta) == Rat(1));
  CHECK(eta * q(34, 5, 1) == q(34, 379, 65));
  CHECK(conj(eta) == q(34, 35, -6));
  CHECK(pow(eta, -1) == conj(eta));
  CHECK(pow(eta, 0) == QuadElem::one(34));
  CHECK(pow(q(2, 1, 1), 3) == q(2, 7, 5));
  CHECK(pow(half(5, 1, 1), 3) == q(5, 2, 1));
  CHECK(trace(eta) == Rat(70));
  CHECK_THROWS_AS(q(2, 1, 1) + q(3, 1, 1), DomainError);
  CHECK_THROWS_AS(pow(q(2, 0, 0), -1), DomainError);
}

TEST_CASE("ring membership") {
  CHECK(in_ring(q(5, 2, 1), RingTag::ZSqrtD));
  CHECK_FALSE(in_ring(half(5, 1, 1), RingTag::ZSqrtD));
  CHECK(in_ring(half(5, 1, 1), RingTag::OK));
  CHECK_FALSE(in_ring(half(5, 1, 2), RingTag::OK));
  CHECK_FALSE(in_ring(half(7, 1, 1), RingTag::OK));
  CHECK_FALSE(in_ring(QuadElem(5, Rat(BigInt(1), 3), Rat(0)), RingTag::OK));
}

TEST_CASE("exact division") {
  auto quotient = exact_div(q(2, 11, 6), q(2, 3, 1), RingTag::ZSqrtD);
  REQUIRE(quotient);
  CHECK(*quotient == q(2, 3, 1));
  CHECK_FALSE(exact_div(q(2, 3, 1), q(2, 5, 1), RingTag::ZSqrtD));
  auto in_ok = exact_div(q(5, 3, 1), q(5, 2, 0), RingTag::OK);
  REQUIRE(in_ok);
  CHECK(*in_ok == half(5, 3, 1));
  CHECK_FALSE(exact_div(q(5, 3, 1), q(5, 2, 0), RingTag::ZSqrtD));
  CHECK_THROWS_AS(exact_div(q(5, 3, 1), q(5, 0, 0), RingTag::OK), DomainError);
}

TEST_CASE("exact real sign") {
  CHECK(real_sign(q(34, 35, -6)) == 1);
  CHECK(real_sign(q(34, 5, -1)) == -1);
  CHECK(real_sign(q(34, -5, 1)) == 1);
  CHECK(real_sign(q(34, 0, 0)) == 0);
  CHECK(real_sign(q(2, 0, -1)) == -1);
}

TEST_CASE("rendering") {
  CHECK(render(q(34, 35, 6)) == "35+6√34");
  CHECK(render(half(5, 1, 1)) == "(1+√5)/2");
  CHECK(render(half(5, 1, 1), Notation::Ascii) == "(1+sqrt(5))/2");
  CHECK(render(q(2, 3, -1), Notation::Ascii) == "3-sqrt(2)");
  CHECK(render(q(2, 0, -2)) == "-2√2");
  CHECK(render(q(2, -7, 0)) == "-7");
  CHECK(render(q(2, 0, 0)) == "0");
  CHECK(render(QuadElem(2, Rat(BigInt(1), 7), Rat(BigInt(5), 7))) == "(1+5√2)/7");
  CHECK(render(QuadElem(2, Rat(0), Rat(BigInt(1), 3))) == "√2/3");
}
