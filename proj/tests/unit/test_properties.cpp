#include <doctest.h>

#include <cmath>
#include <random>

#include "quadpell/bisector.hpp"
#include "quadpell/errors.hpp"
#include "quadpell/oracle.hpp"
#include "quadpell/rationalpell.hpp"

using namespace quadpell;

namespace {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  Rat rat(long bound) { return Rat(BigInt(integer(-bound, bound)), BigInt(integer(1, bound))); }
  std::int64_t square_free(std::int64_t lo, std::int64_t hi) {
    for (;;) {
      std::int64_t d = integer(lo, hi);
      if (is_square_free(d)) return d;
    }
  }
  QuadElem elem(std::int64_t d, long bound) { return QuadElem(d, rat(bound), rat(bound)); }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[static_cast<std::size_t>(integer(0, static_cast<long>(v.size()) - 1))]; }

 private:
  std::mt19937_64 rng_;
};

constexpr int kCases = 200;

}  // namespace

TEST_CASE("field arithmetic laws") {
  Gen g(1);
  for (int i = 0; i < kCases; ++i) {
    const std::int64_t d = g.square_free(2, 200);
    const QuadElem x = g.elem(d, 30), y = g.elem(d, 30);
    CHECK(norm(x * y) == norm(x) * norm(y));
    CHECK(conj(conj(x)) == x);
    CHECK(conj(x * y) == conj(x) * conj(y));
    const long a = g.integer(-4, 4), b = g.integer(-4, 4);
    if (!x.is_zero()) {
      CHECK(pow(x, a + b) == pow(x, a) * pow(x, b));
      auto q = exact_div(x * y, x, RingTag::OK);
      CHECK(bool(q) == in_ring(y, RingTag::OK));
      if (q) CHECK(*q == y);
    }
    const QuadElem u(d, Rat(g.integer(-50, 50)), Rat(g.integer(-50, 50)));
    const QuadElem v(d, Rat(g.integer(-50, 50)), Rat(g.integer(-50, 50)));
    CHECK(in_ring(u * v, RingTag::ZSqrtD));
    const double approx = u.a().raw().get_d() + u.b().raw().get_d() * std::sqrt(static_cast<double>(d));
    if (std::abs(approx) > 1e-6) CHECK(real_sign(u) == (approx > 0 ? 1 : -1));
  }
}

TEST_CASE("unit invariants") {
  for (std::int64_t d = 2; d <= 300; ++d) {
    if (!is_square_free(d)) continue;
    CAPTURE(d);
    const PellContext ctx = make_context(d);
    CHECK((ctx.eps == ctx.eta || ctx.eps == pow(ctx.eta, 3)));
    CHECK(abs(norm(ctx.eps)) == Rat(1));
    CHECK(norm(ctx.eta) == Rat(ctx.norm_eta));
    CHECK(in_ring(ctx.eta, RingTag::OK));
    CHECK(ctx.neg_pell_integral == (ctx.norm_eta < 0));
    const auto [f3, g3] = pell_sequence(ctx, 3);
    CHECK(Rat(BigInt(f3 * f3 - BigInt(static_cast<long>(d)) * g3 * g3)) == norm(ctx.eps));
  }
}

TEST_CASE("the fundamental unit is the least brute-force unit") {
  for (std::int64_t d : {2, 3, 5, 6, 7, 13, 21, 29, 34, 37, 46, 53, 61}) {
    const PellContext ctx = make_context(d);
    auto hits = oracle::brute_solutions(d, 1, {40000, 0});
    std::int64_t y = 0, x = 0;
    for (const auto& h : hits)
      if (h.y > 0) {
        x = h.x;
        y = h.y;
        break;
      }
    REQUIRE(y > 0);
    CHECK(ctx.f1() == BigInt(static_cast<long>(x)));
    CHECK(ctx.g1() == BigInt(static_cast<long>(y)));
  }
}

TEST_CASE("strict decomposition round-trips on brute-force solutions") {
  Gen g(2);
  for (int i = 0; i < kCases; ++i) {
    const std::int64_t d = g.square_free(2, 60);
    const std::int64_t z = g.integer(2, 200);
    const PellContext ctx = make_context(d);
    const Spectrum spec = spectrum_for(ctx, BigInt(static_cast<long>(z)));
    for (const auto& h : oracle::brute_solutions(d, z, {300, 0})) {
      if (!h.strictly_primitive) continue;
      CAPTURE(d);
      CAPTURE(z);
      CAPTURE(h.x);
      CAPTURE(h.y);
      const BigInt x(static_cast<long>(h.x)), y(static_cast<long>(h.y));
      Representation r = decompose_strict(ctx, spec, x, y);
      CHECK(evaluate(ctx, spec, r) == QuadElem(d, Rat(x), Rat(y)));
      CHECK(validate_representation(ctx, spec, r).valid);
      CHECK(decompose_strict(ctx, spec, x, y) == r);
      Representation shifted = decompose_strict(ctx, spec, -x, y);
      CHECK(evaluate(ctx, spec, shifted) == QuadElem(d, Rat(-x), Rat(y)));
      if (ctx.eta_in_zd) {
        const QuadElem moved = ctx.eta * QuadElem(d, Rat(x), Rat(y));
        Representation m = decompose_strict(ctx, spec, moved.a().num(), moved.b().num());
        CHECK(m.n == r.n + 1);
        CHECK(m.terms == r.terms);
        CHECK(m.core == r.core);
      }
    }
  }
}

TEST_CASE("existence agrees with brute force") {
  for (std::int64_t d : {2, 3, 5, 6, 7, 10, 13, 15, 17, 21, 33, 34, 37, 41, 65, 82}) {
    const PellContext ctx = make_context(d);
    const Spectrum spec = spectrum(ctx, 97);
    for (std::int64_t z = 2; z <= 60; ++z) {
      bool brute = false;
      for (const auto& h : oracle::brute_solutions(d, z, {5000, 0})) brute = brute || h.strictly_primitive;
      CAPTURE(d);
      CAPTURE(z);
      CHECK(strict_exists(ctx, spec, BigInt(static_cast<long>(z))).exists == brute);
    }
  }
}

TEST_CASE("square solutions") {
  Gen g(3);
  for (int i = 0; i < 40; ++i) {
    const std::int64_t d = g.square_free(2, 40);
    const std::int64_t z = g.integer(2, 40);
    const PellContext ctx = make_context(d);
    const Spectrum spec = spectrum_for(ctx, BigInt(static_cast<long>(z)));
    const BigInt z2 = BigInt(static_cast<long>(z * z));
    for (const auto& [x, y] : generate_square(ctx, spec, BigInt(static_cast<long>(z)), {-2, 2})) {
      CAPTURE(d);
      CAPTURE(z);
      CHECK(abs(x * x - BigInt(static_cast<long>(d)) * y * y) == z2);
      Representation r = decompose_square(ctx, spec, x, y);
      CHECK(evaluate(ctx, spec, r) == QuadElem(d, Rat(x), Rat(y)));
      if (!r.core) CHECK(validate_representation(ctx, spec, r, Purpose::Square).valid);
    }
  }
}

TEST_CASE("rational points round-trip with the predicted parity") {
  Gen g(4);
  for (std::int64_t d : {2, 5, 10, 13, 17, 26, 29, 34, 3, 7, 6}) {
    const PellContext ctx = make_context(d);
    const Spectrum spec = spectrum(ctx, 40);
    std::vector<std::int64_t> primes;
    for (const auto& [p, e] : spec.entries) primes.push_back(p);
    for (int i = 0; i < 40; ++i) {
      Representation r;
      r.d = d;
      r.sign = g.integer(0, 1) ? 1 : -1;
      r.n = g.integer(-3, 3);
      for (int k = g.integer(0, 2); k > 0 && !primes.empty(); --k) {
        const std::int64_t p = g.pick(primes);
        const long base = spec.at(p).l % 2 == 0 ? 1 : 2;
        r.terms[p] = Term{base * g.integer(1, 2), g.integer(0, 1) ? Conj::Xi : Conj::XiBar};
      }
      const RationalPoint pt = generate_rational(ctx, spec, r);
      CAPTURE(d);
      CHECK(pt.x * pt.x - Rat(static_cast<long>(d)) * pt.y * pt.y == Rat(pt.r == 0 ? 1 : -1));
      if (!ctx.neg_pell_rational) CHECK(pt.r == 0);
      const Representation back = decompose_rational(ctx, spec, pt.x, pt.y);
      CHECK(generate_rational(ctx, spec, back) == pt);
      CHECK(parity_index(ctx, spec, back) == pt.r);
    }
  }
}

TEST_CASE("bisector identities") {
  Gen g(5);
  for (int i = 0; i < kCases; ++i) {
    const Rat a = g.rat(40), b = g.rat(40);
    if (a == b || a == -b) continue;
    auto bis = bisect(a, b);
    auto swapped = bisect(b, a);
    CHECK(bool(bis) == bool(swapped));
    if (!bis) continue;
    CHECK(verify_star(a, b, bis->c_plus));
    CHECK(verify_star(a, b, bis->c_minus));
    CHECK(bis->c_plus * bis->c_minus == Rat(-1));
    CHECK(oracle::tangent_bisector_check(a, b, bis->c_plus) != oracle::Tri::False);
    auto negated = bisect(-a, -b);
    REQUIRE(negated);
    CHECK(negated->c_plus == -bis->c_plus);
  }
  for (int i = 0; i < kCases; ++i) {
    const long l = g.integer(-15, 15), m = g.integer(-15, 15), n = g.integer(1, 15);
    if (l == 0 || m == 0 || std::abs(l) == std::abs(m) || l * m == n * n) continue;
    auto ts = case1_generate(l, m, n);
    for (const auto& t : ts) CHECK(verify_star(t.a, t.b, t.c));
    if (ts.size() == 2) CHECK(ts[0].c * ts[1].c == Rat(-1));
    auto bis = bisect(ts[0].a, ts[0].b);
    REQUIRE(bis);
    CHECK(bis->d == 1);
  }
}
