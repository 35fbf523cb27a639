#include "quadpell/rationalpell.hpp"

#include <algorithm>

#include "quadpell/errors.hpp"

namespace quadpell {

namespace {

Rat formula_scale(const Spectrum& spec, const Representation& rep) {
  Rat s(1);
  for (const auto& [p, t] : rep.terms) {
    const long half = spec.at(p).l * t.exponent / 2;
    s *= pow(Rat(static_cast<long>(p)), -half);
  }
  return s;
}

}  // namespace

int parity_index(const PellContext& ctx, const Spectrum& spec, const Representation& rep) {
  long r = ctx.norm_eta < 0 ? rep.n : 0;
  for (const auto& [p, t] : rep.terms)
    if (spec.s_minus.count(p)) r += t.exponent;
  if (rep.core && norm(*rep.core).sign() < 0) r += 1;
  return static_cast<int>(((r % 2) + 2) % 2);
}

RationalPoint generate_rational(const PellContext& ctx, const Spectrum& spec, const Representation& rep) {
  Representation r = rep;
  if (!rep.core) {
    if (rep.m != 0) throw DomainError(ErrorKind::InvalidArgument, "rational representations carry no power of 2");
    for (const auto& [p, t] : rep.terms)
      if ((spec.at(p).l * t.exponent) % 2 != 0)
        throw DomainError(ErrorKind::ParityViolation, "l_p * n_p must be even at p = " + std::to_string(p));
    const Rat s = formula_scale(spec, rep);
    if (!(rep.scale == Rat(1)) && !(rep.scale == s))
      throw DomainError(ErrorKind::InvalidArgument, "scale disagrees with the exponents");
    r.scale = s;
  }
  const QuadElem v = evaluate(ctx, spec, r);
  const Rat n = norm(v);
  if (abs(n) != Rat(1)) throw DomainError(ErrorKind::InvalidArgument, "representation does not have norm +-1");
  const int idx = parity_index(ctx, spec, rep);
  if (n != Rat(idx == 0 ? 1 : -1)) throw InternalInconsistency("parity index disagrees with the norm");
  return RationalPoint{ctx.d, v.a(), v.b(), idx};
}

Representation decompose_rational(const PellContext& ctx, const Spectrum& spec, const Rat& x, const Rat& y) {
  const Rat n = x * x - y * y * Rat(static_cast<long>(ctx.d));
  if (abs(n) != Rat(1)) throw DomainError(ErrorKind::InvalidArgument, "point is not on x^2 - d y^2 = +-1");
  const BigInt Z = lcm(x.den(), y.den());
  const BigInt X = x.num() * (Z / x.den());
  const BigInt Y = y.num() * (Z / y.den());

  Representation rep;
  if (Z == 1) {
    rep = decompose_units(ctx, QuadElem(ctx.d, Rat(X), Rat(Y)));
    if (rep.core) throw InternalInconsistency("integral unit with a nontrivial core");
  } else {
    rep = decompose_square(ctx, spec, X, Y);
    if (rep.core) {
      rep.scale = rep.scale * pow(Rat(2), rep.m) / Rat(Z);
    } else {
      rep.scale = formula_scale(spec, rep);
    }
    rep.m = 0;
  }
  const RationalPoint back = generate_rational(ctx, spec, rep);
  if (!(back.x == x) || !(back.y == y)) throw InternalInconsistency("rational decomposition does not round-trip");
  return rep;
}

std::vector<RationalPoint> enumerate_rational(const PellContext& ctx, const Spectrum& spec, int r,
                                              int max_terms, NRange range) {
  std::vector<std::int64_t> primes;
  for (const auto& [p, e] : spec.entries) primes.push_back(p);
  std::vector<RationalPoint> out;
  Representation rep;
  rep.d = ctx.d;

  auto emit = [&]() {
    for (long n = range.lo; n <= range.hi; ++n) {
      rep.n = n;
      for (int sign : {1, -1}) {
        rep.sign = sign;
        if (parity_index(ctx, spec, rep) != r) continue;
        out.push_back(generate_rational(ctx, spec, rep));
      }
    }
  };
  // Walks subsets of primes in increasing order, then every conjugate choice.
  auto walk = [&](auto&& self, std::size_t start, int left) -> void {
    emit();
    if (left == 0) return;
    for (std::size_t i = start; i < primes.size(); ++i) {
      const std::int64_t p = primes[i];
      const long exponent = spec.at(p).l % 2 == 0 ? 1 : 2;
      for (Conj c : {Conj::Xi, Conj::XiBar}) {
        rep.terms[p] = Term{exponent, c};
        self(self, i + 1, left - 1);
      }
      rep.terms.erase(p);
    }
  };
  walk(walk, 0, max_terms);

  auto key = [](const RationalPoint& pt) { return lcm(pt.x.den(), pt.y.den()); };
  std::sort(out.begin(), out.end(), [&](const RationalPoint& s, const RationalPoint& t) {
    const BigInt ks = key(s), kt = key(t);
    if (ks != kt) return ks < kt;
    if (!(s.x == t.x)) return s.x < t.x;
    return s.y < t.y;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace quadpell
