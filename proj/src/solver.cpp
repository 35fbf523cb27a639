#include "quadpell/solver.hpp"

#include <algorithm>
#include <set>

#include "quadpell/errors.hpp"
#include "quadpell/forms.hpp"

namespace quadpell {

const char* to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::A1: return "A1";
    case CaseTag::A1Prime: return "A1'";
    case CaseTag::A2: return "A2";
    case CaseTag::A2Prime: return "A2'";
    case CaseTag::B1: return "B1";
    case CaseTag::B2: return "B2";
  }
  return "?";
}

namespace {

using Pair = std::pair<BigInt, BigInt>;

BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

void require_covered(const Spectrum& spec, const std::vector<std::pair<BigInt, unsigned>>& primes) {
  for (const auto& [p, e] : primes)
    if (!spec.covers(to_int64(p)))
      throw DomainError(ErrorKind::SpectrumNotCovering,
                        "spectrum does not cover prime " + p.get_str());
}

void require_context(const PellContext& ctx, const Spectrum& spec) {
  if (spec.d != ctx.d)
    throw DomainError(ErrorKind::MismatchedField, "spectrum and context disagree on d");
}

QuadElem conj_choice(const XiEntry& e, Conj c) { return c == Conj::Xi ? e.xi : conj(e.xi); }

CaseTag paper_tag(const PellContext& ctx, const Spectrum& spec, std::int64_t p) {
  const bool member = spec.find(p) != nullptr;
  if (ctx.d % 8 == 5 && ctx.eta_in_zd) return (p != 2 && member) ? CaseTag::B1 : CaseTag::B2;
  if (p == 2 && !ctx.eta_in_zd) return member ? CaseTag::A1Prime : CaseTag::A2Prime;
  return member ? CaseTag::A1 : CaseTag::A2;
}

bool paper_condition(CaseTag tag, unsigned e, int l) {
  switch (tag) {
    case CaseTag::A1:
    case CaseTag::B1: return e % static_cast<unsigned>(l) == 0;
    case CaseTag::A1Prime: return e % 2 == 0;
    case CaseTag::A2:
    case CaseTag::B2: return e == 0;
    case CaseTag::A2Prime: return e == 0 || e == 2;
  }
  return false;
}

Pair normalized(const QuadElem& v) {
  BigInt x = v.a().num(), y = v.b().num();
  if (sgn(y) < 0) return {-x, -y};
  return {x, y};
}

void sort_pairs(std::vector<Pair>& v) {
  std::sort(v.begin(), v.end(), [](const Pair& s, const Pair& t) {
    if (abs(s.second) != abs(t.second)) return abs(s.second) < abs(t.second);
    return s.first < t.first;
  });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<Pair> all_primitive_reps(std::int64_t d, const BigInt& z) {
  std::vector<Pair> out = primitive_representations(d, z);
  auto neg = primitive_representations(d, -z);
  out.insert(out.end(), neg.begin(), neg.end());
  return out;
}

bool truly_exists(const PellContext& ctx, const BigInt& z) {
  if (gcd(z, big(ctx.d)) != 1) return false;
  return !primitive_representations(ctx.d, z).empty() || !primitive_representations(ctx.d, -z).empty();
}

// Greedy division of residual by f (else by conj f), at most kmax times.
std::pair<long, Conj> peel(QuadElem& residual, const QuadElem& f, long kmax) {
  for (Conj choice : {Conj::Xi, Conj::XiBar}) {
    const QuadElem g = choice == Conj::Xi ? f : conj(f);
    long k = 0;
    while (k < kmax) {
      auto q = exact_div(residual, g, RingTag::OK);
      if (!q) break;
      residual = *q;
      ++k;
    }
    if (k > 0) return {k, choice};
  }
  return {0, Conj::Xi};
}

// Shapes (sign = 1, n = 0) of every class of strictly primitive solutions of +-z.
std::vector<Representation> strict_shapes(const PellContext& ctx, const Spectrum& spec, const BigInt& z) {
  std::vector<Representation> shapes;
  if (gcd(z, big(ctx.d)) != 1) return shapes;
  for (const auto& [x, y] : all_primitive_reps(ctx.d, z)) {
    Representation r = decompose_strict(ctx, spec, x, y);
    r.sign = 1;
    r.n = 0;
    if (std::find(shapes.begin(), shapes.end(), r) == shapes.end()) shapes.push_back(r);
  }
  return shapes;
}

void emit_strict(const PellContext& ctx, const Spectrum& spec, const std::vector<Representation>& shapes,
                 const BigInt& multiplier, NRange range, std::vector<Pair>& out) {
  for (Representation r : shapes) {
    for (long n = range.lo; n <= range.hi; ++n) {
      r.n = n;
      QuadElem v = evaluate(ctx, spec, r);
      if (!in_ring(v, RingTag::ZSqrtD) || !strictly_primitive(ctx.d, v.a().num(), v.b().num())) continue;
      out.push_back(normalized(scale(v, Rat(multiplier))));
    }
  }
}

}  // namespace

bool strictly_primitive(std::int64_t d, const BigInt& x, const BigInt& y) {
  return gcd(x, big(d) * y) == 1;
}

QuadElem evaluate(const PellContext& ctx, const Spectrum& spec, const Representation& rep) {
  require_context(ctx, spec);
  if (rep.d != ctx.d) throw DomainError(ErrorKind::MismatchedField, "representation is for another field");
  QuadElem v = scale(pow(ctx.eta, rep.n), rep.scale * pow(Rat(2), rep.m) * Rat(static_cast<long>(rep.sign)));
  for (const auto& [p, t] : rep.terms) v = v * pow(conj_choice(spec.at(p), t.choice), t.exponent);
  if (rep.core) v = v * *rep.core;
  return v;
}

Representation decompose_units(const PellContext& ctx, const QuadElem& alpha) {
  if (alpha.is_zero()) throw DomainError(ErrorKind::InvalidArgument, "cannot decompose zero");
  auto weight = [](const QuadElem& q) { return (q.a() * q.b()).sign(); };
  const QuadElem eta_inv = inverse(ctx.eta);
  QuadElem gamma = alpha;
  long n = 0;
  if (weight(gamma) >= 0) {
    for (QuadElem next = gamma * eta_inv; weight(next) >= 0; next = gamma * eta_inv) {
      gamma = next;
      ++n;
    }
  } else {
    while (weight(gamma) < 0) {
      gamma = gamma * ctx.eta;
      --n;
    }
  }
  Representation rep;
  rep.d = ctx.d;
  rep.n = n;
  if (real_sign(gamma) < 0) {
    rep.sign = -1;
    gamma = -gamma;
  }
  if (!(gamma == QuadElem::one(ctx.d))) rep.core = gamma;
  return rep;
}

Representation decompose_strict(const PellContext& ctx, const Spectrum& spec, const BigInt& x,
                                const BigInt& y) {
  require_context(ctx, spec);
  const BigInt D = big(ctx.d);
  const BigInt z = abs(x * x - D * y * y);
  if (z <= 1) throw DomainError(ErrorKind::InvalidArgument, "norm must exceed 1 in absolute value");
  if (!strictly_primitive(ctx.d, x, y))
    throw DomainError(ErrorKind::NotStrictlyPrimitive, "gcd(x, d*y) != 1");
  const auto primes = factor(z);
  require_covered(spec, primes);

  const QuadElem alpha(ctx.d, Rat(x), Rat(y));
  QuadElem residual = alpha;
  Representation rep;
  rep.d = ctx.d;
  const QuadElem two(ctx.d, Rat(2));
  for (const auto& [pb, e] : primes) {
    const std::int64_t p = to_int64(pb);
    const XiEntry* entry = spec.find(p);
    if (p == 2 && ctx.d % 4 == 1) {
      auto half = exact_div(residual, two, RingTag::OK);
      if (!half) throw InternalInconsistency("strictly primitive even-norm solution not divisible by 2 in O_K");
      residual = *half;
      rep.m = 1;
      if (ctx.d % 8 == 5) continue;
      const long kmax = (static_cast<long>(e) - 2) / (entry->l - 2);
      auto [k, choice] = peel(residual, scale(entry->xi, Rat(1, 2)), kmax);
      if (k > 0) {
        rep.terms[p] = Term{k, choice};
        rep.m = 1 - k;
      }
      continue;
    }
    if (entry == nullptr) continue;
    auto [k, choice] = peel(residual, entry->xi, static_cast<long>(e) / entry->l);
    if (k > 0) rep.terms[p] = Term{k, choice};
  }

  Representation units = decompose_units(ctx, residual);
  rep.sign = units.sign;
  rep.n = units.n;
  rep.core = units.core;
  if (!(evaluate(ctx, spec, rep) == alpha))
    throw InternalInconsistency("decomposition does not evaluate back to the input");
  return rep;
}

Representation decompose_square(const PellContext& ctx, const Spectrum& spec, const BigInt& x,
                                const BigInt& y) {
  require_context(ctx, spec);
  const BigInt N = x * x - big(ctx.d) * y * y;
  auto Z = exact_sqrt(abs(N));
  if (!Z) throw DomainError(ErrorKind::NotSquareNorm, "x^2 - d y^2 is not +- a square");
  if (*Z <= 1) throw DomainError(ErrorKind::InvalidArgument, "norm must exceed 1 in absolute value");
  const BigInt g = gcd(x, y);
  Representation rep;
  if (*Z == g) {
    rep = decompose_units(ctx, QuadElem(ctx.d, Rat(BigInt(x / g)), Rat(BigInt(y / g))));
    if (rep.core) throw InternalInconsistency("unit-norm element has a nontrivial core");
  } else {
    if (!strictly_primitive(ctx.d, x / g, y / g))
      throw InternalInconsistency("primitive solution of a square norm is not strictly primitive");
    rep = decompose_strict(ctx, spec, x / g, y / g);
  }
  rep.scale = Rat(g);
  return rep;
}

ExistenceVerdict strict_exists(const PellContext& ctx, const Spectrum& spec, const BigInt& z) {
  require_context(ctx, spec);
  if (z <= 1) throw DomainError(ErrorKind::InvalidArgument, "z must exceed 1");
  const auto primes = factor(z);
  require_covered(spec, primes);

  ExistenceVerdict v;
  v.criterion_holds = true;
  for (const auto& [pb, e] : primes) {
    const std::int64_t p = to_int64(pb);
    const CaseTag tag = paper_tag(ctx, spec, p);
    v.case_tags[p] = tag;
    const XiEntry* entry = spec.find(p);
    if (!paper_condition(tag, e, entry ? entry->l : 1)) v.criterion_holds = false;
  }

  v.exists = truly_exists(ctx, z);
  if (v.exists) {
    std::vector<Pair> reps;
    for (const auto& [x, y] : all_primitive_reps(ctx.d, z)) reps.push_back(normalized(QuadElem(ctx.d, Rat(x), Rat(y))));
    sort_pairs(reps);
    Representation w = decompose_strict(ctx, spec, reps.front().first, reps.front().second);
    for (const auto& [pb, e] : primes) {
      const std::int64_t p = to_int64(pb);
      auto it = w.terms.find(p);
      v.witness_exponents[p] = it == w.terms.end() ? 0 : it->second.exponent;
    }
  }
  return v;
}

std::vector<std::pair<BigInt, BigInt>> generate_strict(const PellContext& ctx, const Spectrum& spec,
                                                       const BigInt& z, NRange range) {
  require_context(ctx, spec);
  if (z <= 1) throw DomainError(ErrorKind::InvalidArgument, "z must exceed 1");
  require_covered(spec, factor(z));
  if (!truly_exists(ctx, z))
    throw DomainError(ErrorKind::NoStrictSolution, "no strictly primitive solution for z = " + z.get_str());
  std::vector<Pair> out;
  emit_strict(ctx, spec, strict_shapes(ctx, spec, z), 1, range, out);
  sort_pairs(out);
  return out;
}

std::vector<std::pair<BigInt, BigInt>> generate_square(const PellContext& ctx, const Spectrum& spec,
                                                       const BigInt& z, NRange range) {
  require_context(ctx, spec);
  if (z <= 1) throw DomainError(ErrorKind::InvalidArgument, "z must exceed 1");
  const auto primes = factor(z);
  require_covered(spec, primes);

  std::vector<BigInt> divisors{1};
  for (const auto& [p, e] : primes) {
    const std::size_t count = divisors.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) divisors.push_back(divisors[i] * pk);
    }
  }

  std::vector<Pair> out;
  for (const BigInt& g : divisors) {
    const BigInt w = z / g;
    if (w == 1) {
      for (long n = range.lo; n <= range.hi; ++n) {
        QuadElem u = pow(ctx.eta, n);
        if (in_ring(u, RingTag::ZSqrtD)) out.push_back(normalized(scale(u, Rat(g))));
      }
      continue;
    }
    emit_strict(ctx, spec, strict_shapes(ctx, spec, w * w), g, range, out);
  }
  sort_pairs(out);
  return out;
}

Validation validate_representation(const PellContext& ctx, const Spectrum& spec,
                                   const Representation& rep, Purpose purpose) {
  Validation v;
  auto fail = [&](std::string msg) {
    v.valid = false;
    v.problems.push_back(std::move(msg));
  };
  if (rep.d != ctx.d || spec.d != ctx.d) {
    fail("field mismatch");
    return v;
  }
  if (rep.sign != 1 && rep.sign != -1) fail("sign must be +1 or -1");
  for (const auto& [p, t] : rep.terms) {
    if (t.exponent < 1) fail("exponent of " + std::to_string(p) + " must be positive");
    if (!spec.covers(p)) {
      fail("prime " + std::to_string(p) + " not covered by the spectrum");
    } else if (spec.find(p) == nullptr) {
      fail("prime " + std::to_string(p) + " is not in S(d)");
    }
  }
  const auto two = rep.terms.find(2);
  const bool odd_2_power = ctx.d % 8 == 1 && two != rep.terms.end() && rep.m == 1 - two->second.exponent;
  if (purpose != Purpose::Rational && rep.m != 0 && rep.m != 1 && !odd_2_power)
    fail("m must be 0 or 1");
  if (rep.core) {
    if (rep.core->d() != ctx.d || !in_ring(*rep.core, RingTag::OK)) fail("core must lie in O_K");
  }
  if (!v.valid) return v;

  const QuadElem value = evaluate(ctx, spec, rep);
  const bool odd_z = rep.m == 0 && two == rep.terms.end() && !rep.core;
  if (purpose != Purpose::Rational && !ctx.eta_in_zd && odd_z && !rep.core && rep.n % 3 != 0)
    fail("eta^n must lie in Z[sqrt(d)] for odd z, so 3 | n");

  auto parity_ok = [&]() {
    for (const auto& [p, t] : rep.terms)
      if ((spec.at(p).l * t.exponent) % 2 != 0) return false;
    return true;
  };

  switch (purpose) {
    case Purpose::Strict:
      if (!in_ring(value, RingTag::ZSqrtD))
        fail("value is not in Z[sqrt(d)]");
      else if (!strictly_primitive(ctx.d, value.a().num(), value.b().num()))
        fail("value is not strictly primitive");
      break;
    case Purpose::Square: {
      if (!in_ring(value, RingTag::ZSqrtD)) {
        fail("value is not in Z[sqrt(d)]");
        break;
      }
      auto Z = exact_sqrt(abs(norm(value).num()));
      if (!Z) {
        fail("norm is not +- a square");
        break;
      }
      if (!rep.core) {
        if (!parity_ok()) fail("some l_p * n_p is odd");
        for (const auto& [p, t] : rep.terms) {
          const long l = spec.at(p).l;
          const long used = p == 2 && ctx.d % 8 == 1 ? (l - 2) * t.exponent + 2 : l * t.exponent;
          if (used > 2 * static_cast<long>(ord(*Z, p))) fail("exponent cap exceeded at " + std::to_string(p));
        }
      }
      break;
    }
    case Purpose::Rational:
      if (abs(norm(value)) != Rat(1)) fail("value does not have norm +-1");
      if (!rep.core && !parity_ok()) fail("some l_p * n_p is odd");
      break;
  }
  return v;
}

}  // namespace quadpell
