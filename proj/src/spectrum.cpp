#include "quadpell/spectrum.hpp"

#include "quadpell/errors.hpp"
#include "quadpell/forms.hpp"

namespace quadpell {

const XiEntry* Spectrum::find(std::int64_t p) const {
  auto it = entries.find(p);
  return it == entries.end() ? nullptr : &it->second;
}

const XiEntry& Spectrum::at(std::int64_t p) const {
  if (!covers(p))
    throw DomainError(ErrorKind::SpectrumNotCovering, "prime " + std::to_string(p) + " not covered by the spectrum");
  const XiEntry* e = find(p);
  if (e == nullptr)
    throw DomainError(ErrorKind::InvalidArgument, std::to_string(p) + " is not in S(" + std::to_string(d) + ")");
  return *e;
}

bool in_S(const PellContext& ctx, std::int64_t p) {
  if (!is_prime(p)) throw DomainError(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  const std::int64_t d = ctx.d;
  if (p == 2) {
    switch (d % 8) {
      case 1: return true;
      case 5: return !ctx.eta_in_zd;
      case 3:
      case 7:
        return !primitive_representations(d, 2).empty() || !primitive_representations(d, -2).empty();
      default: return false;
    }
  }
  if (d % p == 0) return false;
  return kronecker(BigInt(static_cast<long>(ctx.disc)), p) == 1;
}

int max_level(const PellContext& ctx, std::int64_t p) {
  const std::int64_t d = ctx.d;
  const int h = static_cast<int>(ctx.h);
  if (p == 2) {
    if (d % 8 == 1) return h + 2;
    if (d % 8 == 5) return 2;
    if (d % 4 == 3) return 1;
  }
  if (d % 8 == 5 && ctx.eta_in_zd) return 3 * h;
  return h;
}

std::optional<XiEntry> xi(const PellContext& ctx, std::int64_t p) {
  if (!in_S(ctx, p)) return std::nullopt;
  const BigInt D(static_cast<long>(ctx.d));
  const BigInt P(static_cast<long>(p));
  const BigInt base = ctx.f1() + ctx.g1() * isqrt_ceil(D);
  const int lmax = max_level(ctx, p);
  for (int l = 1; l <= lmax; ++l) {
    const BigInt pl = pow(P, static_cast<unsigned long>(l));
    const BigInt ybound = base * pow(P, static_cast<unsigned long>((l + 1) / 2));
    for (BigInt y = 1; y <= ybound; ++y) {
      const BigInt dy2 = D * y * y;
      for (int s : {1, -1}) {
        if (s < 0 && ctx.neg_pell_integral) continue;
        auto x = exact_sqrt(dy2 + s * pl);
        if (!x || gcd(*x, D * y) != 1) continue;
        return XiEntry{p, l, QuadElem(ctx.d, Rat(*x), Rat(y)), s};
      }
    }
  }
  throw InternalInconsistency("no xi found for p = " + std::to_string(p) + " in S(" + std::to_string(ctx.d) + ")");
}

namespace {

void examine(const PellContext& ctx, Spectrum& spec, std::int64_t p) {
  spec.covered.insert(p);
  if (auto e = xi(ctx, p)) {
    if (e->norm_sign < 0) spec.s_minus.insert(p);
    spec.entries.emplace(p, *e);
  }
}

}  // namespace

Spectrum spectrum(const PellContext& ctx, std::int64_t pmax) {
  Spectrum spec;
  spec.d = ctx.d;
  for (std::int64_t p : primes_up_to(pmax)) examine(ctx, spec, p);
  return spec;
}

Spectrum spectrum_for(const PellContext& ctx, const BigInt& z) {
  Spectrum spec;
  spec.d = ctx.d;
  for (const auto& [p, e] : factor(z)) examine(ctx, spec, to_int64(p));
  return spec;
}

}  // namespace quadpell
