#include "quadpell/bisector.hpp"

#include "quadpell/errors.hpp"

namespace quadpell {

namespace {

Rat sq(const Rat& r) { return r * r; }

void require_nontrivial(const Rat& a, const Rat& b) {
  if (a == b || a == -b) throw DomainError(ErrorKind::TrivialPair, "slopes must satisfy |a| != |b|");
}

// sqrt(q / d) for the square-free kernel d of q > 0; q = Q / Z^2.
std::pair<BigInt, Rat> split_kernel(const Rat& q) {
  const BigInt Q = q.num() * q.den();
  const BigInt k = square_free_kernel(Q);
  auto root = exact_sqrt(Q / k);
  if (!root) throw InternalInconsistency("square-free kernel left a non-square");
  return {k, Rat(*root, q.den())};
}

}  // namespace

bool verify_star(const Rat& a, const Rat& b, const Rat& c) {
  return sq(a - c) * (sq(b) + Rat(1)) == sq(b - c) * (sq(a) + Rat(1));
}

std::optional<PairClassification> classify_pair(const Rat& a, const Rat& b) {
  require_nontrivial(a, b);
  auto [da, a2] = split_kernel(sq(a) + Rat(1));
  auto [db, b2] = split_kernel(sq(b) + Rat(1));
  if (da != db) return std::nullopt;
  return PairClassification{to_int64(da), a2, b2};
}

BisectorPair from_pell_points(const Rat& a1, const Rat& a2, const Rat& b1, const Rat& b2, std::int64_t d) {
  if (d < 1) throw DomainError(ErrorKind::InvalidArgument, "d must be positive");
  const Rat D(static_cast<long>(d));
  if (sq(a1) - D * sq(a2) != Rat(-1) || sq(b1) - D * sq(b2) != Rat(-1))
    throw DomainError(ErrorKind::InvalidArgument, "points are not on x^2 - d y^2 = -1");
  BisectorPair out;
  if (!(b2 + a2).is_zero()) out.c_plus = (a1 * b2 + a2 * b1) / (b2 + a2);
  if (!(b2 - a2).is_zero()) out.c_minus = (a1 * b2 - a2 * b1) / (b2 - a2);
  return out;
}

std::optional<Bisection> bisect(const Rat& a, const Rat& b) {
  auto cls = classify_pair(a, b);
  if (!cls) return std::nullopt;
  BisectorPair pair = from_pell_points(a, cls->a2, b, cls->b2, cls->d);
  if (!pair.c_plus || !pair.c_minus) throw InternalInconsistency("positive a2, b2 with a != +-b always give both branches");
  return Bisection{*pair.c_plus, *pair.c_minus, cls->d};
}

std::vector<BisectorTriple> case1_generate(const BigInt& l, const BigInt& m, const BigInt& n) {
  if (sgn(l) == 0 || sgn(m) == 0 || sgn(n) == 0)
    throw DomainError(ErrorKind::InvalidArgument, "l, m, n must be nonzero");
  if (abs(l) == abs(m)) throw DomainError(ErrorKind::TrivialPair, "|l| must differ from |m|");
  if (l * m == n * n) throw DomainError(ErrorKind::InvalidArgument, "l*m must differ from n^2");
  const Rat a(l * l - n * n, 2 * l * n);
  const Rat b(m * m - n * n, 2 * m * n);
  std::vector<BisectorTriple> out;
  if (sgn(l + m) != 0) out.push_back({a, b, Rat(l * m - n * n, (l + m) * n)});
  out.push_back({a, b, Rat(-(l + m) * n, l * m - n * n)});
  return out;
}

std::vector<BisectorTriple> case2_generate(const QuadElem& alpha, const QuadElem& beta) {
  if (alpha.d() != beta.d()) throw DomainError(ErrorKind::MismatchedField, "alpha and beta live in different fields");
  if (norm(alpha) != Rat(-1) || norm(beta) != Rat(-1))
    throw DomainError(ErrorKind::InvalidArgument, "alpha and beta must have norm -1");
  if (alpha == beta || alpha == -beta) throw DomainError(ErrorKind::TrivialPair, "beta must differ from +-alpha");
  const Rat num = (alpha * beta).b();
  const Rat den = (alpha + beta).b();
  std::vector<BisectorTriple> out;
  const Rat a = alpha.a(), b = beta.a();
  const bool trivial = a == b || a == -b;
  if (!den.is_zero()) out.push_back({a, b, num / den, trivial});
  if (!num.is_zero()) out.push_back({a, b, -den / num, trivial});
  return out;
}

BisectorTriple integral_generate(const PellContext& ctx, long m, long n) {
  if (!ctx.neg_pell_integral)
    throw DomainError(ErrorKind::NoIntegralNegativePell, "x^2 - d y^2 = -1 has no integral solution");
  if (m < 1 || n < 1) throw DomainError(ErrorKind::InvalidArgument, "m and n must be >= 1");
  const long k = 2 * m - 1;
  const auto a = pell_sequence(ctx, k * (2 * n - 1));
  const auto b = pell_sequence(ctx, k * (2 * n + 1));
  const auto g_num = pell_sequence(ctx, k * 2 * n).second;
  const auto g_den = pell_sequence(ctx, k).second;
  if (!mpz_divisible_p(g_num.get_mpz_t(), g_den.get_mpz_t()))
    throw InternalInconsistency("g_(2m-1) does not divide g_((2m-1)2n)");
  return BisectorTriple{Rat(a.first), Rat(b.first), Rat(g_num / g_den), false};
}

BisectorTriple integral_generate2(long n) {
  if (n < 1) throw DomainError(ErrorKind::InvalidArgument, "n must be >= 1");
  static const PellContext ctx = make_context(2);
  const BigInt f_lo = pell_sequence(ctx, 2 * n - 1).first;
  const BigInt f_hi = pell_sequence(ctx, 2 * n + 1).first;
  const BigInt f_mid = pell_sequence(ctx, 2 * n).first;
  return BisectorTriple{Rat(f_lo), Rat(-f_hi), Rat(f_mid), false};
}

}  // namespace quadpell
