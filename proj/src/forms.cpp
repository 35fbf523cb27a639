#include "quadpell/forms.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "quadpell/errors.hpp"

namespace quadpell {

bool operator<(const Form& f, const Form& g) {
  return std::tie(f.a, f.b, f.c) < std::tie(g.a, g.b, g.c);
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return Mat2{x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11,
              x.m10 * y.m00 + x.m11 * y.m10, x.m10 * y.m01 + x.m11 * y.m11};
}

Mat2 inverse_sl2(const Mat2& m) { return Mat2{m.m11, -m.m01, -m.m10, m.m00}; }

Form act(const Form& f, const Mat2& m) {
  BigInt a = f.eval(m.m00, m.m10);
  BigInt c = f.eval(m.m01, m.m11);
  BigInt b = 2 * f.a * m.m00 * m.m01 + f.b * (m.m00 * m.m11 + m.m01 * m.m10) + 2 * f.c * m.m10 * m.m11;
  return Form{a, b, c};
}

bool is_primitive(const Form& f) { return gcd(gcd(f.a, f.b), f.c) == 1; }

bool is_reduced(const Form& f) {
  BigInt s = isqrt(f.discriminant());
  BigInt two_a = 2 * abs(f.a);
  return sgn(f.b) > 0 && f.b <= s && two_a >= s - f.b + 1 && two_a <= s + f.b;
}

Form rho(const Form& f, Mat2* acc) {
  BigInt D = f.discriminant();
  BigInt s = isqrt(D);
  BigInt two_c = 2 * abs(f.c);
  BigInt b2;
  if (f.c * f.c > D) {
    b2 = mod_floor(-f.b, two_c);
    if (b2 > abs(f.c)) b2 -= two_c;
  } else {
    b2 = s - mod_floor(s + f.b, two_c);
  }
  BigInt t = (b2 + f.b) / (2 * f.c);
  Form g{f.c, b2, (b2 * b2 - D) / (4 * f.c)};
  if (acc != nullptr) *acc = *acc * Mat2{0, -1, 1, t};
  return g;
}

std::pair<Form, Mat2> reduce(const Form& f) {
  if (exact_sqrt(f.discriminant()) || sgn(f.discriminant()) <= 0)
    throw DomainError(ErrorKind::InvalidArgument, "discriminant must be positive and non-square");
  Mat2 m;
  Form g = f;
  while (!is_reduced(g)) g = rho(g, &m);
  return {g, m};
}

std::vector<Form> reduced_forms(const BigInt& discriminant) {
  BigInt s = isqrt(discriminant);
  std::vector<Form> out;
  for (BigInt b = 1; b <= s; ++b) {
    BigInt num = discriminant - b * b;
    if (sgn(mod_floor(num, 4)) != 0) continue;
    BigInt n = num / 4;
    for (BigInt a = 1; 2 * a <= s + b; ++a) {
      if (2 * a < s - b + 1 || !mpz_divisible_p(n.get_mpz_t(), a.get_mpz_t())) continue;
      for (int sign : {1, -1}) {
        Form f{sign * a, b, -sign * (n / a)};
        if (is_primitive(f)) out.push_back(f);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long narrow_class_number(const BigInt& discriminant) {
  std::vector<Form> forms = reduced_forms(discriminant);
  std::set<Form> seen;
  long cycles = 0;
  for (const Form& f : forms) {
    if (seen.count(f)) continue;
    ++cycles;
    Form g = f;
    do {
      seen.insert(g);
      g = rho(g);
    } while (!(g == f));
  }
  return cycles;
}

std::vector<std::pair<BigInt, BigInt>> primitive_representations(std::int64_t d, const BigInt& n) {
  if (sgn(n) == 0) throw DomainError(ErrorKind::InvalidArgument, "cannot represent zero");
  const BigInt D = 4 * BigInt(static_cast<long>(d));
  const Form principal{1, 0, -BigInt(static_cast<long>(d))};

  std::map<Form, Mat2> cycle;
  auto [start, m0] = reduce(principal);
  Form g = start;
  Mat2 m = m0;
  do {
    cycle.emplace(g, m);
    g = rho(g, &m);
  } while (!(g == start));

  std::vector<std::pair<BigInt, BigInt>> out;
  const BigInt N = abs(n);
  for (BigInt b = 0; b < 2 * N; ++b) {
    BigInt num = b * b - D;
    if (!mpz_divisible_p(num.get_mpz_t(), BigInt(4 * N).get_mpz_t())) continue;
    Form f{n, b, num / (4 * n)};
    if (!is_primitive(f)) continue;
    auto [r, m1] = reduce(f);
    auto it = cycle.find(r);
    if (it == cycle.end()) continue;
    Mat2 t = it->second * inverse_sl2(m1);
    if (principal.eval(t.m00, t.m10) != n)
      throw InternalInconsistency("form reduction produced a wrong representation");
    out.emplace_back(t.m00, t.m10);
  }
  return out;
}

}  // namespace quadpell
