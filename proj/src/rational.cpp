#include "quadpell/rational.hpp"

#include "quadpell/errors.hpp"

namespace quadpell {

Rat::Rat(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw DomainError(ErrorKind::InvalidArgument, "zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_bigint(std::string(text)));
  return Rat(parse_bigint(std::string(text.substr(0, slash))),
             parse_bigint(std::string(text.substr(slash + 1))));
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat Rat::operator-() const { return Rat(mpq_class(-v_)); }

Rat& Rat::operator+=(const Rat& o) {
  v_ += o.v_;
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  v_ -= o.v_;
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  v_ *= o.v_;
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DomainError(ErrorKind::InvalidArgument, "division by zero");
  v_ /= o.v_;
  return *this;
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

Rat pow(const Rat& base, long exponent) {
  if (exponent < 0) return Rat(1) / pow(base, -exponent);
  Rat out(1);
  Rat b = base;
  auto e = static_cast<unsigned long>(exponent);
  while (e > 0) {
    if (e & 1UL) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

}  // namespace quadpell
