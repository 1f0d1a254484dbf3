#include "ideallab/rational.hpp"

namespace ideallab {

Rat::Rat(i64 n, i64 d) {
  if (d == 0) throw domain_error("rational with zero denominator");
  if (d < 0) {
    n = checked_neg(n);
    d = checked_neg(d);
  }
  i64 g = gcd_i64(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num = n;
  den = d;
}

Rat Rat::operator+(const Rat& o) const {
  return Rat(checked_add(checked_mul(num, o.den), checked_mul(o.num, den)),
             checked_mul(den, o.den));
}

Rat Rat::operator-(const Rat& o) const {
  return Rat(checked_sub(checked_mul(num, o.den), checked_mul(o.num, den)),
             checked_mul(den, o.den));
}

Rat Rat::operator*(const Rat& o) const {
  return Rat(checked_mul(num, o.num), checked_mul(den, o.den));
}

Rat Rat::operator/(const Rat& o) const {
  if (o.is_zero()) throw domain_error("division by zero rational");
  return Rat(checked_mul(num, o.den), checked_mul(den, o.num));
}

Rat Rat::operator-() const {
  Rat r;
  r.num = checked_neg(num);
  r.den = den;
  return r;
}

std::string Rat::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace ideallab
