#pragma once

#include <string>

#include "ideallab/numeric.hpp"

namespace ideallab {

// Exact rational in lowest terms, denominator positive.
struct Rat {
  i64 num = 0;
  i64 den = 1;

  Rat() = default;
  Rat(i64 n) : num(n), den(1) {}  // NOLINT: implicit on purpose
  Rat(i64 n, i64 d);

  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }

  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  Rat operator/(const Rat& o) const;
  Rat operator-() const;
  bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rat& o) const { return !(*this == o); }

  std::string str() const;
};

}  // namespace ideallab
