#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ideallab/rational.hpp"

namespace ideallab {

// Monomial x^dx * y^dy.  Canonical order: total degree ascending, then
// x-exponent descending, so degree-2 monomials read x^2, x*y, y^2.
struct Monomial {
  int dx = 0;
  int dy = 0;

  int degree() const { return dx + dy; }
  bool is_one() const { return dx == 0 && dy == 0; }
  bool divides(const Monomial& o) const { return dx <= o.dx && dy <= o.dy; }

  Monomial operator*(const Monomial& o) const { return {dx + o.dx, dy + o.dy}; }
  Monomial quotient_by(const Monomial& o) const;  // requires o.divides(*this)
  Monomial gcd(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  Monomial squarefree() const { return {dx > 0 ? 1 : 0, dy > 0 ? 1 : 0}; }

  bool operator==(const Monomial& o) const { return dx == o.dx && dy == o.dy; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
  bool operator<(const Monomial& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    return dx > o.dx;
  }

  std::string str() const;
};

// Polynomial in Q[x,y]: term list sorted in canonical monomial order,
// no zero coefficients.
struct Poly {
  std::vector<std::pair<Monomial, Rat>> terms;

  static Poly zero() { return {}; }
  static Poly constant(Rat c);
  static Poly monomial(Monomial m, Rat c = Rat(1));
  static Poly var_x() { return monomial({1, 0}); }
  static Poly var_y() { return monomial({0, 1}); }

  bool is_zero() const { return terms.empty(); }
  Rat constant_term() const;
  int total_degree() const;  // -1 for the zero polynomial
  bool is_single_term() const { return terms.size() == 1; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const { return terms == o.terms; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // gcd of the exponent vectors of all terms (the monomial content).
  Monomial monomial_content() const;  // requires nonzero
  Poly divided_by_monomial(const Monomial& m) const;

  // Positive rational content; dividing by it and by the sign of the leading
  // coefficient gives the canonical associate used by factor searches.
  Rat content() const;  // requires nonzero
  Poly normalized_associate() const;

  std::string str() const;
};

// Exact division f / g in Q[x,y]; nullopt when g does not divide f.
std::optional<Poly> poly_divide_exact(const Poly& f, const Poly& g);

}  // namespace ideallab
