#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ideallab/ring.hpp"

namespace ideallab {

// Backend-tagged ideal in canonical form:
//   ZMod    divisor d of n, the ideal dZ/nZ ((0) is stored as d = n)
//   Int     modulus m >= 0 (0 = zero ideal, 1 = whole ring)
//   IntInv  modulus m >= 0 with no prime factor of s
//   IntLoc  exponent k >= 0 for p^k, or nothing for the zero ideal
//   Prod    pair of component ideals, stored as component moduli
//   MonLoc  minimal monomial generator set ({} = zero ideal, {1} = whole ring)
class Ideal {
 public:
  static Ideal whole(const RingHandle& ring);
  static Ideal zero(const RingHandle& ring);
  static Ideal from_modulus(const RingHandle& ring, i64 m);
  static Ideal from_exponent(const RingHandle& ring, std::optional<i64> k);
  static Ideal monomial_ideal(const RingHandle& ring, std::vector<Monomial> gens);
  static Ideal pair_ideal(const Ideal& l, const Ideal& r);
  static Ideal principal(const RingHandle& ring, const Element& x);

  const RingHandle& ring() const { return ring_; }
  i64 modulus() const;                  // ZMod / Int / IntInv
  std::optional<i64> exponent() const;  // IntLoc
  const std::vector<Monomial>& generators() const;  // MonLoc
  i64 component_modulus(int i) const;   // Prod, i in {0,1}
  Ideal component(int i) const;         // Prod: ideal of the component ring

  bool is_proper() const;
  bool is_whole() const { return !is_proper(); }
  bool is_zero_ideal() const;

  bool operator==(const Ideal& o) const;
  bool operator!=(const Ideal& o) const { return !(*this == o); }

  std::string str() const;  // "(12)", "(4)x(9)", "x^2,x*y", "p^3", "(0)"

 private:
  explicit Ideal(RingHandle ring) : ring_(std::move(ring)) {}
  RingHandle ring_;
  i64 m_ = 1;
  std::optional<i64> k_ = 0;
  std::array<i64, 2> comp_{1, 1};
  std::vector<Monomial> gens_;
};

bool contains(const Ideal& I, const Element& x);

// Squarefree kernel of the modulus / componentwise / exponent min(k,1) /
// squarefree generator parts, minimalized.
Ideal radical(const Ideal& I);
bool radical_contains(const Ideal& I, const Element& x);
// Direct search for an exponent e <= |R| with x^e in I (finite backends;
// the independent route the closed-form radical is checked against).
bool radical_contains_by_power_search(const Ideal& I, const Element& x);

// (I : c) = {x | cx in I}.  MonLoc divisors must be a unit times a monomial.
Ideal colon(const Ideal& I, const Element& c);

Ideal product(const Ideal& a, const Ideal& b);
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal sum(const Ideal& a, const Ideal& b);
Ideal power(const Ideal& a, i64 n);  // n >= 1

bool subset(const Ideal& a, const Ideal& b);  // a contained in b

// r in Z_I(R) = {r | rs in I for some s outside I}.  I proper.
bool in_zdiv(const Ideal& I, const Element& r);

struct IdealFamily {
  RingHandle ring;
  // modulus range for Int (and for Int components of a product)
  std::optional<std::pair<i64, i64>> int_range;
  int monloc_degree = 2;
};

// Exhaustive, duplicate-free, canonically ordered.
std::vector<Ideal> enumerate_ideals(const IdealFamily& family);

}  // namespace ideallab
