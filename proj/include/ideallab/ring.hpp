#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ideallab/poly.hpp"
#include "ideallab/rational.hpp"

namespace ideallab {

// Concrete ring backends:
//   ZMod    Z/n, n >= 2
//   Prod    R1 x R2 with each factor Z/n or Z
//   Int     Z
//   IntLoc  Z localized at a prime p (a discrete valuation ring)
//   IntInv  Z[1/s], s >= 2
//   MonLoc  Q[x,y] localized at (x,y); only monomial ideals are supported,
//           so the choice of coefficient field is inert
enum class Backend { ZMod, Prod, Int, IntLoc, IntInv, MonLoc };

class RingHandle {
 public:
  static RingHandle z_mod(i64 n);
  static RingHandle integers();
  static RingHandle z_loc(i64 p);  // p must be prime
  static RingHandle z_inv(i64 s);  // s >= 2
  static RingHandle mon_loc();
  static RingHandle product(const RingHandle& l, const RingHandle& r);

  Backend backend() const { return backend_; }
  i64 param() const { return n_; }  // ZMod modulus / IntLoc prime / IntInv s
  const RingHandle& left() const;
  const RingHandle& right() const;

  bool is_finite() const;
  i64 size() const;  // finite backends only

  bool operator==(const RingHandle& o) const;
  bool operator!=(const RingHandle& o) const { return !(*this == o); }

  std::string str() const;  // "Z", "Z/12", "Z/4xZ/9", "Zloc:5", "Zinv:2", "kxy"

 private:
  RingHandle() = default;
  Backend backend_ = Backend::Int;
  i64 n_ = 0;
  std::shared_ptr<const RingHandle> left_, right_;
};

// Fraction f/g of bivariate polynomials; for MonLoc elements g must have a
// nonzero constant term (it is a unit of the localization).  Default-built
// instances (the unused payload slot of non-MonLoc elements) stay empty so
// that element construction does not allocate.
struct PolyFrac {
  Poly num;
  Poly den;

  bool operator==(const PolyFrac& o) const { return num == o.num && den == o.den; }
};

// Backend-tagged element in canonical form: reduced residue (ZMod), ordered
// pair (Prod), integer (Int), lowest-terms rational (IntLoc/IntInv),
// polynomial fraction with unit denominator (MonLoc).
struct Element {
  Backend tag = Backend::Int;
  i64 a = 0;  // ZMod residue / Int value / Prod first coordinate
  i64 b = 0;  // Prod second coordinate
  Rat q;      // IntLoc / IntInv payload
  PolyFrac f; // MonLoc payload
};

Element make_int(i64 v);
Element make_zmod(const RingHandle& ring, i64 v);
Element make_pair(const RingHandle& ring, i64 x, i64 y);
Element make_rat(const RingHandle& ring, const Rat& q);
Element make_polyfrac(const Poly& num, const Poly& den = Poly::constant(Rat(1)));

void check_element(const RingHandle& ring, const Element& x);

Element ring_zero(const RingHandle& ring);
Element ring_one(const RingHandle& ring);
Element ring_add(const RingHandle& ring, const Element& x, const Element& y);
Element ring_mul(const RingHandle& ring, const Element& x, const Element& y);
Element ring_neg(const RingHandle& ring, const Element& x);

// Equality of MonLoc fractions is decided by cross-multiplication.
bool ring_eq(const RingHandle& ring, const Element& x, const Element& y);
bool ring_is_zero(const RingHandle& ring, const Element& x);

// d | x, i.e. x lies in the principal ideal dR.  Finite backends and Int.
bool ring_divides(const RingHandle& ring, const Element& d, const Element& x);

std::string element_str(const RingHandle& ring, const Element& x);

// All elements of a finite backend in canonical scan order
// (residues ascending; pairs row-major).
std::vector<Element> ring_elements(const RingHandle& ring);

bool is_unit(const RingHandle& ring, const Element& x);

// Exactly one maximal ideal.  Finite backends are decided by the exhaustive
// criterion "nonunit + unit is always a unit"; infinite backends have
// structurally known answers.
bool is_quasilocal(const RingHandle& ring);

// Test oracles for the quasilocal criterion (finite backends only).
bool quasilocal_by_l0_scan(const RingHandle& ring);
bool nonunits_closed_under_addition(const RingHandle& ring);

// Divided: for every prime ideal P and x outside P, x divides all of P.
// Chained: any two elements are comparable under divisibility.
bool is_divided(const RingHandle& ring);
bool is_chained(const RingHandle& ring);

// Quantifier reduction for predicates over Z-like backends: one class per
// residue, each with a canonical nonunit representative when one exists
// (over Z every class has one; the class of 1 lifts to 1+n).
struct ResidueClass {
  Element value;        // canonical member: the residue / the element itself
  Element nonunit_rep;  // canonical nonunit representative (valid iff has_nonunit)
  bool has_nonunit = false;
};

struct ResidueSystem {
  RingHandle ring;
  std::string modulus_desc;
  std::vector<ResidueClass> classes;
};

// Int / IntInv: classes modulo `modulus` >= 1.
ResidueSystem residue_system_mod(const RingHandle& ring, i64 modulus);
// Finite backends: classes are the elements themselves.
ResidueSystem residue_system_finite(const RingHandle& ring);

}  // namespace ideallab
