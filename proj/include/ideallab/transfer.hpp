#pragma once

#include "ideallab/classify.hpp"

namespace ideallab {

// Homomorphism catalogue: quotients Z -> Z/n and Z/n -> Z/d (d | n),
// projections off a product, and the identity.  Arbitrary user maps are
// rejected rather than trusted.
enum class HomKind { QuotientIntToZMod, QuotientZModToZMod, Proj1, Proj2, Identity };

struct RingHom {
  HomKind kind;
  RingHandle source;
  RingHandle target;
  Ideal kernel;
  bool surjective;

  std::string str() const;
};

RingHom make_quotient_hom(const RingHandle& source, const RingHandle& target);
RingHom make_projection_hom(const RingHandle& prod, int comp);  // comp = 1 or 2
RingHom make_identity_hom(const RingHandle& ring);

// "q:Z->Z/12", "q:Z/8->Z/4", "proj1:Z/4xZ/9", "proj2:...", "id:Z/8"
RingHom parse_hom(const std::string& spec);

Element apply_hom(const RingHom& f, const Element& x);

struct HomHypotheses {
  bool identity_ok = true;
  bool nonunit_preserving = true;
  std::optional<Element> failing_nonunit;  // source nonunit mapping to a target unit
  std::string notes;
};

// The nonunit condition is only required (and only checked) when the target
// is quasilocal; otherwise it is vacuous.  Finite sources are scanned
// exhaustively; Z sources are scanned over nonunit integers ascending until
// every residue class of the target is covered.
HomHypotheses check_hom_hypotheses(const RingHom& f);

Ideal preimage_ideal(const RingHom& f, const Ideal& J);

// Requires f surjective and kernel contained in I.
Ideal image_ideal(const RingHom& f, const Ideal& I);

enum class MultSetKind { PowersOf, ComplementOfPrime };

struct LocalizationSpec {
  MultSetKind kind;
  i64 param;          // s for powers-of(s), p for complement-of(pZ)
  RingHandle source;  // Z
  RingHandle target;  // Zinv:s / Zloc:p

  std::string str() const;
};

LocalizationSpec powers_of(i64 s);
LocalizationSpec complement_of_prime(i64 p);

// "S=2^k" (powers of 2) or "S=comp(5)" (complement of 5Z)
LocalizationSpec parse_localization(const std::string& spec);

struct LocalizationResult {
  Ideal extended;
  bool disjoint;       // I and S share no element
  bool zdiv_disjoint;  // S avoids Z_I(R)
};

LocalizationResult localize(const LocalizationSpec& spec, const Ideal& I);

}  // namespace ideallab
