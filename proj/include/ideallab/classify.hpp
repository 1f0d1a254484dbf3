#pragma once

#include "ideallab/ideal.hpp"
#include "ideallab/verdict.hpp"

namespace ideallab {

// Decision procedures for the ideal classes.  Statuses on finite and
// residue-decidable backends are exact; refuted verdicts carry the first
// witness in canonical scan order (classes ascending, tuples row-major,
// witnesses lifted to canonical nonunit representatives where the
// definition quantifies over nonunits).
Verdict is_prime_ideal(const Ideal& I);
Verdict is_maximal_ideal(const Ideal& I);
Verdict is_primary(const Ideal& I);
Verdict is_one_absorbing_primary(const Ideal& I, const ScanLimits& limits = {});
Verdict is_two_absorbing_primary(const Ideal& I, const ScanLimits& limits = {});
Verdict is_two_absorbing(const Ideal& I, const ScanLimits& limits = {});

// Theorem-backed closed forms: prime-power moduli over Z and Z[1/s], every
// proper ideal of the DVR, and the componentwise primary form on products.
Verdict fast_one_absorbing(const Ideal& I);

// Bounded-search route on kxy, independent of the certificates.
Verdict one_absorbing_bounded_scan(const Ideal& I, const ScanLimits& limits = {});

// Bounded kxy scan families: {0,1}-coefficient polynomials with at most
// `monloc_max_terms` terms and monomial degree <= monloc_degree; the
// nonunit family has zero constant term, the full family also admits
// constant term 1.
std::vector<Poly> bounded_nonunit_polys(const ScanLimits& limits);
std::vector<Poly> bounded_all_polys(const ScanLimits& limits);

struct ClassificationReport {
  RingHandle ring;
  Ideal ideal;
  Ideal radical_ideal;
  Verdict prime;
  Verdict maximal;
  Verdict primary;
  Verdict one_absorbing_primary;
  Verdict two_absorbing_primary;
  Verdict two_absorbing;
  bool agreement = true;  // fast path status equals oracle status where both ran
};

ClassificationReport classify_report(const Ideal& I, const ScanLimits& limits = {});

}  // namespace ideallab
