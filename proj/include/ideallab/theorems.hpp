#pragma once

#include "ideallab/classify.hpp"
#include "ideallab/transfer.hpp"

namespace ideallab {

// Executable claims about the ideal classes, each with a verifier that
// enumerates instances and checks the stated conclusion.
enum class TheoremId {
  Chain,   // primary => 1-absorbing primary => 2-absorbing primary
  TM1,     // "T-1": 1-absorbing primary has prime radical
  T0,      // a 1-absorbing-primary non-primary ideal forces a quasilocal ring
  T1,      // outside quasilocal rings the two classes coincide
  T1_5,    // on products: 1-abs primary = primary = componentwise primary form
  T2,      // xM construction for a prime element x with xR != M
  T3,      // the first coordinate of a minimal primary refutation is irreducible
  T4,      // PM construction for a prime ideal P inside M
  T5,      // (I : c) is primary for nonunit c outside a 1-abs primary I
  T6,      // on divided rings the two classes coincide
  T8,      // P^n is primary over a divided domain
  T9,      // valuation domain: 1-abs primary = primary = power of P
  T10,     // Prufer instance: same equivalences over Z and Z[1/s]
  T11,     // Dedekind instance: 1-abs primary iff prime radical
  T12i,    // PID instance of the Dedekind characterization, on Z
  C1,      // over a PID: 1-abs primary iff the modulus is a prime power
  C2,      // quotients preserve the class in both directions
  T13,     // same-radical intersections stay 1-abs primary
  T14,     // preimages and images along catalogued homomorphisms
  T15,     // localization in both directions
  T16,     // abJ inside I forces ab in I or J inside the radical
  T17,     // ideal-triple characterization, checked as a biconditional
  ExE1,    // worked example: (x^2, xy) in kxy
  ExE2,    // worked example: 12Z
  ExProd,  // worked example: 4Z x Z, Z x 9Z and their intersection
};

std::vector<TheoremId> all_theorem_ids();
std::string theorem_name(TheoremId id);                       // "CHAIN", "T-1", ...
std::optional<TheoremId> theorem_from_name(const std::string& name);
std::string theorem_claim(TheoremId id);

struct Scope {
  i64 zmod_max = 100;
  i64 prod_max = 12;
  i64 int_max = 500;
  int monloc_degree = 4;                 // degree bound for kxy scans and enumeration
  std::optional<std::string> mutation;   // "2abs-implies-1abs" flips the CHAIN check

  std::string describe() const;
  ScanLimits limits() const { return ScanLimits{monloc_degree, 2}; }
};

struct Violation {
  std::string instance;
  std::vector<std::string> witness;
};

struct VerificationReport {
  TheoremId id;
  std::string scope;
  i64 instances = 0;
  std::vector<Violation> violations;
  double elapsed_ms = 0;  // informational; kept out of serialized output
};

VerificationReport verify_theorem(TheoremId id, const Scope& scope);

struct Construction {
  Ideal ideal;
  Verdict one_abs;  // certificate for the constructed ideal
  std::optional<std::pair<Element, Element>> primary_witness;  // xM: (x, m)
  std::string note;
};

// xM for a nonzero prime element x of a quasilocal ring with xR != M.
// Certified 1-absorbing primary and not primary, with the witness pair.
Construction construct_xM(const RingHandle& ring, const Element& x);

// PM for a prime ideal P inside the maximal ideal of a quasilocal ring.
// Certified 1-absorbing primary; the radical of the result equals P.
Construction construct_PM(const RingHandle& ring, const Ideal& P);

// The maximal ideal of a quasilocal backend.
Ideal maximal_ideal_of(const RingHandle& ring);

}  // namespace ideallab
