#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ideallab/ring.hpp"

namespace ideallab {

// Three-valued predicate result.  Proven and refuted are exact; unfalsified
// only occurs where a scan is necessarily bounded (MonLoc), and carries the
// bound that was searched.
enum class Status { Proven, Refuted, Unfalsified };

enum class Method { Oracle, FastPath, Certificate };

struct Verdict {
  Status status = Status::Proven;
  Method method = Method::Oracle;
  std::vector<Element> witness;
  std::optional<std::string> bound;

  static Verdict proven(Method m) { return {Status::Proven, m, {}, std::nullopt}; }
  static Verdict refuted(std::vector<Element> w, Method m) {
    return {Status::Refuted, m, std::move(w), std::nullopt};
  }
  static Verdict unfalsified(std::string bound_desc) {
    return {Status::Unfalsified, Method::Oracle, {}, std::move(bound_desc)};
  }

  bool is_proven() const { return status == Status::Proven; }
  bool is_refuted() const { return status == Status::Refuted; }
};

std::string status_str(Status s);
std::string method_str(Method m);

// Bounds for the necessarily incomplete MonLoc searches: polynomials with
// coefficients in {0,1}, zero constant term, at most `monloc_max_terms`
// terms, and monomial degree <= monloc_degree.
struct ScanLimits {
  int monloc_degree = 4;
  int monloc_max_terms = 2;

  std::string describe() const;
};

// Element-level notions (ring_core operations; MonLoc searches are bounded).
Verdict is_irreducible_element(const RingHandle& ring, const Element& x,
                               const ScanLimits& limits = {});
Verdict is_prime_element(const RingHandle& ring, const Element& x);

}  // namespace ideallab
