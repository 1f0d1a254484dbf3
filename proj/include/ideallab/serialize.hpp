#pragma once

#include <string>
#include <vector>

#include "ideallab/classify.hpp"
#include "ideallab/theorems.hpp"

namespace ideallab {

// Fixed key order {ring, ideal, radical, properties{...}{status, witness,
// method, bound}, agreement}; byte-stable for a fixed version.
std::string classification_json(const ClassificationReport& rep);
std::string classification_text(const ClassificationReport& rep);

// Column order: ring, ideal, radical, prime, maximal, primary, one_abs,
// two_abs_primary, two_abs, method.
std::string scan_csv_header();
std::string classification_csv_row(const ClassificationReport& rep);
// Whole-ring rows carry "-" in the class columns.
std::string whole_ring_csv_row(const RingHandle& ring, const Ideal& I);

std::string reports_json(const std::vector<VerificationReport>& reps);
std::string reports_text(const std::vector<VerificationReport>& reps);

std::string construction_json(const RingHandle& ring, const Construction& c);
std::string construction_text(const RingHandle& ring, const Construction& c);

}  // namespace ideallab
