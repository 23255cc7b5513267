#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "arrkit/accuracy/accuracy.hpp"
#include "arrkit/arrangement/arrangement.hpp"

namespace arrkit {

// A^k_l(r): x_1 ... x_k times x_i - zeta^n x_j (i < j, 0 <= n < r), zeta a
// primitive r-th root of unity. A^l_l(r) and A^0_l(r) are the reflection
// arrangements of G(r,1,l) and G(r,r,l).
struct IntermediateLabel {
  int l = 2;
  int r = 2;
  int k = 0;

  // Throws InvalidInput unless l >= 2, r >= 2 and 0 <= k <= l.
  void validate() const;
  std::size_t hyperplane_count() const;
  std::string to_string() const;  // "A^k_l(r)"
  bool operator==(const IntermediateLabel&) const = default;
};

// Throws CapExceeded above max_hyperplanes.
Arrangement build_intermediate(const IntermediateLabel& label, std::size_t max_hyperplanes = 400);

// (1, r+1, ..., (l-2)r+1, (l-1)r-l+k+1), sorted.
Exponents intermediate_exponents(const IntermediateLabel& label);

// Hyperplane classes of the restriction table. The difference classes are
// split by where i < j sit relative to k.
enum class HyperplaneClass {
  Any,           // k = 0 or k = l: all hyperplanes restrict alike
  DiffLow,       // x_i - zeta^n x_j, i < j <= k
  DiffMixed,     // i <= k < j
  DiffHigh,      // k < i < j
  Coordinate,    // x_i
};
const char* to_string(HyperplaneClass c);

struct RestrictionRow {
  HyperplaneClass cls;
  IntermediateLabel result;
};

// Rows that are non-vacuous for this label. Results may have l - 1 = 1, the
// one-dimensional arrangement with its single hyperplane.
std::vector<RestrictionRow> table2_restriction_types(const IntermediateLabel& label);

// Which row a hyperplane of build_intermediate(label) falls under, read off
// the support of its normal.
HyperplaneClass classify_hyperplane(const IntermediateLabel& label, const Vec& normal);

// Walks the restriction table down from the label and asks, dimension by
// dimension, for a reachable label whose exponents are the matching prefix.
Verdict symbolic_accuracy(const IntermediateLabel& label);
// Lemma-style criterion: r = 2, or r + k >= l for 1 <= k < l; k = 0 needs
// r = 2 or l = 2; k = l is always accurate.
bool closed_form_accuracy(const IntermediateLabel& label);

// Full accuracy check of the built arrangement. Pre: l <= 4 and r <= 4.
AccuracyReport bruteforce_cross_check(const IntermediateLabel& label, const LatticeOptions& opts = {});

struct LocalizationFixtureReport {
  IntermediateLabel whole;  // A^1_l(r)
  IntermediateLabel local;  // A^0_{l-1}(r)
  std::size_t localization_size = 0;
  bool isomorphic = false;  // A_X and A^0_{l-1}(r) have isomorphic lattices
  AccuracyReport whole_report;
  AccuracyReport local_report;

  bool holds() const {
    return isomorphic && whole_report.verdict == Verdict::Accurate && local_report.verdict == Verdict::NotAccurate;
  }
};

// Localizes A^1_l(r) at X = {x_2 = ... = x_l = 0}, the intersection of the
// x_i - zeta^n x_j with 2 <= i < j. Pre: l >= 4 and r >= l - 1.
LocalizationFixtureReport localization_fixture_check(int l, int r, const LatticeOptions& opts = {});

}  // namespace arrkit
