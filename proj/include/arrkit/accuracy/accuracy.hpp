#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arrkit/arrangement/arrangement.hpp"
#include "arrkit/arrangement/lattice.hpp"
#include "arrkit/matfree/mat.hpp"

namespace arrkit {

enum class AccuracyMode { Exact, Almost };
enum class AccuracyStrategy { WitnessFirst, Exhaustive };
enum class Verdict { Accurate, NotAccurate, Inconclusive };

enum class EvidenceLevel {
  // Freeness of the restriction follows from a checked MAT certificate, a
  // divisional flag, or a supersolvable restriction lattice.
  CertifiedFree,
  // chi of the restriction has the required roots. Necessary only.
  CharpolyConsistent,
  // d is below the dimension of the center: no flat has that dimension, and
  // the requirement is read on the essentialization (all e_i = 0 there).
  EssentialReduction,
};

const char* to_string(AccuracyMode m);
const char* to_string(Verdict v);
const char* to_string(EvidenceLevel e);

struct AccuracyEntry {
  std::size_t d = 0;
  std::optional<Flat> witness;
  Exponents exponents;  // restriction exponents of the witness, or the target when none
  std::optional<EvidenceLevel> evidence;
  std::string source;  // how the witness was found
  bool scanned_exhaustively = false;
  std::size_t flats_scanned = 0;
};

struct AccuracyReport {
  Verdict verdict = Verdict::Inconclusive;
  AccuracyMode mode = AccuracyMode::Exact;
  Exponents exponents;
  std::string provenance;
  std::vector<AccuracyEntry> entries;  // d = 1..ell
  std::string note;                    // set when the verdict is inconclusive

  // First dimension without a witness, if any.
  std::optional<std::size_t> failing_dimension() const;
};

struct AccuracyOptions {
  AccuracyMode mode = AccuracyMode::Exact;
  AccuracyStrategy strategy = AccuracyStrategy::WitnessFirst;
  LatticeOptions lattice;
  std::string provenance;
  // A valid MAT certificate for the same arrangement; consulted first under
  // WitnessFirst.
  std::optional<MatCertificate> certificate;
};

// Pre: exponents has one entry per coordinate and sums to |A|.
AccuracyReport check_accuracy(const Arrangement& a, const Exponents& exponents, const AccuracyOptions& opts = {});

// Roots of chi(A^X) if it splits over the nonnegative integers.
std::optional<Exponents> restriction_exponent_candidates(const Arrangement& a, const Flat& x,
                                                         const LatticeOptions& opts = {});

// All dimension-d flats whose restriction has chi = prod_{i<=d} (t - e_i),
// in lattice order.
std::vector<Flat> scan_unique_witnesses(const Arrangement& a, const Exponents& exponents, std::size_t d,
                                        const LatticeOptions& opts = {});

}  // namespace arrkit
