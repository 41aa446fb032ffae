#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qprove/core.hpp"
#include "qprove/fock.hpp"
#include "qprove/measurement.hpp"
#include "qprove/polynomial.hpp"
#include "qprove/rng.hpp"

namespace qprove {

// A formal system in the coded sense: m = F(n_1..n_k) says "m is a
// theorem and the tuple is a proof of it".  The decoder is display
// sugar only; no operation depends on it.
struct FormalSystem {
  NonnegPolynomial coder;
  std::string label;
  std::map<BigInt, std::string> decoder;
};

struct MeasurementRecord {
  BigInt theorem;
  Tuple proof;
  double probability = 0.0;  // Born probability of the theorem
  std::uint64_t seed = 0;    // rng seed that produced this record
  std::uint64_t trial = 0;
};

struct TrialReport {
  std::string label;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;  // master seed
  std::vector<MeasurementRecord> records;
  std::map<BigInt, std::uint64_t> empirical;
  OutcomeDistribution theoretical;
  double total_variation = 0.0;
};

// One run of the proving procedure: measure F, collapse, read the proof
// off the collapsed state.  By construction eval(coder, proof) == theorem.
MeasurementRecord prove_once(const FormalSystem& system, const StateVector& s,
                             SeededRng& rng, std::uint64_t trial = 0);

// `trials` independent runs on the state built from `spec`; trial i uses
// the rng seeded with derive_seed(seed, i).  Deterministic end to end
// for fixed arguments.
TrialReport run_trials(const FormalSystem& system, const StateSpec& spec,
                       std::uint64_t trials, std::uint64_t seed);

struct CoverageResult {
  std::vector<BigInt> observed;  // empirical support, ascending
  std::vector<BigInt> missing;   // theoretical support never hit
  std::vector<BigInt> spurious;  // observed without a preimage (must be empty)
};

// Cross-checks a report against the exact oracles: every observed theorem
// must have a preimage under the coder, and anything in the theoretical
// support inside [0, bound] that never showed up is listed as missing.
CoverageResult coverage_check(const FormalSystem& system,
                              const TrialReport& report, std::uint64_t bound);

}  // namespace qprove
