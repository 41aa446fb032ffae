#include "qprove/prover.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qprove {

MeasurementRecord prove_once(const FormalSystem& system, const StateVector& s,
                             SeededRng& rng, std::uint64_t trial) {
  MeasurementOutcome outcome = measure(system.coder, s, rng);
  Tuple proof = extract_proof(system.coder, outcome, rng);
  return MeasurementRecord{outcome.outcome, std::move(proof),
                           outcome.probability, outcome.rng_seed, trial};
}

TrialReport run_trials(const FormalSystem& system, const StateSpec& spec,
                       std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  StateVector state = make_state(spec);

  TrialReport report;
  report.label = system.label;
  report.trials = trials;
  report.seed = seed;
  report.theoretical = outcome_distribution(system.coder, state);
  report.records.reserve(trials);
  for (std::uint64_t i = 0; i < trials; ++i) {
    SeededRng rng(derive_seed(seed, i));
    MeasurementRecord rec = prove_once(system, state, rng, i);
    report.empirical[rec.theorem] += 1;
    report.records.push_back(std::move(rec));
  }

  double tv = 0.0;
  double n = static_cast<double>(trials);
  for (const auto& [m, p] : report.theoretical.probabilities()) {
    auto it = report.empirical.find(m);
    double freq = it == report.empirical.end()
                      ? 0.0
                      : static_cast<double>(it->second) / n;
    tv += std::abs(freq - p);
  }
  for (const auto& [m, count] : report.empirical) {
    if (report.theoretical.probability(m) == 0.0) {
      tv += static_cast<double>(count) / n;
    }
  }
  report.total_variation = 0.5 * tv;
  return report;
}

CoverageResult coverage_check(const FormalSystem& system,
                              const TrialReport& report, std::uint64_t bound) {
  CoverageResult result;
  for (const auto& [m, count] : report.empirical) {
    if (count > 0) result.observed.push_back(m);
  }
  for (const auto& [m, p] : report.theoretical.probabilities()) {
    if (m > bound) continue;
    if (!std::binary_search(result.observed.begin(), result.observed.end(), m)) {
      result.missing.push_back(m);
    }
  }
  for (const BigInt& m : result.observed) {
    if (preimages(system.coder, m, 1).tuples.empty()) {
      result.spurious.push_back(m);
    }
  }
  return result;
}

}  // namespace qprove
