#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qprove/core.hpp"
#include "qprove/fock.hpp"
#include "qprove/polynomial.hpp"
#include "qprove/rng.hpp"

namespace qprove {

// Born distribution of F over a state: p(m) = sum of |c_n|^2 over basis
// tuples with F(n) = m.  Keys ascending; entries all strictly positive.
class OutcomeDistribution {
 public:
  using Map = std::map<BigInt, double>;

  OutcomeDistribution() = default;
  explicit OutcomeDistribution(Map probabilities);

  const Map& probabilities() const { return probabilities_; }
  double probability(const BigInt& outcome) const;  // 0 when absent
  double total() const;

 private:
  Map probabilities_;
};

struct MeasurementOutcome {
  BigInt outcome;
  StateVector collapsed;
  double probability = 0.0;
  std::uint64_t rng_seed = 0;
};

// Requires F.arity() == s.modes() and |norm(s) - 1| <= 1e-6.
OutcomeDistribution outcome_distribution(const NonnegPolynomial& F,
                                         const StateVector& s);

// Projective measurement of F(N_1..N_k): samples an outcome m by
// inverse CDF over the distribution (outcomes ascending), collapses to
// the renormalized restriction of s to { n : F(n) = m }.
MeasurementOutcome measure(const NonnegPolynomial& F, const StateVector& s,
                           SeededRng& rng);

// Simultaneous measurement of all number operators: samples one basis
// tuple by inverse CDF in colex order; returns it with its probability.
std::pair<Tuple, double> measure_numbers(const StateVector& s, SeededRng& rng);

// Second step of the proving procedure: measure the numbers on the
// collapsed state.  Every tuple in its support satisfies F(n) = outcome,
// so this cannot fail; a mismatch would be a logic error and throws.
Tuple extract_proof(const NonnegPolynomial& F,
                    const MeasurementOutcome& outcome, SeededRng& rng);

// Spectrum of the diagonal operator F(N_1..N_k) on the truncated box:
// { F(n) : n in [0,cutoff)^k }, ascending, deduplicated, exact.
std::vector<BigInt> spectrum_diagonal(const NonnegPolynomial& F, int modes,
                                      std::uint64_t cutoff);

// Oscillator energies sum_j scale_j (n_j + 1/2) over the truncated box,
// ascending, deduplicated within 1e-12 relative.  Scales must be positive.
std::vector<double> harmonic_energies(const std::vector<double>& scales,
                                      std::uint64_t cutoff);

}  // namespace qprove
