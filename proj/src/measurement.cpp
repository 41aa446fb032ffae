#include "qprove/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace qprove {
namespace {

constexpr double kNormTol = 1e-6;
constexpr std::size_t kMaxBoxStates = std::size_t(1) << 22;

void check_measurable(const NonnegPolynomial& F, const StateVector& s) {
  if (F.arity() != s.modes()) {
    throw std::invalid_argument("polynomial arity and state modes differ");
  }
  if (std::abs(s.norm() - 1.0) > kNormTol) {
    throw std::invalid_argument("state is not normalized");
  }
}

}  // namespace

OutcomeDistribution::OutcomeDistribution(Map probabilities)
    : probabilities_(std::move(probabilities)) {
  for (auto it = probabilities_.begin(); it != probabilities_.end();) {
    if (it->second <= 0.0) {
      it = probabilities_.erase(it);
    } else {
      ++it;
    }
  }
}

double OutcomeDistribution::probability(const BigInt& outcome) const {
  auto it = probabilities_.find(outcome);
  if (it == probabilities_.end()) return 0.0;
  return it->second;
}

double OutcomeDistribution::total() const {
  double sum = 0.0;
  for (const auto& [m, p] : probabilities_) sum += p;
  return sum;
}

OutcomeDistribution outcome_distribution(const NonnegPolynomial& F,
                                         const StateVector& s) {
  check_measurable(F, s);
  OutcomeDistribution::Map map;
  for (const auto& [n, c] : s.amplitudes()) {
    map[F.eval(n)] += std::norm(c);
  }
  return OutcomeDistribution(std::move(map));
}

MeasurementOutcome measure(const NonnegPolynomial& F, const StateVector& s,
                           SeededRng& rng) {
  OutcomeDistribution dist = outcome_distribution(F, s);
  if (dist.probabilities().empty()) {
    throw std::invalid_argument("state has no support");
  }
  // scale the draw by the actual total so the last outcome absorbs the
  // rounding slack
  double u = rng.uniform01() * dist.total();
  BigInt chosen;
  double chosen_p = 0.0;
  double cumulative = 0.0;
  for (const auto& [m, p] : dist.probabilities()) {
    chosen = m;
    chosen_p = p;
    cumulative += p;
    if (u < cumulative) break;
  }

  StateVector::AmplitudeMap restricted;
  for (const auto& [n, c] : s.amplitudes()) {
    if (F.eval(n) == chosen) restricted[n] = c;
  }
  double scale = 1.0 / std::sqrt(chosen_p);
  for (auto& [n, c] : restricted) c *= scale;
  return MeasurementOutcome{
      chosen,
      StateVector(s.modes(), s.cutoff(), std::move(restricted),
                  s.truncation_loss()),
      chosen_p, rng.seed()};
}

std::pair<Tuple, double> measure_numbers(const StateVector& s, SeededRng& rng) {
  if (std::abs(s.norm() - 1.0) > kNormTol) {
    throw std::invalid_argument("state is not normalized");
  }
  if (s.amplitudes().empty()) {
    throw std::invalid_argument("state has no support");
  }
  double u = rng.uniform01() * s.norm_squared();
  Tuple chosen;
  double chosen_p = 0.0;
  double cumulative = 0.0;
  for (const auto& [n, c] : s.amplitudes()) {  // colex order
    chosen = n;
    chosen_p = std::norm(c);
    cumulative += chosen_p;
    if (u < cumulative) break;
  }
  return {chosen, chosen_p};
}

Tuple extract_proof(const NonnegPolynomial& F,
                    const MeasurementOutcome& outcome, SeededRng& rng) {
  auto [tuple, p] = measure_numbers(outcome.collapsed, rng);
  (void)p;
  if (F.eval(tuple) != outcome.outcome) {
    throw std::logic_error("collapsed state left the outcome eigenspace");
  }
  return tuple;
}

std::vector<BigInt> spectrum_diagonal(const NonnegPolynomial& F, int modes,
                                      std::uint64_t cutoff) {
  if (F.arity() != modes) {
    throw std::invalid_argument("polynomial arity and box modes differ");
  }
  if (modes > 0) box_dimension(modes, cutoff, kMaxBoxStates);
  if (cutoff < 1) throw std::invalid_argument("cutoff must be at least 1");
  std::set<BigInt> values;
  for_each_box_point(modes, cutoff,
                     [&](const Tuple& n) { values.insert(F.eval(n)); });
  return {values.begin(), values.end()};
}

std::vector<double> harmonic_energies(const std::vector<double>& scales,
                                      std::uint64_t cutoff) {
  if (scales.empty()) throw std::invalid_argument("no oscillator scales");
  for (double w : scales) {
    if (!(w > 0.0)) throw std::invalid_argument("scales must be positive");
  }
  if (cutoff < 1) throw std::invalid_argument("cutoff must be at least 1");
  int modes = static_cast<int>(scales.size());
  box_dimension(modes, cutoff, kMaxBoxStates);

  std::vector<double> values;
  for_each_box_point(modes, cutoff, [&](const Tuple& n) {
    double e = 0.0;
    for (int j = 0; j < modes; ++j) {
      e += scales[j] * (static_cast<double>(n[j]) + 0.5);
    }
    values.push_back(e);
  });
  std::sort(values.begin(), values.end());
  std::vector<double> out;
  for (double v : values) {
    if (!out.empty() && std::abs(v - out.back()) <=
                            1e-12 * std::max(1.0, std::abs(v))) {
      continue;
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace qprove
