#include "qprove/fock.hpp"

#include <cmath>
#include <stdexcept>

namespace qprove {
namespace {

constexpr std::size_t kMaxBoxStates = std::size_t(1) << 22;

void validate_shape(int modes, std::uint64_t cutoff) {
  if (modes < 1) throw std::invalid_argument("state needs at least one mode");
  if (cutoff < 1) throw std::invalid_argument("cutoff must be at least 1");
}

StateVector normalized_or_throw(int modes, std::uint64_t cutoff,
                                StateVector::AmplitudeMap amplitudes,
                                const char* family) {
  StateVector s(modes, cutoff, std::move(amplitudes));
  if (s.norm_squared() == 0.0) {
    throw std::invalid_argument(std::string(family) + " state has zero norm");
  }
  return s.normalized();
}

}  // namespace

bool ColexLess::operator()(const Tuple& a, const Tuple& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::size_t colex_index(const Tuple& occupations, std::uint64_t cutoff) {
  std::size_t index = 0;
  for (std::size_t i = occupations.size(); i-- > 0;) {
    index = index * cutoff + occupations[i];
  }
  return index;
}

Tuple occupations_from_index(std::size_t index, int modes,
                             std::uint64_t cutoff) {
  Tuple n(modes, 0);
  for (int i = 0; i < modes; ++i) {
    n[i] = index % cutoff;
    index /= cutoff;
  }
  return n;
}

std::size_t box_dimension(int modes, std::uint64_t cutoff, std::size_t limit) {
  std::size_t dim = 1;
  for (int i = 0; i < modes; ++i) {
    if (cutoff != 0 && dim > limit / cutoff) {
      throw std::length_error("truncated basis too large");
    }
    dim *= cutoff;
  }
  if (dim > limit) throw std::length_error("truncated basis too large");
  return dim;
}

StateVector::StateVector(int modes, std::uint64_t cutoff)
    : modes_(modes), cutoff_(cutoff) {
  validate_shape(modes, cutoff);
}

StateVector::StateVector(int modes, std::uint64_t cutoff,
                         AmplitudeMap amplitudes, double truncation_loss)
    : modes_(modes),
      cutoff_(cutoff),
      amplitudes_(std::move(amplitudes)),
      truncation_loss_(truncation_loss) {
  validate_shape(modes, cutoff);
  for (auto it = amplitudes_.begin(); it != amplitudes_.end();) {
    const Tuple& n = it->first;
    if (n.size() != static_cast<std::size_t>(modes)) {
      throw std::invalid_argument("occupation tuple arity mismatch");
    }
    for (std::uint64_t v : n) {
      if (v >= cutoff) {
        throw std::invalid_argument("occupation at or above cutoff");
      }
    }
    if (it->second == Complex(0.0, 0.0)) {
      it = amplitudes_.erase(it);
    } else {
      ++it;
    }
  }
}

Complex StateVector::amplitude(const Tuple& occupations) const {
  auto it = amplitudes_.find(occupations);
  if (it == amplitudes_.end()) return {0.0, 0.0};
  return it->second;
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const auto& [n, c] : amplitudes_) total += std::norm(c);
  return total;
}

double StateVector::norm() const { return std::sqrt(norm_squared()); }

bool StateVector::is_normalized(double tol) const {
  return std::abs(norm() - 1.0) <= tol;
}

StateVector StateVector::normalized() const {
  double n = norm();
  if (n == 0.0) throw std::domain_error("cannot normalize the zero vector");
  AmplitudeMap scaled = amplitudes_;
  for (auto& [occ, c] : scaled) c /= n;
  return StateVector(modes_, cutoff_, std::move(scaled), truncation_loss_);
}

StateVector make_state(const StateSpec& spec) {
  return std::visit(
      [](const auto& s) -> StateVector {
        using T = std::decay_t<decltype(s)>;
        validate_shape(s.modes, s.cutoff);
        StateVector::AmplitudeMap amps;

        if constexpr (std::is_same_v<T, ExplicitSpec>) {
          for (const auto& [n, c] : s.amplitudes) amps[n] += c;
          return normalized_or_throw(s.modes, s.cutoff, std::move(amps),
                                     "explicit");
        } else if constexpr (std::is_same_v<T, UniformBoxSpec>) {
          std::size_t dim = box_dimension(s.modes, s.cutoff, kMaxBoxStates);
          double amp = 1.0 / std::sqrt(static_cast<double>(dim));
          for_each_box_point(s.modes, s.cutoff,
                             [&](const Tuple& n) { amps[n] = Complex(amp, 0.0); });
          return StateVector(s.modes, s.cutoff, std::move(amps));
        } else if constexpr (std::is_same_v<T, CoherentSpec>) {
          if (s.alpha.size() != static_cast<std::size_t>(s.modes)) {
            throw std::invalid_argument("coherent spec needs one alpha per mode");
          }
          box_dimension(s.modes, s.cutoff, kMaxBoxStates);
          // per-mode amplitudes alpha^n / sqrt(n!), tensored over modes
          std::vector<std::vector<Complex>> mode_amps(s.modes);
          for (int j = 0; j < s.modes; ++j) {
            auto& v = mode_amps[j];
            v.resize(s.cutoff);
            v[0] = Complex(1.0, 0.0);
            for (std::uint64_t n = 1; n < s.cutoff; ++n) {
              v[n] = v[n - 1] * s.alpha[j] /
                     std::sqrt(static_cast<double>(n));
            }
          }
          for_each_box_point(s.modes, s.cutoff, [&](const Tuple& n) {
            Complex c(1.0, 0.0);
            for (int j = 0; j < s.modes; ++j) c *= mode_amps[j][n[j]];
            amps[n] = c;
          });
          return normalized_or_throw(s.modes, s.cutoff, std::move(amps),
                                     "coherent");
        } else {
          static_assert(std::is_same_v<T, RandomGaussianSpec>);
          box_dimension(s.modes, s.cutoff, kMaxBoxStates);
          SeededRng rng(s.seed);
          for_each_box_point(s.modes, s.cutoff, [&](const Tuple& n) {
            amps[n] = rng.complex_gaussian();
          });
          return normalized_or_throw(s.modes, s.cutoff, std::move(amps),
                                     "random");
        }
      },
      spec);
}

StateVector apply_ladder(LadderOp op, int mode, const StateVector& s) {
  if (mode < 0 || mode >= s.modes()) {
    throw std::invalid_argument("ladder mode out of range");
  }
  StateVector::AmplitudeMap out;
  double dropped = 0.0;
  for (const auto& [n, c] : s.amplitudes()) {
    if (op == LadderOp::Annihilate) {
      if (n[mode] == 0) continue;
      Tuple m = n;
      m[mode] -= 1;
      out[m] += c * std::sqrt(static_cast<double>(n[mode]));
    } else {
      std::uint64_t up = n[mode] + 1;
      if (up >= s.cutoff()) {
        dropped += std::norm(c) * static_cast<double>(up);
        continue;
      }
      Tuple m = n;
      m[mode] = up;
      out[m] += c * std::sqrt(static_cast<double>(up));
    }
  }
  return StateVector(s.modes(), s.cutoff(), std::move(out),
                     s.truncation_loss() + dropped);
}

}  // namespace qprove
