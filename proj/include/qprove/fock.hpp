#pragma once

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include "qprove/core.hpp"
#include "qprove/rng.hpp"

namespace qprove {

// Basis order throughout is colexicographic: the first coordinate varies
// fastest, matching the index n_1 + n_2 D + n_3 D^2 + ...
struct ColexLess {
  bool operator()(const Tuple& a, const Tuple& b) const;
};

std::size_t colex_index(const Tuple& occupations, std::uint64_t cutoff);
Tuple occupations_from_index(std::size_t index, int modes,
                             std::uint64_t cutoff);

// cutoff^modes as size_t, rejecting anything above `limit`.
std::size_t box_dimension(int modes, std::uint64_t cutoff, std::size_t limit);

// Calls fn(tuple) for every point of [0,cutoff)^modes in colex order.
template <typename Fn>
void for_each_box_point(int modes, std::uint64_t cutoff, Fn&& fn) {
  Tuple n(modes, 0);
  while (true) {
    fn(n);
    int j = 0;
    while (j < modes) {
      if (++n[j] < cutoff) break;
      n[j] = 0;
      ++j;
    }
    if (j == modes) return;
  }
}

/*
 * Finite superposition over k-mode Fock basis states |n_1,...,n_k> with
 * every occupation below a per-mode cutoff D.  Treat instances as values:
 * every operation returns a fresh state.
 *
 * truncation_loss accumulates the squared norm dropped at the cutoff by
 * the operations that produced this state (creation past D-1); it is how
 * callers can tell exact truncated results from clipped ones.
 */
class StateVector {
 public:
  using AmplitudeMap = std::map<Tuple, Complex, ColexLess>;

  StateVector(int modes, std::uint64_t cutoff);  // zero vector
  StateVector(int modes, std::uint64_t cutoff, AmplitudeMap amplitudes,
              double truncation_loss = 0.0);

  int modes() const { return modes_; }
  std::uint64_t cutoff() const { return cutoff_; }
  const AmplitudeMap& amplitudes() const { return amplitudes_; }
  double truncation_loss() const { return truncation_loss_; }

  Complex amplitude(const Tuple& occupations) const;  // 0 when absent
  double norm_squared() const;
  double norm() const;
  bool is_normalized(double tol = 1e-9) const;
  StateVector normalized() const;  // throws std::domain_error on zero norm

 private:
  int modes_;
  std::uint64_t cutoff_;
  AmplitudeMap amplitudes_;
  double truncation_loss_ = 0.0;
};

// State families.  JSON bindings live in state_io.
struct ExplicitSpec {
  int modes = 1;
  std::uint64_t cutoff = 1;
  std::vector<std::pair<Tuple, Complex>> amplitudes;
};

struct UniformBoxSpec {
  int modes = 1;
  std::uint64_t cutoff = 1;
};

struct CoherentSpec {
  int modes = 1;
  std::uint64_t cutoff = 1;
  std::vector<Complex> alpha;  // one per mode
};

struct RandomGaussianSpec {
  int modes = 1;
  std::uint64_t cutoff = 1;
  std::uint64_t seed = 0;
};

using StateSpec =
    std::variant<ExplicitSpec, UniformBoxSpec, CoherentSpec, RandomGaussianSpec>;

// Normalized state for the family; deterministic for a fixed spec.
StateVector make_state(const StateSpec& spec);

enum class LadderOp { Annihilate, Create };

// a_j / a_j^dagger on mode j (0-based).  Annihilation of n_j = 0 drops the
// component; creation from n_j = D-1 drops the component and books its
// weight |c|^2 (n_j + 1) into truncation_loss.
StateVector apply_ladder(LadderOp op, int mode, const StateVector& s);

}  // namespace qprove
