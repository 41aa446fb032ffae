#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qprove/core.hpp"
#include "qprove/fock.hpp"
#include "qprove/polynomial.hpp"

namespace qprove {

// Exact scalar p + q i with rational p, q.
struct GaussianRational {
  Rational re;
  Rational im;

  Complex to_complex() const { return {to_double(re), to_double(im)}; }
  GaussianRational conjugate() const { return {re, -im}; }
  bool is_zero() const { return re == 0 && im == 0; }
  bool operator==(const GaussianRational&) const = default;
};

struct LadderFactor {
  LadderOp op;
  int mode;  // 0-based
  bool operator==(const LadderFactor&) const = default;
};

// One product term: coefficient times a string of ladder factors in
// written order.  Application is right to left, operator convention.
struct ObservableMonomial {
  GaussianRational coefficient;
  std::vector<LadderFactor> factors;
};

// Polynomial P(a_1..a_k, a_1^+..a_k^+) with Gaussian-rational
// coefficients.  Factor order inside a monomial is significant; the class
// does not reorder or merge across different factor strings.
class GeneralObservable {
 public:
  GeneralObservable(int modes, std::vector<ObservableMonomial> monomials);

  int modes() const { return modes_; }
  const std::vector<ObservableMonomial>& monomials() const {
    return monomials_;
  }
  std::size_t max_factor_count() const;

  // Reverse each factor string, swap create/annihilate, conjugate the
  // coefficients.
  GeneralObservable adjoint() const;

 private:
  int modes_;
  std::vector<ObservableMonomial> monomials_;
};

// F(N_1,...,N_k): each power N_j^e becomes e adjacent (create j,
// annihilate j) pairs, which act diagonally with exact eigenvalue n_j^e.
GeneralObservable observable_from_polynomial(const NonnegPolynomial& F);

GeneralObservable number_operator(int modes, int mode);

// A|s>: monomials applied factor by factor (rightmost first), results
// summed.  Truncation loss booked per monomial, weighted by |coefficient|^2.
StateVector apply_observable(const GeneralObservable& A, const StateVector& s);

// Dense complex matrix in the colex basis of [0,cutoff)^modes.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Complex& at(std::size_t row, std::size_t col);
  const Complex& at(std::size_t row, std::size_t col) const;

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

// <r|A|c> over the truncated box.  Rejects dimensions above 4096.
HermitianMatrix matrix_of(const GeneralObservable& A, int modes,
                          std::uint64_t cutoff);

// Hermiticity on the interior block (all occupations below
// cutoff - max_factor_count), where the cutoff cannot clip matrix
// elements.  Vacuously true when no interior block remains.
bool is_hermitian(const GeneralObservable& A, int modes, std::uint64_t cutoff,
                  double tol = 1e-9);

}  // namespace qprove
