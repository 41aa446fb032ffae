#include "qprove/observable.hpp"

#include <algorithm>
#include <stdexcept>

namespace qprove {
namespace {

constexpr std::size_t kMaxMatrixDim = 4096;

}  // namespace

GeneralObservable::GeneralObservable(int modes,
                                     std::vector<ObservableMonomial> monomials)
    : modes_(modes), monomials_(std::move(monomials)) {
  if (modes < 0) throw std::invalid_argument("negative mode count");
  std::erase_if(monomials_,
                [](const ObservableMonomial& m) { return m.coefficient.is_zero(); });
  for (const ObservableMonomial& m : monomials_) {
    for (const LadderFactor& f : m.factors) {
      if (f.mode < 0 || f.mode >= modes) {
        throw std::invalid_argument("ladder factor mode out of range");
      }
    }
  }
}

std::size_t GeneralObservable::max_factor_count() const {
  std::size_t longest = 0;
  for (const ObservableMonomial& m : monomials_) {
    longest = std::max(longest, m.factors.size());
  }
  return longest;
}

GeneralObservable GeneralObservable::adjoint() const {
  std::vector<ObservableMonomial> out;
  out.reserve(monomials_.size());
  for (const ObservableMonomial& m : monomials_) {
    ObservableMonomial conj;
    conj.coefficient = m.coefficient.conjugate();
    conj.factors.reserve(m.factors.size());
    for (auto it = m.factors.rbegin(); it != m.factors.rend(); ++it) {
      conj.factors.push_back(
          {it->op == LadderOp::Create ? LadderOp::Annihilate : LadderOp::Create,
           it->mode});
    }
    out.push_back(std::move(conj));
  }
  return GeneralObservable(modes_, std::move(out));
}

GeneralObservable observable_from_polynomial(const NonnegPolynomial& F) {
  int k = F.arity();
  std::vector<ObservableMonomial> monomials;
  for (const PolyTerm& t : F.terms()) {
    ObservableMonomial m;
    m.coefficient = {Rational(t.coefficient), Rational(0)};
    for (int j = 0; j < k; ++j) {
      for (std::uint32_t e = 0; e < t.exponents[j]; ++e) {
        m.factors.push_back({LadderOp::Create, j});
        m.factors.push_back({LadderOp::Annihilate, j});
      }
    }
    monomials.push_back(std::move(m));
  }
  return GeneralObservable(k, std::move(monomials));
}

GeneralObservable number_operator(int modes, int mode) {
  if (mode < 0 || mode >= modes) {
    throw std::invalid_argument("mode out of range");
  }
  ObservableMonomial m;
  m.coefficient = {Rational(1), Rational(0)};
  m.factors = {{LadderOp::Create, mode}, {LadderOp::Annihilate, mode}};
  return GeneralObservable(modes, {std::move(m)});
}

StateVector apply_observable(const GeneralObservable& A, const StateVector& s) {
  if (A.modes() != s.modes()) {
    throw std::invalid_argument("observable and state mode counts differ");
  }
  StateVector::AmplitudeMap acc;
  double loss = s.truncation_loss();
  for (const ObservableMonomial& m : A.monomials()) {
    StateVector chain = s;
    for (auto it = m.factors.rbegin(); it != m.factors.rend(); ++it) {
      chain = apply_ladder(it->op, it->mode, chain);
    }
    Complex coeff = m.coefficient.to_complex();
    for (const auto& [n, c] : chain.amplitudes()) acc[n] += coeff * c;
    loss += std::norm(coeff) * (chain.truncation_loss() - s.truncation_loss());
  }
  for (auto it = acc.begin(); it != acc.end();) {
    if (it->second == Complex(0.0, 0.0)) {
      it = acc.erase(it);
    } else {
      ++it;
    }
  }
  return StateVector(s.modes(), s.cutoff(), std::move(acc), loss);
}

HermitianMatrix::HermitianMatrix(std::size_t dim)
    : dim_(dim), entries_(dim * dim, Complex(0.0, 0.0)) {}

Complex& HermitianMatrix::at(std::size_t row, std::size_t col) {
  return entries_[row * dim_ + col];
}

const Complex& HermitianMatrix::at(std::size_t row, std::size_t col) const {
  return entries_[row * dim_ + col];
}

HermitianMatrix matrix_of(const GeneralObservable& A, int modes,
                          std::uint64_t cutoff) {
  if (A.modes() != modes) {
    throw std::invalid_argument("observable and box mode counts differ");
  }
  std::size_t dim = box_dimension(modes, cutoff, kMaxMatrixDim);
  HermitianMatrix M(dim);
  if (modes < 1) {
    // 0-mode box is the single empty tuple; only constant monomials act
    for (const ObservableMonomial& m : A.monomials()) {
      M.at(0, 0) += m.coefficient.to_complex();
    }
    return M;
  }
  for (std::size_t col = 0; col < dim; ++col) {
    StateVector::AmplitudeMap basis;
    basis[occupations_from_index(col, modes, cutoff)] = Complex(1.0, 0.0);
    StateVector column = apply_observable(
        A, StateVector(modes, cutoff, std::move(basis)));
    for (const auto& [n, c] : column.amplitudes()) {
      M.at(colex_index(n, cutoff), col) = c;
    }
  }
  return M;
}

bool is_hermitian(const GeneralObservable& A, int modes, std::uint64_t cutoff,
                  double tol) {
  HermitianMatrix M = matrix_of(A, modes, cutoff);
  std::uint64_t reach = A.max_factor_count();
  if (reach >= cutoff) return true;  // no interior block survives
  std::uint64_t interior = cutoff - reach;

  std::vector<std::size_t> inside;
  for_each_box_point(modes, cutoff, [&](const Tuple& n) {
    for (std::uint64_t v : n) {
      if (v >= interior) return;
    }
    inside.push_back(colex_index(n, cutoff));
  });
  for (std::size_t r : inside) {
    for (std::size_t c : inside) {
      Complex diff = M.at(r, c) - std::conj(M.at(c, r));
      if (std::abs(diff) > tol) return false;
    }
  }
  return true;
}

}  // namespace qprove
