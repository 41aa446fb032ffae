#include "qprove/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qprove {
namespace {

double off_diagonal_norm(const std::vector<Complex>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r + 1; c < n; ++c) {
      sum += 2.0 * std::norm(a[r * n + c]);
    }
  }
  return std::sqrt(sum);
}

}  // namespace

std::vector<double> eigen_spectrum(const HermitianMatrix& M,
                                   double hermitian_tol, double off_tol,
                                   int max_sweeps) {
  std::size_t n = M.dim();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) {
      if (std::abs(M.at(r, c) - std::conj(M.at(c, r))) > hermitian_tol) {
        throw std::invalid_argument("matrix is not Hermitian");
      }
    }
  }

  // Work on the exactly Hermitian average (A + A^H)/2; only the upper
  // triangle plus a real diagonal is consulted below.
  std::vector<Complex> a(n * n);
  std::vector<double> diag(n);
  for (std::size_t r = 0; r < n; ++r) {
    diag[r] = M.at(r, r).real();
    for (std::size_t c = 0; c < n; ++c) {
      a[r * n + c] = 0.5 * (M.at(r, c) + std::conj(M.at(c, r)));
    }
    a[r * n + r] = Complex(diag[r], 0.0);
  }

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_diagonal_norm(a, n) <= off_tol) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        Complex beta = a[p * n + q];
        double mag = std::abs(beta);
        if (mag == 0.0) continue;

        // Unitary 2x2 on (p,q): columns u_p = (c, s e^{-i phi}),
        // u_q = (-s e^{i phi}, c) with beta = |beta| e^{i phi}; t = s/c
        // solves t^2 + 2 tau t - 1 = 0 so the rotated (p,q) entry is 0.
        double alpha = diag[p];
        double gamma = diag[q];
        double tau = (alpha - gamma) / (2.0 * mag);
        double t = (tau >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(tau) + std::hypot(1.0, tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;
        Complex phase = beta / mag;
        Complex sigma = s * std::conj(phase);  // s e^{-i phi}

        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          Complex arp = a[r * n + p];
          Complex arq = a[r * n + q];
          a[r * n + p] = c * arp + sigma * arq;
          a[r * n + q] = -std::conj(sigma) * arp + c * arq;
          a[p * n + r] = std::conj(a[r * n + p]);
          a[q * n + r] = std::conj(a[r * n + q]);
        }
        diag[p] = alpha * c * c + gamma * s * s + 2.0 * s * c * mag;
        diag[q] = alpha * s * s + gamma * c * c - 2.0 * s * c * mag;
        a[p * n + p] = Complex(diag[p], 0.0);
        a[q * n + q] = Complex(diag[q], 0.0);
        a[p * n + q] = Complex(0.0, 0.0);
        a[q * n + p] = Complex(0.0, 0.0);
      }
    }
  }
  if (off_diagonal_norm(a, n) > off_tol) {
    throw std::runtime_error("Jacobi iteration did not converge");
  }

  std::sort(diag.begin(), diag.end());
  return diag;
}

}  // namespace qprove
