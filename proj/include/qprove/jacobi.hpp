#pragma once

#include <vector>

#include "qprove/observable.hpp"

namespace qprove {

// All eigenvalues of a Hermitian matrix, ascending, with multiplicity.
// Cyclic Jacobi with complex rotations; each sweep zeroes every
// off-diagonal pair once.  Throws std::invalid_argument if the input is
// further than hermitian_tol from Hermitian, std::runtime_error if the
// off-diagonal Frobenius norm is still above off_tol after max_sweeps.
std::vector<double> eigen_spectrum(const HermitianMatrix& M,
                                   double hermitian_tol = 1e-9,
                                   double off_tol = 1e-10,
                                   int max_sweeps = 100);

}  // namespace qprove
