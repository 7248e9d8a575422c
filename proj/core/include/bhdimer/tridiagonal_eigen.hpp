#pragma once

#include <vector>

#include "bhdimer/matrix.hpp"
#include "bhdimer/model.hpp"

namespace bhdimer {

// Eigenpairs of a real symmetric matrix. eigenvalues ascending; column j of
// eigenvectors is the normalized eigenvector of eigenvalues[j], expressed in
// the Fock basis.
struct Spectrum {
  std::vector<double> eigenvalues;
  RealMatrix eigenvectors;

  std::size_t size() const { return eigenvalues.size(); }
};

struct EigenSolverOptions {
  // QL iterations allowed before an eigenvalue is declared unconverged.
  int max_iterations_per_eigenvalue = 50;
};

// Implicit-shift QL iteration with Wilkinson-type shift and accumulation of
// the Givens rotations into the eigenvector matrix. O(n^2) for eigenvalues,
// O(n^3) with vectors. Throws ConvergenceFailure carrying the index of the
// eigenvalue that ran out of iterations.
Spectrum eigendecompose(const TridiagonalHamiltonian& h, const EigenSolverOptions& options = {});

}  // namespace bhdimer
