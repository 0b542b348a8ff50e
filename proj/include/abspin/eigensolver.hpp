#pragma once

#include <vector>

#include "abspin/matrix.hpp"

namespace abspin {

struct EigenSystem {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // row-major d x d; column j is eigenvector j.
                                // Empty unless requested.
  int dimension = 0;

  double vector(int component, int which) const {
    return vectors[component * dimension + which];
  }
};

// Full spectrum of a real symmetric matrix: Householder reduction to
// tridiagonal form followed by the QL algorithm with implicit shifts
// (EISPACK tred2/tql2 lineage). Backward stable; eigenvalues returned
// sorted ascending. Throws ConvergenceFailure if the QL iteration cap is
// exceeded, which does not happen for finite input.
EigenSystem eigen_symmetric(const BandedSymmetricMatrix& matrix,
                            bool with_vectors = false);

EigenSystem eigen_symmetric_dense(std::vector<double> dense, int n,
                                  bool with_vectors = false);

}  // namespace abspin
