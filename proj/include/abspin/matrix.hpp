#pragma once

#include <vector>

namespace abspin {

// Real symmetric matrix in the |S,m> basis (m = -S ... S ascending) whose
// nonzero entries sit on the diagonal and on the two side diagonals at
// offset N. Stored dense; dimensions here are at most a few hundred.
class BandedSymmetricMatrix {
public:
  BandedSymmetricMatrix(int dimension, int band);

  int dimension() const { return dim_; }
  int band() const { return band_; }

  double operator()(int i, int j) const { return a_[i * dim_ + j]; }

  // writes both (i,j) and (j,i)
  void set(int i, int j, double value);

  double trace() const;
  double frobenius_norm() const;

  const std::vector<double>& data() const { return a_; }

private:
  int dim_;
  int band_;
  std::vector<double> a_;  // row-major dense
};

}  // namespace abspin
