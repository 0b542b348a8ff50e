#include "abspin/matrix.hpp"

#include <cmath>

#include "abspin/errors.hpp"

namespace abspin {

BandedSymmetricMatrix::BandedSymmetricMatrix(int dimension, int band)
    : dim_(dimension), band_(band), a_(static_cast<size_t>(dimension) * dimension, 0.0) {
  if (dimension <= 0) raise(errc::out_of_range, "matrix dimension must be positive");
  if (band < 0) raise(errc::out_of_range, "band width must be non-negative");
}

void BandedSymmetricMatrix::set(int i, int j, double value) {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
    raise(errc::out_of_range, "matrix index outside dimension");
  if (i != j && std::abs(i - j) != band_)
    raise(errc::out_of_range, "entry outside the symmetry-allowed band");
  a_[i * dim_ + j] = value;
  a_[j * dim_ + i] = value;
}

double BandedSymmetricMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < dim_; ++i) t += a_[i * dim_ + i];
  return t;
}

double BandedSymmetricMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

}  // namespace abspin
