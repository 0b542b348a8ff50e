#include "abspin/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "abspin/errors.hpp"

namespace abspin {

namespace {

// Householder reduction of the symmetric matrix in v (row-major n x n) to
// tridiagonal form: diagonal into d, subdiagonal into e (e[0] = 0). On
// return v holds the accumulated orthogonal transformation.
void tridiagonalize(std::vector<double>& v, int n, std::vector<double>& d,
                    std::vector<double>& e) {
  for (int j = 0; j < n; ++j) d[j] = v[(n - 1) * n + j];

  for (int i = n - 1; i > 0; --i) {
    double scale = 0.0;
    double h = 0.0;
    for (int k = 0; k < i; ++k) scale += std::abs(d[k]);
    if (scale == 0.0) {
      e[i] = d[i - 1];
      for (int j = 0; j < i; ++j) {
        d[j] = v[(i - 1) * n + j];
        v[i * n + j] = 0.0;
        v[j * n + i] = 0.0;
      }
    } else {
      // generate Householder vector
      for (int k = 0; k < i; ++k) {
        d[k] /= scale;
        h += d[k] * d[k];
      }
      double f = d[i - 1];
      double g = std::sqrt(h);
      if (f > 0.0) g = -g;
      e[i] = scale * g;
      h -= f * g;
      d[i - 1] = f - g;
      for (int j = 0; j < i; ++j) e[j] = 0.0;

      // apply similarity transformation to the remaining submatrix
      for (int j = 0; j < i; ++j) {
        f = d[j];
        v[j * n + i] = f;
        g = e[j] + v[j * n + j] * f;
        for (int k = j + 1; k <= i - 1; ++k) {
          g += v[k * n + j] * d[k];
          e[k] += v[k * n + j] * f;
        }
        e[j] = g;
      }
      f = 0.0;
      for (int j = 0; j < i; ++j) {
        e[j] /= h;
        f += e[j] * d[j];
      }
      const double hh = f / (h + h);
      for (int j = 0; j < i; ++j) e[j] -= hh * d[j];
      for (int j = 0; j < i; ++j) {
        f = d[j];
        g = e[j];
        for (int k = j; k <= i - 1; ++k)
          v[k * n + j] -= (f * e[k] + g * d[k]);
        d[j] = v[(i - 1) * n + j];
        v[i * n + j] = 0.0;
      }
    }
    d[i] = h;
  }

  // accumulate transformations
  for (int i = 0; i < n - 1; ++i) {
    v[(n - 1) * n + i] = v[i * n + i];
    v[i * n + i] = 1.0;
    const double h = d[i + 1];
    if (h != 0.0) {
      for (int k = 0; k <= i; ++k) d[k] = v[k * n + (i + 1)] / h;
      for (int j = 0; j <= i; ++j) {
        double g = 0.0;
        for (int k = 0; k <= i; ++k) g += v[k * n + (i + 1)] * v[k * n + j];
        for (int k = 0; k <= i; ++k) v[k * n + j] -= g * d[k];
      }
    }
    for (int k = 0; k <= i; ++k) v[k * n + (i + 1)] = 0.0;
  }
  for (int j = 0; j < n; ++j) {
    d[j] = v[(n - 1) * n + j];
    v[(n - 1) * n + j] = 0.0;
  }
  v[(n - 1) * n + (n - 1)] = 1.0;
  e[0] = 0.0;
}

// QL iteration with implicit shifts on the tridiagonal (d, e); eigenvectors
// accumulated into v when requested.
void ql_implicit(std::vector<double>& d, std::vector<double>& e,
                 std::vector<double>& v, int n, bool with_vectors) {
  constexpr int max_iterations = 60;

  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  double f = 0.0;
  double tst1 = 0.0;
  const double eps = std::ldexp(1.0, -52);

  for (int l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    int m = l;
    while (m < n) {
      if (std::abs(e[m]) <= eps * tst1) break;
      ++m;
    }

    if (m > l) {
      int iter = 0;
      do {
        if (++iter > max_iterations)
          raise(errc::convergence_failure,
                "QL iteration exceeded " + std::to_string(max_iterations) +
                    " sweeps");

        // implicit shift from the 2x2 leading block
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0.0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (int i = l + 2; i < n; ++i) d[i] -= h;
        f += h;

        p = d[m];
        double c = 1.0;
        double c2 = c;
        double c3 = c;
        const double el1 = e[l + 1];
        double s = 0.0;
        double s2 = 0.0;
        for (int i = m - 1; i >= l; --i) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[i];
          h = c * p;
          r = std::hypot(p, e[i]);
          e[i + 1] = s * r;
          s = e[i] / r;
          c = p / r;
          p = c * d[i] - s * g;
          d[i + 1] = h + s * (c * g + s * d[i]);

          if (with_vectors) {
            for (int k = 0; k < n; ++k) {
              h = v[k * n + i + 1];
              v[k * n + i + 1] = s * v[k * n + i] + c * h;
              v[k * n + i] = c * v[k * n + i] - s * h;
            }
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }
}

}  // namespace

EigenSystem eigen_symmetric_dense(std::vector<double> dense, int n,
                                  bool with_vectors) {
  for (double x : dense)
    if (!std::isfinite(x))
      raise(errc::out_of_range, "matrix has non-finite entries");

  std::vector<double> d(n, 0.0), e(n, 0.0);
  tridiagonalize(dense, n, d, e);
  ql_implicit(d, e, dense, n, with_vectors);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&d](int a, int b) { return d[a] < d[b]; });

  EigenSystem out;
  out.dimension = n;
  out.values.resize(n);
  for (int j = 0; j < n; ++j) out.values[j] = d[order[j]];
  if (with_vectors) {
    out.vectors.assign(static_cast<size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        out.vectors[i * n + j] = dense[i * n + order[j]];
  }
  return out;
}

EigenSystem eigen_symmetric(const BandedSymmetricMatrix& matrix,
                            bool with_vectors) {
  return eigen_symmetric_dense(matrix.data(), matrix.dimension(),
                               with_vectors);
}

}  // namespace abspin
