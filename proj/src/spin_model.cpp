#include "abspin/spin_model.hpp"

#include <cmath>
#include <string>

#include "abspin/errors.hpp"

namespace abspin {

int BandStructure::degenerate_pair_count() const {
  int count = 0;
  for (const auto& g : groups) count += static_cast<int>(g.size()) / 2;
  return count;
}

double ladder_product(int twoS, int twoM, int N) {
  if (N < 1) raise(errc::out_of_range, "ladder power must be positive");
  if (twoM < -twoS || twoM > twoS)
    raise(errc::out_of_range, "m outside [-S, S]");
  if (twoM + 2 * N > twoS)
    raise(errc::out_of_range, "m + N exceeds S; matrix element vanishes");

  // S(S+1) - m(m+1) = [2S(2S+2) - 2m(2m+2)] / 4, all integer
  const long long casimir = static_cast<long long>(twoS) * (twoS + 2);
  double product = 1.0;
  for (int j = 0; j < N; ++j) {
    const long long twoMj = twoM + 2 * j;
    const long long num = casimir - twoMj * (twoMj + 2);
    product *= std::sqrt(static_cast<double>(num) / 4.0);
  }
  return product;
}

double ladder_product_m(int twoS, double m, int N) {
  const double twice = 2.0 * m;
  const double rounded = std::round(twice);
  if (std::abs(twice - rounded) > 1e-9)
    raise(errc::out_of_range, "m must be integer or half-integer");
  return ladder_product(twoS, static_cast<int>(rounded), N);
}

BandedSymmetricMatrix build_hamiltonian(const SpinSystemParams& p) {
  const int d = p.dimension();
  const int N = p.symmetry_order;
  BandedSymmetricMatrix H(d, N);

  for (int i = 0; i < d; ++i) {
    const int twoM = -p.twoS + 2 * i;
    // m^2 - h S m with m = twoM/2, S = twoS/2
    const double diag = 0.25 * (static_cast<double>(twoM) * twoM -
                                p.field * p.twoS * twoM);
    H.set(i, i, diag);
  }
  for (int i = 0; i + N < d; ++i) {
    const int twoM = -p.twoS + 2 * i;
    H.set(i, i + N, -0.5 * p.lambda * ladder_product(p.twoS, twoM, N));
  }
  return H;
}

Spectrum diagonalize(const BandedSymmetricMatrix& matrix,
                     const SpinSystemParams& p) {
  EigenSystem sys = eigen_symmetric(matrix, false);
  return Spectrum{std::move(sys.values), p};
}

Spectrum exact_spectrum(const SpinSystemParams& p) {
  return diagonalize(build_hamiltonian(p), p);
}

double default_band_tolerance(const Spectrum& s, int N) {
  double band_max = 0.0;
  const int n = std::min<int>(N, static_cast<int>(s.eigenvalues.size()));
  for (int i = 0; i < n; ++i)
    band_max = std::max(band_max, std::abs(s.eigenvalues[i]));
  return 1e-9 * std::max(1.0, band_max);
}

BandStructure band_structure(const Spectrum& s, int N, double tol) {
  const int d = static_cast<int>(s.eigenvalues.size());
  if (N > d)
    raise(errc::out_of_range,
          "band size " + std::to_string(N) + " exceeds dimension " +
              std::to_string(d));

  BandStructure out;
  out.tolerance = tol;
  out.band.assign(s.eigenvalues.begin(), s.eigenvalues.begin() + N);

  std::vector<int> current{0};
  auto flush = [&out, &current]() {
    if (current.size() > 1) {
      for (size_t a = 0; a < current.size(); ++a)
        for (size_t b = a + 1; b < current.size(); ++b)
          out.pairs.emplace_back(current[a], current[b]);
      out.groups.push_back(current);
    }
    current.clear();
  };

  for (int i = 1; i < N; ++i) {
    if (out.band[i] - out.band[i - 1] <= tol) {
      current.push_back(i);
    } else {
      flush();
      current.push_back(i);
    }
  }
  flush();
  return out;
}

}  // namespace abspin
