#include "abspin/dilute_gas.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "abspin/errors.hpp"

namespace abspin {

namespace {
constexpr double pi = std::numbers::pi;
using cplx = std::complex<double>;
}  // namespace

double GasParams::diluteness() const {
  return prefactor * std::exp(-action) * tau;
}

cplx GasParams::instanton_weight() const {
  return diluteness() * std::polar(1.0, phi / symmetry_order);
}

GasParams make_gas(const SemiclassicalModel& m, double tau) {
  GasParams g;
  g.omega = m.omega;
  g.action = m.action;
  g.prefactor = m.prefactor;
  g.tau = tau;
  g.phi = m.phi;
  g.symmetry_order = m.symmetry_order;
  return g;
}

double amplitude_term(const GasParams& g, int n1, int n2) {
  if (n1 < 0 || n2 < 0)
    raise(errc::out_of_range, "instanton counts must be non-negative");
  const double total = n1 + n2;
  const double log_term = -total * g.action + total * std::log(g.prefactor * g.tau) -
                          std::lgamma(n1 + 1.0) - std::lgamma(n2 + 1.0) -
                          0.5 * g.omega * g.tau +
                          0.5 * std::log(g.omega / pi);
  return std::exp(log_term);
}

bool allowed_sequence(int N, int n1, int n2) {
  if (N < 2) raise(errc::wrong_symmetry, "need N >= 2");
  if (n1 < 0 || n2 < 0) return false;
  const int r1 = n1 % N;
  const int r2 = n2 % N;
  if (r1 == 0 && r2 == N - 1) return true;
  if (r1 == 1 && r2 == 0) return true;
  // eta branch, only for N >= 3
  if (N >= 3 && r1 >= 2 && r1 <= N - 1 && r2 == r1 - 1) return true;
  return false;
}

std::complex<double> f_series(int N, int sigma, cplx x, int cutoff) {
  if (N < 2) raise(errc::wrong_symmetry, "need N >= 2");
  if (sigma < 0 || sigma >= N)
    raise(errc::out_of_range, "sigma must lie in 0..N-1");
  if (cutoff < 1) raise(errc::out_of_range, "cutoff must be at least 1");

  // term_0 = x^sigma / sigma!
  cplx term = 1.0;
  for (int j = 1; j <= sigma; ++j) term *= x / static_cast<double>(j);

  cplx sum = term;
  for (int l = 1; l <= cutoff; ++l) {
    for (int j = 1; j <= N; ++j)
      term *= x / static_cast<double>(N * (l - 1) + sigma + j);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

std::complex<double> f_closed(int N, cplx x) {
  if (N < 2) raise(errc::wrong_symmetry, "need N >= 2");
  if (N % 2 == 0) {
    cplx sum = std::cosh(x);
    for (int r = 1; r <= N / 2 - 1; ++r) {
      const double angle = 2.0 * pi * r / N;
      sum += std::cos(x * std::sin(angle)) * std::exp(x * std::cos(angle));
    }
    return 2.0 / N * sum;
  }
  cplx sum = std::exp(x);
  for (int r = 1; r <= (N - 1) / 2; ++r) {
    const double angle = 2.0 * pi * r / N;
    sum += 2.0 * std::cos(x * std::sin(angle)) * std::exp(x * std::cos(angle));
  }
  return sum / static_cast<double>(N);
}

std::complex<double> f_closed_sigma(int N, int sigma, cplx x) {
  if (N < 2) raise(errc::wrong_symmetry, "need N >= 2");
  if (sigma < 0 || sigma >= N)
    raise(errc::out_of_range, "sigma must lie in 0..N-1");
  cplx sum = 0.0;
  for (int r = 0; r < N; ++r) {
    const cplx root = std::polar(1.0, 2.0 * pi * r / N);
    sum += std::polar(1.0, -2.0 * pi * r * sigma / N) * std::exp(x * root);
  }
  return sum / static_cast<double>(N);
}

AmplitudeValue amplitude_truncated(const GasParams& g, int cutoff) {
  const int N = g.symmetry_order;
  if (cutoff < N)
    raise(errc::out_of_range,
          "cutoff " + std::to_string(cutoff) + " below symmetry order " +
              std::to_string(N));

  cplx sum = 0.0;
  for (int n1 = 0; n1 <= cutoff; ++n1)
    for (int n2 = 0; n2 <= cutoff; ++n2) {
      if (!allowed_sequence(N, n1, n2)) continue;
      sum += amplitude_term(g, n1, n2) *
             std::polar(1.0, -g.phi * (n1 - n2) / N);
    }
  return AmplitudeValue{sum, cutoff, N, g.phi, g.tau, g.diluteness()};
}

AmplitudeValue amplitude_closed(const GasParams& g) {
  const int N = g.symmetry_order;
  const double hop = 2.0 * g.prefactor * std::exp(-g.action);
  cplx sum = 0.0;
  for (int k : level_indices(N)) {
    const double energy =
        0.5 * g.omega - hop * std::cos((g.phi - 2.0 * pi * k) / N);
    sum += std::exp(-energy * g.tau) * std::polar(1.0, -2.0 * pi * k / N);
  }
  sum *= std::sqrt(g.omega / pi) / static_cast<double>(N);
  return AmplitudeValue{sum, -1, N, g.phi, g.tau, g.diluteness()};
}

std::complex<double> amplitude_product_assembly(const GasParams& g) {
  const int N = g.symmetry_order;
  // the weight attached to the instanton series carries e^{-i Phi/N} so
  // that each configuration reproduces the e^{-i Phi (n1-n2)/N} of the
  // double sum
  const cplx y1 = std::conj(g.instanton_weight());
  const cplx y2 = g.instanton_weight();
  cplx bracket = 0.0;
  for (int sigma = 0; sigma < N; ++sigma) {
    const int partner = (sigma + N - 1) % N;
    bracket += f_closed_sigma(N, sigma, y1) * f_closed_sigma(N, partner, y2);
  }
  return std::sqrt(g.omega / pi) * std::exp(-0.5 * g.omega * g.tau) * bracket;
}

double amplitude_scale(const GasParams& g) {
  const int N = g.symmetry_order;
  const double hop = 2.0 * g.prefactor * std::exp(-g.action);
  double sum = 0.0;
  for (int k : level_indices(N)) {
    const double energy =
        0.5 * g.omega - hop * std::cos((g.phi - 2.0 * pi * k) / N);
    sum += std::exp(-energy * g.tau);
  }
  return std::sqrt(g.omega / pi) * sum / static_cast<double>(N);
}

double bloch_band(double theta, double omega, double prefactor,
                  double action) {
  return 0.5 * omega - 2.0 * prefactor * std::exp(-action) * std::cos(theta);
}

double one_fold_ab_energy(double phi, double omega, double prefactor,
                          double action) {
  return 0.5 * omega - 2.0 * prefactor * std::exp(-action) * std::cos(phi);
}

}  // namespace abspin
