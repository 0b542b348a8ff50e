#pragma once

#include <complex>

#include "abspin/semiclassics.hpp"

namespace abspin {

// Inputs of the dilute-gas sums: well frequency, instanton action,
// fluctuation prefactor, Euclidean time, winding phase and the fold count.
struct GasParams {
  double omega = 1.0;
  double action = 1.0;     // S_cl
  double prefactor = 1.0;  // D
  double tau = 1.0;
  double phi = 0.0;
  int symmetry_order = 2;

  // D e^{-S_cl} tau; the expansion is controlled when this is small
  double diluteness() const;

  // x_1 = x_2^* = D e^{-S_cl} e^{i Phi/N} tau
  std::complex<double> instanton_weight() const;
};

GasParams make_gas(const SemiclassicalModel& m, double tau);

struct AmplitudeValue {
  std::complex<double> value;
  int cutoff = -1;  // -1 marks the closed form
  int symmetry_order = 2;
  double phi = 0.0;
  double tau = 0.0;
  double diluteness = 0.0;
};

// Weight of a configuration with n1 instantons and n2 anti-instantons,
//   e^{-(n1+n2) S_cl} / (n1! n2!) (D tau)^{n1+n2} e^{-omega tau/2}
//   sqrt(omega/pi),
// evaluated in log space so large orders neither overflow nor lose the
// factorials.
double amplitude_term(const GasParams& g, int n1, int n2);

// Indicator of instanton/anti-instanton counts that close a single forward
// winding on the N-fold circle: (n1, n2) = (Nm, Nn+N-1), (Nm+1, Nn), or
// (Nm+eta, Nn+eta-1) with eta = 2..N-1 (the eta branch exists only for
// N >= 3).
bool allowed_sequence(int N, int n1, int n2);

// f_{N,sigma}(x) = sum_l x^{N l + sigma} / (N l + sigma)!, summed until the
// terms fall below 1e-18 of the partial sum or l reaches the cutoff.
std::complex<double> f_series(int N, int sigma, std::complex<double> x,
                              int cutoff = 60);

// Closed form of f_{N,0}: (2/N)[cosh x + sum_r cos(x sin(2 pi r/N))
// e^{x cos(2 pi r/N)}] for even N, the e^x variant for odd N.
std::complex<double> f_closed(int N, std::complex<double> x);

// General sigma via the N-th roots of unity: (1/N) sum_r rho_r^{-sigma}
// e^{x rho_r}. Reduces to f_closed at sigma = 0.
std::complex<double> f_closed_sigma(int N, int sigma, std::complex<double> x);

// Brute-force double sum over configurations up to the cutoff, with phase
// e^{-i Phi (n1 - n2)/N} per configuration.
AmplitudeValue amplitude_truncated(const GasParams& g, int cutoff = 60);

// Resummed spectral form,
//   (1/N) sqrt(omega/pi) sum_k exp[-(omega/2 - 2 D e^{-S_cl}
//       cos((Phi - 2 pi k)/N)) tau - i 2 pi k/N],
// k over -N/2 < k <= N/2.
AmplitudeValue amplitude_closed(const GasParams& g);

// The same amplitude assembled from generating-function products
// sum_sigma f_{N,sigma}(x) f_{N,sigma-1 mod N}(x*); equals the spectral
// form identically.
std::complex<double> amplitude_product_assembly(const GasParams& g);

// Sum of the k-term moduli of the closed form: the natural magnitude
// against which amplitude agreement is measured (the amplitude itself
// vanishes identically at phase cancellation points).
double amplitude_scale(const GasParams& g);

// Lowest-band dispersion of the unrolled periodic problem,
//   E_theta = omega/2 - 2 D e^{-S_cl} cos theta.
double bloch_band(double theta, double omega, double prefactor,
                  double action);

// Single-well ring energy with flux: omega/2 - 2 D e^{-S_cl} cos Phi,
// 2pi-periodic, shift 2 D e^{-S_cl}(1 - cos Phi) relative to zero flux.
double one_fold_ab_energy(double phi, double omega, double prefactor,
                          double action);

}  // namespace abspin
