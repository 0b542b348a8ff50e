#pragma once

#include <map>
#include <vector>

#include "abspin/params.hpp"

namespace abspin {

// Anisotropy energy on the sphere in spin-coherent-state angles,
//   E_N(theta, phi)/A = S^2 (cos^2 theta - lambda S^(N-2) sin^N theta cos N phi
//                            - h cos theta),
// exactly 2pi/N-periodic in phi.
struct ClassicalSurface {
  SpinSystemParams params;
  double energy(double theta, double phi) const;
};

struct ClassicalMinimum {
  double theta0 = 0.0;  // in [0, pi/2]
  double energy = 0.0;  // E/A at (theta0, 0)
};

// Minimizes the surface at phi = 0 by golden section to |dtheta| <= 1e-12.
// theta0 = pi/2 at h = 0 and moves smoothly toward 0 as h grows.
ClassicalMinimum classical_minimum(const SpinSystemParams& p);

// The effective one-dimensional dynamics after integrating out theta:
// position-dependent mass M, gauge potential (Berry term) and potential,
//   M_N(phi)   = 1 / (2A (1 + a cos N phi)),         a = lambda N S^(N-2)/2
//   A_N(phi)   = S [1 - h / (2 (1 + a cos N phi))]
//   V_N(phi)   = -A S^2 [lambda S^(N-2) cos N phi + h^2/(4 (1 + a cos N phi))]
// reported in units 1/A, S, and A respectively.
struct EffectivePieces {
  double mass = 0.0;       // M_N * A
  double gauge = 0.0;      // A_N (already dimensionless, scale S)
  double potential = 0.0;  // V_N / A
};

struct EffectiveAction {
  SpinSystemParams params;
  double mass(double phi) const;
  double gauge(double phi) const;
  double potential(double phi) const;
  EffectivePieces at(double phi) const;
};

// Throws MassSingularity where 1 + a cos N phi <= 0.
EffectivePieces effective_pieces(const SpinSystemParams& p, double phi);

// Small-oscillation frequency about phi = 0,
//   omega = sqrt(V_N''(0) / M_N(0)),
// with the analytic curvature V''(0)/A = S^2 N^2 [lambda S^(N-2)
// - (h^2/4) a/(1+a)^2]. Throws BarrierVanished when the curvature is not
// positive.
double small_oscillation_frequency(const SpinSystemParams& p);

// WKB instanton action over one well-to-well traversal,
//   S_cl = int_0^{2pi/N} sqrt(2 M_N(phi) [V_N(phi) - V_N(0)]) dphi,
// evaluated after the substitution phi = (pi/N)(1 - cos u) which removes the
// sqrt-type endpoint zeros. The potential minimum at phi = 0 is verified on
// a 1024-point grid first; a shifted minimum is reported, not repaired.
double instanton_action(const SpinSystemParams& p, double abs_tol = 1e-10,
                        int initial_intervals = 8);

// Flux accumulated by one full winding,
//   Phi = 2 pi S [1 - h / sqrt(4 - lambda^2 N^2 S^(2(N-2)))],
// the closed form of the gauge-term loop integral.
double ab_phase(const SpinSystemParams& p);

// Exact inversion of the (affine) flux formula: the field at which
// ab_phase(p) would equal target_phi.
double ab_phase_field_for(const SpinSystemParams& p, double target_phi);

struct SemiclassicalModel {
  double omega = 1.0;      // units of A
  double action = 1.0;     // S_cl, dimensionless
  double prefactor = 1.0;  // D, units of A
  double phi = 0.0;        // AB phase, radians
  int symmetry_order = 2;

  double splitting_scale() const;  // D e^{-S_cl}
};

// omega, S_cl and Phi from the effective action; D supplied by the caller.
SemiclassicalModel make_semiclassical_model(const SpinSystemParams& p,
                                            double prefactor = 1.0);

// Band indices allowed by the winding constraint: -N/2 < k <= N/2.
std::vector<int> level_indices(int N);

// E_Nk = omega/2 - 2 D e^{-S_cl} cos((Phi - 2 pi k)/N), one per allowed k.
std::map<int, double> level_energies(const SemiclassicalModel& m);

// Closed trig-product form of E_Nk - E_Nk', identical to the cosine
// difference of the level formula.
double level_difference(const SemiclassicalModel& m, int k, int kprime);

// Number of exactly degenerate unordered level pairs at the given phase:
// N even: N/2 at Phi = (2n+1)pi and N/2 - 1 at Phi = 2n pi;
// N odd: (N-1)/2 at Phi = n pi.
int predicted_degeneracies(int N, double phi);

struct QuenchField {
  double field = 0.0;
  int index = 0;        // n in the quench sequence
  bool boundary = false;  // h = 0 entry (spin-parity point, not a sweep target)
};

// Fields where the two-fold ground splitting vanishes:
//   h_n = (2 sqrt(1-lambda^2)/S)(S - n - 1/2),  n = 0, 1, ... while h_n >= 0,
// equivalently the solutions of Phi(h) = (2n+1)pi. Descending order; an
// exact h = 0 solution is included but flagged as boundary.
std::vector<QuenchField> quench_fields(const SpinSystemParams& p);

// Zero-field degeneracy count from the spin parity: evaluates the phase
// predictor at Phi = 2 pi S.
int parity_degeneracy_table(int N, int twoS);

}  // namespace abspin
