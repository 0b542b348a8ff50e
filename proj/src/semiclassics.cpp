#include "abspin/semiclassics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "abspin/errors.hpp"
#include "abspin/numerics.hpp"

namespace abspin {

namespace {
constexpr double pi = std::numbers::pi;
}

double ClassicalSurface::energy(double theta, double phi) const {
  const double S = params.spin();
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  return S * S *
         (ct * ct -
          params.plane_anisotropy() *
              std::pow(st, params.symmetry_order) *
              std::cos(params.symmetry_order * phi) -
          params.field * ct);
}

ClassicalMinimum classical_minimum(const SpinSystemParams& p) {
  const ClassicalSurface surface{p};
  auto along_meridian = [&surface](double theta) {
    return surface.energy(theta, 0.0);
  };
  const ScalarMinimum m =
      golden_section_minimize(along_meridian, 0.0, 0.5 * pi, 1e-12);
  if (!m.converged)
    raise(errc::minimization_failure,
          "classical minimum search did not converge");
  return ClassicalMinimum{m.x, m.value};
}

EffectivePieces effective_pieces(const SpinSystemParams& p, double phi) {
  const double S = p.spin();
  const double a = p.mass_modulation();
  const double g = 1.0 + a * std::cos(p.symmetry_order * phi);
  if (g <= 0.0)
    raise(errc::mass_singularity,
          "1 + a cos(N phi) = " + std::to_string(g) +
              " <= 0: effective mass undefined here");

  EffectivePieces out;
  out.mass = 1.0 / (2.0 * g);
  out.gauge = S * (1.0 - p.field / (2.0 * g));
  out.potential =
      -S * S * (p.plane_anisotropy() * std::cos(p.symmetry_order * phi) +
                p.field * p.field / (4.0 * g));
  return out;
}

double EffectiveAction::mass(double phi) const {
  return effective_pieces(params, phi).mass;
}
double EffectiveAction::gauge(double phi) const {
  return effective_pieces(params, phi).gauge;
}
double EffectiveAction::potential(double phi) const {
  return effective_pieces(params, phi).potential;
}
EffectivePieces EffectiveAction::at(double phi) const {
  return effective_pieces(params, phi);
}

double small_oscillation_frequency(const SpinSystemParams& p) {
  const double S = p.spin();
  const double N = p.symmetry_order;
  const double a = p.mass_modulation();
  const double curvature =
      S * S * N * N *
      (p.plane_anisotropy() -
       0.25 * p.field * p.field * a / ((1.0 + a) * (1.0 + a)));
  if (curvature <= 0.0)
    raise(errc::barrier_vanished,
          "potential curvature at phi = 0 is not positive");
  const double mass0 = effective_pieces(p, 0.0).mass;
  return std::sqrt(curvature / mass0);
}

double instanton_action(const SpinSystemParams& p, double abs_tol,
                        int initial_intervals) {
  const double period = 2.0 * pi / p.symmetry_order;
  const double v0 = effective_pieces(p, 0.0).potential;

  // the h^2 term deepens the barrier-top well; make sure phi = 0 is still
  // the global minimum before integrating
  double v_min = v0, v_max = v0;
  constexpr int grid = 1024;
  for (int i = 1; i < grid; ++i) {
    const double v = effective_pieces(p, period * i / grid).potential;
    v_min = std::min(v_min, v);
    v_max = std::max(v_max, v);
  }
  const double scale = std::max(1.0, std::abs(v0));
  if (v_min < v0 - 1e-12 * scale)
    raise(errc::minimum_shifted,
          "V_N has a lower value inside the period than at phi = 0");
  if (v_max - v0 <= 1e-15 * scale)
    raise(errc::barrier_vanished, "no barrier above the potential minimum");

  // phi = (pi/N)(1 - cos u) turns the sqrt zeros at both turning points
  // into smooth u^2 behaviour
  const double half_period = 0.5 * period;
  auto integrand = [&p, v0, half_period](double u) {
    const double phi = half_period * (1.0 - std::cos(u));
    const EffectivePieces pieces = effective_pieces(p, phi);
    const double dv = std::max(pieces.potential - v0, 0.0);
    return std::sqrt(2.0 * pieces.mass * dv) * half_period * std::sin(u);
  };
  return integrate_adaptive(integrand, 0.0, pi, abs_tol, initial_intervals);
}

double ab_phase(const SpinSystemParams& p) {
  const double lns = p.lambda * p.symmetry_order *
                     std::pow(p.spin(), p.symmetry_order - 2);
  const double radicand = 4.0 - lns * lns;
  if (radicand <= 0.0)
    raise(errc::hard_axis_violated,
          "4 - lambda^2 N^2 S^(2N-4) <= 0: flux formula undefined");
  return 2.0 * pi * p.spin() * (1.0 - p.field / std::sqrt(radicand));
}

double ab_phase_field_for(const SpinSystemParams& p, double target_phi) {
  const double lns = p.lambda * p.symmetry_order *
                     std::pow(p.spin(), p.symmetry_order - 2);
  const double radicand = 4.0 - lns * lns;
  if (radicand <= 0.0)
    raise(errc::hard_axis_violated,
          "4 - lambda^2 N^2 S^(2N-4) <= 0: flux formula undefined");
  return std::sqrt(radicand) *
         (1.0 - target_phi / (2.0 * pi * p.spin()));
}

double SemiclassicalModel::splitting_scale() const {
  return prefactor * std::exp(-action);
}

SemiclassicalModel make_semiclassical_model(const SpinSystemParams& p,
                                            double prefactor) {
  validate_params(p, Purpose::semiclassical);
  SemiclassicalModel m;
  m.omega = small_oscillation_frequency(p);
  m.action = instanton_action(p);
  m.prefactor = prefactor;
  m.phi = ab_phase(p);
  m.symmetry_order = p.symmetry_order;
  return m;
}

std::vector<int> level_indices(int N) {
  std::vector<int> ks;
  ks.reserve(N);
  for (int k = -(N - 1) / 2; k <= N / 2; ++k) ks.push_back(k);
  return ks;
}

std::map<int, double> level_energies(const SemiclassicalModel& m) {
  std::map<int, double> out;
  const double tunneling = 2.0 * m.splitting_scale();
  for (int k : level_indices(m.symmetry_order))
    out[k] = 0.5 * m.omega -
             tunneling * std::cos((m.phi - 2.0 * pi * k) / m.symmetry_order);
  return out;
}

double level_difference(const SemiclassicalModel& m, int k, int kprime) {
  const int N = m.symmetry_order;
  auto in_range = [N](int k) { return 2 * k > -N && 2 * k <= N; };
  if (!in_range(k) || !in_range(kprime) || k == kprime)
    raise(errc::index_out_of_range,
          "level indices must be distinct and satisfy -N/2 < k <= N/2");
  return 4.0 * m.splitting_scale() *
         std::sin((m.phi - (k + kprime) * pi) / N) *
         std::sin(pi * (kprime - k) / N);
}

int predicted_degeneracies(int N, double phi) {
  if (N < 2) raise(errc::wrong_symmetry, "need N >= 2");
  const std::vector<int> ks = level_indices(N);
  int count = 0;
  for (size_t a = 0; a < ks.size(); ++a)
    for (size_t b = a + 1; b < ks.size(); ++b) {
      const double product = std::sin((phi - (ks[a] + ks[b]) * pi) / N) *
                             std::sin(pi * (ks[b] - ks[a]) / N);
      if (std::abs(product) <= 1e-12) ++count;
    }
  return count;
}

std::vector<QuenchField> quench_fields(const SpinSystemParams& p) {
  if (p.symmetry_order != 2)
    raise(errc::wrong_symmetry,
          "quench fields are defined for two-fold symmetry only");
  if (p.lambda >= 1.0)
    raise(errc::hard_axis_violated, "need lambda < 1 for N = 2");

  const double S = p.spin();
  const double step = 2.0 * std::sqrt(1.0 - p.lambda * p.lambda) / S;

  std::vector<QuenchField> out;
  for (int n = 0;; ++n) {
    const double h = step * (S - n - 0.5);
    if (h > 0.0) {
      out.push_back({h, n, false});
    } else if (h == 0.0) {
      out.push_back({h, n, true});
      break;
    } else {
      break;
    }
  }
  return out;
}

int parity_degeneracy_table(int N, int twoS) {
  if (twoS <= 0) raise(errc::invalid_spin, "spin must be positive");
  // Phi(h=0) = 2 pi S = pi * 2S; the count is 2pi-periodic in Phi, so
  // reduce 2S modulo 2N to keep the trigonometry well away from roundoff
  return predicted_degeneracies(N, pi * (twoS % (2 * N)));
}

}  // namespace abspin
