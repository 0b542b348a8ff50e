#pragma once

#include <optional>
#include <string>

namespace abspin {

// Parameters of the N-fold symmetric easy-plane spin system,
//
//   H/A = S_z^2 - (lambda/2) (S_+^N + S_-^N) - h S S_z,
//
// in reduced units: all energies are measured in the uniaxial anisotropy A,
// lambda = 2C/A, and h = g mu_B H_z / (A S) for the field along the hard
// axis z. The spin is stored as the integer 2S so half-integer spins stay
// exact.
struct SpinSystemParams {
  int symmetry_order = 2;  // N
  int twoS = 1;            // 2S
  double lambda = 0.0;     // 2C/A
  double field = 0.0;      // g mu_B H_z / (A S)

  double spin() const { return 0.5 * twoS; }
  int dimension() const { return twoS + 1; }

  // lambda S^(N-2), the in-plane/uniaxial anisotropy ratio entering the
  // hard-axis condition lambda S^(N-2) < 1
  double plane_anisotropy() const;

  // a = lambda N S^(N-2) / 2; the effective mass is 1/(2A(1 + a cos N phi)),
  // positive for all angles only when a < 1
  double mass_modulation() const;

  SpinSystemParams with_field(double h) const {
    SpinSystemParams q = *this;
    q.field = h;
    return q;
  }
};

enum class Purpose { exact, semiclassical };

// Checks the parameter domain. Throws Error on violations; for exact
// diagonalization a hard-axis violation is legal and only returns a
// warning message.
std::optional<std::string> validate_params(const SpinSystemParams& p,
                                           Purpose purpose);

// Spin input in the forms "9/2", "4.5", or "10"; returns 2S.
int parse_spin(const std::string& text);

// "9/2" for odd 2S, plain integer otherwise
std::string format_spin(int twoS);

}  // namespace abspin
