#include "abspin/params.hpp"

#include <cmath>
#include <cstdlib>

#include "abspin/errors.hpp"

namespace abspin {

double SpinSystemParams::plane_anisotropy() const {
  return lambda * std::pow(spin(), symmetry_order - 2);
}

double SpinSystemParams::mass_modulation() const {
  return 0.5 * lambda * symmetry_order * std::pow(spin(), symmetry_order - 2);
}

std::optional<std::string> validate_params(const SpinSystemParams& p,
                                           Purpose purpose) {
  if (p.twoS <= 0)
    raise(errc::invalid_spin, "spin must be positive (2S = " +
                                  std::to_string(p.twoS) + ")");
  if (p.symmetry_order < 2)
    raise(errc::wrong_symmetry, "symmetry order must be at least 2");
  if (p.symmetry_order > p.twoS)
    raise(errc::symmetry_too_high,
          "N = " + std::to_string(p.symmetry_order) + " exceeds 2S = " +
              std::to_string(p.twoS) + "; S_+^N annihilates every state");
  if (p.lambda <= 0.0)
    raise(errc::negative_coupling, "lambda must be positive");
  if (p.field < 0.0)
    raise(errc::negative_field, "field h must be non-negative");

  if (p.plane_anisotropy() >= 1.0) {
    std::string msg = "hard-axis condition violated: lambda S^(N-2) = " +
                      std::to_string(p.plane_anisotropy()) + " >= 1";
    if (purpose == Purpose::semiclassical)
      raise(errc::hard_axis_violated, msg);
    return msg;  // exact diagonalization is still well defined
  }
  return std::nullopt;
}

int parse_spin(const std::string& text) {
  if (text.empty()) raise(errc::invalid_spin, "empty spin value");

  auto fail = [&text]() {
    raise(errc::invalid_spin, "cannot parse spin '" + text +
                                  "' (expected forms: 10, 9/2, 4.5)");
  };

  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    char* end = nullptr;
    const long num = std::strtol(text.c_str(), &end, 10);
    if (end != text.c_str() + slash) fail();
    const char* den_start = text.c_str() + slash + 1;
    const long den = std::strtol(den_start, &end, 10);
    if (*end != '\0' || end == den_start) fail();
    long twoS = 0;
    if (den == 1)
      twoS = 2 * num;
    else if (den == 2)
      twoS = num;
    else
      fail();
    if (twoS <= 0) raise(errc::invalid_spin, "spin must be positive");
    return static_cast<int>(twoS);
  }

  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (*end != '\0' || end == text.c_str()) fail();
  const double twice = 2.0 * value;
  const double rounded = std::round(twice);
  if (std::abs(twice - rounded) > 1e-9)
    raise(errc::invalid_spin,
          "spin must be integer or half-integer, got '" + text + "'");
  if (rounded <= 0.0) raise(errc::invalid_spin, "spin must be positive");
  return static_cast<int>(rounded);
}

std::string format_spin(int twoS) {
  if (twoS % 2 == 0) return std::to_string(twoS / 2);
  return std::to_string(twoS) + "/2";
}

}  // namespace abspin
