#pragma once

#include <stdexcept>
#include <string>

namespace abspin {

// Failure categories used across the library. Constraint violations are
// parameter-domain problems; numeric failures signal that an iteration or
// fit did not reach its target.
enum class errc {
  invalid_spin,
  symmetry_too_high,
  negative_coupling,
  negative_field,
  hard_axis_violated,
  out_of_range,
  index_out_of_range,
  wrong_symmetry,
  mass_singularity,
  barrier_vanished,
  minimum_shifted,
  convergence_failure,
  minimization_failure,
  refinement_stall,
  fit_ill_conditioned,
  io_failure
};

const char* errc_name(errc code) noexcept;

// true for failures of the numerics (iteration caps, ill-conditioned fits,
// I/O); false for constraint violations of the input parameters
bool is_numeric_failure(errc code) noexcept;

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace abspin
