#include "abspin/errors.hpp"

namespace abspin {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::invalid_spin:        return "InvalidSpin";
    case errc::symmetry_too_high:   return "SymmetryTooHigh";
    case errc::negative_coupling:   return "NegativeCoupling";
    case errc::negative_field:      return "NegativeField";
    case errc::hard_axis_violated:  return "HardAxisViolated";
    case errc::out_of_range:        return "OutOfRange";
    case errc::index_out_of_range:  return "IndexOutOfRange";
    case errc::wrong_symmetry:      return "WrongSymmetry";
    case errc::mass_singularity:    return "MassSingularity";
    case errc::barrier_vanished:    return "BarrierVanished";
    case errc::minimum_shifted:     return "MinimumShifted";
    case errc::convergence_failure: return "ConvergenceFailure";
    case errc::minimization_failure: return "MinimizationFailure";
    case errc::refinement_stall:    return "RefinementStall";
    case errc::fit_ill_conditioned: return "FitIllConditioned";
    case errc::io_failure:          return "IoFailure";
  }
  return "UnknownError";
}

bool is_numeric_failure(errc code) noexcept {
  switch (code) {
    case errc::convergence_failure:
    case errc::minimization_failure:
    case errc::refinement_stall:
    case errc::fit_ill_conditioned:
    case errc::io_failure:
      return true;
    default:
      return false;
  }
}

}  // namespace abspin
