#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "abspin/params.hpp"
#include "abspin/semiclassics.hpp"
#include "abspin/spin_model.hpp"

namespace abspin {

struct SweepRow {
  double field = 0.0;
  double phi = 0.0;               // NaN where the flux formula is undefined
  std::vector<double> band;       // lowest N exact levels, ascending
  double gap = 0.0;               // band[1] - band[0]
  std::vector<double> semiclassical;  // sorted E_Nk; empty without a model,
                                      // NaN-filled where the model fails
};

struct SweepResult {
  SpinSystemParams params;
  double field_min = 0.0;
  double field_max = 0.0;
  int steps = 0;
  std::optional<double> prefactor;  // set when semiclassical levels included
  double degeneracy_tolerance = 0.0;
  std::string version;
  std::vector<SweepRow> rows;
};

struct LocatedMinimum {
  double field = 0.0;
  double gap = 0.0;
  int grid_index = 0;
  bool refined = false;
  bool stalled = false;      // refinement hit the iteration cap
  bool below_floor = false;  // gap under 1e-13 |E0|: eigensolver noise level
};

struct QuenchMatch {
  int minimum_index = -1;
  int prediction_index = -1;
  double deviation = 0.0;
};

struct QuenchReport {
  SpinSystemParams params;
  std::vector<LocatedMinimum> minima;        // ascending in h
  std::vector<QuenchField> predictions;      // descending h_n, n ascending
  std::vector<QuenchMatch> matches;          // mutual nearest neighbours
  std::vector<double> suppression;           // gap/median per located minimum
  double median_gap = 0.0;
};

struct MinimaOptions {
  double deep_fraction = 1e-2;  // refined gap must undercut this x median
  double field_tolerance = 1e-8;
  int max_iterations = 200;
};

// Uniform field scan, endpoints included. Each row is an independent exact
// diagonalization; when a prefactor is given the per-row semiclassical
// model (omega, S_cl, Phi at that field) is evaluated alongside.
SweepResult sweep_field(const SpinSystemParams& p, double field_min,
                        double field_max, int steps,
                        std::optional<double> prefactor = std::nullopt);

// Locates the deep minima of the ground gap: every interior grid minimum is
// refined by golden section on gap_at (fresh evaluations, grid-independent)
// and kept when the refined gap undercuts deep_fraction x median gap.
std::vector<LocatedMinimum> locate_minima(
    const SweepResult& sweep, const std::function<double(double)>& gap_at,
    const MinimaOptions& options = {});

// Overload evaluating the gap by exact diagonalization of the sweep's own
// parameters.
std::vector<LocatedMinimum> locate_minima(const SweepResult& sweep,
                                          const MinimaOptions& options = {});

// Full two-fold quench analysis: sweep over (0, h_0 + step/2], locate the
// deep gap minima, and match them one-to-one (mutual nearest neighbour)
// against the predicted quench fields.
QuenchReport compare_quench(const SpinSystemParams& p, int steps = 2001);

struct ParityCensus {
  int predicted = 0;
  int observed = 0;
};

// Zero-field degeneracy count inside the lowest-N window of the exact
// spectrum versus the spin-parity prediction.
ParityCensus parity_census(int N, int twoS, double lambda);

// Least-squares estimate of the prefactor D from log(ground gap) against
// the log of the semiclassical two-lowest-level difference (linear in D).
// Rows near quench points or below the numeric floor are excluded.
double fit_prefactor(const SweepResult& sweep, const SemiclassicalModel& model);

}  // namespace abspin
