#pragma once

#include <utility>
#include <vector>

#include "abspin/eigensolver.hpp"
#include "abspin/matrix.hpp"
#include "abspin/params.hpp"

namespace abspin {

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending, units of A
  SpinSystemParams params;
};

struct BandStructure {
  std::vector<double> band;                 // lowest N eigenvalues, ascending
  std::vector<std::pair<int, int>> pairs;   // degenerate index pairs, i < j
  std::vector<std::vector<int>> groups;     // transitive degeneracy clusters
  double tolerance = 0.0;

  // doublet count: a cluster of size s contributes floor(s/2) pairs
  int degenerate_pair_count() const;
};

// <m+N| S_+^N |m> = prod_{j=0}^{N-1} sqrt(S(S+1) - (m+j)(m+j+1)), evaluated
// with 2m integer arithmetic so half-integer spins are exact.
double ladder_product(int twoS, int twoM, int N);

// convenience overload taking m directly (must be a half-integer)
double ladder_product_m(int twoS, double m, int N);

// H/A in the |S,m> basis: diagonal m^2 - h S m, off-diagonal
// -(lambda/2) <m+N|S_+^N|m> at offset N. Callers are expected to have run
// validate_params; the assembly itself is defined for any in-range input.
BandedSymmetricMatrix build_hamiltonian(const SpinSystemParams& p);

Spectrum diagonalize(const BandedSymmetricMatrix& matrix,
                     const SpinSystemParams& p);

// build + diagonalize in one step
Spectrum exact_spectrum(const SpinSystemParams& p);

// default pairing tolerance: 1e-9 * max(1, |largest band energy|)
double default_band_tolerance(const Spectrum& s, int N);

// Lowest-N window of the spectrum with degeneracy bookkeeping. Pairs are
// grouped transitively by consecutive gaps <= tol; only levels inside the
// window are considered (a Kramers partner outside the window is not
// counted).
BandStructure band_structure(const Spectrum& s, int N, double tol);

}  // namespace abspin
