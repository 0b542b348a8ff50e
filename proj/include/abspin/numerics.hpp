#pragma once

#include <functional>
#include <vector>

namespace abspin {

// Adaptive quadrature built on the 15-point Kronrod extension of 7-point
// Gauss. The interval is pre-split into `initial_intervals` panels and each
// panel is bisected until its Gauss/Kronrod discrepancy fits its share of
// the absolute tolerance. Throws ConvergenceFailure if the estimated error
// after full refinement still exceeds the tolerance by a wide margin.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol,
                          int initial_intervals = 8, int max_depth = 40);

struct ScalarMinimum {
  double x = 0.0;
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
};

// Golden-section search on [a, b]; stops when the bracket is narrower than
// x_tol. Unimodality is assumed, endpoints are legal minima. Throws
// MinimizationFailure if the objective returns a non-finite value.
ScalarMinimum golden_section_minimize(const std::function<double(double)>& f,
                                      double a, double b, double x_tol,
                                      int max_iterations = 240);

double median(std::vector<double> values);

}  // namespace abspin
