#include "abspin/numerics.hpp"

#include <algorithm>
#include <cmath>

#include "abspin/errors.hpp"

namespace abspin {

namespace {

// 15-point Kronrod abscissae/weights and the embedded 7-point Gauss weights
// on [-1, 1] (positive half; the rule is symmetric).
constexpr double kronrod_x[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kronrod_w[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double gauss_w[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEstimate {
  double integral;
  double error;
};

PanelEstimate kronrod15(const std::function<double(double)>& f, double a,
                        double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(center);
  double kronrod = kronrod_w[7] * fc;
  double gauss = gauss_w[3] * fc;

  for (int j = 0; j < 7; ++j) {
    const double dx = half * kronrod_x[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    kronrod += kronrod_w[j] * (f1 + f2);
    if (j % 2 == 1) gauss += gauss_w[(j - 1) / 2] * (f1 + f2);
  }
  kronrod *= half;
  gauss *= half;
  return {kronrod, std::abs(kronrod - gauss)};
}

double refine(const std::function<double(double)>& f, double a, double b,
              double tol, int depth, int max_depth, double& error_left) {
  const PanelEstimate est = kronrod15(f, a, b);
  if (est.error <= tol || depth >= max_depth) {
    error_left -= est.error;
    return est.integral;
  }
  const double mid = 0.5 * (a + b);
  return refine(f, a, mid, 0.5 * tol, depth + 1, max_depth, error_left) +
         refine(f, mid, b, 0.5 * tol, depth + 1, max_depth, error_left);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol, int initial_intervals,
                          int max_depth) {
  if (initial_intervals < 1) initial_intervals = 1;
  if (b == a) return 0.0;

  double total = 0.0;
  double budget = abs_tol;  // decremented by accepted panel errors
  const double width = (b - a) / initial_intervals;
  const double panel_tol = abs_tol / initial_intervals;
  for (int i = 0; i < initial_intervals; ++i) {
    const double x0 = a + i * width;
    const double x1 = (i + 1 == initial_intervals) ? b : x0 + width;
    total += refine(f, x0, x1, panel_tol, 0, max_depth, budget);
  }
  if (!std::isfinite(total))
    raise(errc::convergence_failure, "quadrature produced non-finite value");
  // budget < -9*abs_tol means accumulated panel errors exceeded 10x abs_tol
  if (budget < -9.0 * abs_tol)
    raise(errc::convergence_failure,
          "quadrature error estimate exceeds tolerance after refinement");
  return total;
}

ScalarMinimum golden_section_minimize(const std::function<double(double)>& f,
                                      double a, double b, double x_tol,
                                      int max_iterations) {
  const double inv_phi = 0.6180339887498948482;  // 1/golden ratio

  auto eval = [&f](double x) {
    const double y = f(x);
    if (!std::isfinite(y))
      raise(errc::minimization_failure,
            "objective returned a non-finite value");
    return y;
  };

  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = eval(x1);
  double f2 = eval(x2);

  ScalarMinimum result;
  int iter = 0;
  while (b - a > x_tol && iter < max_iterations) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = eval(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = eval(x2);
    }
    ++iter;
  }

  result.converged = (b - a) <= x_tol;
  result.iterations = iter;
  if (f1 <= f2) {
    result.x = x1;
    result.value = f1;
  } else {
    result.x = x2;
    result.value = f2;
  }
  return result;
}

double median(std::vector<double> values) {
  if (values.empty()) raise(errc::out_of_range, "median of empty range");
  const size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  double hi = values[mid];
  if (values.size() % 2 == 1) return hi;
  std::nth_element(values.begin(), values.begin() + mid - 1,
                   values.begin() + mid);
  return 0.5 * (values[mid - 1] + hi);
}

}  // namespace abspin
