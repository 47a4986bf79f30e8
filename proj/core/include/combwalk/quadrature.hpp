#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace combwalk {

/// Controls for the adaptive integrator. Semi-infinite integrals are
/// truncated at a radius where an analytic tail bound falls below
/// abs_tol * tail_fraction; the callers pick the radius per integrand.
struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_subdivisions = 4000;
  double tail_fraction = 0.1;
};

struct QuadResult {
  double value = 0;
  double error = 0;  // achieved error estimate
  int subdivisions = 0;
  bool converged = false;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, const QuadResult& result)
      : std::runtime_error(what), result_(result) {}
  const QuadResult& result() const { return result_; }

 private:
  QuadResult result_;
};

namespace detail {

// Gauss-Kronrod 7-15 pair on [-1,1]: {node, gauss weight, kronrod weight}.
// Rows 0..3 carry the embedded Gauss nodes (row 0 is the center).
inline constexpr double kGk15[8][3] = {
    {0.000000000000000000, 0.417959183673469388, 0.209482141084727828},
    {0.405845151377397167, 0.381830050505118945, 0.190350578064785410},
    {0.741531185599394440, 0.279705391489276668, 0.140653259715525919},
    {0.949107912342758525, 0.129484966168869693, 0.063092092629978553},
    {0.207784955007898468, 0.0, 0.204432940075298892},
    {0.586087235467691130, 0.0, 0.169004726639267903},
    {0.864864423359769073, 0.0, 0.104790010322250184},
    {0.991455371120812639, 0.0, 0.022935322010529225},
};

template <class F>
void gk15(const F& f, double a, double b, double& value, double& error) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);

  double fv[15];
  double fc = f(c);
  fv[0] = fc;
  double g7 = kGk15[0][1] * fc;
  double k15 = kGk15[0][2] * fc;
  for (int i = 1; i < 8; ++i) {
    double d = h * kGk15[i][0];
    double fp = f(c + d);
    double fm = f(c - d);
    fv[2 * i - 1] = fp;
    fv[2 * i] = fm;
    g7 += kGk15[i][1] * (fp + fm);
    k15 += kGk15[i][2] * (fp + fm);
  }
  value = k15 * h;

  // QUADPACK-style scaled error estimate.
  double mean = 0.5 * k15;
  double resasc = kGk15[0][2] * std::abs(fc - mean);
  for (int i = 1; i < 8; ++i) {
    resasc += kGk15[i][2] *
              (std::abs(fv[2 * i - 1] - mean) + std::abs(fv[2 * i] - mean));
  }
  resasc *= std::abs(h);
  double raw = std::abs((k15 - g7) * h);
  error = raw;
  if (resasc != 0.0 && raw != 0.0) {
    error = resasc * std::min(1.0, std::pow(200.0 * raw / resasc, 1.5));
  }
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration of f over the finite interval [a,b].
/// Worst-error-first bisection until the summed estimate meets
/// max(abs_tol, rel_tol * |integral|) or the subdivision budget is spent.
template <class F>
QuadResult integrate_gk15(const F& f, double a, double b,
                          const QuadratureSpec& spec = {}) {
  QuadResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }

  struct Segment {
    double error, a, b, value;
    bool operator<(const Segment& other) const { return error < other.error; }
  };

  double v, e;
  detail::gk15(f, a, b, v, e);
  std::priority_queue<Segment> queue;
  queue.push({e, a, b, v});
  double total_value = v;
  double total_error = e;
  int splits = 0;

  while (total_error >
             std::max(spec.abs_tol, spec.rel_tol * std::abs(total_value)) &&
         splits < spec.max_subdivisions) {
    Segment worst = queue.top();
    queue.pop();
    total_value -= worst.value;
    total_error -= worst.error;
    double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Interval at floating-point resolution; keep its estimate as is.
      total_value += worst.value;
      total_error += worst.error;
      break;
    }
    double v1, e1, v2, e2;
    detail::gk15(f, worst.a, mid, v1, e1);
    detail::gk15(f, mid, worst.b, v2, e2);
    queue.push({e1, worst.a, mid, v1});
    queue.push({e2, mid, worst.b, v2});
    total_value += v1 + v2;
    total_error += e1 + e2;
    ++splits;
  }

  out.value = total_value;
  out.error = total_error;
  out.subdivisions = splits;
  out.converged =
      total_error <=
      std::max(spec.abs_tol, spec.rel_tol * std::abs(total_value));
  return out;
}

/// Throwing wrapper: quadrature non-convergence is reported together with
/// the achieved error estimate.
template <class F>
double integrate_or_throw(const F& f, double a, double b,
                          const QuadratureSpec& spec, const char* what) {
  QuadResult r = integrate_gk15(f, a, b, spec);
  if (!r.converged) {
    throw QuadratureError(std::string(what) +
                              ": quadrature did not converge, error estimate " +
                              std::to_string(r.error),
                          r);
  }
  return r.value;
}

}  // namespace combwalk
