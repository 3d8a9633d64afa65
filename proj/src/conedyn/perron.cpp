#include "ampdyn/conedyn/perron.hpp"

#include <algorithm>
#include <cmath>

namespace ampdyn::conedyn {

namespace {

constexpr int kMaxIterations = 200;
constexpr double kStepTolerance = 1e-9;
constexpr double kResidualBound = 1e-6;

std::vector<double> mat_apply(const std::vector<std::vector<double>>& m, const std::vector<double>& y) {
  std::vector<double> out(y.size(), 0.0);
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) out[i] += m[i][j] * y[j];
  return out;
}

double norm1(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += std::fabs(x);
  return s;
}

}  // namespace

PerronLimit power_limit_ray(const ConeEndo& e, const RatVector& start) {
  if (!e.cone().in_interior(start)) fail(ErrorKind::PreconditionViolated, "start point is not in the interior of the cone");
  const std::size_t d = e.dim();
  std::vector<std::vector<double>> m(d, std::vector<double>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m[i][j] = e.matrix()(i, j).get_d();
  std::vector<double> y(d);
  for (std::size_t i = 0; i < d; ++i) y[i] = start[i].get_d();
  const double n0 = norm1(y);
  for (auto& v : y) v /= n0;

  PerronLimit out;
  for (int it = 1; it <= kMaxIterations; ++it) {
    std::vector<double> next = mat_apply(m, y);
    const double r = norm1(next);
    for (auto& v : next) v /= r;
    double step = 0;
    for (std::size_t i = 0; i < d; ++i) step = std::max(step, std::fabs(next[i] - y[i]));
    y = std::move(next);
    out.iterations = it;
    if (step < kStepTolerance) {
      const std::vector<double> image = mat_apply(m, y);
      out.rate = norm1(image);
      for (std::size_t i = 0; i < d; ++i) out.residual = std::max(out.residual, std::fabs(image[i] - out.rate * y[i]));
      out.ray = y;
      out.certified = out.residual < kResidualBound;
      return out;
    }
  }
  fail(ErrorKind::NoConvergence, "power iteration did not settle within 200 steps");
}

}  // namespace ampdyn::conedyn
