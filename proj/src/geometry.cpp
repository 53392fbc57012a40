#include "cpdm/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cpdm {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_angle(double theta) {
  // Map into [-pi, pi).
  double t = std::remainder(theta, 2.0 * kPi);
  if (t >= kPi) t -= 2.0 * kPi;
  if (t < -kPi) t += 2.0 * kPi;
  return t;
}

}  // namespace

double circle_distance(double theta_a, double theta_b, double rho) {
  const double a = wrap_angle(theta_a);
  const double b = wrap_angle(theta_b);
  const double gap = std::fabs(a - b);
  return rho * std::min(gap, 2.0 * kPi - gap);
}

double kernel_mass(double alpha, double rho) {
  if (alpha == 0.0) return 2.0 * kPi * rho;
  return 2.0 * (-std::expm1(-alpha * kPi * rho)) / alpha;
}

Space build_racetrack(int points, double rho, double sigma, double tau) {
  if (points < 4 || points % 2 != 0)
    throw std::invalid_argument("racetrack grid needs an even point count >= 4, got " +
                                std::to_string(points));
  if (!(sigma > 1.0)) throw std::invalid_argument("elasticity sigma must exceed 1");
  if (!(rho > 0.0)) throw std::invalid_argument("circle radius rho must be positive");
  if (!(tau >= 0.0)) throw std::invalid_argument("transport-cost rate tau must be nonnegative");

  Space s;
  s.kind = SpaceKind::RacetrackGrid;
  s.count = points;
  s.radius = rho;
  s.sigma = sigma;
  s.tau = tau;

  const double dtheta = 2.0 * kPi / points;
  s.cell_weight = rho * dtheta;
  s.angles.resize(points);
  for (int i = 0; i < points; ++i) s.angles[i] = -kPi + i * dtheta;

  const double alpha = s.alpha();
  const int half = points / 2;

  // Both matrices are circulant: entry (i,j) depends only on the cyclic
  // offset |i-j| mod I. Build the two offset profiles once.
  Vec point_profile(half + 1), cell_profile(half + 1);
  const double arc = rho * dtheta;  // cell width in arc length
  for (int o = 0; o <= half; ++o) {
    const double d = rho * std::min(o * dtheta, 2.0 * kPi - o * dtheta);
    point_profile[o] = std::exp(-alpha * d);
    if (alpha == 0.0) {
      cell_profile[o] = arc;
    } else if (o == 0) {
      // kink of d(x,.) at the node itself
      cell_profile[o] = 2.0 * (-std::expm1(-alpha * arc / 2.0)) / alpha;
    } else if (o == half) {
      // kink at the antipode, where the shorter arc switches side
      cell_profile[o] = 2.0 * std::exp(-alpha * kPi * rho) * std::expm1(alpha * arc / 2.0) / alpha;
    } else {
      cell_profile[o] = std::exp(-alpha * d) * 2.0 * std::sinh(alpha * arc / 2.0) / alpha;
    }
  }

  s.transport = SquareMatrix(points);
  s.kernel_quad = SquareMatrix(points);
  for (int i = 0; i < points; ++i) {
    for (int j = 0; j < points; ++j) {
      int o = std::abs(i - j);
      if (o > half) o = points - o;
      s.transport(i, j) = point_profile[o];
      s.kernel_quad(i, j) = cell_profile[o];
    }
  }
  return s;
}

Space build_discrete_regions(const SquareMatrix& iceberg, double sigma) {
  const int n = iceberg.size();
  if (n < 2) throw std::invalid_argument("discrete space needs at least 2 regions");
  if (!(sigma > 1.0)) throw std::invalid_argument("elasticity sigma must exceed 1");
  for (int r = 0; r < n; ++r) {
    if (iceberg(r, r) != 1.0)
      throw std::invalid_argument("iceberg matrix must have unit diagonal (T(x,x)=1)");
    for (int c = 0; c < n; ++c) {
      if (!(iceberg(r, c) >= 1.0))
        throw std::invalid_argument("iceberg transport factors must be >= 1");
      if (iceberg(r, c) != iceberg(c, r))
        throw std::invalid_argument("iceberg matrix must be symmetric");
    }
  }

  Space s;
  s.kind = SpaceKind::DiscreteRegions;
  s.count = n;
  s.sigma = sigma;
  s.cell_weight = 1.0;
  s.transport = SquareMatrix(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) s.transport(r, c) = std::pow(iceberg(r, c), 1.0 - sigma);
  s.kernel_quad = s.transport;
  return s;
}

double integrate(const Vec& f, const Space& space) {
  if (static_cast<int>(f.size()) != space.count)
    throw std::invalid_argument("field length does not match the space");
  double acc = 0.0;
  for (double v : f) acc += v;
  return acc * space.cell_weight;
}

Vec apply_kernel(const Space& space, const Vec& f) {
  if (static_cast<int>(f.size()) != space.count)
    throw std::invalid_argument("field length does not match the space");
  const int n = space.count;
  Vec out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const double* row = space.kernel_quad.row(i);
    double acc = 0.0;
    for (int j = 0; j < n; ++j) acc += row[j] * f[j];
    out[i] = acc;
  }
  return out;
}

}  // namespace cpdm
