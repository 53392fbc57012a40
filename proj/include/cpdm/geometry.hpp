#ifndef CPDM_GEOMETRY_HPP
#define CPDM_GEOMETRY_HPP

#include "cpdm/types.hpp"

namespace cpdm {

enum class SpaceKind { DiscreteRegions, RacetrackGrid };

/// Spatial configuration shared by all solvers: either R discrete regions
/// with a user-supplied iceberg transport matrix, or an I-point periodic grid
/// on a circle of radius rho.
///
/// Immutable after construction; safe to share across threads.
struct Space {
  SpaceKind kind = SpaceKind::DiscreteRegions;
  int count = 0;          // R (discrete) or I (grid)
  double radius = 0.0;    // rho, racetrack only
  double sigma = 0.0;     // elasticity used to build the kernel
  double tau = 0.0;       // transport-cost rate used to build the kernel
  Vec angles;             // theta_i = -pi + (i-1)*2*pi/I, racetrack only
  double cell_weight = 1.0;  // quadrature weight: rho*2*pi/I on the grid, 1 for regions

  // transport[i][j] = T(x_i,x_j)^(1-sigma); symmetric, unit diagonal,
  // entries in (0,1]. On the racetrack T(x,y) = exp(tau*d(x,y)), so the
  // entry is exp(-alpha*d) with alpha = (sigma-1)*tau.
  SquareMatrix transport;

  // kernel_quad[i][j] = integral of T(x_i,y)^(1-sigma) over grid cell j
  // (racetrack), or transport[i][j] itself (discrete regions). Using the
  // per-cell closed-form integrals instead of transport[i][j]*cell_weight
  // makes every kernel row integrate to exactly 2*(1-exp(-alpha*pi*rho))/alpha,
  // which the piecewise-linear kink of the distance function denies to the
  // plain Riemann sum. All integral operators go through this matrix.
  SquareMatrix kernel_quad;

  double alpha() const { return (sigma - 1.0) * tau; }
};

/// Shorter distance between two angles along a circle of radius rho.
/// Inputs are wrapped into [-pi, pi) first, so any finite angle is accepted.
double circle_distance(double theta_a, double theta_b, double rho);

/// Analytic value of the kernel mass \int_S T(x,y)^{1-sigma} dy
/// = 2*(1-exp(-alpha*pi*rho))/alpha, with limit 2*pi*rho at alpha = 0.
double kernel_mass(double alpha, double rho);

/// Periodic grid on the circle. Requires even points >= 4, sigma > 1,
/// tau >= 0, rho > 0; throws std::invalid_argument otherwise.
Space build_racetrack(int points, double rho, double sigma, double tau);

/// Discrete regions from an explicit iceberg matrix (T[r][s] >= 1, symmetric,
/// unit diagonal). Throws std::invalid_argument on a malformed matrix.
Space build_discrete_regions(const SquareMatrix& iceberg, double sigma);

/// Quadrature of a field over the space: sum f_i * cell_weight.
/// Spectrally accurate for smooth periodic integrands on the grid.
double integrate(const Vec& f, const Space& space);

/// y_i = sum_j kernel_quad[i][j] * f_j, the discrete form of
/// \int T(x_i,y)^{1-sigma} f(y) dy.
Vec apply_kernel(const Space& space, const Vec& f);

}  // namespace cpdm

#endif
