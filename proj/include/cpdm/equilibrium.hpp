#ifndef CPDM_EQUILIBRIUM_HPP
#define CPDM_EQUILIBRIUM_HPP

#include "cpdm/model.hpp"

namespace cpdm {

struct EquilibriumOptions {
  double tol = 1e-10;    // max-norm residual on W
  int max_iter = 10000;
  double damping = 1.0;  // W <- (1-damping)*W + damping*F(W); 1 = plain substitution
};

/// Instantaneous market equilibrium for a given population state.
struct Equilibrium {
  Vec Y;      // total income
  Vec w;      // nominal wage
  Vec G;      // manufacturing price index
  Vec omega;  // real wage  w*G^-mu
  Vec eta;    // real profit (mu/sigma)*(m/n)*omega
  Vec W;      // converged w^sigma iterate, kept for warm starts
  int iterations = 0;
  double residual = 0.0;
  int floored_points = 0;  // grid points where a share hit the ratio floor
};

/// Share floor used inside the n/m ratio and the price-index sum, relative to
/// the uniform density. Keeps spiky states finite without touching the
/// dynamics themselves.
inline constexpr double kShareFloorRel = 1e-12;

/// One application of the wage fixed-point map
///   F(W)_i = (n_i/m_i) * sum_j [((1-mu)*phi_j + mu*W_j^(1/sigma)*m_j)
///            / (sum_k n_k*W_k^((1-sigma)/sigma)*Kq[j][k])] * Kq[i][j],
/// the W = w^sigma form of the income/wage/price-index block.
/// Throws NonPositiveInput if any W_i <= 0 and DegenerateShare if any share
/// is nonpositive; shares in (0, floor) are clamped to the floor.
Vec wage_fixed_point_map(const Vec& W, const PopulationState& state, const ModelParams& params,
                         const Space& space);

/// Iterate the map from W_init (all ones when absent) until the max-norm
/// residual drops below opts.tol, then derive w, G, omega, eta, Y from the
/// converged W. Throws NoConvergence with the residual history when max_iter
/// is exhausted; divergence is never silent.
Equilibrium solve_equilibrium(const PopulationState& state, const ModelParams& params,
                              const Space& space, const EquilibriumOptions& opts = {},
                              const Vec* W_init = nullptr);

}  // namespace cpdm

#endif
