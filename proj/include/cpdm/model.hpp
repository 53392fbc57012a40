#ifndef CPDM_MODEL_HPP
#define CPDM_MODEL_HPP

#include <cstdint>

#include "cpdm/geometry.hpp"
#include "cpdm/types.hpp"

namespace cpdm {

/// Economic and dynamic constants of the dual-migration model.
struct ModelParams {
  double mu = 0.6;     // manufacturing expenditure share, in [0,1)
  double sigma = 5.0;  // elasticity of substitution, > 1
  double tau = 1.0;    // transport-cost rate, >= 0
  double rho = 1.0;    // circle radius, > 0
  double v_n = 1.0;    // firm migration speed, > 0
  double v_m = 1.0;    // worker migration speed, > 0

  double alpha() const { return (sigma - 1.0) * tau; }

  // 1/(1-mu) < sigma: preference for variety weak enough that critical
  // transport costs exist for every mode.
  bool no_black_hole() const { return 1.0 / (1.0 - mu) < sigma; }

  // Throws std::invalid_argument when a bound is violated.
  void validate() const;
};

/// Share densities of firms (n), manufacturing workers (m) and agricultural
/// workers (phi) over the space, each integrating to one. phi is fixed over
/// time. Owned by one integrator at a time.
struct PopulationState {
  Vec n;
  Vec m;
  Vec phi;
  double t = 0.0;
};

/// Spatially uniform stationary solution: all fields constant.
struct HomogeneousSolution {
  double n_bar = 0.0;
  double m_bar = 0.0;
  double phi_bar = 0.0;
  double Y_bar = 0.0;
  double w_bar = 1.0;
  double G_bar = 0.0;
  double eta_bar = 0.0;
  double omega_bar = 0.0;
};

/// Closed-form uniform solution; the alpha = 0 transport-free limit is taken
/// analytically.
HomogeneousSolution homogeneous_solution(const ModelParams& params);

/// Uniform density for the space: 1/(2*pi*rho) on the grid, 1/R for regions.
double uniform_density(const Space& space);

/// Exactly homogeneous state (n = m = phi = uniform density).
PopulationState uniform_state(const Space& space);

/// Homogeneous state plus independent random mean-zero perturbations of n and
/// m, built as truncated Fourier series over modes 1..mode_cutoff with
/// amplitudes uniform in [-epsilon, epsilon] and uniform phases (discrete
/// regions: iid mean-removed noise). Masses are renormalized to exactly one.
/// Fully determined by the seed (mt19937_64).
PopulationState perturbed_state(const Space& space, double epsilon, std::uint64_t seed,
                                int mode_cutoff = 8);

/// Homogeneous state with a single cosine mode on top:
/// n = nbar*(1 + rel_amp_n*cos(k*theta + phase)), m likewise.
/// Racetrack only; used to probe one Fourier mode of the linearization.
PopulationState single_mode_state(const Space& space, int k, double rel_amp_n, double rel_amp_m,
                                  double phase = 0.0);

/// Max-norm pointwise checks: nonnegative shares, unit masses within tol.
/// Throws DegenerateShare / std::invalid_argument on violation.
void validate_state(const PopulationState& state, const Space& space, double mass_tol = 1e-9);

}  // namespace cpdm

#endif
