#include "cpdm/model.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "cpdm/errors.hpp"

namespace cpdm {

namespace {

constexpr double kPi = std::numbers::pi;

// Uniform double in [0,1) from the top 53 bits; keeps the draw independent of
// the library's distribution internals.
double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void renormalize(Vec& f, const Space& space) {
  const double mass = integrate(f, space);
  for (double& v : f) v /= mass;
}

}  // namespace

void ModelParams::validate() const {
  if (!(mu >= 0.0 && mu < 1.0)) throw std::invalid_argument("mu must lie in [0,1)");
  if (!(sigma > 1.0)) throw std::invalid_argument("sigma must exceed 1");
  if (!(tau >= 0.0)) throw std::invalid_argument("tau must be nonnegative");
  if (!(rho > 0.0)) throw std::invalid_argument("rho must be positive");
  if (!(v_n > 0.0)) throw std::invalid_argument("v_n must be positive");
  if (!(v_m > 0.0)) throw std::invalid_argument("v_m must be positive");
}

HomogeneousSolution homogeneous_solution(const ModelParams& params) {
  params.validate();
  HomogeneousSolution h;
  const double dens = 1.0 / (2.0 * kPi * params.rho);
  h.n_bar = h.m_bar = h.phi_bar = dens;
  h.Y_bar = params.sigma * dens;
  h.w_bar = 1.0;
  const double bracket = params.sigma * dens * kernel_mass(params.alpha(), params.rho);
  h.G_bar = std::pow(bracket, 1.0 / (1.0 - params.sigma));
  h.omega_bar = std::pow(h.G_bar, -params.mu);
  h.eta_bar = params.mu / params.sigma * h.omega_bar;
  return h;
}

double uniform_density(const Space& space) {
  if (space.kind == SpaceKind::RacetrackGrid) return 1.0 / (2.0 * kPi * space.radius);
  return 1.0 / space.count;
}

PopulationState uniform_state(const Space& space) {
  PopulationState s;
  const double dens = uniform_density(space);
  s.n.assign(space.count, dens);
  s.m.assign(space.count, dens);
  s.phi.assign(space.count, dens);
  renormalize(s.n, space);
  renormalize(s.m, space);
  renormalize(s.phi, space);
  return s;
}

PopulationState perturbed_state(const Space& space, double epsilon, std::uint64_t seed,
                                int mode_cutoff) {
  if (!(epsilon >= 0.0)) throw std::invalid_argument("perturbation amplitude must be >= 0");
  if (mode_cutoff < 1) throw std::invalid_argument("mode_cutoff must be >= 1");
  if (epsilon * mode_cutoff >= 0.5)
    throw std::invalid_argument("perturbation too large: epsilon*mode_cutoff must stay below 0.5");

  PopulationState s = uniform_state(space);
  if (epsilon == 0.0) return s;

  std::mt19937_64 rng(seed);
  auto perturb = [&](Vec& f) {
    const int n = space.count;
    if (space.kind == SpaceKind::RacetrackGrid) {
      // delta = sum_k r_k cos(k*theta + psi_k): each mode is exactly mean-zero
      // on the equispaced grid, and max|delta| <= mode_cutoff*epsilon.
      Vec delta(n, 0.0);
      for (int k = 1; k <= mode_cutoff; ++k) {
        const double r = (2.0 * next_unit(rng) - 1.0) * epsilon;
        const double psi = 2.0 * kPi * next_unit(rng);
        for (int i = 0; i < n; ++i) delta[i] += r * std::cos(k * space.angles[i] + psi);
      }
      for (int i = 0; i < n; ++i) f[i] *= 1.0 + delta[i];
    } else {
      Vec delta(n);
      double mean = 0.0;
      for (int i = 0; i < n; ++i) {
        delta[i] = (2.0 * next_unit(rng) - 1.0) * epsilon;
        mean += delta[i];
      }
      mean /= n;
      for (int i = 0; i < n; ++i) f[i] *= 1.0 + (delta[i] - mean);
    }
    renormalize(f, space);
  };
  perturb(s.n);
  perturb(s.m);
  return s;
}

PopulationState single_mode_state(const Space& space, int k, double rel_amp_n, double rel_amp_m,
                                  double phase) {
  if (space.kind != SpaceKind::RacetrackGrid)
    throw std::invalid_argument("single-mode states need the racetrack grid");
  if (k == 0) throw std::invalid_argument("mode index k must be nonzero");
  if (std::fabs(rel_amp_n) >= 1.0 || std::fabs(rel_amp_m) >= 1.0)
    throw std::invalid_argument("relative mode amplitude must stay below 1");

  PopulationState s = uniform_state(space);
  for (int i = 0; i < space.count; ++i) {
    const double c = std::cos(k * space.angles[i] + phase);
    s.n[i] *= 1.0 + rel_amp_n * c;
    s.m[i] *= 1.0 + rel_amp_m * c;
  }
  renormalize(s.n, space);
  renormalize(s.m, space);
  return s;
}

void validate_state(const PopulationState& state, const Space& space, double mass_tol) {
  const int n = space.count;
  if (static_cast<int>(state.n.size()) != n || static_cast<int>(state.m.size()) != n ||
      static_cast<int>(state.phi.size()) != n)
    throw std::invalid_argument("population state length does not match the space");
  for (int i = 0; i < n; ++i) {
    if (!(state.n[i] >= 0.0) || !(state.m[i] >= 0.0) || !(state.phi[i] >= 0.0))
      throw DegenerateShare("share density negative at index " + std::to_string(i));
  }
  for (const Vec* f : {&state.n, &state.m, &state.phi}) {
    const double mass = integrate(*f, space);
    if (std::fabs(mass - 1.0) > mass_tol)
      throw std::invalid_argument("share mass deviates from 1 by " +
                                  std::to_string(mass - 1.0));
  }
}

}  // namespace cpdm
