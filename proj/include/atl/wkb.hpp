#pragma once

#include <vector>

#include "atl/constants.hpp"
#include "atl/potentials.hpp"

namespace atl::wkb {

// Semiclassical path on a potential curve.  Energies are eV on the same zero
// as the curve; the accumulated phase is the action integral of the nuclear
// momentum sqrt(2 mu (E - V)) over the classically allowed part of
// [r_start, r_max] (hbar = 1, lengths in a.u.).
struct WkbPath {
  const potentials::PotentialCurve* curve = nullptr;  // non-owning
  double total_energy_ev = 0.0;
  double r_start = 0.0;
  double r_max = 40.0;
  double reduced_mass = constants::kReducedMassH2p;
};

struct PhaseResult {
  double phase = 0.0;            // radians
  double estimated_error = 0.0;  // radians
  double r_turning = 0.0;        // a.u.; r_start when the path starts allowed
};

// Innermost root of V(R) = E on the curve, i.e. where outgoing dissociative
// motion becomes classically allowed.  Throws NoTurningPointError when E - V
// has constant sign on the grid.
double turning_point(const potentials::PotentialCurve& curve, double energy_ev);

// Classically allowed sub-intervals of [lo, hi] (node-level sign scan plus
// bisection for the edges; the monotone interpolant cannot oscillate between
// nodes, so no crossing is missed).
std::vector<std::pair<double, double>> allowed_regions(
    const potentials::PotentialCurve& curve, double energy_ev, double lo,
    double hi);

// Adaptive phase integral with a sqrt substitution over a window of ten grid
// spacings at each turning point, which removes the integrable singularity.
PhaseResult wkb_phase(const WkbPath& path, double tol_rad = 1e-8);

// Phase difference Theta_gs - Theta_bs as a single quadrature of the momentum
// difference, each momentum extended by zero where its path is forbidden, so
// the common tail cancels before any subtraction.  Both paths must share
// r_max.  Throws NotConvergedError when doubling r_max moves the result by
// more than 1e-3 rad.
double delta_theta(const WkbPath& gs_path, const WkbPath& bs_path,
                   double tol_rad = 1e-7);

// delta_theta without the cutoff-doubling check, at an explicit cutoff.
double delta_theta_at_cutoff(const WkbPath& gs_path, const WkbPath& bs_path,
                             double r_max, double tol_rad = 1e-7);

}  // namespace atl::wkb
