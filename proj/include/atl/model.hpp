#pragma once

#include <vector>

#include "atl/config.hpp"
#include "atl/eventgen.hpp"
#include "atl/potentials.hpp"
#include "atl/wkb.hpp"

namespace atl::model {

// Curves, dressed pair and the nuclear phase difference sampled over KER.
struct PhysicsModel {
  potentials::PotentialCurve vg, vu;
  potentials::DressedPair dressed;
  std::vector<double> ker_grid;     // eV
  std::vector<double> delta_theta;  // rad, Theta_gs - Theta_bs at each KER
};

// Loads/dresses the curves and evaluates delta_theta over the KER grid.
// The ground path runs on 1s sigma_g at E = KER + I_d; the bond-softening
// path runs on the dressed lower adiabat at E = KER + I_d - hw, which gives
// both paths the same asymptotic momentum.
PhysicsModel build_physics(const config::RunConfig& cfg);
PhysicsModel build_physics_serial(const config::RunConfig& cfg);  // reference

double delta_theta_at(const PhysicsModel& physics, double ker_ev);

// Per-band generator inputs on a fine KER grid (envelopes + delta_theta).
std::vector<eventgen::BandModel> build_band_models(const config::RunConfig& cfg,
                                                   const PhysicsModel& physics);
eventgen::SimConfig build_sim_config(const config::RunConfig& cfg,
                                     const PhysicsModel& physics);

// model pathway spec of a band at one KER (the injected truth)
pathways::PathwaySpec model_spec(const config::RunConfig& cfg,
                                 const PhysicsModel& physics,
                                 pathways::BandParity parity, int q,
                                 double ker_ev);

// Closed-form A(KER, tau) on the analysis binning for one parity's reference
// (lowest-q) band.
struct ModelMap {
  pathways::BandParity parity = pathways::BandParity::Odd;
  int q = 0;
  std::vector<double> ker_centers;
  std::vector<double> delays_fs;
  std::vector<double> a;  // [ik * n_delay + it]
};

ModelMap evaluate_model_map(const config::RunConfig& cfg,
                            const PhysicsModel& physics,
                            pathways::BandParity parity);
ModelMap evaluate_model_map_serial(const config::RunConfig& cfg,
                                   const PhysicsModel& physics,
                                   pathways::BandParity parity);

// time average of the map per KER row
std::vector<double> mean_asymmetry(const ModelMap& map);

}  // namespace atl::model
