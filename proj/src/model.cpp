#include "atl/model.hpp"

#include <algorithm>
#include <cmath>

#include "atl/errors.hpp"

namespace atl::model {

namespace {

using pathways::BandParity;

PhysicsModel build_impl(const config::RunConfig& cfg, bool parallel) {
  PhysicsModel physics;
  if (cfg.curve_file_g.empty()) {
    physics.vg = potentials::embedded_ground_sigma_g();
    physics.vu = potentials::embedded_excited_sigma_u();
  } else {
    physics.vg =
        potentials::load_curve(cfg.curve_file_g, potentials::CurveLabel::GroundSigmaG);
    physics.vu =
        potentials::load_curve(cfg.curve_file_u, potentials::CurveLabel::ExcitedSigmaU);
  }
  potentials::validate_physical_pair(physics.vg, physics.vu);

  potentials::IrFieldParams ir{cfg.hbar_omega_ev, cfg.ir_intensity_w_cm2};
  potentials::CouplingModel coupling;
  coupling.dipole = cfg.coupling == "none"
                        ? potentials::CouplingModel::Dipole::None
                        : potentials::CouplingModel::Dipole::ChargeResonance;
  coupling.taper_start_mult = cfg.coupling_taper_start_mult;
  coupling.taper_width_mult = cfg.coupling_taper_width_mult;
  physics.dressed = potentials::dress_curves(physics.vg, physics.vu, ir, coupling);

  const int n = cfg.wkb_ker_points;
  physics.ker_grid.resize(n);
  physics.delta_theta.resize(n);
  for (int i = 0; i < n; ++i)
    physics.ker_grid[i] =
        cfg.ker_min_ev + (cfg.ker_max_ev - cfg.ker_min_ev) * i / (n - 1);

  const auto eval_one = [&](int i) {
    wkb::WkbPath gs{&physics.vg, physics.ker_grid[i] + cfg.dissociation_limit_ev,
                    physics.vg.r_min(), cfg.wkb_r_max_au};
    wkb::WkbPath bs{&physics.dressed.lower,
                    physics.ker_grid[i] + cfg.dissociation_limit_ev - cfg.hbar_omega_ev,
                    physics.dressed.lower.r_min(), cfg.wkb_r_max_au};
    physics.delta_theta[i] = wkb::delta_theta(gs, bs, cfg.wkb_tol_rad);
  };

  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) eval_one(i);
  } else {
    for (int i = 0; i < n; ++i) eval_one(i);
  }
  return physics;
}

double gs_envelope(const config::RunConfig& cfg, double ker) {
  return cfg.gs_amplitude * std::exp(-cfg.gs_decay_per_ev * ker);
}

double bs_envelope(const config::RunConfig& cfg, double ker) {
  const double u = (ker - cfg.bs_center_ev) / cfg.bs_sigma_ev;
  return cfg.bs_amplitude * std::exp(-0.5 * u * u);
}

}  // namespace

PhysicsModel build_physics(const config::RunConfig& cfg) {
  return build_impl(cfg, true);
}

PhysicsModel build_physics_serial(const config::RunConfig& cfg) {
  return build_impl(cfg, false);
}

double delta_theta_at(const PhysicsModel& physics, double ker_ev) {
  const auto& xs = physics.ker_grid;
  const auto& ys = physics.delta_theta;
  if (ker_ev <= xs.front()) return ys.front();
  if (ker_ev >= xs.back()) return ys.back();
  const auto it = std::upper_bound(xs.begin(), xs.end(), ker_ev);
  const std::size_t i = static_cast<std::size_t>(it - xs.begin()) - 1;
  const double t = (ker_ev - xs[i]) / (xs[i + 1] - xs[i]);
  return ys[i] + t * (ys[i + 1] - ys[i]);
}

std::vector<eventgen::BandModel> build_band_models(const config::RunConfig& cfg,
                                                   const PhysicsModel& physics) {
  // fine KER grid for envelope sampling and inverse-CDF draws
  const int n_fine = 481;
  std::vector<double> fine(n_fine), alpha(n_fine), beta(n_fine), dtheta(n_fine);
  for (int i = 0; i < n_fine; ++i) {
    fine[i] = cfg.ker_min_ev + (cfg.ker_max_ev - cfg.ker_min_ev) * i / (n_fine - 1);
    alpha[i] = gs_envelope(cfg, fine[i]);
    beta[i] = bs_envelope(cfg, fine[i]);
    dtheta[i] = delta_theta_at(physics, fine[i]);
  }

  std::vector<eventgen::BandModel> bands;
  for (int q : cfg.odd_bands) {
    eventgen::BandModel band;
    band.parity = BandParity::Odd;
    band.q = q;
    band.l_gs = cfg.l_gs_odd;
    band.l_bs = cfg.l_bs_odd;
    band.ker_grid = fine;
    band.alpha_sq = alpha;
    band.beta_sq = beta;
    band.delta_theta = dtheta;
    bands.push_back(std::move(band));
  }
  for (int q : cfg.even_bands) {
    eventgen::BandModel band;
    band.parity = BandParity::Even;
    band.q = q;
    band.l_gs = cfg.l_gs_even;
    band.l_bs = cfg.l_bs_even;
    band.ker_grid = fine;
    band.alpha_sq = alpha;
    band.beta_sq = beta;
    band.delta_theta = dtheta;
    bands.push_back(std::move(band));
  }
  return bands;
}

eventgen::SimConfig build_sim_config(const config::RunConfig& cfg,
                                     const PhysicsModel& physics) {
  eventgen::SimConfig sim;
  sim.bands = build_band_models(cfg, physics);
  std::vector<pathways::Harmonic> harmonics(cfg.xuv_orders.size());
  for (std::size_t i = 0; i < cfg.xuv_orders.size(); ++i)
    harmonics[i] = {cfg.xuv_orders[i], cfg.xuv_magnitudes[i], cfg.xuv_phases[i]};
  sim.xuv = pathways::XuvSpectrum(std::move(harmonics));
  sim.hbar_omega_ev = cfg.hbar_omega_ev;
  sim.dissociation_limit_ev = cfg.dissociation_limit_ev;
  sim.delays_fs = cfg.delays();
  sim.events_total = cfg.events_total;
  sim.smear_electron_au = cfg.smear_electron_au;
  sim.smear_ion_au = cfg.smear_ion_au;
  sim.rng_seed = cfg.rng_seed;
  sim.config_hash = cfg.hash();
  return sim;
}

pathways::PathwaySpec model_spec(const config::RunConfig& cfg,
                                 const PhysicsModel& physics,
                                 pathways::BandParity parity, int q,
                                 double ker_ev) {
  const double alpha = std::sqrt(gs_envelope(cfg, ker_ev));
  const double beta = std::sqrt(bs_envelope(cfg, ker_ev));

  pathways::PathwaySpec spec;
  spec.parity = parity;
  spec.q = q;
  spec.ker_ev = ker_ev;
  spec.hbar_omega_ev = cfg.hbar_omega_ev;
  std::vector<pathways::Harmonic> harmonics(cfg.xuv_orders.size());
  for (std::size_t i = 0; i < cfg.xuv_orders.size(); ++i)
    harmonics[i] = {cfg.xuv_orders[i], cfg.xuv_magnitudes[i], cfg.xuv_phases[i]};
  spec.xuv = pathways::XuvSpectrum(std::move(harmonics));
  spec.theta_gs = delta_theta_at(physics, ker_ev);
  spec.theta_bs = 0.0;
  if (parity == BandParity::Odd) {
    spec.g1 = {alpha, cfg.l_gs_odd};
    spec.b1 = {0.5 * beta, cfg.l_bs_odd};
    spec.b2 = {0.5 * beta, cfg.l_bs_odd};
    spec.g2 = {0.0, cfg.l_gs_odd};
  } else {
    spec.g1 = {0.5 * alpha, cfg.l_gs_even};
    spec.g2 = {0.5 * alpha, cfg.l_gs_even};
    spec.b1 = {beta, cfg.l_bs_even};
    spec.b2 = {0.0, cfg.l_bs_even};
  }
  return spec;
}

namespace {

ModelMap evaluate_impl(const config::RunConfig& cfg, const PhysicsModel& physics,
                       BandParity parity, bool parallel) {
  const auto& orders =
      parity == BandParity::Odd ? cfg.odd_bands : cfg.even_bands;
  if (orders.empty()) throw Error("no bands of the requested parity");

  ModelMap map;
  map.parity = parity;
  map.q = *std::min_element(orders.begin(), orders.end());
  map.delays_fs = cfg.delays();
  const analysis::Binning binning = cfg.binning();
  const int nk = binning.n_ker();
  const std::size_t nt = map.delays_fs.size();
  map.ker_centers.resize(nk);
  for (int i = 0; i < nk; ++i) map.ker_centers[i] = binning.ker_center(i);
  map.a.resize(static_cast<std::size_t>(nk) * nt);

  const auto eval_row = [&](int ik) {
    const auto spec = model_spec(cfg, physics, parity, map.q, map.ker_centers[ik]);
    for (std::size_t t = 0; t < nt; ++t)
      map.a[static_cast<std::size_t>(ik) * nt + t] =
          pathways::asymmetry(spec, map.delays_fs[t]);
  };

  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int ik = 0; ik < nk; ++ik) eval_row(ik);
  } else {
    for (int ik = 0; ik < nk; ++ik) eval_row(ik);
  }
  return map;
}

}  // namespace

ModelMap evaluate_model_map(const config::RunConfig& cfg,
                            const PhysicsModel& physics,
                            pathways::BandParity parity) {
  return evaluate_impl(cfg, physics, parity, true);
}

ModelMap evaluate_model_map_serial(const config::RunConfig& cfg,
                                   const PhysicsModel& physics,
                                   pathways::BandParity parity) {
  return evaluate_impl(cfg, physics, parity, false);
}

std::vector<double> mean_asymmetry(const ModelMap& map) {
  const std::size_t nt = map.delays_fs.size();
  std::vector<double> mean(map.ker_centers.size(), 0.0);
  for (std::size_t ik = 0; ik < mean.size(); ++ik) {
    for (std::size_t t = 0; t < nt; ++t) mean[ik] += map.a[ik * nt + t];
    mean[ik] /= static_cast<double>(nt);
  }
  return mean;
}

}  // namespace atl::model
