#include "atl/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <vector>

#include "atl/analysis.hpp"
#include "atl/constants.hpp"
#include "atl/errors.hpp"
#include "atl/eventgen.hpp"
#include "atl/fitting.hpp"
#include "atl/model.hpp"
#include "atl/pathways.hpp"
#include "atl/potentials.hpp"
#include "atl/rng.hpp"
#include "atl/wkb.hpp"

namespace atl::acceptance {

namespace {

using Clock = std::chrono::steady_clock;
using pathways::BandParity;
using pathways::PathwaySpec;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

double wrap_pi(double phi) {
  while (phi <= -constants::kPi) phi += 2.0 * constants::kPi;
  while (phi > constants::kPi) phi -= 2.0 * constants::kPi;
  return phi;
}

pathways::XuvSpectrum flat_spectrum() {
  return pathways::XuvSpectrum({{15, 1, 0}, {17, 1, 0}, {19, 1, 0},
                                {21, 1, 0}, {23, 1, 0}, {25, 1, 0}});
}

// least-squares cosine fit with the frequency scanned freely (the pipeline
// fits at fixed 2*omega; the period check must not assume the answer)
double fitted_period_fs(const std::vector<double>& taus,
                        const std::vector<double>& values, double omega2_guess) {
  const auto residual = [&](double f) {
    double m[3][3] = {{0}}, r[3] = {0};
    for (std::size_t i = 0; i < taus.size(); ++i) {
      const double basis[3] = {1.0, std::cos(f * taus[i]), std::sin(f * taus[i])};
      for (int a = 0; a < 3; ++a) {
        r[a] += basis[a] * values[i];
        for (int b = 0; b < 3; ++b) m[a][b] += basis[a] * basis[b];
      }
    }
    // Cramer solve
    const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (std::fabs(det) < 1e-12) return 1e300;
    double coef[3];
    for (int k = 0; k < 3; ++k) {
      double mk[3][3];
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) mk[i][j] = j == k ? r[i] : m[i][j];
      coef[k] = (mk[0][0] * (mk[1][1] * mk[2][2] - mk[1][2] * mk[2][1]) -
                 mk[0][1] * (mk[1][0] * mk[2][2] - mk[1][2] * mk[2][0]) +
                 mk[0][2] * (mk[1][0] * mk[2][1] - mk[1][1] * mk[2][0])) /
                det;
    }
    double ss = 0.0;
    for (std::size_t i = 0; i < taus.size(); ++i) {
      const double model =
          coef[0] + coef[1] * std::cos(f * taus[i]) + coef[2] * std::sin(f * taus[i]);
      ss += (values[i] - model) * (values[i] - model);
    }
    return ss;
  };

  const int n = 2001;
  double best_f = omega2_guess, best_r = 1e300;
  for (int i = 0; i < n; ++i) {
    const double f = omega2_guess * (0.9 + 0.2 * i / (n - 1));
    const double r = residual(f);
    if (r < best_r) {
      best_r = r;
      best_f = f;
    }
  }
  // parabolic refinement
  const double h = omega2_guess * 0.2 / (n - 1);
  const double rm = residual(best_f - h), rp = residual(best_f + h);
  const double denom = rm - 2.0 * best_r + rp;
  if (std::fabs(denom) > 0.0) best_f += 0.5 * h * (rm - rp) / denom;
  return 2.0 * constants::kPi / best_f;
}

PathwaySpec matched_spec(BandParity parity, double dtheta) {
  PathwaySpec spec;
  spec.parity = parity;
  spec.q = 21;
  spec.hbar_omega_ev = 1.2;
  spec.xuv = flat_spectrum();
  spec.theta_gs = dtheta;
  spec.theta_bs = 0.0;
  // matched parameters across the parities, including the partial waves
  if (parity == BandParity::Odd) {
    spec.g1 = {1.0, 1};
    spec.b1 = {0.5, 0};
    spec.b2 = {0.5, 0};
  } else {
    spec.g1 = {0.5, 1};
    spec.g2 = {0.5, 1};
    spec.b1 = {1.0, 0};
  }
  return spec;
}

struct PooledScan {
  std::vector<double> ker_centers, delays;
  std::vector<std::uint64_t> same, opp;  // [ik * nt + it]
};

PooledScan pool_parity(const analysis::DelayScanResult& scan, BandParity parity) {
  PooledScan pooled;
  pooled.ker_centers = scan.ker_centers;
  for (const auto& band : scan.bands) {
    if (band.band.parity != parity) continue;
    if (pooled.delays.empty()) {
      pooled.delays = band.delays_fs;
      pooled.same.assign(band.same.size(), 0);
      pooled.opp.assign(band.opp.size(), 0);
    }
    for (std::size_t i = 0; i < band.same.size(); ++i) {
      pooled.same[i] += band.same[i];
      pooled.opp[i] += band.opp[i];
    }
  }
  return pooled;
}

CriterionResult criterion_oscillation_period(const config::RunConfig& base) {
  CriterionResult res{1, "oscillation period", false, ""};
  const auto t0 = Clock::now();

  config::RunConfig cfg = base;
  cfg.xuv_phases.assign(cfg.xuv_orders.size(), 0.0);
  const auto physics = model::build_physics(cfg);
  const auto map = model::evaluate_model_map(cfg, physics, BandParity::Odd);

  const auto& binning = cfg.binning();
  const int row =
      std::min(binning.n_ker() - 1,
               static_cast<int>((0.6 - binning.ker_min) / binning.ker_width));
  const std::size_t nt = map.delays_fs.size();
  std::vector<double> values(map.a.begin() + row * nt,
                             map.a.begin() + (row + 1) * nt);

  const double period = fitted_period_fs(map.delays_fs, values,
                                         2.0 * cfg.omega_rad_fs());
  const double target = constants::kPi / cfg.omega_rad_fs();
  const double elapsed = seconds_since(t0);
  const double err = std::fabs(period - target) / target;
  res.pass = err < 0.01 && elapsed < 1.0;
  res.detail = fmt("fitted period %.4f fs vs pi/omega %.4f fs (err %.3g%%), %.2f s",
                   period, target, 100.0 * err, elapsed);
  return res;
}

CriterionResult criterion_parity_phase(const config::RunConfig& base) {
  CriterionResult res{2, "odd/even parity phase shift", false, ""};
  const auto t0 = Clock::now();

  config::RunConfig cfg = base;
  const auto physics = model::build_physics(cfg);
  const double dtheta = model::delta_theta_at(physics, 0.6);

  const double w2 = 2.0 * cfg.omega_rad_fs();
  const auto spec_odd = matched_spec(BandParity::Odd, dtheta);
  const auto spec_even = matched_spec(BandParity::Even, dtheta);

  std::vector<fitting::WeightedSample> so, se;
  const auto delays = cfg.delays();
  for (double tau : delays) {
    so.push_back({tau, pathways::asymmetry(spec_odd, tau), 0.0});
    se.push_back({tau, pathways::asymmetry(spec_even, tau), 0.0});
  }
  const auto fo = fitting::fit_cosine(so, w2);
  const auto fe = fitting::fit_cosine(se, w2);
  const double dphi = std::fabs(wrap_pi(fo.phase - fe.phase));
  const double elapsed = seconds_since(t0);
  res.pass = std::fabs(dphi - constants::kPi) < 0.1 && elapsed < 1.0;
  res.detail = fmt("|phase_odd - phase_even| = %.6f rad (target pi +- 0.1), %.2f s",
                   dphi, elapsed);
  return res;
}

CriterionResult criterion_limiting_cases(const config::RunConfig&) {
  CriterionResult res{3, "limiting cases of the closed forms", false, ""};
  const auto t0 = Clock::now();
  const double w = constants::omega_rad_per_fs(1.2);
  const double period = constants::kPi / w;

  PathwaySpec no_g = matched_spec(BandParity::Odd, 0.7);
  no_g.g1.magnitude = 0.0;
  double max_a = 0.0;
  for (int k = 0; k < 64; ++k)
    max_a = std::max(max_a, std::fabs(pathways::asymmetry(no_g, period * k / 64)));

  PathwaySpec no_b1 = matched_spec(BandParity::Odd, 0.7);
  no_b1.b1.magnitude = 0.0;
  double lo = 1e300, hi = -1e300;
  for (int k = 0; k < 64; ++k) {
    const double a = pathways::asymmetry(no_b1, period * k / 64);
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  }

  PathwaySpec no_b2 = matched_spec(BandParity::Odd, 0.7);
  no_b2.b2.magnitude = 0.0;
  const double mean = pathways::time_average_asymmetry(no_b2, 4096);

  const double elapsed = seconds_since(t0);
  res.pass = max_a < 1e-15 && (hi - lo) < 1e-12 && std::fabs(mean) < 1e-10 &&
             elapsed < 1.0;
  res.detail = fmt("g1=0: max|A|=%.2g; b1=0: max-min=%.2g; b2=0: |<A>|=%.2g; %.2f s",
                   max_a, hi - lo, std::fabs(mean), elapsed);
  return res;
}

CriterionResult criterion_closed_loop(const config::RunConfig& base) {
  CriterionResult res{4, "closed loop: simulate -> analyze", false, ""};
  const auto t0 = Clock::now();

  config::RunConfig cfg = base;
  cfg.events_total = 1000000;
  cfg.delay_count = 32;
  cfg.delay_step_fs = 0.0;
  cfg.smear_electron_au = 0.0;
  cfg.smear_ion_au = 0.0;
  cfg.xuv_phases.assign(cfg.xuv_orders.size(), 0.0);
  cfg.even_bands.clear();

  const auto physics = model::build_physics(cfg);
  const auto sim = model::build_sim_config(cfg, physics);
  const auto file = eventgen::run_simulation(sim);

  const auto binning = cfg.binning();
  analysis::DelayScanOptions options;
  options.min_counts_per_point = 5;
  const auto scan = analysis::delay_scan(file.events, file.delays_fs,
                                         cfg.band_selections(),
                                         cfg.omega_rad_fs(), binning, options);
  const auto pooled = pool_parity(scan, BandParity::Odd);
  const std::size_t nt = pooled.delays.size();

  // extracted vs injected phase in the KER bin containing 0.6 eV
  const int row = static_cast<int>((0.6 - binning.ker_min) / binning.ker_width);
  std::vector<fitting::WeightedSample> samples;
  for (std::size_t t = 0; t < nt; ++t) {
    const std::uint64_t s = pooled.same[row * nt + t], o = pooled.opp[row * nt + t];
    if (s + o < 25) continue;
    const double a = (double(s) - double(o)) / double(s + o);
    samples.push_back({pooled.delays[t], a,
                       std::sqrt(std::max(1e-12, (1.0 - a * a) / double(s + o)))});
  }
  const auto extracted = fitting::fit_cosine(samples, 2.0 * cfg.omega_rad_fs());

  // injected model phase for that bin: the KER-draw-density-weighted average
  // of A over the bin, which is what the binned estimator measures
  const int q_ref = *std::min_element(cfg.odd_bands.begin(), cfg.odd_bands.end());
  std::vector<fitting::WeightedSample> injected_samples;
  {
    const int sub_fine = 40;
    for (std::size_t t = 0; t < nt; ++t) {
      double wsum = 0.0, awsum = 0.0;
      for (int j = 0; j < sub_fine; ++j) {
        const double ker =
            binning.ker_min + (row + (j + 0.5) / sub_fine) * binning.ker_width;
        const auto spec = model::model_spec(cfg, physics, BandParity::Odd, q_ref, ker);
        const double density = spec.g1.magnitude * spec.g1.magnitude +
                               spec.b1.magnitude * spec.b1.magnitude +
                               spec.b2.magnitude * spec.b2.magnitude;
        wsum += density;
        awsum += density * pathways::asymmetry(spec, pooled.delays[t]);
      }
      injected_samples.push_back({pooled.delays[t], awsum / wsum, 0.0});
    }
  }
  const auto injected = fitting::fit_cosine(injected_samples, 2.0 * cfg.omega_rad_fs());
  const double phase_err = std::fabs(wrap_pi(extracted.phase - injected.phase));

  // A map within 3 sigma of the envelope-weighted model expectation
  std::uint64_t tested = 0, within = 0;
  const int sub = 20;
  for (int ik = 0; ik < binning.n_ker(); ++ik) {
    // bin-averaged model asymmetry, weighted by the KER draw density
    std::vector<double> rho(sub), asym_k(sub);
    for (std::size_t t = 0; t < nt; ++t) {
      const std::uint64_t s = pooled.same[ik * nt + t], o = pooled.opp[ik * nt + t];
      const std::uint64_t n = s + o;
      if (n < 50) continue;
      double wsum = 0.0, awsum = 0.0;
      for (int j = 0; j < sub; ++j) {
        const double ker = binning.ker_min + (ik + (j + 0.5) / sub) * binning.ker_width;
        const auto spec = model::model_spec(cfg, physics, BandParity::Odd, q_ref, ker);
        const double density = spec.g1.magnitude * spec.g1.magnitude +
                               spec.b1.magnitude * spec.b1.magnitude +
                               spec.b2.magnitude * spec.b2.magnitude;
        wsum += density;
        awsum += density * pathways::asymmetry(spec, pooled.delays[t]);
      }
      const double expect = awsum / wsum;
      const double a = (double(s) - double(o)) / double(n);
      const double sigma = std::sqrt(std::max(1e-300, (1.0 - expect * expect) /
                                                          double(n)));
      ++tested;
      if (std::fabs(a - expect) < 3.0 * sigma) ++within;
    }
  }

  const double frac = tested ? double(within) / double(tested) : 0.0;
  const double elapsed = seconds_since(t0);
  res.pass = phase_err < 0.1 && frac >= 0.99 && elapsed < 10.0;
  res.detail = fmt("phase err %.4f rad (<0.1); %llu/%llu bins within 3 sigma "
                   "(%.2f%% >= 99%%); %.2f s",
                   phase_err, (unsigned long long)within, (unsigned long long)tested,
                   100.0 * frac, elapsed);
  return res;
}

CriterionResult criterion_null_test(const config::RunConfig& base) {
  CriterionResult res{5, "XUV-only null test", false, ""};
  const auto t0 = Clock::now();

  config::RunConfig cfg = base;
  cfg.events_total = 100000;
  cfg.delay_count = 8;
  cfg.delay_step_fs = 0.0;
  cfg.smear_electron_au = 0.0;
  cfg.smear_ion_au = 0.0;
  cfg.bs_amplitude = 0.0;  // single quantum path per event
  cfg.odd_bands = {21};
  cfg.even_bands.clear();
  cfg.xuv_phases.assign(cfg.xuv_orders.size(), 0.0);

  const auto physics = model::build_physics(cfg);
  const auto sim = model::build_sim_config(cfg, physics);
  const auto file = eventgen::run_simulation(sim);
  const auto jes = analysis::fill_jes(file.events, cfg.binning());
  const auto map = analysis::asymmetry_map(jes);

  std::uint64_t tested = 0, failed = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < map.a.size(); ++i) {
    const std::uint64_t n = jes.counts_same[i] + jes.counts_opp[i];
    if (n < 50) continue;  // sigma_A is only meaningful with real counts
    ++tested;
    const double z = std::fabs(map.a[i]) / map.sigma_a[i];
    worst = std::max(worst, z);
    if (z >= 3.0) ++failed;
  }
  const double elapsed = seconds_since(t0);
  res.pass = tested > 0 && failed == 0 && elapsed < 5.0;
  res.detail = fmt("%llu populated bins, worst |A|/sigma = %.2f (all < 3); %.2f s",
                   (unsigned long long)tested, worst, elapsed);
  return res;
}

CriterionResult criterion_alpha_beta(const config::RunConfig& base) {
  CriterionResult res{6, "alpha/beta envelope recovery", false, ""};
  const auto t0 = Clock::now();

  config::RunConfig cfg = base;
  cfg.events_total = 1000000;
  cfg.delay_count = 32;
  cfg.delay_step_fs = 0.0;
  cfg.smear_electron_au = 0.0;
  cfg.smear_ion_au = 0.0;
  cfg.xuv_phases.assign(cfg.xuv_orders.size(), 0.0);

  const auto physics = model::build_physics(cfg);
  const auto sim = model::build_sim_config(cfg, physics);
  const auto file = eventgen::run_simulation(sim);

  // pool the odd bands' KER projections
  const auto binning = cfg.binning();
  std::vector<double> proj(binning.n_ker(), 0.0);
  std::vector<double> kers(binning.n_ker());
  for (int i = 0; i < binning.n_ker(); ++i) kers[i] = binning.ker_center(i);
  double selected = 0.0;
  for (int q : cfg.odd_bands) {
    analysis::BandSelection band{BandParity::Odd, q,
                                 analysis::band_center_ev(BandParity::Odd, q,
                                                          cfg.hbar_omega_ev,
                                                          cfg.dissociation_limit_ev),
                                 cfg.band_half_width_ev};
    const auto p = analysis::ker_projection(file.events, band, binning);
    for (int i = 0; i < binning.n_ker(); ++i) {
      proj[i] += p.counts[i];
      selected += p.counts[i];
    }
  }

  fitting::ExponentialFitOptions options;
  options.min_count = 5.0;
  const auto efit = fitting::fit_exponential(kers, proj, 0.0, 0.35, options);
  const auto profile = fitting::extract_alpha_beta(kers, proj, efit);
  const double center = fitting::bump_center(profile);

  // expected counts-per-bin amplitude of the exponential component
  double mass = 0.0;
  {
    const int n = 4801;
    for (int j = 0; j < n; ++j) {
      const double k = cfg.ker_min_ev +
                       (cfg.ker_max_ev - cfg.ker_min_ev) * j / double(n - 1);
      const double u = (k - cfg.bs_center_ev) / cfg.bs_sigma_ev;
      const double rho = cfg.gs_amplitude * std::exp(-cfg.gs_decay_per_ev * k) +
                         cfg.bs_amplitude * std::exp(-0.5 * u * u);
      mass += rho * (cfg.ker_max_ev - cfg.ker_min_ev) / (n - 1);
    }
  }
  const double expected_amp =
      selected * binning.ker_width * cfg.gs_amplitude / mass;

  const double amp_err = std::fabs(efit.amplitude - expected_amp) / expected_amp;
  const double rate_err = std::fabs(efit.rate - cfg.gs_decay_per_ev) / cfg.gs_decay_per_ev;
  const double center_err = std::fabs(center - cfg.bs_center_ev);
  const double elapsed = seconds_since(t0);
  res.pass = amp_err < 0.05 && rate_err < 0.05 && center_err < 0.05;
  res.detail = fmt("amplitude err %.2f%%, rate err %.2f%% (<5%%); bump center "
                   "%.3f eV (target %.2f +- 0.05); %.2f s",
                   100.0 * amp_err, 100.0 * rate_err, center, cfg.bs_center_ev,
                   elapsed);
  return res;
}

CriterionResult criterion_chirp_recovery(const config::RunConfig& base) {
  CriterionResult res{7, "XUV chirp recovery and band alignment", false, ""};
  const auto t0 = Clock::now();

  config::RunConfig cfg = base;
  cfg.events_total = 1000000;
  cfg.delay_count = 32;
  cfg.delay_step_fs = 0.0;
  cfg.smear_electron_au = 0.0;
  cfg.smear_ion_au = 0.0;
  // staircase attochirp: dphi_{q,q-2} grows by 0.4 rad per band
  // orders 15 17 19 21 23 25 -> dphi(19)=0, dphi(21)=0.4, dphi(23)=0.8
  cfg.xuv_phases = {0.0, 0.0, 0.0, 0.4, 1.2, 2.4};

  const auto physics = model::build_physics(cfg);
  const auto sim = model::build_sim_config(cfg, physics);
  const auto file = eventgen::run_simulation(sim);

  // sideband phases from the even-band yields
  std::vector<fitting::SidebandScan> sidebands;
  for (int q : cfg.even_bands) {
    analysis::BandSelection band{BandParity::Even, q,
                                 analysis::band_center_ev(BandParity::Even, q,
                                                          cfg.hbar_omega_ev,
                                                          cfg.dissociation_limit_ev),
                                 cfg.band_half_width_ev};
    fitting::SidebandScan scan;
    scan.q = q;
    scan.yield_vs_delay =
        analysis::band_yield_vs_delay(file.events, file.delays_fs, band);
    sidebands.push_back(std::move(scan));
  }
  const auto chirp = fitting::sideband_chirp(sidebands, cfg.omega_rad_fs());

  double max_step_err = 0.0;
  const auto declared = cfg.declared_chirp();
  const double dphi0 = declared.at(cfg.even_bands.front()).dphi;
  for (int q : cfg.even_bands) {
    const double truth = declared.at(q).dphi - dphi0;  // relative staircase
    max_step_err = std::max(max_step_err,
                            std::fabs(wrap_pi(chirp.at(q).dphi - truth)));
  }

  // alignment restores the pooled odd-band oscillation amplitude
  const auto binning = cfg.binning();
  analysis::DelayScanOptions aligned, unaligned;
  aligned.chirp = chirp;
  aligned.min_counts_per_point = 5;
  unaligned.min_counts_per_point = 5;
  const auto bands = cfg.band_selections();
  const auto scan_aligned = analysis::delay_scan(file.events, file.delays_fs, bands,
                                                 cfg.omega_rad_fs(), binning, aligned);
  const auto scan_plain = analysis::delay_scan(file.events, file.delays_fs, bands,
                                               cfg.omega_rad_fs(), binning, unaligned);

  const int row = static_cast<int>((0.6 - binning.ker_min) / binning.ker_width);
  double single_amp = 0.0;
  for (const auto& band : scan_plain.bands)
    if (band.band.parity == BandParity::Odd && band.band.q == 19 &&
        band.fit_valid[row])
      single_amp = band.fits[row].amplitude;
  const double combined_amp = scan_aligned.combined_odd_valid[row]
                                  ? scan_aligned.combined_odd[row].amplitude
                                  : 0.0;
  const double plain_amp = scan_plain.combined_odd_valid[row]
                               ? scan_plain.combined_odd[row].amplitude
                               : 0.0;

  const double elapsed = seconds_since(t0);
  res.pass = max_step_err < 0.05 && single_amp > 0.0 &&
             combined_amp > 0.95 * single_amp;
  res.detail = fmt("chirp step err %.3f rad (<0.05); aligned/single amplitude "
                   "%.3f (>0.95), unaligned %.3f; %.2f s",
                   max_step_err, combined_amp / std::max(1e-12, single_amp),
                   plain_amp / std::max(1e-12, single_amp), elapsed);
  return res;
}

CriterionResult criterion_wkb_validity(const config::RunConfig& base) {
  CriterionResult res{8, "WKB phase validity", false, ""};
  const auto t0 = Clock::now();

  // linear potential against the closed form
  const int n = 1201;
  std::vector<double> rs(n), vs(n);
  for (int i = 0; i < n; ++i) {
    rs[i] = 12.0 * i / (n - 1);
    vs[i] = 10.0 - rs[i];
  }
  const potentials::PotentialCurve linear(rs, vs,
                                          potentials::CurveLabel::GroundSigmaG);
  wkb::WkbPath path{&linear, 6.0, 0.0, 10.0};
  const auto phase = wkb::wkb_phase(path, 1e-9);
  const double scale =
      std::sqrt(2.0 * constants::kReducedMassH2p / constants::kHartreeEv);
  const double closed_form = (2.0 / 3.0) * scale * std::pow(10.0 - 4.0, 1.5);
  const double lin_err = std::fabs(phase.phase - closed_form) / closed_form;

  // cutoff stability of delta_theta on the physical curves
  config::RunConfig cfg = base;
  const auto physics = model::build_physics(cfg);
  wkb::WkbPath gs{&physics.vg, 0.6 + cfg.dissociation_limit_ev, physics.vg.r_min(),
                  40.0};
  wkb::WkbPath bs{&physics.dressed.lower,
                  0.6 + cfg.dissociation_limit_ev - cfg.hbar_omega_ev,
                  physics.dressed.lower.r_min(), 40.0};
  const double d40 = wkb::delta_theta_at_cutoff(gs, bs, 40.0, 1e-7);
  const double d80 = wkb::delta_theta_at_cutoff(gs, bs, 80.0, 1e-7);
  const double cutoff_drift = std::fabs(d80 - d40);

  const double rf = physics.dressed.crossing_radius_rf;
  const double elapsed = seconds_since(t0);
  res.pass = lin_err < 1e-6 && cutoff_drift < 1e-3 && std::fabs(rf - 5.0) < 0.5;
  res.detail = fmt("linear-potential err %.2g (<1e-6); |dTheta(80)-dTheta(40)| "
                   "= %.2g rad (<1e-3); R_f = %.3f a.u. (5 +- 0.5); %.2f s",
                   lin_err, cutoff_drift, rf, elapsed);
  return res;
}

CriterionResult criterion_equivalence(const config::RunConfig&) {
  CriterionResult res{9, "closed form vs assembled state", false, ""};
  const auto t0 = Clock::now();

  rng::Philox rng(9001, 0);
  const auto spectrum_phases = [&]() {
    std::vector<pathways::Harmonic> hs;
    for (int q = 15; q <= 25; q += 2)
      hs.push_back({q, 1.0, 2.0 * constants::kPi * (rng.uniform() - 0.5)});
    return pathways::XuvSpectrum(hs);
  };

  double worst = 0.0;
  int checked = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    PathwaySpec spec;
    spec.parity = rng.uniform() < 0.5 ? BandParity::Odd : BandParity::Even;
    spec.q = 17 + 2 * static_cast<int>(rng.uniform() * 4.0);
    spec.hbar_omega_ev = 1.2;
    spec.xuv = spectrum_phases();
    spec.theta_gs = 2.0 * constants::kPi * rng.uniform();
    spec.theta_bs = 2.0 * constants::kPi * rng.uniform();
    const auto amp = [&](void) -> pathways::PathAmplitude {
      return {2.0 * rng.uniform(), static_cast<int>(rng.uniform() * 4.0)};
    };
    spec.g1 = amp();
    spec.g2 = amp();
    spec.b1 = amp();
    spec.b2 = amp();
    const double period = constants::kPi / spec.omega_rad_fs();
    const double tau = 4.0 * period * (rng.uniform() - 0.5);

    const auto state = pathways::assemble(spec, tau);
    if (std::norm(state.c_gs) + std::norm(state.c_bs) < 1e-12) continue;
    const double a_state = pathways::asymmetry_of_state(state);
    const double a_closed = pathways::asymmetry(spec, tau);
    worst = std::max(worst,
                     std::fabs(a_state - a_closed) / (1.0 + std::fabs(a_state)));
    ++checked;
  }
  const double elapsed = seconds_since(t0);
  res.pass = checked > 9900 && worst < 1e-12;
  res.detail = fmt("%d specs, worst |closed - state| = %.2g (<1e-12); %.2f s",
                   checked, worst, elapsed);
  return res;
}

CriterionResult criterion_determinism(const config::RunConfig& base) {
  CriterionResult res{10, "bit-exact determinism", false, ""};
  const auto t0 = Clock::now();

  config::RunConfig cfg = base;
  cfg.events_total = 100000;
  cfg.delay_count = 16;

  const auto physics = model::build_physics(cfg);
  const auto sim = model::build_sim_config(cfg, physics);
  const auto bytes1 = eventgen::serialize_events(eventgen::run_simulation(sim));
  const auto bytes2 = eventgen::serialize_events(eventgen::run_simulation(sim));
  const auto bytes_serial =
      eventgen::serialize_events(eventgen::run_simulation_serial(sim));

  const bool rerun_identical = bytes1 == bytes2;
  const bool serial_identical = bytes1 == bytes_serial;
  const double elapsed = seconds_since(t0);
  res.pass = rerun_identical && serial_identical;
  res.detail = fmt("rerun identical: %s; parallel == serial reference: %s "
                   "(%zu bytes); %.2f s",
                   rerun_identical ? "yes" : "no", serial_identical ? "yes" : "no",
                   bytes1.size(), elapsed);
  return res;
}

}  // namespace

std::vector<CriterionResult> run_all(const config::RunConfig& base) {
  std::vector<CriterionResult> results;
  results.push_back(criterion_oscillation_period(base));
  results.push_back(criterion_parity_phase(base));
  results.push_back(criterion_limiting_cases(base));
  results.push_back(criterion_closed_loop(base));
  results.push_back(criterion_null_test(base));
  results.push_back(criterion_alpha_beta(base));
  results.push_back(criterion_chirp_recovery(base));
  results.push_back(criterion_wkb_validity(base));
  results.push_back(criterion_equivalence(base));
  results.push_back(criterion_determinism(base));
  return results;
}

}  // namespace atl::acceptance
