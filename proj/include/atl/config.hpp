#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "atl/analysis.hpp"

namespace atl::config {

// Full run configuration, parsed from a flat sectioned key = value file.
// Parsing is total: unknown sections or keys are errors with line diagnostics.
struct RunConfig {
  // [physics]
  double hbar_omega_ev = 1.2;
  double dissociation_limit_ev = 18.1;
  double ir_intensity_w_cm2 = 2e11;
  std::string curve_file_g;  // empty = embedded H2+ tables
  std::string curve_file_u;
  std::string coupling = "charge_resonance";  // or "none"
  double coupling_taper_start_mult = 2.0;
  double coupling_taper_width_mult = 0.5;

  // [xuv] spectral comb; orders odd, consecutive
  std::vector<int> xuv_orders = {15, 17, 19, 21, 23, 25};
  std::vector<double> xuv_magnitudes = {1, 1, 1, 1, 1, 1};
  std::vector<double> xuv_phases = {0, 0, 0, 0, 0, 0};

  // [envelopes] KER envelopes: |alpha|^2 = A exp(-a KER),
  // |beta|^2 = B exp(-(KER - c)^2 / 2 s^2)
  double gs_amplitude = 1.0;
  double gs_decay_per_ev = 4.0;
  double bs_amplitude = 0.05;
  double bs_center_ev = 0.6;
  double bs_sigma_ev = 0.15;

  // [bands] reference odd orders (upper harmonic for even bands)
  std::vector<int> odd_bands = {19, 21, 23};
  std::vector<int> even_bands = {19, 21, 23};
  // lowest parity-allowed partial waves per path class
  int l_gs_odd = 1, l_bs_odd = 0;
  int l_gs_even = 0, l_bs_even = 1;

  // [simulation]
  std::uint64_t events_total = 1000000;
  double delay_start_fs = 0.0;
  double delay_step_fs = 0.0;  // 0 = auto (two periods over delay_count)
  int delay_count = 32;
  std::uint64_t rng_seed = 12345;
  double smear_electron_au = 0.05;
  double smear_ion_au = 0.3;

  // [analysis]
  double ker_min_ev = 0.0, ker_max_ev = 1.2, ker_bin_ev = 0.05;
  double ee_min_ev = 0.0, ee_max_ev = 12.0, ee_bin_ev = 0.1;
  double band_half_width_ev = 0.35;
  int min_counts_per_point = 5;

  // [model]
  int wkb_ker_points = 49;
  double wkb_r_max_au = 40.0;
  double wkb_tol_rad = 1e-6;

  double omega_rad_fs() const;
  std::vector<double> delays() const;
  analysis::Binning binning() const;
  std::vector<analysis::BandSelection> band_selections() const;
  fitting::ChirpTable declared_chirp() const;  // from the xuv phases

  // normalized text form; equal configs hash equal
  std::string canonical_text() const;
  std::uint64_t hash() const;  // FNV-1a over canonical_text()

  void validate() const;  // ConfigError on inconsistent values
};

RunConfig default_config();
RunConfig parse_config(const std::string& text, const std::string& origin = "config");
RunConfig load_config(const std::string& path);

}  // namespace atl::config
