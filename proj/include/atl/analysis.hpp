#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "atl/eventgen.hpp"
#include "atl/fitting.hpp"
#include "atl/pathways.hpp"

namespace atl::analysis {

using eventgen::DissociationEvent;
using eventgen::Vec3;

struct Binning {
  double ker_min = 0.0, ker_max = 1.2, ker_width = 0.05;
  double ee_min = 0.0, ee_max = 10.0, ee_width = 0.1;

  int n_ker() const;
  int n_ee() const;
  double ker_center(int i) const { return ker_min + (i + 0.5) * ker_width; }
  double ee_center(int i) const { return ee_min + (i + 0.5) * ee_width; }
};

// Hemisphere-resolved 2D histogram over (KER, E_e); "same" means electron and
// proton in the same hemisphere of the reconstructed molecular frame.
struct JointEnergySpectrum {
  Binning binning;
  std::vector<std::uint64_t> counts_same;  // [ik * n_ee + ie]
  std::vector<std::uint64_t> counts_opp;
  std::uint64_t out_of_range = 0;

  std::uint64_t total_in_range() const;
};

struct AsymmetryMap {
  Binning binning;
  std::vector<double> a;        // NaN where the bin is empty
  std::vector<double> sigma_a;  // sqrt((1 - A^2) / N)
};

struct BandSelection {
  pathways::BandParity parity = pathways::BandParity::Odd;
  int q = 21;
  double total_energy_center_ev = 0.0;  // KER + E_e on the diagonal
  double half_width_ev = 0.35;
};

// center of the diagonal band: q hw - I_d (odd), (q-1) hw - I_d (even)
double band_center_ev(pathways::BandParity parity, int q, double hbar_omega_ev,
                      double dissociation_limit_ev);

// molecular-frame proton momentum p_MF = p_LF(H+) + p_LF(e-)/2
Vec3 reconstruct_molecular_frame(const DissociationEvent& ev);

// undetected neutral from momentum conservation, p_H = -(p_H+ + p_e)
Vec3 reconstruct_neutral(const DissociationEvent& ev);

// (KER, E_e) in eV; the neutral is reconstructed, masses m_p and m_p + 1
std::pair<double, double> energies(const DissociationEvent& ev);

// electron-proton hemisphere label in the molecular frame (theta = 90 deg
// counts as same, for determinism)
bool same_hemisphere(const DissociationEvent& ev);

JointEnergySpectrum fill_jes(const std::vector<DissociationEvent>& events,
                             const Binning& binning);
// reference kernel; the parallel version shards per thread and merges
JointEnergySpectrum fill_jes_serial(const std::vector<DissociationEvent>& events,
                                    const Binning& binning);

AsymmetryMap asymmetry_map(const JointEnergySpectrum& jes);

// events with |KER + E_e - center| <= half_width
std::vector<DissociationEvent> select_band(
    const std::vector<DissociationEvent>& events, const BandSelection& band);

struct KerProjection {
  std::vector<double> ker_centers;
  std::vector<double> counts;         // same + opposite
  std::vector<std::uint64_t> same, opp;
};

KerProjection ker_projection(const std::vector<DissociationEvent>& events,
                             const BandSelection& band, const Binning& binning);

// Delay-resolved asymmetry of one band: per (KER bin, delay) hemisphere
// counts, A and sigma, and a fixed-frequency cosine fit per KER bin.
struct BandDelayScan {
  BandSelection band;
  std::vector<double> ker_centers;
  std::vector<double> delays_fs;
  std::vector<std::uint64_t> same, opp;  // [ik * n_delay + it]
  std::vector<double> a, sigma;          // NaN where empty
  std::vector<fitting::CosineFit> fits;  // per KER bin
  std::vector<std::uint8_t> fit_valid;
};

struct DelayScanResult {
  std::vector<BandDelayScan> bands;
  // per parity: pooled fit across same-parity bands after shifting each
  // band's delay axis by dphi_q,q-2 / (2 omega) from the chirp table
  std::vector<fitting::CosineFit> combined_odd, combined_even;  // per KER bin
  std::vector<std::uint8_t> combined_odd_valid, combined_even_valid;
  std::vector<double> ker_centers;
};

struct DelayScanOptions {
  fitting::ChirpTable chirp;       // empty table = no shifts
  bool subtract_time_average = false;
  int min_counts_per_point = 5;    // bins below this are left out of fits
};

// Requires >= 8 delays spanning at least one asymmetry period (pi/omega),
// otherwise InsufficientDelaysError.
DelayScanResult delay_scan(const std::vector<DissociationEvent>& events,
                           const std::vector<double>& delays_fs,
                           const std::vector<BandSelection>& bands,
                           double omega_rad_fs, const Binning& binning,
                           const DelayScanOptions& options = {});

// per-delay total yield of one band (sideband input for the chirp extraction)
std::vector<fitting::WeightedSample> band_yield_vs_delay(
    const std::vector<DissociationEvent>& events,
    const std::vector<double>& delays_fs, const BandSelection& band);

}  // namespace atl::analysis
