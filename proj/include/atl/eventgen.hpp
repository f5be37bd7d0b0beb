#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "atl/pathways.hpp"
#include "atl/rng.hpp"

namespace atl::eventgen {

using Vec3 = std::array<double, 3>;

// One coincidence record: electron and proton lab momenta (a.u.) at a delay.
struct DissociationEvent {
  std::uint32_t delay_index = 0;
  Vec3 p_electron{};
  Vec3 p_proton{};
};

// Per-band model inputs sampled on a fine KER grid.  alpha_sq is the
// ground-state-dissociation envelope |alpha|^2, beta_sq the bond-softening
// envelope |beta|^2, delta_theta the nuclear phase difference; all are
// interpolated linearly in KER.
struct BandModel {
  pathways::BandParity parity = pathways::BandParity::Odd;
  int q = 21;
  int l_gs = 1;  // partial wave of the gs-type paths
  int l_bs = 0;  // partial wave of the bs-type paths
  std::vector<double> ker_grid;
  std::vector<double> alpha_sq;
  std::vector<double> beta_sq;
  std::vector<double> delta_theta;
};

struct SimConfig {
  std::vector<BandModel> bands;
  pathways::XuvSpectrum xuv;
  double hbar_omega_ev = 1.2;
  double dissociation_limit_ev = 18.1;
  std::vector<double> delays_fs;
  std::uint64_t events_total = 0;
  double smear_electron_au = 0.0;  // Gaussian sigma per Cartesian component
  double smear_ion_au = 0.0;
  std::uint64_t rng_seed = 1;
  std::uint64_t config_hash = 0;  // provenance, echoed into the file header
};

struct EventFile {
  std::uint64_t config_hash = 0;
  std::uint64_t rng_seed = 0;
  std::vector<double> delays_fs;
  std::vector<DissociationEvent> events;
};

// PathwaySpec of one band at one KER (magnitudes from the envelopes, the
// usual b1 = b2 / g1 = g2 split for the doubled path).
pathways::PathwaySpec band_spec_at(const SimConfig& config, const BandModel& band,
                                   double ker_ev);

// One event: KER from the alpha^2+beta^2 envelope, isotropic molecular axis,
// hemisphere sign with probability (1 +- A)/2, electron recoil shared
// equally by the two nuclei, and a nuclear momentum that closes the energy
// balance exactly, so unsmeared events reconstruct to the drawn (KER, E_e).
DissociationEvent sample_event(const SimConfig& config, const BandModel& band,
                               std::uint32_t delay_index, rng::Philox& rng);

// Kinematics core behind sample_event, with (KER, E_e, A) given explicitly.
DissociationEvent make_event(double ker_ev, double e_e_ev, double asym,
                             std::uint32_t delay_index, double smear_electron_au,
                             double smear_ion_au, rng::Philox& rng);

// events_total events apportioned over (delay, band) cells proportional to
// the integrated dissociation probability; each cell owns a Philox stream, so
// the result is bit-identical for a given config regardless of thread count.
EventFile run_simulation(const SimConfig& config);
EventFile run_simulation_serial(const SimConfig& config);  // reference kernel

Vec3 detector_smear(const Vec3& p, double sigma_au, rng::Philox& rng);

// binary format: magic "ATL1", header, fixed 56-byte little-endian records
void write_events(const EventFile& file, const std::string& path);
EventFile read_events(const std::string& path);  // DataError on bad files
std::vector<std::uint8_t> serialize_events(const EventFile& file);
EventFile deserialize_events(const std::vector<std::uint8_t>& bytes);

// CSV mirror: one row per event, 8 columns
// (delay_index, tau_fs, electron xyz, proton xyz)
void write_events_csv(const EventFile& file, const std::string& path);

}  // namespace atl::eventgen
