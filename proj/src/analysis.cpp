#include "atl/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "atl/constants.hpp"
#include "atl/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace atl::analysis {

namespace {

using constants::kHartreeEv;
using constants::kHydrogenMass;
using constants::kProtonMass;

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double norm2(const Vec3& a) { return dot(a, a); }

void asym_from_counts(std::uint64_t same, std::uint64_t opp, double& a,
                      double& sigma) {
  const std::uint64_t n = same + opp;
  if (n == 0) {
    a = kNan;
    sigma = kNan;
    return;
  }
  a = (static_cast<double>(same) - static_cast<double>(opp)) / static_cast<double>(n);
  sigma = std::sqrt(std::max(0.0, (1.0 - a * a) / static_cast<double>(n)));
}

}  // namespace

int Binning::n_ker() const {
  return static_cast<int>(std::ceil((ker_max - ker_min) / ker_width - 1e-9));
}

int Binning::n_ee() const {
  return static_cast<int>(std::ceil((ee_max - ee_min) / ee_width - 1e-9));
}

std::uint64_t JointEnergySpectrum::total_in_range() const {
  std::uint64_t total = 0;
  for (auto c : counts_same) total += c;
  for (auto c : counts_opp) total += c;
  return total;
}

double band_center_ev(pathways::BandParity parity, int q, double hbar_omega_ev,
                      double dissociation_limit_ev) {
  const double n_photons =
      parity == pathways::BandParity::Odd ? q : q - 1;
  return n_photons * hbar_omega_ev - dissociation_limit_ev;
}

Vec3 reconstruct_molecular_frame(const DissociationEvent& ev) {
  return {ev.p_proton[0] + 0.5 * ev.p_electron[0],
          ev.p_proton[1] + 0.5 * ev.p_electron[1],
          ev.p_proton[2] + 0.5 * ev.p_electron[2]};
}

Vec3 reconstruct_neutral(const DissociationEvent& ev) {
  return {-(ev.p_proton[0] + ev.p_electron[0]),
          -(ev.p_proton[1] + ev.p_electron[1]),
          -(ev.p_proton[2] + ev.p_electron[2])};
}

std::pair<double, double> energies(const DissociationEvent& ev) {
  const Vec3 p_h = reconstruct_neutral(ev);
  const double e_proton = norm2(ev.p_proton) / (2.0 * kProtonMass) * kHartreeEv;
  const double e_neutral = norm2(p_h) / (2.0 * kHydrogenMass) * kHartreeEv;
  const double e_electron = 0.5 * norm2(ev.p_electron) * kHartreeEv;
  return {e_proton + e_neutral, e_electron};
}

bool same_hemisphere(const DissociationEvent& ev) {
  return dot(ev.p_electron, reconstruct_molecular_frame(ev)) >= 0.0;
}

namespace {

void fill_one(const DissociationEvent& ev, const Binning& b,
              std::vector<std::uint64_t>& same, std::vector<std::uint64_t>& opp,
              std::uint64_t& out_of_range) {
  const auto [ker, ee] = energies(ev);
  if (ker < b.ker_min || ker >= b.ker_max || ee < b.ee_min || ee >= b.ee_max) {
    ++out_of_range;
    return;
  }
  const int ik = static_cast<int>((ker - b.ker_min) / b.ker_width);
  const int ie = static_cast<int>((ee - b.ee_min) / b.ee_width);
  const std::size_t idx = static_cast<std::size_t>(ik) * b.n_ee() + ie;
  if (same_hemisphere(ev)) {
    ++same[idx];
  } else {
    ++opp[idx];
  }
}

}  // namespace

JointEnergySpectrum fill_jes_serial(const std::vector<DissociationEvent>& events,
                                    const Binning& binning) {
  JointEnergySpectrum jes;
  jes.binning = binning;
  const std::size_t cells =
      static_cast<std::size_t>(binning.n_ker()) * binning.n_ee();
  jes.counts_same.assign(cells, 0);
  jes.counts_opp.assign(cells, 0);
  for (const auto& ev : events)
    fill_one(ev, binning, jes.counts_same, jes.counts_opp, jes.out_of_range);
  return jes;
}

JointEnergySpectrum fill_jes(const std::vector<DissociationEvent>& events,
                             const Binning& binning) {
#ifndef _OPENMP
  return fill_jes_serial(events, binning);
#else
  JointEnergySpectrum jes;
  jes.binning = binning;
  const std::size_t cells =
      static_cast<std::size_t>(binning.n_ker()) * binning.n_ee();
  jes.counts_same.assign(cells, 0);
  jes.counts_opp.assign(cells, 0);

  // per-thread shards merged associatively; counts are order-independent
#pragma omp parallel
  {
    std::vector<std::uint64_t> same(cells, 0), opp(cells, 0);
    std::uint64_t oor = 0;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(events.size()); ++i)
      fill_one(events[static_cast<std::size_t>(i)], binning, same, opp, oor);
#pragma omp critical
    {
      for (std::size_t c = 0; c < cells; ++c) {
        jes.counts_same[c] += same[c];
        jes.counts_opp[c] += opp[c];
      }
      jes.out_of_range += oor;
    }
  }
  return jes;
#endif
}

AsymmetryMap asymmetry_map(const JointEnergySpectrum& jes) {
  AsymmetryMap map;
  map.binning = jes.binning;
  map.a.resize(jes.counts_same.size());
  map.sigma_a.resize(jes.counts_same.size());
  for (std::size_t i = 0; i < jes.counts_same.size(); ++i)
    asym_from_counts(jes.counts_same[i], jes.counts_opp[i], map.a[i],
                     map.sigma_a[i]);
  return map;
}

std::vector<DissociationEvent> select_band(
    const std::vector<DissociationEvent>& events, const BandSelection& band) {
  std::vector<DissociationEvent> out;
  for (const auto& ev : events) {
    const auto [ker, ee] = energies(ev);
    if (std::fabs(ker + ee - band.total_energy_center_ev) <= band.half_width_ev)
      out.push_back(ev);
  }
  return out;
}

KerProjection ker_projection(const std::vector<DissociationEvent>& events,
                             const BandSelection& band, const Binning& binning) {
  KerProjection proj;
  const int nk = binning.n_ker();
  proj.ker_centers.resize(nk);
  for (int i = 0; i < nk; ++i) proj.ker_centers[i] = binning.ker_center(i);
  proj.counts.assign(nk, 0.0);
  proj.same.assign(nk, 0);
  proj.opp.assign(nk, 0);

  for (const auto& ev : events) {
    const auto [ker, ee] = energies(ev);
    if (std::fabs(ker + ee - band.total_energy_center_ev) > band.half_width_ev)
      continue;
    if (ker < binning.ker_min || ker >= binning.ker_max) continue;
    const int ik = static_cast<int>((ker - binning.ker_min) / binning.ker_width);
    proj.counts[ik] += 1.0;
    if (same_hemisphere(ev)) {
      ++proj.same[ik];
    } else {
      ++proj.opp[ik];
    }
  }
  return proj;
}

namespace {

std::vector<fitting::WeightedSample> pooled_samples(
    const std::vector<const BandDelayScan*>& scans,
    const std::vector<double>& delays_fs, int ik, double omega_rad_fs,
    const fitting::ChirpTable& chirp, int min_counts) {
  std::vector<fitting::WeightedSample> samples;
  for (const auto* scan : scans) {
    double shift = 0.0;
    const auto it = chirp.find(scan->band.q);
    if (it != chirp.end()) shift = it->second.dphi / (2.0 * omega_rad_fs);
    for (std::size_t t = 0; t < delays_fs.size(); ++t) {
      const std::size_t idx = static_cast<std::size_t>(ik) * delays_fs.size() + t;
      const std::uint64_t n = scan->same[idx] + scan->opp[idx];
      if (n < static_cast<std::uint64_t>(min_counts)) continue;
      samples.push_back({delays_fs[t] - shift, scan->a[idx],
                         std::max(scan->sigma[idx], 1e-12)});
    }
  }
  return samples;
}

}  // namespace

DelayScanResult delay_scan(const std::vector<DissociationEvent>& events,
                           const std::vector<double>& delays_fs,
                           const std::vector<BandSelection>& bands,
                           double omega_rad_fs, const Binning& binning,
                           const DelayScanOptions& options) {
  if (delays_fs.size() < 8)
    throw InsufficientDelaysError("delay_scan: need at least 8 delay points");
  const auto [lo, hi] = std::minmax_element(delays_fs.begin(), delays_fs.end());
  const double period = constants::kPi / omega_rad_fs;
  if (*hi - *lo < 0.95 * period)
    throw InsufficientDelaysError("delay_scan: delays span less than one period");

  DelayScanResult result;
  const int nk = binning.n_ker();
  const std::size_t nt = delays_fs.size();
  result.ker_centers.resize(nk);
  for (int i = 0; i < nk; ++i) result.ker_centers[i] = binning.ker_center(i);

  for (const auto& band : bands) {
    BandDelayScan scan;
    scan.band = band;
    scan.ker_centers = result.ker_centers;
    scan.delays_fs = delays_fs;
    scan.same.assign(nk * nt, 0);
    scan.opp.assign(nk * nt, 0);

    for (const auto& ev : events) {
      const auto [ker, ee] = energies(ev);
      if (std::fabs(ker + ee - band.total_energy_center_ev) > band.half_width_ev)
        continue;
      if (ker < binning.ker_min || ker >= binning.ker_max) continue;
      if (ev.delay_index >= nt) continue;
      const int ik = static_cast<int>((ker - binning.ker_min) / binning.ker_width);
      const std::size_t idx = static_cast<std::size_t>(ik) * nt + ev.delay_index;
      if (same_hemisphere(ev)) {
        ++scan.same[idx];
      } else {
        ++scan.opp[idx];
      }
    }

    scan.a.resize(nk * nt);
    scan.sigma.resize(nk * nt);
    for (std::size_t i = 0; i < scan.a.size(); ++i)
      asym_from_counts(scan.same[i], scan.opp[i], scan.a[i], scan.sigma[i]);

    if (options.subtract_time_average) {
      for (int ik = 0; ik < nk; ++ik) {
        double sum = 0.0;
        int n = 0;
        for (std::size_t t = 0; t < nt; ++t) {
          const double v = scan.a[static_cast<std::size_t>(ik) * nt + t];
          if (!std::isnan(v)) {
            sum += v;
            ++n;
          }
        }
        if (n == 0) continue;
        const double mean = sum / n;
        for (std::size_t t = 0; t < nt; ++t) {
          double& v = scan.a[static_cast<std::size_t>(ik) * nt + t];
          if (!std::isnan(v)) v -= mean;
        }
      }
    }

    scan.fits.resize(nk);
    scan.fit_valid.assign(nk, 0);
    for (int ik = 0; ik < nk; ++ik) {
      std::vector<fitting::WeightedSample> samples;
      for (std::size_t t = 0; t < nt; ++t) {
        const std::size_t idx = static_cast<std::size_t>(ik) * nt + t;
        const std::uint64_t n = scan.same[idx] + scan.opp[idx];
        if (n < static_cast<std::uint64_t>(options.min_counts_per_point)) continue;
        samples.push_back({delays_fs[t], scan.a[idx], std::max(scan.sigma[idx], 1e-12)});
      }
      try {
        scan.fits[ik] = fitting::fit_cosine(samples, 2.0 * omega_rad_fs);
        scan.fit_valid[ik] = 1;
      } catch (const Error&) {
        scan.fit_valid[ik] = 0;
      }
    }
    result.bands.push_back(std::move(scan));
  }

  // pooled per-parity fits with chirp-aligned delay axes
  for (const auto parity : {pathways::BandParity::Odd, pathways::BandParity::Even}) {
    std::vector<const BandDelayScan*> scans;
    for (const auto& scan : result.bands)
      if (scan.band.parity == parity) scans.push_back(&scan);

    auto& fits = parity == pathways::BandParity::Odd ? result.combined_odd
                                                     : result.combined_even;
    auto& valid = parity == pathways::BandParity::Odd ? result.combined_odd_valid
                                                      : result.combined_even_valid;
    fits.resize(nk);
    valid.assign(nk, 0);
    if (scans.empty()) continue;
    for (int ik = 0; ik < nk; ++ik) {
      const auto samples = pooled_samples(scans, delays_fs, ik, omega_rad_fs,
                                          options.chirp, options.min_counts_per_point);
      try {
        fits[ik] = fitting::fit_cosine(samples, 2.0 * omega_rad_fs);
        valid[ik] = 1;
      } catch (const Error&) {
        valid[ik] = 0;
      }
    }
  }
  return result;
}

std::vector<fitting::WeightedSample> band_yield_vs_delay(
    const std::vector<DissociationEvent>& events,
    const std::vector<double>& delays_fs, const BandSelection& band) {
  std::vector<double> counts(delays_fs.size(), 0.0);
  for (const auto& ev : events) {
    const auto [ker, ee] = energies(ev);
    if (std::fabs(ker + ee - band.total_energy_center_ev) > band.half_width_ev)
      continue;
    if (ev.delay_index < delays_fs.size()) counts[ev.delay_index] += 1.0;
  }
  std::vector<fitting::WeightedSample> out(delays_fs.size());
  for (std::size_t t = 0; t < delays_fs.size(); ++t)
    out[t] = {delays_fs[t], counts[t], std::sqrt(std::max(1.0, counts[t]))};
  return out;
}

}  // namespace atl::analysis
