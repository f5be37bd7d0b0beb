#include "atl/eventgen.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numeric>

#include "atl/constants.hpp"
#include "atl/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace atl::eventgen {

namespace {

using constants::kHartreeEv;
using constants::kHydrogenMass;
using constants::kProtonMass;

double lerp_on_grid(const std::vector<double>& xs, const std::vector<double>& ys,
                    double x) {
  if (x <= xs.front()) return ys.front();
  if (x >= xs.back()) return ys.back();
  const auto it = std::upper_bound(xs.begin(), xs.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - xs.begin()) - 1;
  const double t = (x - xs[i]) / (xs[i + 1] - xs[i]);
  return ys[i] + t * (ys[i + 1] - ys[i]);
}

void validate_config(const SimConfig& config) {
  if (config.events_total == 0) throw Error("events_total must be positive");
  if (config.delays_fs.empty()) throw Error("delay grid is empty");
  if (config.bands.empty()) throw Error("no bands configured");
  if (config.smear_electron_au < 0.0 || config.smear_ion_au < 0.0)
    throw Error("smear sigma must be non-negative");
  for (const auto& band : config.bands) {
    const std::size_t n = band.ker_grid.size();
    if (n < 2 || band.alpha_sq.size() != n || band.beta_sq.size() != n ||
        band.delta_theta.size() != n)
      throw Error("band model grids are inconsistent");
  }
}

// cumulative envelope mass per grid interval (trapezoid)
std::vector<double> envelope_cdf(const BandModel& band) {
  const std::size_t n = band.ker_grid.size();
  std::vector<double> cdf(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double rho0 = band.alpha_sq[i] + band.beta_sq[i];
    const double rho1 = band.alpha_sq[i + 1] + band.beta_sq[i + 1];
    cdf[i + 1] = cdf[i] + 0.5 * (rho0 + rho1) * (band.ker_grid[i + 1] - band.ker_grid[i]);
  }
  if (!(cdf.back() > 0.0)) throw Error("band envelope has zero mass");
  for (auto& c : cdf) c /= cdf.back();
  return cdf;
}

double draw_ker(const BandModel& band, const std::vector<double>& cdf,
                rng::Philox& rng) {
  const double u = rng.uniform();
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  std::size_t i = it == cdf.begin() ? 0 : static_cast<std::size_t>(it - cdf.begin()) - 1;
  i = std::min(i, cdf.size() - 2);
  const double span = cdf[i + 1] - cdf[i];
  const double t = span > 0.0 ? (u - cdf[i]) / span : 0.5;
  return band.ker_grid[i] + t * (band.ker_grid[i + 1] - band.ker_grid[i]);
}

DissociationEvent sample_event_with_cdf(const SimConfig& config,
                                        const BandModel& band,
                                        const std::vector<double>& cdf,
                                        std::uint32_t delay_index,
                                        rng::Philox& rng);

struct Cell {
  std::uint32_t delay_index;
  std::uint32_t band_index;
  std::uint64_t count = 0;
  std::uint64_t offset = 0;
};

std::uint64_t cell_stream(const Cell& cell) {
  return (static_cast<std::uint64_t>(cell.delay_index) << 20) | cell.band_index;
}

// events per (delay, band) cell proportional to the KER-integrated
// dissociation probability, rounded by largest remainder
std::vector<Cell> apportion(const SimConfig& config) {
  std::vector<Cell> cells;
  std::vector<double> weights;
  double total = 0.0;
  for (std::uint32_t i = 0; i < config.delays_fs.size(); ++i) {
    for (std::uint32_t b = 0; b < config.bands.size(); ++b) {
      const auto& band = config.bands[b];
      double w = 0.0;
      for (std::size_t k = 0; k + 1 < band.ker_grid.size(); ++k) {
        const double h = band.ker_grid[k + 1] - band.ker_grid[k];
        const auto p = [&](std::size_t j) {
          return pathways::dissociation_probability(
              band_spec_at(config, band, band.ker_grid[j]), config.delays_fs[i]);
        };
        w += 0.5 * (p(k) + p(k + 1)) * h;
      }
      cells.push_back({i, b, 0, 0});
      weights.push_back(w);
      total += w;
    }
  }
  if (!(total > 0.0)) throw Error("total dissociation probability is zero");

  std::vector<double> fractions(cells.size());
  std::uint64_t assigned = 0;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const double ideal = config.events_total * weights[c] / total;
    cells[c].count = static_cast<std::uint64_t>(ideal);
    fractions[c] = ideal - static_cast<double>(cells[c].count);
    assigned += cells[c].count;
  }
  std::vector<std::size_t> order(cells.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return fractions[a] > fractions[b];
  });
  for (std::size_t j = 0; assigned < config.events_total; ++j, ++assigned)
    ++cells[order[j % order.size()]].count;

  std::uint64_t offset = 0;
  for (auto& cell : cells) {
    cell.offset = offset;
    offset += cell.count;
  }
  return cells;
}

EventFile generate(const SimConfig& config, bool parallel) {
  validate_config(config);
  const std::vector<Cell> cells = apportion(config);

  std::vector<std::vector<double>> cdfs;
  cdfs.reserve(config.bands.size());
  for (const auto& band : config.bands) cdfs.push_back(envelope_cdf(band));

  EventFile file;
  file.config_hash = config.config_hash;
  file.rng_seed = config.rng_seed;
  file.delays_fs = config.delays_fs;
  file.events.resize(config.events_total);

  const auto fill_cell = [&](const Cell& cell) {
    rng::Philox rng(config.rng_seed, cell_stream(cell));
    const auto& band = config.bands[cell.band_index];
    for (std::uint64_t k = 0; k < cell.count; ++k)
      file.events[cell.offset + k] =
          sample_event_with_cdf(config, band, cdfs[cell.band_index],
                                cell.delay_index, rng);
  };

  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(cells.size()); ++c)
      fill_cell(cells[static_cast<std::size_t>(c)]);
  } else {
    for (const auto& cell : cells) fill_cell(cell);
  }
  return file;
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}
void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}
void put_f64(std::vector<std::uint8_t>& out, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, 8);
  put_u64(out, bits);
}

class ByteReader {
 public:
  explicit ByteReader(const std::vector<std::uint8_t>& bytes) : bytes_(bytes) {}
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(bytes_[pos_++]) << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(bytes_[pos_++]) << (8 * i);
    return v;
  }
  double f64() {
    const std::uint64_t bits = u64();
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
  }
  std::size_t remaining() const { return bytes_.size() - pos_; }

 private:
  void need(std::size_t n) const {
    if (pos_ + n > bytes_.size()) throw DataError("event file truncated");
  }
  const std::vector<std::uint8_t>& bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

pathways::PathwaySpec band_spec_at(const SimConfig& config, const BandModel& band,
                                   double ker_ev) {
  const double alpha =
      std::sqrt(std::max(0.0, lerp_on_grid(band.ker_grid, band.alpha_sq, ker_ev)));
  const double beta =
      std::sqrt(std::max(0.0, lerp_on_grid(band.ker_grid, band.beta_sq, ker_ev)));

  pathways::PathwaySpec spec;
  spec.parity = band.parity;
  spec.q = band.q;
  spec.ker_ev = ker_ev;
  spec.hbar_omega_ev = config.hbar_omega_ev;
  spec.xuv = config.xuv;
  // only the phase difference enters any observable
  spec.theta_gs = lerp_on_grid(band.ker_grid, band.delta_theta, ker_ev);
  spec.theta_bs = 0.0;
  if (band.parity == pathways::BandParity::Odd) {
    spec.g1 = {alpha, band.l_gs};
    spec.b1 = {0.5 * beta, band.l_bs};  // b1 = b2 split of the doubled path
    spec.b2 = {0.5 * beta, band.l_bs};
    spec.g2 = {0.0, band.l_gs};
  } else {
    spec.g1 = {0.5 * alpha, band.l_gs};
    spec.g2 = {0.5 * alpha, band.l_gs};
    spec.b1 = {beta, band.l_bs};
    spec.b2 = {0.0, band.l_bs};
  }
  return spec;
}

DissociationEvent make_event(double ker_ev, double e_e_ev, double asym,
                             std::uint32_t delay_index, double smear_electron_au,
                             double smear_ion_au, rng::Philox& rng) {
  // isotropic molecular axis
  const double cos_ax = 2.0 * rng.uniform() - 1.0;
  const double phi_ax = 2.0 * constants::kPi * rng.uniform();
  const double sin_ax = std::sqrt(std::max(0.0, 1.0 - cos_ax * cos_ax));
  const Vec3 axis{sin_ax * std::cos(phi_ax), sin_ax * std::sin(phi_ax), cos_ax};

  // orthonormal frame around the axis
  const Vec3 ref = std::fabs(axis[2]) < 0.9 ? Vec3{0.0, 0.0, 1.0} : Vec3{1.0, 0.0, 0.0};
  Vec3 u1{ref[1] * axis[2] - ref[2] * axis[1], ref[2] * axis[0] - ref[0] * axis[2],
          ref[0] * axis[1] - ref[1] * axis[0]};
  const double n1 = std::sqrt(u1[0] * u1[0] + u1[1] * u1[1] + u1[2] * u1[2]);
  for (auto& c : u1) c /= n1;
  const Vec3 u2{axis[1] * u1[2] - axis[2] * u1[1], axis[2] * u1[0] - axis[0] * u1[2],
                axis[0] * u1[1] - axis[1] * u1[0]};

  // hemisphere sign with probability (1 +- A)/2, |cos| uniform inside it
  const double sign = rng.uniform() < 0.5 * (1.0 + asym) ? 1.0 : -1.0;
  const double cos_e = sign * rng.uniform();
  const double sin_e = std::sqrt(std::max(0.0, 1.0 - cos_e * cos_e));
  const double psi = 2.0 * constants::kPi * rng.uniform();

  const double p_e_mag = std::sqrt(2.0 * e_e_ev / kHartreeEv);
  Vec3 p_e;
  for (int i = 0; i < 3; ++i)
    p_e[i] = p_e_mag * (sin_e * (std::cos(psi) * u1[i] + std::sin(psi) * u2[i]) +
                        cos_e * axis[i]);

  // Nuclear momentum k along the axis; each nucleus carries half the electron
  // recoil, and k closes the energy balance
  //   |k n - p_e/2|^2 / 2m_p + |k n + p_e/2|^2 / 2m_H = KER
  // exactly, so the unsmeared reconstruction returns the drawn KER.
  const double ker_ha = ker_ev / kHartreeEv;
  const double pe_dot_axis = p_e[0] * axis[0] + p_e[1] * axis[1] + p_e[2] * axis[2];
  const double pe2 = p_e_mag * p_e_mag;
  const double c1 = 0.5 / kProtonMass + 0.5 / kHydrogenMass;
  const double bq = pe_dot_axis * (0.5 / kHydrogenMass - 0.5 / kProtonMass);
  const double cq = 0.25 * pe2 * c1 - ker_ha;
  const double disc = bq * bq - 4.0 * c1 * cq;
  const double k = disc > 0.0 ? std::max(0.0, (-bq + std::sqrt(disc)) / (2.0 * c1))
                              : 0.0;

  DissociationEvent ev;
  ev.delay_index = delay_index;
  for (int i = 0; i < 3; ++i) ev.p_proton[i] = k * axis[i] - 0.5 * p_e[i];
  ev.p_electron = p_e;

  ev.p_electron = detector_smear(ev.p_electron, config.smear_electron_au, rng);
  ev.p_proton = detector_smear(ev.p_proton, config.smear_ion_au, rng);
  return ev;
}

DissociationEvent sample_event_with_cdf(const SimConfig& config,
                                        const BandModel& band,
                                        const std::vector<double>& cdf,
                                        std::uint32_t delay_index,
                                        rng::Philox& rng) {
  const double ker = draw_ker(band, cdf, rng);
  return sample_event_impl(config, band, ker, delay_index, rng);
}

}  // namespace

DissociationEvent sample_event(const SimConfig& config, const BandModel& band,
                               std::uint32_t delay_index, rng::Philox& rng) {
  return sample_event_with_cdf(config, band, envelope_cdf(band), delay_index, rng);
}

EventFile run_simulation(const SimConfig& config) { return generate(config, true); }

EventFile run_simulation_serial(const SimConfig& config) {
  return generate(config, false);
}

Vec3 detector_smear(const Vec3& p, double sigma_au, rng::Philox& rng) {
  Vec3 out;
  for (int i = 0; i < 3; ++i) out[i] = p[i] + sigma_au * rng.normal();
  return out;
}

std::vector<std::uint8_t> serialize_events(const EventFile& file) {
  std::vector<std::uint8_t> out;
  out.reserve(40 + 8 * file.delays_fs.size() + 56 * file.events.size());
  out.push_back('A');
  out.push_back('T');
  out.push_back('L');
  out.push_back('1');
  put_u32(out, 1);  // format version
  put_u64(out, file.config_hash);
  put_u64(out, file.rng_seed);
  put_u64(out, file.events.size());
  put_u32(out, static_cast<std::uint32_t>(file.delays_fs.size()));
  put_u32(out, 0);
  for (double d : file.delays_fs) put_f64(out, d);
  for (const auto& ev : file.events) {
    put_u32(out, ev.delay_index);
    put_u32(out, 0);
    for (double v : ev.p_electron) put_f64(out, v);
    for (double v : ev.p_proton) put_f64(out, v);
  }
  return out;
}

EventFile deserialize_events(const std::vector<std::uint8_t>& bytes) {
  ByteReader in(bytes);
  if (bytes.size() < 40 || bytes[0] != 'A' || bytes[1] != 'T' || bytes[2] != 'L' ||
      bytes[3] != '1')
    throw DataError("bad event file magic");
  in.u32();  // magic, already checked
  const std::uint32_t version = in.u32();
  if (version != 1) throw DataError("unsupported event file version");

  EventFile file;
  file.config_hash = in.u64();
  file.rng_seed = in.u64();
  const std::uint64_t count = in.u64();
  const std::uint32_t n_delays = in.u32();
  in.u32();  // reserved
  file.delays_fs.resize(n_delays);
  for (auto& d : file.delays_fs) d = in.f64();

  if (in.remaining() != count * 56) throw DataError("event file size mismatch");
  file.events.resize(count);
  for (auto& ev : file.events) {
    ev.delay_index = in.u32();
    in.u32();
    for (auto& v : ev.p_electron) v = in.f64();
    for (auto& v : ev.p_proton) v = in.f64();
    if (ev.delay_index >= n_delays) throw DataError("event delay index out of range");
  }
  return file;
}

void write_events(const EventFile& file, const std::string& path) {
  const auto bytes = serialize_events(file);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open for writing: " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw DataError("write failed: " + path);
}

EventFile read_events(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open event file: " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return deserialize_events(bytes);
}

void write_events_csv(const EventFile& file, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot open for writing: " + path);
  char buf[256];
  std::snprintf(buf, sizeof(buf), "# config_hash=%016llx seed=%llu\n",
                static_cast<unsigned long long>(file.config_hash),
                static_cast<unsigned long long>(file.rng_seed));
  out << "# coincidence events, momenta in a.u.\n" << buf
      << "delay_index,tau_fs,pex,pey,pez,pix,piy,piz\n";
  for (const auto& ev : file.events) {
    std::snprintf(buf, sizeof(buf),
                  "%u,%.6f,%.12g,%.12g,%.12g,%.12g,%.12g,%.12g\n", ev.delay_index,
                  file.delays_fs.at(ev.delay_index), ev.p_electron[0],
                  ev.p_electron[1], ev.p_electron[2], ev.p_proton[0],
                  ev.p_proton[1], ev.p_proton[2]);
    out << buf;
  }
  if (!out) throw DataError("write failed: " + path);
}

}  // namespace atl::eventgen
