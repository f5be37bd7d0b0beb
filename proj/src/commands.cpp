#include "atl/commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "atl/acceptance.hpp"
#include "atl/analysis.hpp"
#include "atl/errors.hpp"
#include "atl/eventgen.hpp"
#include "atl/fitting.hpp"
#include "atl/model.hpp"
#include "atl/version.hpp"

namespace atl::commands {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string provenance_line(const config::RunConfig& cfg) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "# %s %s config_hash=%016llx seed=%llu\n",
                kToolName, kVersion,
                static_cast<unsigned long long>(cfg.hash()),
                static_cast<unsigned long long>(cfg.rng_seed));
  return buf;
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot open for writing: " + path.string());
  return out;
}

void write_model_map_csv(const config::RunConfig& cfg, const model::ModelMap& map,
                         const fs::path& path) {
  auto out = open_out(path);
  out << "# model asymmetry map A(KER, tau), dimensionless\n"
      << provenance_line(cfg) << "# parity="
      << (map.parity == pathways::BandParity::Odd ? "odd" : "even")
      << " q=" << map.q << "\n";
  out << "ker_ev";
  for (double t : map.delays_fs) out << ",tau_" << fmt(t);
  out << "\n";
  const std::size_t nt = map.delays_fs.size();
  for (std::size_t ik = 0; ik < map.ker_centers.size(); ++ik) {
    out << fmt(map.ker_centers[ik]);
    for (std::size_t t = 0; t < nt; ++t) out << ',' << fmt(map.a[ik * nt + t]);
    out << "\n";
  }
}

void write_mean_asym_csv(const config::RunConfig& cfg, const model::ModelMap& map,
                         const fs::path& path) {
  auto out = open_out(path);
  const auto mean = model::mean_asymmetry(map);
  out << "# time-averaged model asymmetry vs KER (eV)\n" << provenance_line(cfg);
  out << "ker_ev,mean_a\n";
  for (std::size_t ik = 0; ik < map.ker_centers.size(); ++ik)
    out << fmt(map.ker_centers[ik]) << ',' << fmt(mean[ik]) << "\n";
}

void write_plot_script(const fs::path& path) {
  auto out = open_out(path);
  out << R"py(#!/usr/bin/env python3
"""Plot the model maps and mean-asymmetry curves written by `atl model`."""
import csv
import sys

import matplotlib.pyplot as plt
import numpy as np


def read_map(path):
    with open(path) as f:
        rows = [r for r in csv.reader(f) if r and not r[0].startswith("#")]
    header, data = rows[0], np.array(rows[1:], dtype=float)
    taus = np.array([float(h.split("_", 1)[1]) for h in header[1:]])
    return data[:, 0], taus, data[:, 1:]


def main(outdir="."):
    fig, axes = plt.subplots(1, 2, figsize=(10, 4), sharey=True)
    for ax, parity in zip(axes, ("odd", "even")):
        ker, taus, a = read_map(f"{outdir}/model_{parity}_map.csv")
        im = ax.pcolormesh(taus, ker, a, cmap="RdBu_r", vmin=-1, vmax=1)
        ax.set_xlabel("delay (fs)")
        ax.set_title(f"{parity} bands")
    axes[0].set_ylabel("KER (eV)")
    fig.colorbar(im, ax=axes, label="A")
    fig.savefig(f"{outdir}/model_maps.png", dpi=150)
    print(f"wrote {outdir}/model_maps.png")


if __name__ == "__main__":
    main(*sys.argv[1:])
)py";
}

json fit_to_json(const fitting::CosineFit& fit) {
  return json{{"offset", fit.offset},
              {"amplitude", fit.amplitude},
              {"phase", fit.phase},
              {"angular_frequency", fit.angular_frequency},
              {"residual_rms", fit.residual_rms},
              {"sigma_offset", fit.sigma_offset},
              {"sigma_amplitude", fit.sigma_amplitude},
              {"sigma_phase", fit.sigma_phase}};
}

json provenance_json(const config::RunConfig& cfg) {
  char hash[20];
  std::snprintf(hash, sizeof(hash), "%016llx",
                static_cast<unsigned long long>(cfg.hash()));
  return json{{"tool", kToolName},
              {"version", kVersion},
              {"config_hash", hash},
              {"seed", cfg.rng_seed}};
}

}  // namespace

int cmd_model(const config::RunConfig& cfg, const std::string& out_dir) {
  fs::create_directories(out_dir);
  const auto physics = model::build_physics(cfg);

  for (const auto parity : {pathways::BandParity::Odd, pathways::BandParity::Even}) {
    const bool is_odd = parity == pathways::BandParity::Odd;
    if ((is_odd ? cfg.odd_bands : cfg.even_bands).empty()) continue;
    const auto map = model::evaluate_model_map(cfg, physics, parity);
    const std::string tag = is_odd ? "odd" : "even";
    write_model_map_csv(cfg, map, fs::path(out_dir) / ("model_" + tag + "_map.csv"));
    write_mean_asym_csv(cfg, map,
                        fs::path(out_dir) / ("model_" + tag + "_mean_asym.csv"));
  }

  // the nuclear phase difference that drives the maps
  {
    auto out = open_out(fs::path(out_dir) / "delta_theta.csv");
    out << "# WKB nuclear phase difference vs KER\n" << provenance_line(cfg);
    out << "ker_ev,delta_theta_rad\n";
    for (std::size_t i = 0; i < physics.ker_grid.size(); ++i)
      out << fmt(physics.ker_grid[i]) << ',' << fmt(physics.delta_theta[i]) << "\n";
  }
  write_plot_script(fs::path(out_dir) / "plot_model.py");
  return kExitOk;
}

int cmd_simulate(const config::RunConfig& cfg, const std::string& out_dir,
                 bool write_csv) {
  fs::create_directories(out_dir);
  const auto physics = model::build_physics(cfg);
  const auto sim = model::build_sim_config(cfg, physics);
  const auto file = eventgen::run_simulation(sim);
  eventgen::write_events(file, (fs::path(out_dir) / "events.atl").string());
  if (write_csv)
    eventgen::write_events_csv(file, (fs::path(out_dir) / "events.csv").string());
  std::cout << "simulated " << file.events.size() << " events over "
            << file.delays_fs.size() << " delays\n";
  return kExitOk;
}

int cmd_analyze(const config::RunConfig& cfg, const std::string& events_path,
                const std::string& out_dir) {
  fs::create_directories(out_dir);
  const auto file = eventgen::read_events(events_path);
  if (file.events.empty())
    std::cerr << "warning: event file contains no events; outputs are zero-filled\n";

  const analysis::Binning binning = cfg.binning();
  const auto jes = analysis::fill_jes(file.events, binning);
  const auto map = analysis::asymmetry_map(jes);

  {
    auto out = open_out(fs::path(out_dir) / "jes.csv");
    out << "# joint energy spectrum; KER (eV) vs electron energy (eV), "
           "hemisphere-resolved counts\n"
        << provenance_line(cfg);
    out << "ker_ev,ee_ev,same,opp\n";
    for (int ik = 0; ik < binning.n_ker(); ++ik)
      for (int ie = 0; ie < binning.n_ee(); ++ie) {
        const std::size_t idx = static_cast<std::size_t>(ik) * binning.n_ee() + ie;
        out << fmt(binning.ker_center(ik)) << ',' << fmt(binning.ee_center(ie))
            << ',' << jes.counts_same[idx] << ',' << jes.counts_opp[idx] << "\n";
      }
  }
  {
    auto out = open_out(fs::path(out_dir) / "asymmetry_map.csv");
    out << "# asymmetry map A(KER, E_e) with binomial sigma; empty bins are nan\n"
        << provenance_line(cfg);
    out << "ker_ev,ee_ev,a,sigma_a\n";
    for (int ik = 0; ik < binning.n_ker(); ++ik)
      for (int ie = 0; ie < binning.n_ee(); ++ie) {
        const std::size_t idx = static_cast<std::size_t>(ik) * binning.n_ee() + ie;
        out << fmt(binning.ker_center(ik)) << ',' << fmt(binning.ee_center(ie))
            << ',' << fmt(map.a[idx]) << ',' << fmt(map.sigma_a[idx]) << "\n";
      }
  }

  json summary;
  summary["provenance"] = provenance_json(cfg);
  summary["provenance"]["event_file_hash"] = file.config_hash;
  summary["totals"] = {{"events", file.events.size()},
                       {"in_range", jes.total_in_range()},
                       {"out_of_range", jes.out_of_range}};
  summary["delays_fs"] = file.delays_fs;
  summary["hbar_omega_ev"] = cfg.hbar_omega_ev;

  const auto bands = cfg.band_selections();
  const bool scan_possible =
      file.delays_fs.size() >= 8;
  analysis::DelayScanResult scan;
  if (scan_possible) {
    analysis::DelayScanOptions options;
    options.chirp = cfg.declared_chirp();
    options.min_counts_per_point = cfg.min_counts_per_point;
    scan = analysis::delay_scan(file.events, file.delays_fs, bands,
                                cfg.omega_rad_fs(), binning, options);
  }

  summary["bands"] = json::array();
  for (std::size_t b = 0; b < bands.size(); ++b) {
    const auto& band = bands[b];
    const auto proj = analysis::ker_projection(file.events, band, binning);
    json jb;
    jb["parity"] = band.parity == pathways::BandParity::Odd ? "odd" : "even";
    jb["q"] = band.q;
    jb["total_energy_center_ev"] = band.total_energy_center_ev;
    jb["half_width_ev"] = band.half_width_ev;
    jb["ker_centers"] = proj.ker_centers;
    jb["projection"] = proj.counts;
    const auto yields =
        analysis::band_yield_vs_delay(file.events, file.delays_fs, band);
    json jy = json::array();
    for (const auto& s : yields) jy.push_back(s.value);
    jb["yield_vs_delay"] = jy;
    if (scan_possible) {
      const auto& bs = scan.bands[b];
      json fits = json::array();
      for (std::size_t ik = 0; ik < bs.fits.size(); ++ik) {
        json jf = bs.fit_valid[ik] ? fit_to_json(bs.fits[ik]) : json{};
        jf["ker_ev"] = bs.ker_centers[ik];
        jf["valid"] = static_cast<bool>(bs.fit_valid[ik]);
        fits.push_back(jf);
      }
      jb["cosine_fits"] = fits;
      // delay-resolved asymmetry samples per KER bin
      json ja = json::array(), js = json::array();
      for (double v : bs.a) ja.push_back(v);
      for (double v : bs.sigma) js.push_back(v);
      jb["a_vs_delay"] = ja;
      jb["sigma_vs_delay"] = js;
    }
    summary["bands"].push_back(jb);
  }

  if (scan_possible) {
    const auto combined = [&](const std::vector<fitting::CosineFit>& fits,
                              const std::vector<std::uint8_t>& valid) {
      json arr = json::array();
      for (std::size_t ik = 0; ik < fits.size(); ++ik) {
        json jf = valid[ik] ? fit_to_json(fits[ik]) : json{};
        jf["ker_ev"] = scan.ker_centers[ik];
        jf["valid"] = static_cast<bool>(valid[ik]);
        arr.push_back(jf);
      }
      return arr;
    };
    summary["combined_odd"] = combined(scan.combined_odd, scan.combined_odd_valid);
    summary["combined_even"] =
        combined(scan.combined_even, scan.combined_even_valid);
  }

  auto out = open_out(fs::path(out_dir) / "summary.json");
  out << summary.dump(2) << "\n";
  return kExitOk;
}

namespace {

// cosine fits for every KER row of a model-map CSV (noise-free input)
int fit_model_map(const config::RunConfig& cfg, const std::string& path,
                  const std::string& out_dir) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open: " + path);
  std::string line;
  std::vector<double> taus;
  json rows = json::array();
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.empty()) continue;
    if (cells[0] == "ker_ev") {
      for (std::size_t i = 1; i < cells.size(); ++i)
        taus.push_back(std::stod(cells[i].substr(cells[i].find('_') + 1)));
      continue;
    }
    if (taus.empty()) throw DataError(path + ": missing header row");
    if (cells.size() != taus.size() + 1)
      throw DataError(path + ": ragged row");
    std::vector<fitting::WeightedSample> samples(taus.size());
    for (std::size_t i = 0; i < taus.size(); ++i)
      samples[i] = {taus[i], std::stod(cells[i + 1]), 0.0};
    const auto fit = fitting::fit_cosine(samples, 2.0 * cfg.omega_rad_fs());
    json jf = fit_to_json(fit);
    jf["ker_ev"] = std::stod(cells[0]);
    rows.push_back(jf);
  }
  json out_json{{"provenance", provenance_json(cfg)},
                {"input", path},
                {"cosine_fits", rows}};
  auto out = open_out(fs::path(out_dir) / "fits.json");
  out << out_json.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int cmd_fit(const config::RunConfig& cfg, const std::string& input_path,
            const std::string& out_dir) {
  fs::create_directories(out_dir);
  if (input_path.size() > 4 &&
      input_path.substr(input_path.size() - 4) == ".csv")
    return fit_model_map(cfg, input_path, out_dir);

  std::ifstream in(input_path);
  if (!in) throw DataError("cannot open: " + input_path);
  json summary;
  try {
    in >> summary;
  } catch (const std::exception& e) {
    throw DataError(std::string("bad summary json: ") + e.what());
  }

  json result;
  result["provenance"] = provenance_json(cfg);
  result["bands"] = json::array();

  const std::vector<double> delays =
      summary.value("delays_fs", std::vector<double>{});
  std::vector<fitting::SidebandScan> sidebands;

  for (const auto& jb : summary["bands"]) {
    const std::vector<double> kers = jb["ker_centers"];
    const std::vector<double> proj = jb["projection"];
    json out_band{{"parity", jb["parity"]}, {"q", jb["q"]}};

    fitting::ExponentialFitOptions options;
    options.min_count = cfg.min_counts_per_point;
    try {
      const auto efit = fitting::fit_exponential(kers, proj, 0.0, 0.35, options);
      const auto profile = fitting::extract_alpha_beta(kers, proj, efit);
      out_band["exponential"] = {{"amplitude", efit.amplitude},
                                 {"rate", efit.rate},
                                 {"bins_used", efit.bins_used}};
      out_band["alpha_sq"] = profile.alpha_sq;
      out_band["beta_sq"] = profile.beta_sq;
      out_band["bump_center_ev"] = fitting::bump_center(profile);
    } catch (const Error& e) {
      out_band["exponential_error"] = e.what();
    }

    if (jb["parity"] == "even" && !delays.empty()) {
      const std::vector<double> yields = jb["yield_vs_delay"];
      fitting::SidebandScan scan;
      scan.q = jb["q"];
      for (std::size_t t = 0; t < delays.size() && t < yields.size(); ++t)
        scan.yield_vs_delay.push_back(
            {delays[t], yields[t], std::sqrt(std::max(1.0, yields[t]))});
      sidebands.push_back(std::move(scan));
    }
    result["bands"].push_back(out_band);
  }

  if (sidebands.size() >= 2) {
    const double hw = summary.value("hbar_omega_ev", cfg.hbar_omega_ev);
    const auto chirp =
        fitting::sideband_chirp(sidebands, constants::omega_rad_per_fs(hw));
    json jc = json::array();
    for (const auto& [q, entry] : chirp)
      jc.push_back({{"q", q}, {"dphi", entry.dphi}, {"sigma", entry.sigma}});
    result["chirp_table"] = jc;
  }

  auto out = open_out(fs::path(out_dir) / "fits.json");
  out << result.dump(2) << "\n";
  return kExitOk;
}

int cmd_selfcheck(const config::RunConfig& cfg, std::ostream& report) {
  const auto results = acceptance::run_all(cfg);
  bool all_pass = true;
  for (const auto& r : results) {
    report << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << ": "
           << r.detail << "\n";
    all_pass = all_pass && r.pass;
  }
  report << (all_pass ? "all criteria passed\n" : "ACCEPTANCE FAILURE\n");
  return all_pass ? kExitOk : kExitAcceptance;
}

}  // namespace atl::commands
