#include "atl/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "atl/constants.hpp"
#include "atl/errors.hpp"

namespace atl::config {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_double(const std::string& v, const std::string& where) {
  std::size_t pos = 0;
  double d = 0.0;
  try {
    d = std::stod(v, &pos);
  } catch (...) {
    throw ConfigError(where + ": not a number: '" + v + "'");
  }
  if (pos != v.size()) throw ConfigError(where + ": trailing junk in '" + v + "'");
  return d;
}

std::uint64_t parse_u64(const std::string& v, const std::string& where) {
  std::size_t pos = 0;
  unsigned long long u = 0;
  try {
    u = std::stoull(v, &pos);
  } catch (...) {
    throw ConfigError(where + ": not a non-negative integer: '" + v + "'");
  }
  if (pos != v.size()) throw ConfigError(where + ": trailing junk in '" + v + "'");
  return u;
}

int parse_int(const std::string& v, const std::string& where) {
  std::size_t pos = 0;
  int i = 0;
  try {
    i = std::stoi(v, &pos);
  } catch (...) {
    throw ConfigError(where + ": not an integer: '" + v + "'");
  }
  if (pos != v.size()) throw ConfigError(where + ": trailing junk in '" + v + "'");
  return i;
}

std::vector<int> parse_int_list(const std::string& v, const std::string& where) {
  std::istringstream ss(v);
  std::vector<int> out;
  std::string tok;
  while (ss >> tok) out.push_back(parse_int(tok, where));
  if (out.empty()) throw ConfigError(where + ": empty list");
  return out;
}

std::vector<double> parse_double_list(const std::string& v, const std::string& where) {
  std::istringstream ss(v);
  std::vector<double> out;
  std::string tok;
  while (ss >> tok) out.push_back(parse_double(tok, where));
  if (out.empty()) throw ConfigError(where + ": empty list");
  return out;
}

std::string format_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

template <typename T>
std::string format_list(const std::vector<T>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ' ';
    if constexpr (std::is_same_v<T, double>) {
      out += format_double(vs[i]);
    } else {
      out += std::to_string(vs[i]);
    }
  }
  return out;
}

}  // namespace

double RunConfig::omega_rad_fs() const {
  return constants::omega_rad_per_fs(hbar_omega_ev);
}

std::vector<double> RunConfig::delays() const {
  const double period = constants::kPi / omega_rad_fs();
  const double step =
      delay_step_fs > 0.0 ? delay_step_fs : 2.0 * period / delay_count;
  std::vector<double> out(static_cast<std::size_t>(delay_count));
  for (int i = 0; i < delay_count; ++i) out[i] = delay_start_fs + i * step;
  return out;
}

analysis::Binning RunConfig::binning() const {
  analysis::Binning b;
  b.ker_min = ker_min_ev;
  b.ker_max = ker_max_ev;
  b.ker_width = ker_bin_ev;
  b.ee_min = ee_min_ev;
  b.ee_max = ee_max_ev;
  b.ee_width = ee_bin_ev;
  return b;
}

std::vector<analysis::BandSelection> RunConfig::band_selections() const {
  std::vector<analysis::BandSelection> out;
  for (int q : odd_bands)
    out.push_back({pathways::BandParity::Odd, q,
                   analysis::band_center_ev(pathways::BandParity::Odd, q,
                                            hbar_omega_ev, dissociation_limit_ev),
                   band_half_width_ev});
  for (int q : even_bands)
    out.push_back({pathways::BandParity::Even, q,
                   analysis::band_center_ev(pathways::BandParity::Even, q,
                                            hbar_omega_ev, dissociation_limit_ev),
                   band_half_width_ev});
  return out;
}

fitting::ChirpTable RunConfig::declared_chirp() const {
  fitting::ChirpTable table;
  for (std::size_t i = 1; i < xuv_orders.size(); ++i) {
    fitting::ChirpEntry entry;
    entry.dphi = xuv_phases[i] - xuv_phases[i - 1];
    table[xuv_orders[i]] = entry;
  }
  return table;
}

std::string RunConfig::canonical_text() const {
  std::ostringstream out;
  out << "[physics]\n"
      << "hbar_omega_ev = " << format_double(hbar_omega_ev) << "\n"
      << "dissociation_limit_ev = " << format_double(dissociation_limit_ev) << "\n"
      << "ir_intensity_w_cm2 = " << format_double(ir_intensity_w_cm2) << "\n"
      << "curve_file_g = " << curve_file_g << "\n"
      << "curve_file_u = " << curve_file_u << "\n"
      << "coupling = " << coupling << "\n"
      << "coupling_taper_start_mult = " << format_double(coupling_taper_start_mult)
      << "\n"
      << "coupling_taper_width_mult = " << format_double(coupling_taper_width_mult)
      << "\n\n[xuv]\n"
      << "orders = " << format_list(xuv_orders) << "\n"
      << "magnitudes = " << format_list(xuv_magnitudes) << "\n"
      << "phases = " << format_list(xuv_phases) << "\n\n[envelopes]\n"
      << "gs_amplitude = " << format_double(gs_amplitude) << "\n"
      << "gs_decay_per_ev = " << format_double(gs_decay_per_ev) << "\n"
      << "bs_amplitude = " << format_double(bs_amplitude) << "\n"
      << "bs_center_ev = " << format_double(bs_center_ev) << "\n"
      << "bs_sigma_ev = " << format_double(bs_sigma_ev) << "\n\n[bands]\n"
      << "odd = " << format_list(odd_bands) << "\n"
      << "even = " << format_list(even_bands) << "\n"
      << "l_gs_odd = " << l_gs_odd << "\n"
      << "l_bs_odd = " << l_bs_odd << "\n"
      << "l_gs_even = " << l_gs_even << "\n"
      << "l_bs_even = " << l_bs_even << "\n\n[simulation]\n"
      << "events_total = " << events_total << "\n"
      << "delay_start_fs = " << format_double(delay_start_fs) << "\n"
      << "delay_step_fs = " << format_double(delay_step_fs) << "\n"
      << "delay_count = " << delay_count << "\n"
      << "rng_seed = " << rng_seed << "\n"
      << "smear_electron_au = " << format_double(smear_electron_au) << "\n"
      << "smear_ion_au = " << format_double(smear_ion_au) << "\n\n[analysis]\n"
      << "ker_min_ev = " << format_double(ker_min_ev) << "\n"
      << "ker_max_ev = " << format_double(ker_max_ev) << "\n"
      << "ker_bin_ev = " << format_double(ker_bin_ev) << "\n"
      << "ee_min_ev = " << format_double(ee_min_ev) << "\n"
      << "ee_max_ev = " << format_double(ee_max_ev) << "\n"
      << "ee_bin_ev = " << format_double(ee_bin_ev) << "\n"
      << "band_half_width_ev = " << format_double(band_half_width_ev) << "\n"
      << "min_counts_per_point = " << min_counts_per_point << "\n\n[model]\n"
      << "wkb_ker_points = " << wkb_ker_points << "\n"
      << "wkb_r_max_au = " << format_double(wkb_r_max_au) << "\n"
      << "wkb_tol_rad = " << format_double(wkb_tol_rad) << "\n";
  return out.str();
}

std::uint64_t RunConfig::hash() const {
  // FNV-1a 64
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : canonical_text()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

void RunConfig::validate() const {
  if (!(hbar_omega_ev > 0.0)) throw ConfigError("hbar_omega_ev must be positive");
  if (!(ir_intensity_w_cm2 > 0.0))
    throw ConfigError("ir_intensity_w_cm2 must be positive");
  if (curve_file_g.empty() != curve_file_u.empty())
    throw ConfigError("curve files must be given for both curves or neither");
  if (coupling != "charge_resonance" && coupling != "none")
    throw ConfigError("coupling must be charge_resonance or none");
  if (xuv_orders.empty() || xuv_magnitudes.size() != xuv_orders.size() ||
      xuv_phases.size() != xuv_orders.size())
    throw ConfigError("xuv orders/magnitudes/phases must have equal lengths");
  for (std::size_t i = 0; i < xuv_orders.size(); ++i) {
    if (xuv_orders[i] % 2 == 0) throw ConfigError("xuv orders must be odd");
    if (i > 0 && xuv_orders[i] != xuv_orders[i - 1] + 2)
      throw ConfigError("xuv orders must be consecutive odd numbers");
  }
  const auto check_band = [&](int q, bool needs_lower) {
    if (q < xuv_orders.front() || q > xuv_orders.back() || q % 2 == 0)
      throw ConfigError("band order " + std::to_string(q) + " not in the spectrum");
    if (needs_lower && q - 2 < xuv_orders.front())
      throw ConfigError("band " + std::to_string(q) + " needs harmonic q-2");
  };
  for (int q : odd_bands) check_band(q, true);
  for (int q : even_bands) check_band(q, true);
  if (l_gs_odd % 2 != 1 || l_bs_odd % 2 != 0 || l_gs_even % 2 != 0 ||
      l_bs_even % 2 != 1)
    throw ConfigError("partial waves must match the path parities");
  if (events_total == 0) throw ConfigError("events_total must be positive");
  if (delay_count < 1) throw ConfigError("delay_count must be positive");
  if (smear_electron_au < 0.0 || smear_ion_au < 0.0)
    throw ConfigError("smear sigmas must be non-negative");
  if (!(gs_amplitude >= 0.0) || !(bs_amplitude >= 0.0))
    throw ConfigError("envelope amplitudes must be non-negative");
  if (!(bs_sigma_ev > 0.0)) throw ConfigError("bs_sigma_ev must be positive");
  if (!(ker_max_ev > ker_min_ev) || !(ker_bin_ev > 0.0) ||
      !(ee_max_ev > ee_min_ev) || !(ee_bin_ev > 0.0))
    throw ConfigError("inconsistent binning");
  if (!(band_half_width_ev > 0.0)) throw ConfigError("band_half_width_ev must be positive");
  if (wkb_ker_points < 2) throw ConfigError("wkb_ker_points must be >= 2");
  if (!(wkb_r_max_au > 0.0)) throw ConfigError("wkb_r_max_au must be positive");
  // every configured band must stay above the ionization threshold over the
  // analysis KER range
  for (const auto& band : band_selections()) {
    const double e_min = band.total_energy_center_ev - ker_max_ev;
    if (!(e_min > 0.0))
      throw ConfigError("band " + std::to_string(band.q) +
                        " drops below the electron-energy threshold");
  }
}

RunConfig default_config() { return RunConfig{}; }

RunConfig parse_config(const std::string& text, const std::string& origin) {
  RunConfig cfg;
  using Setter = std::function<void(RunConfig&, const std::string&, const std::string&)>;
  static const std::map<std::string, std::map<std::string, Setter>> schema = {
      {"physics",
       {{"hbar_omega_ev", [](RunConfig& c, const std::string& v, const std::string& w) { c.hbar_omega_ev = parse_double(v, w); }},
        {"dissociation_limit_ev", [](RunConfig& c, const std::string& v, const std::string& w) { c.dissociation_limit_ev = parse_double(v, w); }},
        {"ir_intensity_w_cm2", [](RunConfig& c, const std::string& v, const std::string& w) { c.ir_intensity_w_cm2 = parse_double(v, w); }},
        {"curve_file_g", [](RunConfig& c, const std::string& v, const std::string&) { c.curve_file_g = v; }},
        {"curve_file_u", [](RunConfig& c, const std::string& v, const std::string&) { c.curve_file_u = v; }},
        {"coupling", [](RunConfig& c, const std::string& v, const std::string&) { c.coupling = v; }},
        {"coupling_taper_start_mult", [](RunConfig& c, const std::string& v, const std::string& w) { c.coupling_taper_start_mult = parse_double(v, w); }},
        {"coupling_taper_width_mult", [](RunConfig& c, const std::string& v, const std::string& w) { c.coupling_taper_width_mult = parse_double(v, w); }}}},
      {"xuv",
       {{"orders", [](RunConfig& c, const std::string& v, const std::string& w) { c.xuv_orders = parse_int_list(v, w); }},
        {"magnitudes", [](RunConfig& c, const std::string& v, const std::string& w) { c.xuv_magnitudes = parse_double_list(v, w); }},
        {"phases", [](RunConfig& c, const std::string& v, const std::string& w) { c.xuv_phases = parse_double_list(v, w); }}}},
      {"envelopes",
       {{"gs_amplitude", [](RunConfig& c, const std::string& v, const std::string& w) { c.gs_amplitude = parse_double(v, w); }},
        {"gs_decay_per_ev", [](RunConfig& c, const std::string& v, const std::string& w) { c.gs_decay_per_ev = parse_double(v, w); }},
        {"bs_amplitude", [](RunConfig& c, const std::string& v, const std::string& w) { c.bs_amplitude = parse_double(v, w); }},
        {"bs_center_ev", [](RunConfig& c, const std::string& v, const std::string& w) { c.bs_center_ev = parse_double(v, w); }},
        {"bs_sigma_ev", [](RunConfig& c, const std::string& v, const std::string& w) { c.bs_sigma_ev = parse_double(v, w); }}}},
      {"bands",
       {{"odd", [](RunConfig& c, const std::string& v, const std::string& w) { c.odd_bands = parse_int_list(v, w); }},
        {"even", [](RunConfig& c, const std::string& v, const std::string& w) { c.even_bands = parse_int_list(v, w); }},
        {"l_gs_odd", [](RunConfig& c, const std::string& v, const std::string& w) { c.l_gs_odd = parse_int(v, w); }},
        {"l_bs_odd", [](RunConfig& c, const std::string& v, const std::string& w) { c.l_bs_odd = parse_int(v, w); }},
        {"l_gs_even", [](RunConfig& c, const std::string& v, const std::string& w) { c.l_gs_even = parse_int(v, w); }},
        {"l_bs_even", [](RunConfig& c, const std::string& v, const std::string& w) { c.l_bs_even = parse_int(v, w); }}}},
      {"simulation",
       {{"events_total", [](RunConfig& c, const std::string& v, const std::string& w) { c.events_total = parse_u64(v, w); }},
        {"delay_start_fs", [](RunConfig& c, const std::string& v, const std::string& w) { c.delay_start_fs = parse_double(v, w); }},
        {"delay_step_fs", [](RunConfig& c, const std::string& v, const std::string& w) { c.delay_step_fs = parse_double(v, w); }},
        {"delay_count", [](RunConfig& c, const std::string& v, const std::string& w) { c.delay_count = parse_int(v, w); }},
        {"rng_seed", [](RunConfig& c, const std::string& v, const std::string& w) { c.rng_seed = parse_u64(v, w); }},
        {"smear_electron_au", [](RunConfig& c, const std::string& v, const std::string& w) { c.smear_electron_au = parse_double(v, w); }},
        {"smear_ion_au", [](RunConfig& c, const std::string& v, const std::string& w) { c.smear_ion_au = parse_double(v, w); }}}},
      {"analysis",
       {{"ker_min_ev", [](RunConfig& c, const std::string& v, const std::string& w) { c.ker_min_ev = parse_double(v, w); }},
        {"ker_max_ev", [](RunConfig& c, const std::string& v, const std::string& w) { c.ker_max_ev = parse_double(v, w); }},
        {"ker_bin_ev", [](RunConfig& c, const std::string& v, const std::string& w) { c.ker_bin_ev = parse_double(v, w); }},
        {"ee_min_ev", [](RunConfig& c, const std::string& v, const std::string& w) { c.ee_min_ev = parse_double(v, w); }},
        {"ee_max_ev", [](RunConfig& c, const std::string& v, const std::string& w) { c.ee_max_ev = parse_double(v, w); }},
        {"ee_bin_ev", [](RunConfig& c, const std::string& v, const std::string& w) { c.ee_bin_ev = parse_double(v, w); }},
        {"band_half_width_ev", [](RunConfig& c, const std::string& v, const std::string& w) { c.band_half_width_ev = parse_double(v, w); }},
        {"min_counts_per_point", [](RunConfig& c, const std::string& v, const std::string& w) { c.min_counts_per_point = parse_int(v, w); }}}},
      {"model",
       {{"wkb_ker_points", [](RunConfig& c, const std::string& v, const std::string& w) { c.wkb_ker_points = parse_int(v, w); }},
        {"wkb_r_max_au", [](RunConfig& c, const std::string& v, const std::string& w) { c.wkb_r_max_au = parse_double(v, w); }},
        {"wkb_tol_rad", [](RunConfig& c, const std::string& v, const std::string& w) { c.wkb_tol_rad = parse_double(v, w); }}}}};

  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = origin + ":" + std::to_string(lineno);

    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(where + ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (schema.find(section) == schema.end())
        throw ConfigError(where + ": unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(where + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (section.empty()) throw ConfigError(where + ": key outside any section");
    const auto& keys = schema.at(section);
    const auto it = keys.find(key);
    if (it == keys.end())
      throw ConfigError(where + ": unknown key '" + key + "' in [" + section + "]");
    it->second(cfg, value, where);
  }

  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path);
}

}  // namespace atl::config
