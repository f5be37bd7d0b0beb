#include "atl/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "atl/constants.hpp"
#include "atl/errors.hpp"
#include "atl/potential_tables.hpp"

namespace atl::potentials {

PotentialCurve::PotentialCurve(std::vector<double> r_grid,
                               std::vector<double> v_grid, CurveLabel label)
    : interp_(std::move(r_grid), std::move(v_grid)), label_(label) {}

double eval_curve(const PotentialCurve& curve, double r) { return curve.eval(r); }

double IrFieldParams::field_amplitude() const {
  if (!(intensity_w_cm2 > 0.0)) throw Error("IR intensity must be positive");
  return std::sqrt(intensity_w_cm2 / constants::kIntensityAu);
}

double CouplingModel::dipole_at(double r, double crossing_radius) const {
  if (dipole == Dipole::None) return 0.0;
  double d = 0.5 * r;
  const double r0 = taper_start_mult * crossing_radius;
  if (r > r0) {
    const double w = taper_width_mult * crossing_radius;
    const double t = (r - r0) / w;
    d *= std::exp(-t * t);
  }
  return d;
}

namespace {

double diff_minus_photon(const PotentialCurve& vg, const PotentialCurve& vu,
                         double r, double photon_ev) {
  return vu.eval(r) - vg.eval(r) - photon_ev;
}

}  // namespace

double crossing_radius(const PotentialCurve& vg, const PotentialCurve& vu,
                       double photon_ev) {
  const double lo = std::max(vg.r_min(), vu.r_min());
  const double hi = std::min(vg.r_max(), vu.r_max());
  if (!(lo < hi)) throw NoCrossingError("curves do not share an r range");

  // bracket on a dense scan; take the outermost sign change (the curves
  // separate exponentially, so the difference crosses the photon energy once
  // on the way out)
  const int n = 2000;
  double prev_r = lo, prev_f = diff_minus_photon(vg, vu, lo, photon_ev);
  double a = 0.0, b = 0.0;
  bool found = false;
  for (int i = 1; i <= n; ++i) {
    const double r = lo + (hi - lo) * i / n;
    const double f = diff_minus_photon(vg, vu, r, photon_ev);
    if (prev_f == 0.0) return prev_r;
    if (prev_f * f < 0.0) {
      a = prev_r;
      b = r;
      found = true;
    }
    prev_r = r;
    prev_f = f;
  }
  if (!found)
    throw NoCrossingError("V_u - V_g never equals the photon energy on the grid");

  double fa = diff_minus_photon(vg, vu, a, photon_ev);
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (a + b);
    const double fm = diff_minus_photon(vg, vu, m, photon_ev);
    if (std::fabs(fm) < 1e-10 || (b - a) < 1e-14) return m;
    if (fa * fm <= 0.0) {
      b = m;
    } else {
      a = m;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

DressedPair dress_curves(const PotentialCurve& vg, const PotentialCurve& vu,
                         const IrFieldParams& ir, const CouplingModel& coupling) {
  if (!(ir.photon_energy_ev > 0.0)) throw Error("photon energy must be positive");

  // merged grid over the shared range
  const double lo = std::max(vg.r_min(), vu.r_min());
  const double hi = std::min(vg.r_max(), vu.r_max());
  std::vector<double> grid;
  grid.reserve(vg.r_grid().size() + vu.r_grid().size());
  for (double r : vg.r_grid())
    if (r >= lo && r <= hi) grid.push_back(r);
  for (double r : vu.r_grid())
    if (r >= lo && r <= hi) grid.push_back(r);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  const double hw = ir.photon_energy_ev;
  const double rf = crossing_radius(vg, vu, hw);
  const double e0 = ir.field_amplitude();

  // refine around the avoided crossing, where the adiabats curve sharply
  for (int k = -80; k <= 80; ++k) {
    const double r = rf + 0.025 * k;
    if (r > lo && r < hi) grid.push_back(r);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  const auto eigenpair = [&](double r, double& low, double& up) {
    const double a = vg.eval(r);
    const double b = vu.eval(r) - hw;
    const double w = 0.5 * coupling.dipole_at(r, rf) * e0 * constants::kHartreeEv;
    const double mean = 0.5 * (a + b);
    const double split = std::sqrt(0.25 * (a - b) * (a - b) + w * w);
    low = mean - split;
    up = mean + split;
  };

  std::vector<double> lower(grid.size()), upper(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    eigenpair(grid[i], lower[i], upper[i]);

  DressedPair pair;
  pair.lower = PotentialCurve(grid, std::move(lower), CurveLabel::DressedLower);
  pair.upper = PotentialCurve(std::move(grid), std::move(upper), CurveLabel::DressedUpper);
  pair.crossing_radius_rf = rf;
  double low_rf = 0.0, up_rf = 0.0;
  eigenpair(rf, low_rf, up_rf);  // exact at R_f, not interpolated
  pair.gap_width_ev = up_rf - low_rf;
  return pair;
}

const PotentialCurve& embedded_ground_sigma_g() {
  static const PotentialCurve curve(
      std::vector<double>(tables::kRGrid, tables::kRGrid + tables::kNumPoints),
      std::vector<double>(tables::kGroundSigmaG,
                          tables::kGroundSigmaG + tables::kNumPoints),
      CurveLabel::GroundSigmaG);
  return curve;
}

const PotentialCurve& embedded_excited_sigma_u() {
  static const PotentialCurve curve(
      std::vector<double>(tables::kRGrid, tables::kRGrid + tables::kNumPoints),
      std::vector<double>(tables::kExcitedSigmaU,
                          tables::kExcitedSigmaU + tables::kNumPoints),
      CurveLabel::ExcitedSigmaU);
  return curve;
}

PotentialCurve load_curve(const std::string& path, CurveLabel label) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open curve file: " + path);
  std::vector<double> rs, vs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    double r, v;
    if (!(ss >> r)) continue;  // blank/comment line
    if (!(ss >> v))
      throw DataError(path + ":" + std::to_string(lineno) + ": expected two columns");
    rs.push_back(r);
    vs.push_back(v);
  }
  if (rs.size() < 2)
    throw DataError(path + ": need at least two grid points");
  try {
    return PotentialCurve(std::move(rs), std::move(vs), label);
  } catch (const Error& e) {
    throw DataError(path + ": " + e.what());
  }
}

PotentialCurve make_morse_curve(double depth_ev, double r_eq, double width,
                                double asymptote_ev, double r_lo, double r_hi,
                                int n_points, CurveLabel label) {
  std::vector<double> rs(n_points), vs(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double r = r_lo + (r_hi - r_lo) * i / (n_points - 1);
    const double u = 1.0 - std::exp(-width * (r - r_eq));
    rs[i] = r;
    vs[i] = asymptote_ev + depth_ev * (u * u - 1.0);
  }
  return PotentialCurve(std::move(rs), std::move(vs), label);
}

PotentialCurve make_repulsive_curve(double amplitude_ev, double decay,
                                    double asymptote_ev, double r_lo, double r_hi,
                                    int n_points, CurveLabel label) {
  std::vector<double> rs(n_points), vs(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double r = r_lo + (r_hi - r_lo) * i / (n_points - 1);
    rs[i] = r;
    vs[i] = asymptote_ev + amplitude_ev * std::exp(-decay * r);
  }
  return PotentialCurve(std::move(rs), std::move(vs), label);
}

void validate_physical_pair(const PotentialCurve& vg, const PotentialCurve& vu) {
  if (vg.r_min() > 0.5 || vg.r_max() < 40.0 || vu.r_min() > 0.5 || vu.r_max() < 40.0)
    throw Error("potential tables must cover [0.5, 40] a.u.");
  const double rmax = std::min(vg.r_max(), vu.r_max());
  if (std::fabs(vg.eval(rmax) - vu.eval(rmax)) >= 0.01)
    throw Error("g/u curves do not share an asymptote");
  for (double r : vg.r_grid()) {
    if (r < vu.r_min() || r > vu.r_max()) continue;
    if (vu.eval(r) < vg.eval(r) - 1e-9)
      throw Error("upper curve dips below the ground curve");
  }
}

}  // namespace atl::potentials
