#include "atl/wkb.hpp"

#include <algorithm>
#include <cmath>

#include "atl/errors.hpp"
#include "atl/quadrature.hpp"

namespace atl::wkb {

namespace {

using potentials::PotentialCurve;

double momentum_au(const PotentialCurve& curve, double mu, double e_ev, double r) {
  const double gap_ha = constants::ev_to_hartree(e_ev - curve.eval(r));
  return gap_ha > 0.0 ? std::sqrt(2.0 * mu * gap_ha) : 0.0;
}

// bisection refinement of a V(R) = E crossing inside [a, b]
double refine_crossing(const PotentialCurve& curve, double e_ev, double a,
                       double b) {
  double fa = curve.eval(a) - e_ev;
  for (int it = 0; it < 200; ++it) {
    const double m = 0.5 * (a + b);
    const double fm = curve.eval(m) - e_ev;
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

// local node spacing of the table around r
double local_spacing(const PotentialCurve& curve, double r) {
  const auto& xs = curve.r_grid();
  auto it = std::upper_bound(xs.begin(), xs.end(), r);
  std::size_t i = it == xs.begin() ? 0 : static_cast<std::size_t>(it - xs.begin()) - 1;
  i = std::min(i, xs.size() - 2);
  return xs[i + 1] - xs[i];
}

struct Region {
  double lo, hi;
  bool lo_is_turning, hi_is_turning;
};

std::vector<Region> find_regions(const PotentialCurve& curve, double e_ev,
                                 double lo, double hi) {
  lo = std::max(lo, curve.r_min());
  hi = std::min(hi, curve.r_max());
  std::vector<Region> out;
  if (!(lo < hi)) return out;

  const auto& xs = curve.r_grid();
  std::vector<double> pts;
  pts.push_back(lo);
  for (double x : xs)
    if (x > lo && x < hi) pts.push_back(x);
  pts.push_back(hi);

  bool inside = curve.eval(pts.front()) < e_ev;
  double start = pts.front();
  bool start_turning = false;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const bool next_inside = curve.eval(pts[i + 1]) < e_ev;
    if (next_inside == inside) continue;
    const double cross = refine_crossing(curve, e_ev, pts[i], pts[i + 1]);
    if (inside) {
      out.push_back({start, cross, start_turning, true});
    } else {
      start = cross;
      start_turning = true;
    }
    inside = next_inside;
  }
  if (inside) out.push_back({start, pts.back(), start_turning, false});
  return out;
}

// phase over one allowed region with sqrt substitutions at turning edges
QuadratureResult region_phase(const PotentialCurve& curve, double mu,
                              double e_ev, const Region& reg, double tol) {
  const auto p = [&](double r) { return momentum_au(curve, mu, e_ev, r); };

  const double len = reg.hi - reg.lo;
  double a = reg.lo, b = reg.hi;
  QuadratureResult total;

  int pieces = 1 + (reg.lo_is_turning ? 1 : 0) + (reg.hi_is_turning ? 1 : 0);
  const double piece_tol = tol / pieces;

  if (reg.lo_is_turning) {
    const double w = std::min(10.0 * local_spacing(curve, reg.lo), 0.5 * len);
    const double u_max = std::sqrt(w);
    auto sub = [&](double u) { return 2.0 * u * p(reg.lo + u * u); };
    auto q = integrate_adaptive(sub, 0.0, u_max, piece_tol);
    total.value += q.value;
    total.estimated_error += q.estimated_error;
    a = reg.lo + w;
  }
  if (reg.hi_is_turning) {
    const double w = std::min(10.0 * local_spacing(curve, reg.hi), 0.5 * len);
    const double u_max = std::sqrt(w);
    auto sub = [&](double u) { return 2.0 * u * p(reg.hi - u * u); };
    auto q = integrate_adaptive(sub, 0.0, u_max, piece_tol);
    total.value += q.value;
    total.estimated_error += q.estimated_error;
    b = reg.hi - w;
  }
  if (a < b) {
    auto q = integrate_adaptive(p, a, b, piece_tol);
    total.value += q.value;
    total.estimated_error += q.estimated_error;
  }
  return total;
}

}  // namespace

double turning_point(const potentials::PotentialCurve& curve, double energy_ev) {
  const auto& xs = curve.r_grid();
  double prev_f = curve.eval(xs.front()) - energy_ev;
  if (prev_f == 0.0) return xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double f = curve.eval(xs[i]) - energy_ev;
    if (prev_f * f <= 0.0) return refine_crossing(curve, energy_ev, xs[i - 1], xs[i]);
    prev_f = f;
  }
  throw NoTurningPointError("E - V has constant sign on the grid");
}

std::vector<std::pair<double, double>> allowed_regions(
    const potentials::PotentialCurve& curve, double energy_ev, double lo,
    double hi) {
  std::vector<std::pair<double, double>> out;
  for (const auto& reg : find_regions(curve, energy_ev, lo, hi))
    out.emplace_back(reg.lo, reg.hi);
  return out;
}

PhaseResult wkb_phase(const WkbPath& path, double tol_rad) {
  if (!path.curve) throw Error("WkbPath without a curve");
  if (!(path.r_start < path.r_max)) throw Error("WkbPath: r_start must precede r_max");

  const auto regions =
      find_regions(*path.curve, path.total_energy_ev, path.r_start, path.r_max);
  if (regions.empty())
    throw NoTurningPointError("no classically allowed region on the path");

  PhaseResult result;
  result.r_turning = regions.front().lo;
  const double region_tol = tol_rad / static_cast<double>(regions.size());
  for (const auto& reg : regions) {
    const auto q = region_phase(*path.curve, path.reduced_mass,
                                path.total_energy_ev, reg, region_tol);
    result.phase += q.value;
    result.estimated_error += q.estimated_error;
  }
  return result;
}

double delta_theta_at_cutoff(const WkbPath& gs_path, const WkbPath& bs_path,
                             double r_max, double tol_rad) {
  if (!gs_path.curve || !bs_path.curve) throw Error("WkbPath without a curve");

  const double hi = std::min({r_max, gs_path.curve->r_max(), bs_path.curve->r_max()});
  const auto gs_regions = find_regions(*gs_path.curve, gs_path.total_energy_ev,
                                       gs_path.r_start, hi);
  const auto bs_regions = find_regions(*bs_path.curve, bs_path.total_energy_ev,
                                       bs_path.r_start, hi);
  if (gs_regions.empty() && bs_regions.empty())
    throw NoTurningPointError("both paths classically forbidden");

  // momentum difference with zero extension outside each path's regions
  const auto diff = [&](double r) {
    return momentum_au(*gs_path.curve, gs_path.reduced_mass,
                       gs_path.total_energy_ev, r) -
           momentum_au(*bs_path.curve, bs_path.reduced_mass,
                       bs_path.total_energy_ev, r);
  };

  // breakpoints at every region edge of either path
  std::vector<double> cuts;
  double lo = hi;
  for (const auto* regs : {&gs_regions, &bs_regions}) {
    for (const auto& reg : *regs) {
      lo = std::min(lo, reg.lo);
      cuts.push_back(reg.lo);
      cuts.push_back(reg.hi);
    }
  }
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  cuts.erase(std::remove_if(cuts.begin(), cuts.end(),
                            [&](double c) { return c < lo || c > hi; }),
             cuts.end());

  // Each panel is split at its midpoint and mapped with R = edge +/- u^2 from
  // both edges, which regularizes the sqrt behaviour wherever the edge is a
  // turning point of either path and is harmless elsewhere.
  double total = 0.0;
  const double panel_tol = tol_rad / std::max<std::size_t>(1, 2 * cuts.size());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = cuts[i], b = cuts[i + 1];
    if (!(b > a)) continue;
    const double m = 0.5 * (a + b);
    auto left = [&](double u) { return 2.0 * u * diff(a + u * u); };
    auto right = [&](double u) { return 2.0 * u * diff(b - u * u); };
    total += integrate_adaptive(left, 0.0, std::sqrt(m - a), panel_tol).value;
    total += integrate_adaptive(right, 0.0, std::sqrt(b - m), panel_tol).value;
  }
  return total;
}

double delta_theta(const WkbPath& gs_path, const WkbPath& bs_path,
                   double tol_rad) {
  if (gs_path.r_max != bs_path.r_max)
    throw Error("delta_theta: paths must share r_max");
  const double value = delta_theta_at_cutoff(gs_path, bs_path, gs_path.r_max, tol_rad);
  const double doubled =
      delta_theta_at_cutoff(gs_path, bs_path, 2.0 * gs_path.r_max, tol_rad);
  if (std::fabs(doubled - value) > 1e-3)
    throw NotConvergedError("delta_theta cutoff-doubling check failed");
  return value;
}

}  // namespace atl::wkb
