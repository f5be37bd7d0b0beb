#pragma once

#include <string>
#include <vector>

#include "atl/interp.hpp"

namespace atl::potentials {

enum class CurveLabel { GroundSigmaG, ExcitedSigmaU, DressedLower, DressedUpper };

// Tabulated Born-Oppenheimer curve, energies in eV referenced to the neutral
// H2 ground state (the 1s sigma_g asymptote sits at the dissociation limit).
class PotentialCurve {
 public:
  PotentialCurve() = default;
  PotentialCurve(std::vector<double> r_grid, std::vector<double> v_grid,
                 CurveLabel label);

  // monotone-cubic value; exact at grid nodes; OutOfRangeError outside the grid
  double eval(double r) const { return interp_(r); }

  double r_min() const { return interp_.x_min(); }
  double r_max() const { return interp_.x_max(); }
  const std::vector<double>& r_grid() const { return interp_.xs(); }
  const std::vector<double>& v_grid() const { return interp_.ys(); }
  CurveLabel label() const { return label_; }

 private:
  MonotoneCubic interp_;
  CurveLabel label_ = CurveLabel::GroundSigmaG;
};

double eval_curve(const PotentialCurve& curve, double r);

struct IrFieldParams {
  double photon_energy_ev = 1.2;
  double intensity_w_cm2 = 2e11;

  // field amplitude in a.u., E0 = sqrt(I / 3.509e16)
  double field_amplitude() const;
};

// Radiative coupling W(R) = d(R) * E0 / 2 between the diabats.  The
// charge-resonance dipole d(R) = R/2 is tapered off smoothly beyond
// taper_start_mult * R_f so the adiabats rejoin the diabats asymptotically;
// the taper leaves d(R_f) itself untouched.
struct CouplingModel {
  enum class Dipole { None, ChargeResonance };
  Dipole dipole = Dipole::ChargeResonance;
  double taper_start_mult = 2.0;  // in units of the crossing radius
  double taper_width_mult = 0.5;

  double dipole_at(double r, double crossing_radius) const;
};

struct DressedPair {
  PotentialCurve lower;
  PotentialCurve upper;
  double crossing_radius_rf = 0.0;  // a.u.
  double gap_width_ev = 0.0;        // adiabatic splitting at R_f
};

// Root of V_u(R) - V_g(R) = photon_ev by bracketed bisection.
// Throws NoCrossingError when the difference never reaches photon_ev.
double crossing_radius(const PotentialCurve& vg, const PotentialCurve& vu,
                       double photon_ev);

// Pointwise eigenvalues of [[V_g, W], [W, V_u - hw]] on the shared grid
// (curves on different grids are resampled to the merged grid first).
DressedPair dress_curves(const PotentialCurve& vg, const PotentialCurve& vu,
                         const IrFieldParams& ir, const CouplingModel& coupling);

// Embedded H2+ tables (defaults when no curve file is given).
const PotentialCurve& embedded_ground_sigma_g();
const PotentialCurve& embedded_excited_sigma_u();

// Two-column text format: R (a.u.), V (eV); '#' starts a comment.
PotentialCurve load_curve(const std::string& path, CurveLabel label);

// Analytic fallback curves for tests: a Morse well with the given asymptote
// and an exponential repulsive wall decaying to the same asymptote.
PotentialCurve make_morse_curve(double depth_ev, double r_eq, double width,
                                double asymptote_ev, double r_lo, double r_hi,
                                int n_points, CurveLabel label);
PotentialCurve make_repulsive_curve(double amplitude_ev, double decay,
                                    double asymptote_ev, double r_lo, double r_hi,
                                    int n_points, CurveLabel label);

// Checks the physical-table contract: coverage of [0.5, 40] a.u., matched
// g/u asymptotes, and V_u >= V_g.  Throws atl::Error on violation.
void validate_physical_pair(const PotentialCurve& vg, const PotentialCurve& vu);

}  // namespace atl::potentials
