#pragma once

#include <complex>
#include <vector>

#include "atl/constants.hpp"

namespace atl::pathways {

// Delay convention used throughout: tau > 0 means the IR probe arrives after
// the XUV pump, and the IR field phase entering the amplitudes is
// phi(tau) = +omega*tau.

// Sign of the asymmetry A = sign * 2 Re[c_gs c_bs*] / (|c_gs|^2 + |c_bs|^2).
// Kept as a named constant because the two supplement revisions disagree; the
// current convention is the minus sign.
inline constexpr double kAsymmetrySign = -1.0;

enum class BandParity { Odd, Even };

struct Harmonic {
  int order = 0;           // odd
  double magnitude = 1.0;  // arbitrary units
  double phase = 0.0;      // spectral phase, radians
};

// Comb of odd harmonics of the IR drive.  Orders must be odd, increasing,
// and consecutive (adjacent listed orders differ by 2).
class XuvSpectrum {
 public:
  XuvSpectrum() = default;
  explicit XuvSpectrum(std::vector<Harmonic> harmonics);

  bool has(int order) const;
  const Harmonic& at(int order) const;  // MissingHarmonicError when absent
  double phase(int order) const { return at(order).phase; }
  double magnitude(int order) const { return at(order).magnitude; }
  const std::vector<Harmonic>& harmonics() const { return harmonics_; }
  double energy_ev(int order, double hbar_omega_ev) const {
    return order * hbar_omega_ev;
  }

 private:
  std::vector<Harmonic> harmonics_;
};

struct PathAmplitude {
  double magnitude = 0.0;  // FC envelope x radial matrix element, >= 0
  int partial_wave = 0;    // continuum-electron l
};

// One (band, KER) cell of the quantum-path model.  Odd bands use paths
// {g1, b1, b2}; even bands use {g1, g2, b1}; the leftover slot is ignored.
struct PathwaySpec {
  BandParity parity = BandParity::Odd;
  int q = 21;  // reference harmonic order (upper one for even bands)
  double ker_ev = 0.0;
  PathAmplitude g1, g2, b1, b2;
  double theta_gs = 0.0;  // nuclear WKB phases, radians
  double theta_bs = 0.0;
  double hbar_omega_ev = 1.2;
  XuvSpectrum xuv;

  double omega_rad_fs() const {
    return constants::omega_rad_per_fs(hbar_omega_ev);
  }
};

// Parity-qubit final state |psi> = c_gs |+,-> + c_bs |-,+> (odd bands) or
// |phi> = c_gs |+,+> + c_bs |-,-> (even bands).
struct FinalState {
  std::complex<double> c_gs{0.0, 0.0};
  std::complex<double> c_bs{0.0, 0.0};
  BandParity parity = BandParity::Odd;
};

// Total electron energy of the band at the given KER (eV):
//   odd : q hw - I_d - KER
//   even: q hw - I_d - KER - hw   (emission branch of the upper harmonic)
// Throws BelowThresholdError when the result is not positive.
double electron_energy(BandParity parity, int q, double ker_ev,
                       double hbar_omega_ev, double dissociation_limit_ev);

// Complex path amplitudes at delay tau (fs).  Throws MissingHarmonicError
// when the q-2 harmonic is absent from the spectrum.
FinalState assemble_odd(const PathwaySpec& spec, double tau_fs);
FinalState assemble_even(const PathwaySpec& spec, double tau_fs);
FinalState assemble(const PathwaySpec& spec, double tau_fs);

// A = -2 Re[c_gs c_bs*] / (|c_gs|^2 + |c_bs|^2), in [-1, 1].
double asymmetry_of_state(const FinalState& state);

// Closed-form asymmetry in terms of magnitudes and phase differences; agrees
// with asymmetry_of_state(assemble(...)) to machine precision but follows an
// independent algebraic route.
double asymmetry_odd(const PathwaySpec& spec, double tau_fs);
double asymmetry_even(const PathwaySpec& spec, double tau_fs);
double asymmetry(const PathwaySpec& spec, double tau_fs);

// Event weight |c_gs|^2 + |c_bs|^2 (the parity sectors are orthogonal).
double dissociation_probability(const PathwaySpec& spec, double tau_fs);
// |sum of all amplitudes|^2, kept as a diagnostic of the raw coherent sum.
double coherent_probability(const PathwaySpec& spec, double tau_fs);

// Uniform-grid average of A(tau) over one oscillation period pi/omega.
double time_average_asymmetry(const PathwaySpec& spec, int n_samples = 4096);

// Two-qubit pure-state concurrence 2|c_gs||c_bs| / (|c_gs|^2 + |c_bs|^2).
double concurrence(const FinalState& state);

// Enforces the parity rule on the partial waves (odd l for an ungerade free
// electron, even l for gerade) and non-negative magnitudes.
void validate_spec(const PathwaySpec& spec);

}  // namespace atl::pathways
