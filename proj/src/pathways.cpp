#include "atl/pathways.hpp"

#include <cmath>
#include <string>

#include "atl/errors.hpp"

namespace atl::pathways {

namespace {

constexpr double kHalfPi = 0.5 * constants::kPi;

std::complex<double> polar(double mag, double arg) {
  return {mag * std::cos(arg), mag * std::sin(arg)};
}

double norm2(const FinalState& s) {
  return std::norm(s.c_gs) + std::norm(s.c_bs);
}

}  // namespace

XuvSpectrum::XuvSpectrum(std::vector<Harmonic> harmonics)
    : harmonics_(std::move(harmonics)) {
  for (std::size_t i = 0; i < harmonics_.size(); ++i) {
    if (harmonics_[i].order % 2 == 0)
      throw Error("XUV spectrum orders must be odd");
    if (i > 0 && harmonics_[i].order != harmonics_[i - 1].order + 2)
      throw Error("XUV spectrum orders must increase in steps of 2");
  }
}

bool XuvSpectrum::has(int order) const {
  return !harmonics_.empty() && order >= harmonics_.front().order &&
         order <= harmonics_.back().order &&
         (order - harmonics_.front().order) % 2 == 0;
}

const Harmonic& XuvSpectrum::at(int order) const {
  if (!has(order))
    throw MissingHarmonicError("harmonic " + std::to_string(order) +
                               " absent from the XUV spectrum");
  return harmonics_[static_cast<std::size_t>((order - harmonics_.front().order) / 2)];
}

double electron_energy(BandParity parity, int q, double ker_ev,
                       double hbar_omega_ev, double dissociation_limit_ev) {
  double e = q * hbar_omega_ev - dissociation_limit_ev - ker_ev;
  if (parity == BandParity::Even) e -= hbar_omega_ev;
  if (!(e > 0.0))
    throw BelowThresholdError("electron energy not positive at KER " +
                              std::to_string(ker_ev));
  return e;
}

FinalState assemble_odd(const PathwaySpec& spec, double tau_fs) {
  const double phi_tau = spec.omega_rad_fs() * tau_fs;
  const double phi_q = spec.xuv.phase(spec.q);
  const double phi_qm2 = spec.xuv.phase(spec.q - 2);

  const double arg_g1 =
      spec.theta_gs - kHalfPi - kHalfPi * spec.g1.partial_wave + phi_q;
  const double arg_b1 =
      spec.theta_bs - kHalfPi * spec.b1.partial_wave + phi_qm2 + 2.0 * phi_tau;
  const double arg_b2 = spec.theta_bs - kHalfPi * spec.b2.partial_wave + phi_q;

  FinalState s;
  s.parity = BandParity::Odd;
  s.c_gs = polar(spec.g1.magnitude, arg_g1);
  s.c_bs = polar(spec.b1.magnitude, arg_b1) + polar(spec.b2.magnitude, arg_b2);
  return s;
}

FinalState assemble_even(const PathwaySpec& spec, double tau_fs) {
  const double phi_tau = spec.omega_rad_fs() * tau_fs;
  const double phi_q = spec.xuv.phase(spec.q);
  const double phi_qm2 = spec.xuv.phase(spec.q - 2);

  const double arg_g1 =
      spec.theta_gs - kHalfPi * spec.g1.partial_wave + phi_qm2 + phi_tau;
  const double arg_g2 =
      spec.theta_gs - kHalfPi * spec.g2.partial_wave + phi_q - phi_tau;
  const double arg_b1 = spec.theta_bs - kHalfPi -
                        kHalfPi * spec.b1.partial_wave + phi_qm2 + phi_tau;

  FinalState s;
  s.parity = BandParity::Even;
  s.c_gs = polar(spec.g1.magnitude, arg_g1) + polar(spec.g2.magnitude, arg_g2);
  s.c_bs = polar(spec.b1.magnitude, arg_b1);
  return s;
}

FinalState assemble(const PathwaySpec& spec, double tau_fs) {
  return spec.parity == BandParity::Odd ? assemble_odd(spec, tau_fs)
                                        : assemble_even(spec, tau_fs);
}

double asymmetry_of_state(const FinalState& state) {
  const double n = norm2(state);
  if (!(n > 0.0)) throw ZeroStateError("asymmetry of a zero state");
  return kAsymmetrySign * 2.0 * std::real(state.c_gs * std::conj(state.c_bs)) / n;
}

double asymmetry_odd(const PathwaySpec& spec, double tau_fs) {
  const double phi_tau = spec.omega_rad_fs() * tau_fs;
  const double chirp = spec.xuv.phase(spec.q) - spec.xuv.phase(spec.q - 2);
  const double dtheta = spec.theta_gs - spec.theta_bs;
  const double g1 = spec.g1.magnitude;
  const double b1 = spec.b1.magnitude;
  const double b2 = spec.b2.magnitude;

  const double dphi_g1_b1 = dtheta - kHalfPi -
                            kHalfPi * (spec.g1.partial_wave - spec.b1.partial_wave) +
                            chirp - 2.0 * phi_tau;
  const double dphi_g1_b2 =
      dtheta - kHalfPi - kHalfPi * (spec.g1.partial_wave - spec.b2.partial_wave);
  const double dphi_b1_b2 =
      -kHalfPi * (spec.b1.partial_wave - spec.b2.partial_wave) - chirp +
      2.0 * phi_tau;

  const double num = kAsymmetrySign * 2.0 *
                     (g1 * b1 * std::cos(dphi_g1_b1) + g1 * b2 * std::cos(dphi_g1_b2));
  const double den =
      g1 * g1 + b1 * b1 + b2 * b2 + 2.0 * b1 * b2 * std::cos(dphi_b1_b2);
  if (!(den > 0.0)) throw ZeroStateError("asymmetry of a zero state");
  return num / den;
}

double asymmetry_even(const PathwaySpec& spec, double tau_fs) {
  const double phi_tau = spec.omega_rad_fs() * tau_fs;
  const double chirp = spec.xuv.phase(spec.q) - spec.xuv.phase(spec.q - 2);
  const double dtheta = spec.theta_gs - spec.theta_bs;
  const double g1 = spec.g1.magnitude;
  const double g2 = spec.g2.magnitude;
  const double b1 = spec.b1.magnitude;

  const double dphi_g1_b1 = dtheta + kHalfPi -
                            kHalfPi * (spec.g1.partial_wave - spec.b1.partial_wave);
  const double dphi_g2_b1 = dtheta + kHalfPi -
                            kHalfPi * (spec.g2.partial_wave - spec.b1.partial_wave) +
                            chirp - 2.0 * phi_tau;
  const double dphi_g1_g2 =
      -kHalfPi * (spec.g1.partial_wave - spec.g2.partial_wave) - chirp +
      2.0 * phi_tau;

  const double num = kAsymmetrySign * 2.0 *
                     (g1 * b1 * std::cos(dphi_g1_b1) + g2 * b1 * std::cos(dphi_g2_b1));
  const double den =
      g1 * g1 + g2 * g2 + b1 * b1 + 2.0 * g1 * g2 * std::cos(dphi_g1_g2);
  if (!(den > 0.0)) throw ZeroStateError("asymmetry of a zero state");
  return num / den;
}

double asymmetry(const PathwaySpec& spec, double tau_fs) {
  return spec.parity == BandParity::Odd ? asymmetry_odd(spec, tau_fs)
                                        : asymmetry_even(spec, tau_fs);
}

double dissociation_probability(const PathwaySpec& spec, double tau_fs) {
  return norm2(assemble(spec, tau_fs));
}

double coherent_probability(const PathwaySpec& spec, double tau_fs) {
  const FinalState s = assemble(spec, tau_fs);
  return std::norm(s.c_gs + s.c_bs);
}

double time_average_asymmetry(const PathwaySpec& spec, int n_samples) {
  if (n_samples < 16) throw Error("time_average_asymmetry: need >= 16 samples");
  const double period = constants::kPi / spec.omega_rad_fs();
  double sum = 0.0;
  for (int k = 0; k < n_samples; ++k)
    sum += asymmetry(spec, period * k / n_samples);
  return sum / n_samples;
}

double concurrence(const FinalState& state) {
  const double n = norm2(state);
  if (!(n > 0.0)) throw ZeroStateError("concurrence of a zero state");
  return 2.0 * std::abs(state.c_gs) * std::abs(state.c_bs) / n;
}

void validate_spec(const PathwaySpec& spec) {
  const auto check_mag = [](const PathAmplitude& p, const char* name) {
    if (p.magnitude < 0.0)
      throw Error(std::string("negative magnitude for path ") + name);
  };
  const auto check_parity = [](const PathAmplitude& p, bool ungerade,
                               const char* name) {
    if (p.partial_wave < 0)
      throw Error(std::string("negative partial wave for path ") + name);
    if (p.partial_wave % 2 != (ungerade ? 1 : 0))
      throw Error(std::string("partial wave parity mismatch for path ") + name);
  };

  if (spec.parity == BandParity::Odd) {
    check_mag(spec.g1, "g1");
    check_mag(spec.b1, "b1");
    check_mag(spec.b2, "b2");
    // odd band: one-XUV-photon continuum is ungerade, IR-exchanged paths gerade
    check_parity(spec.g1, true, "g1");
    check_parity(spec.b1, false, "b1");
    check_parity(spec.b2, false, "b2");
  } else {
    check_mag(spec.g1, "g1");
    check_mag(spec.g2, "g2");
    check_mag(spec.b1, "b1");
    check_parity(spec.g1, false, "g1");
    check_parity(spec.g2, false, "g2");
    check_parity(spec.b1, true, "b1");
  }
  if (!(spec.hbar_omega_ev > 0.0)) throw Error("photon energy must be positive");
}

}  // namespace atl::pathways
