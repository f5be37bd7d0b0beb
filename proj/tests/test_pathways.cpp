#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "atl/constants.hpp"
#include "atl/errors.hpp"
#include "atl/fitting.hpp"
#include "atl/pathways.hpp"
#include "atl/rng.hpp"

using namespace atl;
using namespace atl::pathways;

namespace {

XuvSpectrum flat_spectrum() {
  return XuvSpectrum({{15, 1, 0}, {17, 1, 0}, {19, 1, 0},
                      {21, 1, 0}, {23, 1, 0}, {25, 1, 0}});
}

PathwaySpec base_odd() {
  PathwaySpec spec;
  spec.parity = BandParity::Odd;
  spec.q = 21;
  spec.hbar_omega_ev = 1.2;
  spec.xuv = flat_spectrum();
  spec.g1 = {1.0, 1};
  spec.b1 = {1.0, 0};
  spec.b2 = {1.0, 0};
  return spec;
}

PathwaySpec base_even() {
  PathwaySpec spec;
  spec.parity = BandParity::Even;
  spec.q = 21;
  spec.hbar_omega_ev = 1.2;
  spec.xuv = flat_spectrum();
  spec.g1 = {0.5, 0};
  spec.g2 = {0.5, 0};
  spec.b1 = {1.0, 1};
  return spec;
}

PathwaySpec random_spec(rng::Philox& rng) {
  PathwaySpec spec;
  spec.parity = rng.uniform() < 0.5 ? BandParity::Odd : BandParity::Even;
  spec.q = 17 + 2 * static_cast<int>(rng.uniform() * 4.0);
  spec.hbar_omega_ev = 1.2;
  std::vector<Harmonic> hs;
  for (int q = 15; q <= 25; q += 2)
    hs.push_back({q, 1.0, 2.0 * constants::kPi * (rng.uniform() - 0.5)});
  spec.xuv = XuvSpectrum(hs);
  spec.theta_gs = 2.0 * constants::kPi * rng.uniform();
  spec.theta_bs = 2.0 * constants::kPi * rng.uniform();
  const auto amp = [&]() -> PathAmplitude {
    return {2.0 * rng.uniform(), static_cast<int>(rng.uniform() * 4.0)};
  };
  spec.g1 = amp();
  spec.g2 = amp();
  spec.b1 = amp();
  spec.b2 = amp();
  return spec;
}

}  // namespace

TEST_CASE("xuv spectrum enforces the odd consecutive-order comb") {
  CHECK_THROWS_AS(XuvSpectrum({{16, 1, 0}}), Error);
  CHECK_THROWS_AS(XuvSpectrum({{15, 1, 0}, {21, 1, 0}}), Error);
  const auto xuv = flat_spectrum();
  CHECK(xuv.has(19));
  CHECK(!xuv.has(13));
  CHECK_THROWS_AS(xuv.at(13), MissingHarmonicError);
  CHECK(xuv.energy_ev(21, 1.2) == doctest::Approx(25.2));
}

TEST_CASE("electron energy bookkeeping") {
  // 25.2 - 18.1 = 7.1 eV for the 21st harmonic at zero KER
  CHECK(electron_energy(BandParity::Odd, 21, 0.0, 1.2, 18.1) ==
        doctest::Approx(7.1).epsilon(1e-12));
  CHECK(electron_energy(BandParity::Odd, 21, 0.6, 1.2, 18.1) ==
        doctest::Approx(6.5).epsilon(1e-12));
  CHECK(electron_energy(BandParity::Even, 21, 0.6, 1.2, 18.1) ==
        doctest::Approx(5.3).epsilon(1e-12));
  CHECK_THROWS_AS(electron_energy(BandParity::Odd, 21, 7.1, 1.2, 18.1),
                  BelowThresholdError);
}

TEST_CASE("single-path odd state is pure") {
  auto spec = base_odd();
  spec.b1.magnitude = 0.0;
  spec.b2.magnitude = 0.0;
  const auto state = assemble_odd(spec, 0.37);
  CHECK(std::abs(state.c_bs) == 0.0);
  CHECK(asymmetry_of_state(state) == doctest::Approx(0.0));
}

TEST_CASE("odd-band interference term is periodic in pi/omega") {
  const auto spec = base_odd();
  const double period = constants::kPi / spec.omega_rad_fs();
  for (double tau : {0.0, 0.21, 1.4}) {
    const auto s1 = assemble_odd(spec, tau);
    const auto s2 = assemble_odd(spec, tau + period);
    const auto i1 = s1.c_bs * std::conj(s1.c_gs);
    const auto i2 = s2.c_bs * std::conj(s2.c_gs);
    CHECK(std::abs(i1 - i2) < 1e-12);
  }
}

TEST_CASE("worked odd-band example: unit magnitudes give A = 4/5 at tau = 0") {
  auto spec = base_odd();  // theta_gs = theta_bs = 0, zero chirp, l_g=1, l_b=0
  const auto state = assemble_odd(spec, 0.0);
  CHECK(std::real(state.c_gs) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(std::abs(std::imag(state.c_gs)) < 1e-12);
  CHECK(std::real(state.c_bs) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::abs(std::imag(state.c_bs)) < 1e-12);
  CHECK(asymmetry_of_state(state) == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(asymmetry_odd(spec, 0.0) == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("single-path even state is pure with zero asymmetry") {
  auto spec = base_even();
  spec.g2.magnitude = 0.0;
  spec.b1.magnitude = 0.0;
  const auto state = assemble_even(spec, 0.5);
  CHECK(std::abs(state.c_bs) == 0.0);
  CHECK(asymmetry_of_state(state) == doctest::Approx(0.0));
}

TEST_CASE("even-band two-slit closure |c_gs| = 2|g1||cos(omega tau)|") {
  const auto spec = base_even();
  const double w = spec.omega_rad_fs();
  for (double tau : {0.0, 0.11, 0.43, 0.86, 1.2}) {
    const auto state = assemble_even(spec, tau);
    CHECK(std::abs(state.c_gs) ==
          doctest::Approx(2.0 * 0.5 * std::fabs(std::cos(w * tau))).epsilon(1e-12));
  }
}

TEST_CASE("matched parameters put odd and even bands pi out of phase") {
  // same magnitudes, phases and partial waves for both parities
  PathwaySpec odd = base_odd();
  odd.b1 = {0.5, 0};
  odd.b2 = {0.5, 0};
  odd.theta_gs = 0.8;

  PathwaySpec even = base_even();
  even.g1 = {0.5, 1};  // matched to the odd-band path waves
  even.g2 = {0.5, 1};
  even.b1 = {1.0, 0};
  even.theta_gs = 0.8;

  const double w2 = 2.0 * odd.omega_rad_fs();
  std::vector<fitting::WeightedSample> so, se;
  const double period = constants::kPi / odd.omega_rad_fs();
  for (int k = 0; k < 32; ++k) {
    const double tau = 2.0 * period * k / 32.0;
    so.push_back({tau, asymmetry_odd(odd, tau), 0.0});
    se.push_back({tau, asymmetry_even(even, tau), 0.0});
  }
  const auto fo = fitting::fit_cosine(so, w2);
  const auto fe = fitting::fit_cosine(se, w2);
  double dphi = std::fabs(fo.phase - fe.phase);
  while (dphi > 2.0 * constants::kPi) dphi -= 2.0 * constants::kPi;
  CHECK(std::fabs(dphi - constants::kPi) < 1e-9);
  // the matched even band is the exact mirror of the odd band
  for (const auto& s : so)
    CHECK(asymmetry_even(even, s.tau_fs) == doctest::Approx(-s.value).epsilon(1e-12));
}

TEST_CASE("asymmetry of elementary states") {
  FinalState s;
  s.c_gs = {1.0, 0.0};
  s.c_bs = {0.0, 0.0};
  CHECK(asymmetry_of_state(s) == doctest::Approx(0.0));
  s.c_bs = {1.0, 0.0};
  CHECK(asymmetry_of_state(s) == doctest::Approx(-1.0));
  s.c_bs = {0.0, 1.0};
  CHECK(asymmetry_of_state(s) == doctest::Approx(0.0));
  s.c_gs = {0.0, 0.0};
  s.c_bs = {0.0, 0.0};
  CHECK_THROWS_AS(asymmetry_of_state(s), ZeroStateError);
}

TEST_CASE("two-path reduction reproduces the cosine form") {
  // with b2 = 0 the asymmetry reduces to
  // -2|a||b| cos(arg a - arg b' - 2 w tau) / (|a|^2 + |b|^2)
  rng::Philox rng(1234, 0);
  for (int trial = 0; trial < 100; ++trial) {
    auto spec = random_spec(rng);
    spec.parity = BandParity::Odd;
    spec.b2.magnitude = 0.0;
    if (spec.g1.magnitude < 1e-6 && spec.b1.magnitude < 1e-6) continue;
    const double tau = 3.0 * (rng.uniform() - 0.5);
    const double w = spec.omega_rad_fs();

    const double arg_a = spec.theta_gs - 0.5 * constants::kPi -
                         0.5 * constants::kPi * spec.g1.partial_wave +
                         spec.xuv.phase(spec.q);
    const double arg_b = spec.theta_bs -
                         0.5 * constants::kPi * spec.b1.partial_wave +
                         spec.xuv.phase(spec.q - 2);
    const double a = spec.g1.magnitude, b = spec.b1.magnitude;
    const double expected = -2.0 * a * b *
                            std::cos(arg_a - arg_b - 2.0 * w * tau) /
                            (a * a + b * b);
    CHECK(asymmetry_odd(spec, tau) == doctest::Approx(expected).epsilon(1e-11));
  }
}

TEST_CASE("b1 = 0 makes the asymmetry time independent") {
  auto spec = base_odd();
  spec.b1.magnitude = 0.0;
  spec.theta_gs = 0.9;
  double lo = 1e300, hi = -1e300;
  for (int k = 0; k < 64; ++k) {
    const double a = asymmetry_odd(spec, 0.05 * k);
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  }
  CHECK(hi - lo < 1e-12);
}

TEST_CASE("b2 = 0 makes the time-averaged asymmetry vanish") {
  auto spec = base_odd();
  spec.b2.magnitude = 0.0;
  spec.theta_gs = 1.3;
  CHECK(std::fabs(time_average_asymmetry(spec, 64)) < 1e-10);
}

TEST_CASE("time average against a dense Riemann oracle") {
  auto spec = base_odd();
  spec.theta_gs = 0.7;
  spec.b1 = {0.6, 0};
  spec.b2 = {0.4, 0};
  const double avg = time_average_asymmetry(spec, 4096);

  const double period = constants::kPi / spec.omega_rad_fs();
  double oracle = 0.0;
  const int n = 100000;
  for (int k = 0; k < n; ++k) oracle += asymmetry_odd(spec, period * k / n);
  oracle /= n;
  CHECK(avg == doctest::Approx(oracle).epsilon(1e-6));
  CHECK_THROWS_AS(time_average_asymmetry(spec, 8), Error);
}

TEST_CASE("closed forms equal the assembled state on random specs") {
  rng::Philox rng(99, 0);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto spec = random_spec(rng);
    const double tau = 6.0 * (rng.uniform() - 0.5);
    const auto state = assemble(spec, tau);
    if (std::norm(state.c_gs) + std::norm(state.c_bs) < 1e-12) continue;
    const double a_state = asymmetry_of_state(state);
    const double a_closed = asymmetry(spec, tau);
    CHECK(std::fabs(a_state - a_closed) < 1e-12 * (1.0 + std::fabs(a_state)));
    CHECK(std::fabs(a_closed) <= 1.0 + 1e-12);
  }
}

TEST_CASE("asymmetry is periodic in pi/omega") {
  rng::Philox rng(7, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto spec = random_spec(rng);
    const double period = constants::kPi / spec.omega_rad_fs();
    const double tau = 4.0 * (rng.uniform() - 0.5);
    const auto s0 = assemble(spec, tau);
    if (std::norm(s0.c_gs) + std::norm(s0.c_bs) < 1e-9) continue;
    CHECK(asymmetry(spec, tau) ==
          doctest::Approx(asymmetry(spec, tau + period)).epsilon(1e-12));
  }
}

TEST_CASE("a chirp step on the upper harmonic shifts the extremal delay") {
  auto spec = base_odd();
  spec.b1 = {0.5, 0};
  spec.b2 = {0.0, 0};
  const double w = spec.omega_rad_fs();
  const double period = constants::kPi / w;

  const auto argmax = [&](const PathwaySpec& s) {
    double best_tau = 0.0, best = -1e300;
    for (int k = 0; k < 20000; ++k) {
      const double tau = period * k / 20000.0;
      const double a = asymmetry_odd(s, tau);
      if (a > best) {
        best = a;
        best_tau = tau;
      }
    }
    return best_tau;
  };

  const double tau0 = argmax(spec);
  const double dphi = 0.5;
  auto shifted = spec;
  std::vector<Harmonic> hs = spec.xuv.harmonics();
  for (auto& h : hs)
    if (h.order == spec.q) h.phase += dphi;
  shifted.xuv = XuvSpectrum(hs);
  double shift = argmax(shifted) - tau0;
  while (shift < -0.5 * period) shift += period;
  while (shift > 0.5 * period) shift -= period;
  CHECK(shift == doctest::Approx(dphi / (2.0 * w)).epsilon(2e-3));
}

TEST_CASE("dissociation probability of degenerate cases") {
  auto spec = base_odd();
  spec.g1.magnitude = 0.0;
  spec.b1.magnitude = 0.0;
  spec.b2.magnitude = 0.0;
  CHECK(dissociation_probability(spec, 0.1) == doctest::Approx(0.0));
  spec.g1.magnitude = 0.7;
  CHECK(dissociation_probability(spec, 0.1) == doctest::Approx(0.49).epsilon(1e-12));
}

TEST_CASE("even-band gerade sector oscillates like a RABBITT sideband") {
  const auto spec = base_even();
  const double w = spec.omega_rad_fs();
  for (double tau : {0.0, 0.2, 0.5, 0.9}) {
    const auto state = assemble_even(spec, tau);
    const double gerade = std::norm(state.c_gs);
    CHECK(gerade == doctest::Approx(std::cos(w * tau) * std::cos(w * tau))
                        .epsilon(1e-12));
    // total event weight = gerade sector + constant bs sector
    CHECK(dissociation_probability(spec, tau) ==
          doctest::Approx(gerade + 1.0).epsilon(1e-12));
  }
}

TEST_CASE("concurrence of the parity qubit") {
  FinalState s;
  s.c_gs = {1.0, 0.0};
  s.c_bs = {0.0, 1.0};
  CHECK(concurrence(s) == doctest::Approx(1.0));
  s.c_bs = {0.0, 0.0};
  CHECK(concurrence(s) == doctest::Approx(0.0));
  s.c_gs = {2.0, 0.0};
  s.c_bs = {1.0, 0.0};
  CHECK(concurrence(s) == doctest::Approx(0.8).epsilon(1e-12));
  s.c_gs = {0.0, 0.0};
  s.c_bs = {0.0, 0.0};
  CHECK_THROWS_AS(concurrence(s), ZeroStateError);
}

TEST_CASE("asymmetry is bounded by the concurrence") {
  rng::Philox rng(17, 1);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto spec = random_spec(rng);
    const double tau = 4.0 * (rng.uniform() - 0.5);
    const auto state = assemble(spec, tau);
    if (std::norm(state.c_gs) + std::norm(state.c_bs) < 1e-9) continue;
    CHECK(std::fabs(asymmetry_of_state(state)) <= concurrence(state) + 1e-12);
  }
  // equality when the relative phase is 0 or pi
  FinalState aligned;
  aligned.c_gs = {0.3, 0.0};
  aligned.c_bs = {-0.9, 0.0};
  CHECK(std::fabs(asymmetry_of_state(aligned)) ==
        doctest::Approx(concurrence(aligned)).epsilon(1e-12));
}

TEST_CASE("spec validation enforces parity-consistent partial waves") {
  auto odd = base_odd();
  CHECK_NOTHROW(validate_spec(odd));
  odd.g1.partial_wave = 2;  // gerade wave on the one-photon path
  CHECK_THROWS_AS(validate_spec(odd), Error);

  auto even = base_even();
  CHECK_NOTHROW(validate_spec(even));
  even.b1.partial_wave = 0;
  CHECK_THROWS_AS(validate_spec(even), Error);

  auto neg = base_odd();
  neg.b1.magnitude = -0.1;
  CHECK_THROWS_AS(validate_spec(neg), Error);
}

TEST_CASE("missing lower harmonic is reported") {
  auto spec = base_odd();
  spec.q = 15;  // q - 2 = 13 not in the comb
  CHECK_THROWS_AS(assemble_odd(spec, 0.0), MissingHarmonicError);
}
