#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "atl/constants.hpp"
#include "atl/errors.hpp"
#include "atl/potentials.hpp"
#include "atl/rng.hpp"
#include "atl/wkb.hpp"

using namespace atl;
using namespace atl::wkb;
using atl::potentials::CurveLabel;
using atl::potentials::PotentialCurve;

namespace {

// Independent oracle: fixed-step composite Simpson of the zero-extended
// momentum.  Shares only the curve tables with the adaptive integrator.
double simpson_phase(const PotentialCurve& c, double mu, double e_ev, double lo,
                     double hi, long n) {
  const auto p = [&](double r) {
    const double gap = (e_ev - c.eval(r)) / constants::kHartreeEv;
    return gap > 0.0 ? std::sqrt(2.0 * mu * gap) : 0.0;
  };
  const double h = (hi - lo) / n;
  double s = p(lo) + p(hi);
  for (long i = 1; i < n; ++i) s += p(lo + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

PotentialCurve linear_curve(double v0, double slope, double r_lo, double r_hi) {
  std::vector<double> rs, vs;
  for (int i = 0; i <= 1200; ++i) {
    rs.push_back(r_lo + (r_hi - r_lo) * i / 1200.0);
    vs.push_back(v0 + slope * rs.back());
  }
  return PotentialCurve(rs, vs, CurveLabel::GroundSigmaG);
}

PotentialCurve flat_curve(double v, double r_lo, double r_hi) {
  return linear_curve(v, 0.0, r_lo, r_hi);
}

const potentials::DressedPair& default_dressed() {
  static const auto pair = potentials::dress_curves(
      potentials::embedded_ground_sigma_g(), potentials::embedded_excited_sigma_u(),
      potentials::IrFieldParams{1.2, 2e11}, potentials::CouplingModel{});
  return pair;
}

std::map<std::string, double> load_golden() {
  std::ifstream in(std::string(ATL_TEST_FIXTURE_DIR) + "/wkb_golden.txt");
  REQUIRE(in.good());
  std::map<std::string, double> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string key;
    double value;
    ss >> key >> value;
    out[key] = value;
  }
  return out;
}

}  // namespace

TEST_CASE("turning point of a linear curve") {
  const auto curve = linear_curve(10.0, -1.0, 0.0, 12.0);
  CHECK(turning_point(curve, 6.0) == doctest::Approx(4.0).epsilon(1e-10));
}

TEST_CASE("turning point on the embedded table matches a dense-scan oracle") {
  const auto& vg = potentials::embedded_ground_sigma_g();
  const double e = 18.1 + 0.6;
  const double rt = turning_point(vg, e);
  // oracle: innermost sign change on a dense grid, bisected
  double lo = vg.r_min(), hi = vg.r_max();
  double prev = vg.eval(lo) - e;
  double a = 0.0, b = 0.0;
  for (int i = 1; i <= 400000; ++i) {
    const double r = lo + (hi - lo) * i / 400000.0;
    const double f = vg.eval(r) - e;
    if (prev * f <= 0.0) {
      a = lo + (hi - lo) * (i - 1) / 400000.0;
      b = r;
      break;
    }
    prev = f;
  }
  for (int it = 0; it < 100; ++it) {
    const double m = 0.5 * (a + b);
    if ((vg.eval(a) - e) * (vg.eval(m) - e) <= 0.0) {
      b = m;
    } else {
      a = m;
    }
  }
  CHECK(rt == doctest::Approx(0.5 * (a + b)).epsilon(1e-8));
  CHECK(std::fabs(vg.eval(rt) - e) < 1e-8);
}

TEST_CASE("turning point absent when E - V keeps its sign") {
  const auto& vg = potentials::embedded_ground_sigma_g();
  CHECK_THROWS_AS(turning_point(vg, 10.0), NoTurningPointError);  // below minimum
}

TEST_CASE("flat potential reproduces sqrt(2 mu E) L") {
  const auto curve = flat_curve(0.0, 0.0, 1.0);
  WkbPath path{&curve, constants::kHartreeEv, 0.0, 1.0};  // E = 1 hartree
  const auto result = wkb_phase(path, 1e-10);
  const double expected = std::sqrt(2.0 * constants::kReducedMassH2p);
  CHECK(result.phase == doctest::Approx(expected).epsilon(1e-10));
  CHECK(result.phase == doctest::Approx(42.85).epsilon(2e-4));
  CHECK(result.estimated_error < 1e-10);
  CHECK(result.r_turning == doctest::Approx(0.0));
}

TEST_CASE("linear potential matches the closed-form antiderivative") {
  // V = 2R (eV), E = 12 eV: allowed up to R = 6
  const auto curve = linear_curve(0.0, 2.0, 0.0, 10.0);
  WkbPath path{&curve, 12.0, 0.0, 6.0};
  const auto result = wkb_phase(path, 1e-10);
  const double scale =
      std::sqrt(2.0 * constants::kReducedMassH2p / constants::kHartreeEv);
  const double expected = scale * std::pow(12.0, 1.5) / 3.0;
  CHECK(result.phase == doctest::Approx(expected).epsilon(1e-8));
}

TEST_CASE("phase on the embedded curve matches the Simpson oracle and golden") {
  const auto golden = load_golden();
  const auto& vg = potentials::embedded_ground_sigma_g();
  const double e = 18.1 + 0.6;

  const double oracle =
      simpson_phase(vg, constants::kReducedMassH2p, e, vg.r_min(), 40.0, 2000000);
  CHECK(oracle == doctest::Approx(golden.at("theta_gs")).epsilon(1e-9));

  WkbPath path{&vg, e, vg.r_min(), 40.0};
  const auto result = wkb_phase(path, 1e-8);
  CHECK(std::fabs(result.phase - golden.at("theta_gs")) < 1e-4);
  CHECK(result.estimated_error < 1e-7);
}

TEST_CASE("bond-softening path phase matches its golden value") {
  const auto golden = load_golden();
  const auto& lower = default_dressed().lower;
  const double e = 18.1 + 0.6 - 1.2;
  const double oracle = simpson_phase(lower, constants::kReducedMassH2p, e,
                                      lower.r_min(), 40.0, 2000000);
  CHECK(oracle == doctest::Approx(golden.at("theta_bs")).epsilon(1e-9));

  WkbPath path{&lower, e, lower.r_min(), 40.0};
  const auto result = wkb_phase(path, 1e-8);
  CHECK(std::fabs(result.phase - golden.at("theta_bs")) < 1e-4);
}

TEST_CASE("delta_theta of identical paths is zero") {
  const auto& vg = potentials::embedded_ground_sigma_g();
  WkbPath path{&vg, 18.7, vg.r_min(), 40.0};
  CHECK(std::fabs(delta_theta(path, path, 1e-8)) < 1e-9);
}

TEST_CASE("two flat potentials give the closed-form momentum difference") {
  const auto c1 = flat_curve(0.0, 0.0, 20.0);
  const auto c2 = flat_curve(1.0, 0.0, 20.0);  // offset by 1 eV
  const double e = 5.0, length = 8.0;
  WkbPath p1{&c1, e, 0.0, length};
  WkbPath p2{&c2, e, 0.0, length};
  const double scale =
      std::sqrt(2.0 * constants::kReducedMassH2p / constants::kHartreeEv);
  const double expected = (std::sqrt(e) - std::sqrt(e - 1.0)) * scale * length;
  CHECK(delta_theta_at_cutoff(p1, p2, length, 1e-9) ==
        doctest::Approx(expected).epsilon(1e-8));
  // constant momentum difference grows with the cutoff: the doubling check fires
  CHECK_THROWS_AS(delta_theta(p1, p2, 1e-9), NotConvergedError);
}

TEST_CASE("delta_theta on the physical paths matches the Simpson oracle") {
  const auto golden = load_golden();
  const auto& vg = potentials::embedded_ground_sigma_g();
  const auto& lower = default_dressed().lower;
  const double ker = 0.6;

  const double oracle_gs = simpson_phase(vg, constants::kReducedMassH2p,
                                         ker + 18.1, vg.r_min(), 40.0, 2000000);
  const double oracle_bs = simpson_phase(lower, constants::kReducedMassH2p,
                                         ker + 16.9, lower.r_min(), 40.0, 2000000);
  CHECK(oracle_gs - oracle_bs ==
        doctest::Approx(golden.at("delta_theta")).epsilon(1e-8));

  WkbPath gs{&vg, ker + 18.1, vg.r_min(), 40.0};
  WkbPath bs{&lower, ker + 16.9, lower.r_min(), 40.0};
  CHECK(std::fabs(delta_theta(gs, bs, 1e-7) - golden.at("delta_theta")) < 1e-3);
}

TEST_CASE("delta_theta is cutoff stable once the asymptotic momenta match") {
  const auto& vg = potentials::embedded_ground_sigma_g();
  const auto& lower = default_dressed().lower;
  for (double ker : {0.1, 0.35, 0.6, 1.0}) {
    WkbPath gs{&vg, ker + 18.1, vg.r_min(), 40.0};
    WkbPath bs{&lower, ker + 16.9, lower.r_min(), 40.0};
    const double d40 = delta_theta_at_cutoff(gs, bs, 40.0, 1e-8);
    const double d80 = delta_theta_at_cutoff(gs, bs, 80.0, 1e-8);
    CHECK(std::fabs(d80 - d40) < 1e-3);
  }
}

TEST_CASE("phase increases monotonically with energy") {
  const auto& vg = potentials::embedded_ground_sigma_g();
  rng::Philox rng(42, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const double e1 = 18.2 + 1.6 * rng.uniform();
    const double e2 = e1 + 0.05 + 0.2 * rng.uniform();
    WkbPath p1{&vg, e1, vg.r_min(), 40.0};
    WkbPath p2{&vg, e2, vg.r_min(), 40.0};
    CHECK(wkb_phase(p2, 1e-8).phase > wkb_phase(p1, 1e-8).phase);
  }
}

TEST_CASE("halving the tolerance never drifts from the oracle") {
  const auto& vg = potentials::embedded_ground_sigma_g();
  const double e = 18.7;
  const double oracle =
      simpson_phase(vg, constants::kReducedMassH2p, e, vg.r_min(), 40.0, 2000000);
  double prev_err = 1e300;
  for (double tol = 1e-4; tol > 1e-9; tol *= 0.5) {
    WkbPath path{&vg, e, vg.r_min(), 40.0};
    const double err = std::fabs(wkb_phase(path, tol).phase - oracle);
    CHECK(err <= prev_err + 1e-9);
    prev_err = err;
  }
}

TEST_CASE("forbidden path reports NoTurningPoint") {
  const auto& vg = potentials::embedded_ground_sigma_g();
  WkbPath path{&vg, 10.0, vg.r_min(), 40.0};  // below the well minimum
  CHECK_THROWS_AS(wkb_phase(path, 1e-8), NoTurningPointError);
}
