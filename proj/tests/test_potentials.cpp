#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <vector>

#include "atl/constants.hpp"
#include "atl/errors.hpp"
#include "atl/potentials.hpp"

using namespace atl;
using namespace atl::potentials;

namespace {

PotentialCurve linear_pair_upper() {
  // V_u - V_g = 1.2 exactly at R = 4 for V_g = 0
  std::vector<double> rs, vs;
  for (int i = 0; i <= 100; ++i) {
    rs.push_back(0.5 + 0.1 * i);
    vs.push_back(2.4 - 0.3 * rs.back());
  }
  return PotentialCurve(rs, vs, CurveLabel::ExcitedSigmaU);
}

PotentialCurve flat_ground() {
  std::vector<double> rs, vs;
  for (int i = 0; i <= 100; ++i) {
    rs.push_back(0.5 + 0.1 * i);
    vs.push_back(0.0);
  }
  return PotentialCurve(rs, vs, CurveLabel::GroundSigmaG);
}

}  // namespace

TEST_CASE("embedded tables: node exactness and basic shape") {
  const auto& vg = embedded_ground_sigma_g();
  const auto& vu = embedded_excited_sigma_u();
  // interpolant node-exactness at a few spot nodes
  for (std::size_t i : {0u, 10u, 60u, 200u}) {
    CHECK(vg.eval(vg.r_grid()[i]) == vg.v_grid()[i]);
    CHECK(vu.eval(vu.r_grid()[i]) == vu.v_grid()[i]);
  }
  CHECK(vg.r_min() <= 0.5);
  CHECK(vg.r_max() >= 40.0);
  CHECK(vg.r_grid().size() >= 100);
}

TEST_CASE("embedded 1s sigma_g tends to the 18.1 eV dissociation limit") {
  const auto& vg = embedded_ground_sigma_g();
  CHECK(std::fabs(vg.eval(40.0) - 18.1) < 0.01);
  CHECK(std::fabs(vg.eval(vg.r_max()) - 18.1) < 0.01);
}

TEST_CASE("g and u curves share the asymptote and keep their order") {
  const auto& vg = embedded_ground_sigma_g();
  const auto& vu = embedded_excited_sigma_u();
  CHECK(std::fabs(vg.eval(40.0) - vu.eval(40.0)) < 0.01);
  for (double r : vg.r_grid()) CHECK(vu.eval(r) >= vg.eval(r) - 1e-12);
  CHECK_NOTHROW(validate_physical_pair(vg, vu));
}

TEST_CASE("midpoint on the locally linear tail matches the linear oracle") {
  const auto& vg = embedded_ground_sigma_g();
  const auto& rs = vg.r_grid();
  // far tail nodes (R > 60 a.u.) are numerically linear
  for (std::size_t i = rs.size() - 6; i + 1 < rs.size(); ++i) {
    const double mid = 0.5 * (rs[i] + rs[i + 1]);
    const double linear = 0.5 * (vg.eval(rs[i]) + vg.eval(rs[i + 1]));
    CHECK(vg.eval(mid) == doctest::Approx(linear).epsilon(1e-9));
  }
}

TEST_CASE("crossing radius: constructed root at exactly 4.0") {
  const auto vg = flat_ground();
  const auto vu = linear_pair_upper();
  CHECK(crossing_radius(vg, vu, 1.2) == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("crossing radius: embedded tables cross near 5 a.u. for 1.2 eV") {
  const double rf = crossing_radius(embedded_ground_sigma_g(),
                                    embedded_excited_sigma_u(), 1.2);
  CHECK(std::fabs(rf - 5.0) < 0.5);
}

TEST_CASE("crossing radius agrees with a dense-scan oracle") {
  const auto& vg = embedded_ground_sigma_g();
  const auto& vu = embedded_excited_sigma_u();
  const double rf = crossing_radius(vg, vu, 1.2);
  // oracle: argmin |V_u - V_g - hw| on a dense grid
  double best_r = 0.0, best = 1e300;
  for (int i = 0; i <= 200000; ++i) {
    const double r = 0.5 + (40.0 - 0.5) * i / 200000.0;
    const double d = std::fabs(vu.eval(r) - vg.eval(r) - 1.2);
    if (d < best) {
      best = d;
      best_r = r;
    }
  }
  CHECK(std::fabs(rf - best_r) < (40.0 - 0.5) / 200000.0 + 1e-9);
  CHECK(std::fabs(vu.eval(rf) - vg.eval(rf) - 1.2) < 1e-6);
}

TEST_CASE("crossing radius: no crossing throws") {
  const auto vg = flat_ground();
  const auto vu = linear_pair_upper();
  CHECK_THROWS_AS(crossing_radius(vg, vu, 50.0), NoCrossingError);
}

TEST_CASE("zero coupling reproduces the sorted diabats with zero gap") {
  const auto& vg = embedded_ground_sigma_g();
  const auto& vu = embedded_excited_sigma_u();
  IrFieldParams ir{1.2, 2e11};
  CouplingModel off;
  off.dipole = CouplingModel::Dipole::None;
  const auto pair = dress_curves(vg, vu, ir, off);
  CHECK(pair.gap_width_ev < 1e-8);
  for (double r : {1.0, 3.0, 5.0, 8.0, 20.0}) {
    const double a = vg.eval(r), b = vu.eval(r) - 1.2;
    CHECK(pair.lower.eval(r) == doctest::Approx(std::min(a, b)).epsilon(1e-10));
    CHECK(pair.upper.eval(r) == doctest::Approx(std::max(a, b)).epsilon(1e-10));
  }
}

TEST_CASE("gap width matches the closed-form field-amplitude oracle") {
  const auto& vg = embedded_ground_sigma_g();
  const auto& vu = embedded_excited_sigma_u();
  IrFieldParams ir{1.2, 2e11};
  const auto pair = dress_curves(vg, vu, ir, CouplingModel{});
  // E0 = sqrt(I / 3.509e16); W = R_f E0 / 4 (hartree); gap = 2 W
  const double e0 = std::sqrt(2e11 / 3.509e16);
  const double w_ev = pair.crossing_radius_rf * e0 / 4.0 * constants::kHartreeEv;
  CHECK(pair.gap_width_ev == doctest::Approx(2.0 * w_ev).epsilon(1e-9));
}

TEST_CASE("trace of the dressed pair equals the diabatic trace") {
  const auto& vg = embedded_ground_sigma_g();
  const auto& vu = embedded_excited_sigma_u();
  IrFieldParams ir{1.2, 2e11};
  const auto pair = dress_curves(vg, vu, ir, CouplingModel{});
  for (double r : pair.lower.r_grid()) {
    const double trace = pair.lower.eval(r) + pair.upper.eval(r);
    const double diabatic = vg.eval(r) + vu.eval(r) - 1.2;
    CHECK(trace == doctest::Approx(diabatic).epsilon(1e-12));
  }
}

TEST_CASE("doubling the intensity scales the gap by sqrt(2)") {
  const auto& vg = embedded_ground_sigma_g();
  const auto& vu = embedded_excited_sigma_u();
  const auto g1 = dress_curves(vg, vu, IrFieldParams{1.2, 2e11}, CouplingModel{});
  const auto g2 = dress_curves(vg, vu, IrFieldParams{1.2, 4e11}, CouplingModel{});
  CHECK(g2.gap_width_ev / g1.gap_width_ev ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("dressed lower never rises above the diabatic minimum") {
  const auto& vg = embedded_ground_sigma_g();
  const auto& vu = embedded_excited_sigma_u();
  const auto pair = dress_curves(vg, vu, IrFieldParams{1.2, 2e11}, CouplingModel{});
  for (double r : pair.lower.r_grid()) {
    const double dmin = std::min(vg.eval(r), vu.eval(r) - 1.2);
    CHECK(pair.lower.eval(r) <= dmin + 1e-12);
    CHECK(pair.lower.eval(r) <= dmin + 0.5 * pair.gap_width_ev + 1e-12);
    CHECK(pair.upper.eval(r) >= dmin - 1e-12);
  }
}

TEST_CASE("dressed curves rejoin the diabats asymptotically") {
  const auto& vg = embedded_ground_sigma_g();
  const auto& vu = embedded_excited_sigma_u();
  const auto pair = dress_curves(vg, vu, IrFieldParams{1.2, 2e11}, CouplingModel{});
  for (double r = 40.0; r <= 100.0; r += 5.0) {
    const double a = vg.eval(r), b = vu.eval(r) - 1.2;
    CHECK(std::fabs(pair.lower.eval(r) - std::min(a, b)) < 1e-3);
    CHECK(std::fabs(pair.upper.eval(r) - std::max(a, b)) < 1e-3);
  }
}

TEST_CASE("field amplitude follows E0 = sqrt(I / 3.509e16)") {
  IrFieldParams ir{1.2, 2e11};
  CHECK(ir.field_amplitude() ==
        doctest::Approx(std::sqrt(2e11 / 3.509e16)).epsilon(1e-12));
  IrFieldParams bad{1.2, 0.0};
  CHECK_THROWS_AS(bad.field_amplitude(), Error);
}

TEST_CASE("curve files load with comments and fail with diagnostics") {
  const std::string path = "/tmp/atl_test_curve.dat";
  {
    std::ofstream out(path);
    out << "# comment line\n0.5 1.0\n1.0 0.5  # inline comment\n\n2.0 0.25\n";
  }
  const auto curve = load_curve(path, CurveLabel::GroundSigmaG);
  CHECK(curve.r_grid().size() == 3);
  CHECK(curve.eval(1.0) == doctest::Approx(0.5));

  {
    std::ofstream out(path);
    out << "0.5\n";
  }
  CHECK_THROWS_AS(load_curve(path, CurveLabel::GroundSigmaG), DataError);
  CHECK_THROWS_AS(load_curve("/nonexistent/file.dat", CurveLabel::GroundSigmaG),
                  DataError);
  std::remove(path.c_str());
}

TEST_CASE("shipped data files match the embedded tables") {
  const auto file_g = load_curve(std::string(ATL_TEST_DATA_DIR) + "/h2plus_1ssg.dat",
                                 CurveLabel::GroundSigmaG);
  const auto& vg = embedded_ground_sigma_g();
  REQUIRE(file_g.r_grid().size() == vg.r_grid().size());
  for (std::size_t i = 0; i < vg.r_grid().size(); i += 13)
    CHECK(file_g.v_grid()[i] == doctest::Approx(vg.v_grid()[i]).epsilon(1e-12));
}

TEST_CASE("analytic fallback curves behave as documented") {
  const auto morse =
      make_morse_curve(2.79, 2.0, 0.72, 18.1, 0.5, 40.0, 400,
                       CurveLabel::GroundSigmaG);
  CHECK(morse.eval(2.0) == doctest::Approx(18.1 - 2.79).epsilon(1e-6));
  CHECK(morse.eval(40.0) == doctest::Approx(18.1).epsilon(1e-3));
  const auto rep = make_repulsive_curve(60.0, 1.1, 18.1, 0.5, 40.0, 400,
                                        CurveLabel::ExcitedSigmaU);
  CHECK(rep.eval(40.0) == doctest::Approx(18.1).epsilon(1e-6));
  CHECK(rep.eval(0.5) > rep.eval(5.0));
}
