#include "atl/fitting.hpp"

#include <algorithm>
#include <cmath>

#include "atl/constants.hpp"
#include "atl/errors.hpp"

namespace atl::fitting {

namespace {

// solve the symmetric 3x3 system m x = r by Cramer's rule
bool solve3(const double m[3][3], const double r[3], double x[3]) {
  const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                     m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  double scale = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) scale = std::max(scale, std::fabs(m[i][j]));
  if (std::fabs(det) < 1e-12 * scale * scale * scale) return false;
  for (int k = 0; k < 3; ++k) {
    double mk[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) mk[i][j] = j == k ? r[i] : m[i][j];
    x[k] = (mk[0][0] * (mk[1][1] * mk[2][2] - mk[1][2] * mk[2][1]) -
            mk[0][1] * (mk[1][0] * mk[2][2] - mk[1][2] * mk[2][0]) +
            mk[0][2] * (mk[1][0] * mk[2][1] - mk[1][1] * mk[2][0])) /
           det;
  }
  return true;
}

// inverse of a symmetric positive-definite 3x3
bool invert3(const double m[3][3], double inv[3][3]) {
  const double r0[3] = {1, 0, 0}, r1[3] = {0, 1, 0}, r2[3] = {0, 0, 1};
  double c0[3], c1[3], c2[3];
  if (!solve3(m, r0, c0) || !solve3(m, r1, c1) || !solve3(m, r2, c2)) return false;
  for (int i = 0; i < 3; ++i) {
    inv[i][0] = c0[i];
    inv[i][1] = c1[i];
    inv[i][2] = c2[i];
  }
  return true;
}

double wrap_pi(double phi) {
  while (phi <= -constants::kPi) phi += 2.0 * constants::kPi;
  while (phi > constants::kPi) phi -= 2.0 * constants::kPi;
  return phi;
}

}  // namespace

CosineFit fit_cosine(const std::vector<WeightedSample>& samples,
                     double angular_frequency) {
  if (!(angular_frequency > 0.0)) throw Error("fit_cosine: frequency must be positive");
  if (samples.size() < 5)
    throw InsufficientDataError("fit_cosine: need at least 5 samples");

  double t_min = samples.front().tau_fs, t_max = samples.front().tau_fs;
  for (const auto& s : samples) {
    t_min = std::min(t_min, s.tau_fs);
    t_max = std::max(t_max, s.tau_fs);
  }
  const double period = 2.0 * constants::kPi / angular_frequency;
  if (t_max - t_min < 0.95 * period)
    throw InsufficientDataError("fit_cosine: samples span less than one period");

  const bool have_sigmas =
      std::any_of(samples.begin(), samples.end(),
                  [](const WeightedSample& s) { return s.sigma > 0.0; });

  double m[3][3] = {{0}}, r[3] = {0};
  for (const auto& s : samples) {
    const double w = s.sigma > 0.0 ? 1.0 / (s.sigma * s.sigma) : 1.0;
    const double basis[3] = {1.0, std::cos(angular_frequency * s.tau_fs),
                             std::sin(angular_frequency * s.tau_fs)};
    for (int i = 0; i < 3; ++i) {
      r[i] += w * basis[i] * s.value;
      for (int j = 0; j < 3; ++j) m[i][j] += w * basis[i] * basis[j];
    }
  }

  double coef[3];
  if (!solve3(m, r, coef))
    throw RankDeficientError("fit_cosine: degenerate delay grid");

  CosineFit fit;
  fit.angular_frequency = angular_frequency;
  fit.offset = coef[0];
  // offset + b cos wt + c sin wt  =  offset + A cos(wt + phase)
  const double b = coef[1], c = coef[2];
  fit.amplitude = std::hypot(b, c);
  fit.phase = fit.amplitude > 0.0 ? std::atan2(-c, b) : 0.0;

  double chi2 = 0.0, wsum = 0.0;
  for (const auto& s : samples) {
    const double w = s.sigma > 0.0 ? 1.0 / (s.sigma * s.sigma) : 1.0;
    const double model = coef[0] + b * std::cos(angular_frequency * s.tau_fs) +
                         c * std::sin(angular_frequency * s.tau_fs);
    const double d = s.value - model;
    chi2 += w * d * d;
    wsum += 1.0;
  }
  fit.residual_rms = std::sqrt(chi2 / wsum);

  double cov[3][3];
  if (invert3(m, cov)) {
    // with unit weights, rescale by the residual variance
    const double scale =
        have_sigmas ? 1.0
                    : chi2 / std::max<std::size_t>(1, samples.size() - 3);
    const double a2 = fit.amplitude * fit.amplitude;
    fit.sigma_offset = std::sqrt(std::max(0.0, cov[0][0] * scale));
    if (a2 > 0.0) {
      // amplitude = hypot(b, c), phase = atan2(-c, b)
      const double da_db = b / fit.amplitude, da_dc = c / fit.amplitude;
      const double dp_db = c / a2, dp_dc = -b / a2;
      fit.sigma_amplitude = std::sqrt(std::max(
          0.0, scale * (da_db * da_db * cov[1][1] + da_dc * da_dc * cov[2][2] +
                        2.0 * da_db * da_dc * cov[1][2])));
      fit.sigma_phase = std::sqrt(std::max(
          0.0, scale * (dp_db * dp_db * cov[1][1] + dp_dc * dp_dc * cov[2][2] +
                        2.0 * dp_db * dp_dc * cov[1][2])));
    }
  }
  return fit;
}

ExponentialFit fit_exponential(const std::vector<double>& x,
                               const std::vector<double>& y, double range_lo,
                               double range_hi,
                               const ExponentialFitOptions& options) {
  if (x.size() != y.size()) throw Error("fit_exponential: size mismatch");

  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < range_lo || x[i] > range_hi) continue;
    if (y[i] <= 0.0) continue;  // NonPositiveBins: excluded
    if (y[i] < options.min_count) continue;
    xs.push_back(x[i]);
    ys.push_back(y[i]);
  }
  if (xs.size() < 4)
    throw InsufficientDataError("fit_exponential: fewer than 4 usable bins");

  // weighted regression of ln y on x; Poisson weight y_i (var[ln y] ~ 1/y)
  double sw = 0, swx = 0, swxx = 0, swl = 0, swxl = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double w = options.poisson_weights ? ys[i] : 1.0;
    const double l = std::log(ys[i]);
    sw += w;
    swx += w * xs[i];
    swxx += w * xs[i] * xs[i];
    swl += w * l;
    swxl += w * xs[i] * l;
  }
  const double det = sw * swxx - swx * swx;
  if (!(std::fabs(det) > 1e-12 * sw * swxx))
    throw RankDeficientError("fit_exponential: degenerate abscissae");
  double slope = (sw * swxl - swx * swl) / det;
  double intercept = (swl * swxx - swx * swxl) / det;

  ExponentialFit fit;
  fit.amplitude = std::exp(intercept);
  fit.rate = std::fabs(slope);
  fit.bins_used = static_cast<int>(xs.size());

  if (options.refine) {
    // a few Gauss-Newton steps on the nonlinear residuals
    double a = fit.amplitude, k = -std::fabs(slope);
    for (int it = 0; it < 8; ++it) {
      double m[2][2] = {{0, 0}, {0, 0}}, r[2] = {0, 0};
      for (std::size_t i = 0; i < xs.size(); ++i) {
        const double w = options.poisson_weights ? 1.0 / ys[i] : 1.0;
        const double e = std::exp(k * xs[i]);
        const double res = ys[i] - a * e;
        const double j0 = e, j1 = a * xs[i] * e;
        m[0][0] += w * j0 * j0;
        m[0][1] += w * j0 * j1;
        m[1][0] += w * j1 * j0;
        m[1][1] += w * j1 * j1;
        r[0] += w * j0 * res;
        r[1] += w * j1 * res;
      }
      const double d = m[0][0] * m[1][1] - m[0][1] * m[1][0];
      if (std::fabs(d) < 1e-30) break;
      const double da = (r[0] * m[1][1] - r[1] * m[0][1]) / d;
      const double dk = (m[0][0] * r[1] - m[1][0] * r[0]) / d;
      a += da;
      k += dk;
      if (std::fabs(da) < 1e-12 * std::fabs(a) && std::fabs(dk) < 1e-12) break;
    }
    if (a > 0.0) {
      fit.amplitude = a;
      fit.rate = std::fabs(k);
    }
  }
  return fit;
}

AlphaBetaProfile extract_alpha_beta(const std::vector<double>& ker_centers,
                                    const std::vector<double>& projection,
                                    const ExponentialFit& fit) {
  if (ker_centers.size() != projection.size())
    throw Error("extract_alpha_beta: size mismatch");
  AlphaBetaProfile profile;
  profile.ker_grid = ker_centers;
  profile.fit = fit;
  profile.alpha_sq.resize(ker_centers.size());
  profile.beta_sq.resize(ker_centers.size());
  for (std::size_t i = 0; i < ker_centers.size(); ++i) {
    profile.alpha_sq[i] = fit.amplitude * std::exp(-fit.rate * ker_centers[i]);
    profile.beta_sq[i] = std::max(0.0, projection[i] - profile.alpha_sq[i]);
  }
  return profile;
}

double bump_center(const AlphaBetaProfile& profile) {
  const double peak =
      *std::max_element(profile.beta_sq.begin(), profile.beta_sq.end());
  if (!(peak > 0.0)) throw InsufficientDataError("bump_center: beta_sq is empty");
  double sw = 0.0, swx = 0.0;
  for (std::size_t i = 0; i < profile.beta_sq.size(); ++i) {
    if (profile.beta_sq[i] < 0.1 * peak) continue;
    sw += profile.beta_sq[i];
    swx += profile.beta_sq[i] * profile.ker_grid[i];
  }
  return swx / sw;
}

ChirpTable sideband_chirp(const std::vector<SidebandScan>& sidebands,
                          double omega_rad_fs) {
  if (sidebands.size() < 2)
    throw InsufficientDataError("sideband_chirp: need at least 2 sidebands");

  std::vector<std::pair<int, CosineFit>> fits;
  for (const auto& sb : sidebands)
    fits.emplace_back(sb.q, fit_cosine(sb.yield_vs_delay, 2.0 * omega_rad_fs));
  std::sort(fits.begin(), fits.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  // yield ~ cos(2 w tau - dphi): the fitted phase is -dphi, so differences
  // relative to the lowest band flip sign
  ChirpTable table;
  const double phase0 = fits.front().second.phase;
  const double sigma0 = fits.front().second.sigma_phase;
  for (const auto& [q, fit] : fits) {
    ChirpEntry entry;
    entry.dphi = wrap_pi(-(fit.phase - phase0));
    entry.sigma = std::sqrt(fit.sigma_phase * fit.sigma_phase + sigma0 * sigma0);
    table[q] = entry;
  }
  return table;
}

}  // namespace atl::fitting
