#pragma once

#include <map>
#include <vector>

namespace atl::fitting {

// value(tau) = offset + amplitude * cos(angular_frequency * tau + phase),
// amplitude >= 0 and phase in (-pi, pi].
struct CosineFit {
  double offset = 0.0;
  double amplitude = 0.0;
  double phase = 0.0;
  double angular_frequency = 0.0;  // fixed input, rad/fs
  double residual_rms = 0.0;
  double sigma_offset = 0.0;
  double sigma_amplitude = 0.0;
  double sigma_phase = 0.0;
};

struct WeightedSample {
  double tau_fs = 0.0;
  double value = 0.0;
  double sigma = 0.0;  // <= 0 means unit weight
};

// Weighted linear least squares on {1, cos wt, sin wt} via the closed-form
// normal equations.  Needs >= 5 samples spanning at least one period
// (InsufficientDataError) and non-degenerate delays (RankDeficientError).
CosineFit fit_cosine(const std::vector<WeightedSample>& samples,
                     double angular_frequency);

struct ExponentialFit {
  double amplitude = 0.0;  // A of A exp(-|a| x)
  double rate = 0.0;       // |a|
  int bins_used = 0;
};

struct ExponentialFitOptions {
  double min_count = 0.0;  // bins below this are excluded (Poisson counts)
  bool poisson_weights = true;
  bool refine = false;  // optional Gauss-Newton pass after the log-linear fit
};

// Fit A exp(-a x) to (x, y) pairs with x inside [range_lo, range_hi] by
// weighted log-linear regression (weight y per bin, the Poisson choice).
// Non-positive bins are skipped; fewer than 4 usable bins is an error.
ExponentialFit fit_exponential(const std::vector<double>& x,
                               const std::vector<double>& y, double range_lo,
                               double range_hi,
                               const ExponentialFitOptions& options = {});

// Ground-state/bond-softening decomposition of a band's KER projection:
// alpha_sq is the fitted exponential continued over the full range, beta_sq
// the non-negative residual.  (Odd bands split beta over the two paths,
// b1 = b2 = sqrt(beta_sq)/2; even bands do the same for the g paths.)
struct AlphaBetaProfile {
  std::vector<double> ker_grid;
  std::vector<double> alpha_sq;
  std::vector<double> beta_sq;
  ExponentialFit fit;
};

AlphaBetaProfile extract_alpha_beta(const std::vector<double>& ker_centers,
                                    const std::vector<double>& projection,
                                    const ExponentialFit& fit);

// Centroid of the beta_sq bump over bins above 10% of its peak.
double bump_center(const AlphaBetaProfile& profile);

// XUV chirp table: per reference order q, the spectral-phase difference
// phi_q - phi_{q-2} relative to the lowest fitted sideband.
struct ChirpEntry {
  double dphi = 0.0;
  double sigma = 0.0;
};
using ChirpTable = std::map<int, ChirpEntry>;

struct SidebandScan {
  int q = 0;  // reference (upper) odd harmonic of the sideband
  std::vector<WeightedSample> yield_vs_delay;
};

// RABBITT-style extraction: fit each sideband yield with a 2-omega cosine and
// report phase differences relative to the lowest band.  Needs >= 2 bands.
ChirpTable sideband_chirp(const std::vector<SidebandScan>& sidebands,
                          double omega_rad_fs);

}  // namespace atl::fitting
