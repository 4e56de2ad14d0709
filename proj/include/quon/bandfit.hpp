#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "quon/qnum.hpp"

namespace quon {

struct BandInputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BandLevel {
  int l = 0;
  double energy_kev = 0.0;
  double weight = 1.0;
};

/// Rotational-band data: even l, strictly increasing; an l = 0 entry carries
/// energy 0 (band-head convention). A two-parameter fit needs at least two
/// levels with l > 0.
struct BandData {
  std::vector<BandLevel> levels;
};

/// Parses `l,energy_kev[,weight]` CSV with `#` comment lines and validates the
/// band invariants. Throws BandInputError.
BandData parse_band_csv(std::istream& in);
BandData load_band_csv(const std::string& path);

struct ALinearFit {
  double inertia_A = 0.0;
  double sse = 0.0;
};

/// Closed-form minimizer of Σ w (A f_l - E_l)² at fixed q, where
/// f_l = ([2l]/2)([2l]/2 + 1): A* = Σ w f E / Σ w f². Throws when every level
/// sits at l = 0.
ALinearFit optimal_A_given_q(const BandData& band, DeformationParameter q);

struct FitResult {
  double inertia_A = 0.0;
  double q = 0.0;
  double rms_residual = 0.0;
  std::vector<double> per_level_residuals;  // E_exp - E_fit, in band order
  long evaluations = 0;
  bool boundary_minimum = false;
};

/// One-dimensional search over q with A profiled out analytically: coarse grid
/// (step 1e-3, lowest-q tie-break) over (q_min, q_max], then golden-section
/// refinement to |Δq| < 1e-8 around the grid minimum.
FitResult fit_band(const BandData& band, double q_min = 0.0, double q_max = 1.0);

}  // namespace quon
