#pragma once

#include <string>
#include <vector>

#include "starlike/analytic_map.hpp"
#include "starlike/regions.hpp"

namespace starlike {

/// Default evidence ladder: positive margins on all three rungs with 2048
/// samples per circle count as numerical confirmation of p(D) in the region.
inline const std::vector<double> kDefaultRadii{0.9, 0.99, 0.999};
inline constexpr int kDefaultSamples = 2048;
inline constexpr int kMinSamples = 64;

/// Evidence record for p(D) subset of a target region, from sampling circles.
///
/// A positive `min_margin` supports the subordination; a negative one is a
/// concrete point where it fails. Series-backed maps also carry a truncation
/// tail bound, and the report is `inconclusive` when that bound exceeds 1% of
/// |min_margin|.
struct SubordinationReport {
  std::string map_name;
  std::string region_name;
  std::string route;  // "series" | "rational" | "closed-form"
  double min_margin = 0.0;
  cplx witness_z;
  cplx witness_w;
  std::vector<double> radii;
  std::vector<double> min_margin_per_radius;
  int samples_per_circle = 0;
  double tail_bound = 0.0;
  bool inconclusive = false;

  bool holds() const { return !inconclusive && min_margin > 0.0; }
};

/// Margins of `p` at z = r e^{2 pi i j/m}, j = 0..m-1.
std::vector<double> circle_margins(const AnalyticMap& p, const Region& target, double r, int m);

/// Radii must be strictly increasing in (0, 1) and m >= 64 (InvalidArgument).
/// A failure to evaluate (non-finite value, w = 0 for a sector) raises
/// EvaluationFailure naming the sample.
SubordinationReport check_subordination(const AnalyticMap& p, const Region& target,
                                        const std::vector<double>& radii = kDefaultRadii,
                                        int samples_per_circle = kDefaultSamples);

enum class RealPartMode { Plain, Starlike };

/// Minimum over |z| = r of Re map(z) (Plain) or Re(z map'(z)/map(z))
/// (Starlike). Throws ZeroOnCircle when |map| < 1e-12 at a sample.
double min_real_part(const AnalyticMap& map, double r, int samples, RealPartMode mode);

}  // namespace starlike
