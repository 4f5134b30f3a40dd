#include "starlike/subordination.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "starlike/error.hpp"

namespace starlike {

namespace {

cplx sample_point(double r, int j, int m) { return std::polar(r, 2.0 * std::numbers::pi * j / m); }

std::string describe(cplx z) {
  std::ostringstream out;
  out.precision(17);
  out << "z = (" << z.real() << ", " << z.imag() << ")";
  return out.str();
}

double margin_at(const AnalyticMap& p, const Region& target, cplx z, cplx& w) {
  try {
    w = p(z);
  } catch (const MathError& e) {
    throw MathError(ErrorCode::EvaluationFailure, p.name() + " at " + describe(z) + ": " + e.what());
  }
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
    throw MathError(ErrorCode::EvaluationFailure, p.name() + " is not finite at " + describe(z));
  }
  try {
    return target.margin(w);
  } catch (const MathError& e) {
    throw MathError(ErrorCode::EvaluationFailure, target.name() + " margin at " + describe(z) + ": " + e.what());
  }
}

void validate_ladder(const std::vector<double>& radii, int m) {
  if (radii.empty()) throw MathError(ErrorCode::InvalidArgument, "empty radii ladder");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0 && radii[i] < 1.0)) {
      throw MathError(ErrorCode::InvalidArgument, "radii must lie in (0, 1)");
    }
    if (i > 0 && !(radii[i] > radii[i - 1])) {
      throw MathError(ErrorCode::InvalidArgument, "radii must be strictly increasing");
    }
  }
  if (m < kMinSamples) throw MathError(ErrorCode::InvalidArgument, "need at least 64 samples per circle");
}

}  // namespace

std::vector<double> circle_margins(const AnalyticMap& p, const Region& target, double r, int m) {
  std::vector<double> out(static_cast<std::size_t>(m));
  cplx w;
  for (int j = 0; j < m; ++j) out[j] = margin_at(p, target, sample_point(r, j, m), w);
  return out;
}

SubordinationReport check_subordination(const AnalyticMap& p, const Region& target,
                                        const std::vector<double>& radii, int samples_per_circle) {
  validate_ladder(radii, samples_per_circle);

  SubordinationReport report;
  report.map_name = p.name();
  report.region_name = target.name();
  report.route = p.is_series() ? "series" : (p.is_rational() ? "rational" : "closed-form");
  report.radii = radii;
  report.samples_per_circle = samples_per_circle;
  report.min_margin = std::numeric_limits<double>::infinity();

  for (double r : radii) {
    double rung_min = std::numeric_limits<double>::infinity();
    for (int j = 0; j < samples_per_circle; ++j) {
      const cplx z = sample_point(r, j, samples_per_circle);
      cplx w;
      const double m = margin_at(p, target, z, w);
      rung_min = std::min(rung_min, m);
      if (m < report.min_margin) {
        report.min_margin = m;
        report.witness_z = z;
        report.witness_w = w;
      }
    }
    report.min_margin_per_radius.push_back(rung_min);
  }

  if (p.is_series()) {
    const PowerSeries& s = p.series();
    const int n = s.order();
    report.tail_bound = std::abs(s[n]) * std::pow(radii.back(), n) * n;
    report.inconclusive = report.tail_bound > 0.01 * std::abs(report.min_margin);
  }
  return report;
}

double min_real_part(const AnalyticMap& map, double r, int samples, RealPartMode mode) {
  if (!(r > 0.0 && r < 1.0) || samples < 1) {
    throw MathError(ErrorCode::InvalidArgument, "min_real_part needs r in (0, 1) and samples > 0");
  }
  double best = std::numeric_limits<double>::infinity();
  for (int j = 0; j < samples; ++j) {
    const cplx z = sample_point(r, j, samples);
    const PowerSeries jet = map.local(z, mode == RealPartMode::Starlike ? 1 : 0);
    if (std::abs(jet[0]) < 1e-12) {
      throw MathError(ErrorCode::ZeroOnCircle, map.name() + " vanishes at " + describe(z));
    }
    const double value = mode == RealPartMode::Plain ? jet[0].real() : (z * jet[1] / jet[0]).real();
    best = std::min(best, value);
  }
  return best;
}

}  // namespace starlike
