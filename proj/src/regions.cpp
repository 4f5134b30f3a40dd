#include "starlike/regions.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "starlike/error.hpp"

namespace starlike {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    std::ostringstream msg;
    msg << "sector order alpha = " << alpha << " outside (0, 1]";
    throw MathError(ErrorCode::InvalidArgument, msg.str());
  }
}

}  // namespace

Region Region::half_plane(double threshold) { return Region(RegionKind::HalfPlane, threshold); }

Region Region::sector(double alpha) {
  check_alpha(alpha);
  return Region(RegionKind::Sector, alpha);
}

Region Region::cardioid() { return Region(RegionKind::CardioidCAR, 0.0); }

std::string Region::name() const {
  std::ostringstream out;
  switch (kind_) {
    case RegionKind::HalfPlane: out << "HalfPlane(" << parameter_ << ")"; break;
    case RegionKind::Sector: out << "Sector(" << parameter_ << ")"; break;
    case RegionKind::CardioidCAR: out << "CardioidCAR"; break;
  }
  return out.str();
}

double Region::margin(cplx w) const {
  switch (kind_) {
    case RegionKind::HalfPlane: return w.real() - parameter_;
    case RegionKind::Sector: return sector_margin(w, parameter_);
    case RegionKind::CardioidCAR: return car_margin(w);
  }
  return 0.0;
}

cplx phi_car(cplx z) { return 1.0 + 4.0 * z / 3.0 + 2.0 * z * z / 3.0; }

double sector_margin(cplx w, double alpha) {
  if (std::abs(w) < 1e-300) throw MathError(ErrorCode::OriginPoint, "arg undefined at w = 0");
  return alpha * std::numbers::pi / 2.0 - std::abs(std::arg(w));
}

double car_margin(cplx w) { return 2.0 - std::abs(-2.0 + std::sqrt(6.0 * w - 2.0)); }

double car_quartic(cplx w) {
  const double u = w.real();
  const double v = w.imag();
  const double rho = 9.0 * (u * u + v * v);
  const double first = rho - 18.0 * u + 5.0;
  return first * first - 16.0 * (rho - 6.0 * u + 1.0);
}

std::vector<double> t_grid(int samples) {
  if (samples < 2) throw MathError(ErrorCode::InvalidArgument, "t-grid needs at least two samples");
  std::vector<double> ts(static_cast<std::size_t>(samples));
  const double pi = std::numbers::pi;
  for (int j = 0; j < samples; ++j) ts[j] = -pi + 2.0 * pi * j / (samples - 1);
  ts.back() = pi;
  return ts;
}

std::vector<BoundarySample> region_boundary(const Region& region, const std::vector<double>& ts) {
  const double pi = std::numbers::pi;
  std::vector<BoundarySample> out;
  out.reserve(ts.size());
  for (double t : ts) {
    if (t < -pi - 1e-12 || t > pi + 1e-12) {
      throw MathError(ErrorCode::InvalidArgument, "boundary parameter outside [-pi, pi]");
    }
    cplx w;
    switch (region.kind()) {
      case RegionKind::CardioidCAR: w = phi_car(std::polar(1.0, t)); break;
      case RegionKind::HalfPlane: w = cplx(region.parameter(), t); break;
      case RegionKind::Sector: {
        const double r = std::pow(10.0, 4.0 * std::abs(t) / pi - 2.0);
        const double angle = (t >= 0.0 ? 1.0 : -1.0) * region.parameter() * pi / 2.0;
        w = std::polar(r, angle);
        break;
      }
    }
    out.push_back({t, w});
  }
  return out;
}

}  // namespace starlike
