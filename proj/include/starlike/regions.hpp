#pragma once

#include <string>
#include <vector>

#include "starlike/power_series.hpp"

namespace starlike {

enum class RegionKind { HalfPlane, Sector, CardioidCAR };

/// A target set in C with a signed membership margin (positive inside, zero
/// on the boundary) and a boundary parametrization.
///
/// Margins are radians for Sector and absolute units otherwise; they are only
/// comparable within one kind.
class Region {
 public:
  /// {Re w > threshold}; threshold 0 is the right half-plane.
  static Region half_plane(double threshold = 0.0);
  /// {|arg w| < alpha*pi/2}, alpha in (0, 1].
  static Region sector(double alpha);
  /// The image of the unit disc under phi_CAR.
  static Region cardioid();

  RegionKind kind() const noexcept { return kind_; }
  double parameter() const noexcept { return parameter_; }
  std::string name() const;

  double margin(cplx w) const;

 private:
  Region(RegionKind kind, double parameter) : kind_(kind), parameter_(parameter) {}

  RegionKind kind_;
  double parameter_;
};

/// phi_CAR(z) = 1 + 4z/3 + 2z^2/3.
cplx phi_car(cplx z);

/// alpha*pi/2 - |arg w|. Throws OriginPoint when |w| < 1e-300.
double sector_margin(cplx w, double alpha);

/// 2 - |-2 + sqrt(6w - 2)| with the principal square root.
double car_margin(cplx w);

/// (9u^2+9v^2-18u+5)^2 - 16(9u^2+9v^2-6u+1); negative inside the cardioid.
double car_quartic(cplx w);

struct BoundarySample {
  double t;
  cplx w;
};

/// Uniform parameter grid on [-pi, pi], both endpoints included.
std::vector<double> t_grid(int samples);

/// Boundary curve sampled at each t in [-pi, pi]:
///   CardioidCAR: phi_CAR(e^{it});
///   Sector: the ray r e^{i sign(t) alpha pi/2} with r = 10^{4|t|/pi - 2};
///   HalfPlane: threshold + i t.
std::vector<BoundarySample> region_boundary(const Region& region, const std::vector<double>& ts);

}  // namespace starlike
