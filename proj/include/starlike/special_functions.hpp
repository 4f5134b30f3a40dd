#pragma once

#include "starlike/power_series.hpp"

namespace starlike {

/// Parameters of the Kummer function Phi(a, c; z). Construction rejects
/// c within 1e-12 of a nonpositive integer (PoleParameter).
class KummerParams {
 public:
  KummerParams(double a, double c);
  double a() const noexcept { return a_; }
  double c() const noexcept { return c_; }

 private:
  double a_;
  double c_;
};

/// Generalized normalized Bessel function u_{p,b,c}; k = p + (b+1)/2 must
/// not be a nonpositive integer.
class BesselParams {
 public:
  BesselParams(double p, double b, double c);
  double p() const noexcept { return p_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  double k() const noexcept { return p_ + (b_ + 1.0) / 2.0; }
  /// u_{p+1,b,c}, i.e. k -> k + 1.
  BesselParams next() const { return BesselParams(p_ + 1.0, b_, c_); }

 private:
  double p_;
  double b_;
  double c_;
};

/// True when x lies within `tol` of {0, -1, -2, ...}.
bool is_nonpositive_integer(double x, double tol = 1e-12);

/// Rising factorial (lambda)_n.
double pochhammer(double lambda, int n);

PowerSeries kummer_series(const KummerParams& params, int order = kDefaultOrder);
PowerSeries bessel_u_series(const BesselParams& params, int order = kDefaultOrder);

struct SeriesValue {
  cplx value;
  int terms_used;
};

/// Partial sums stop after two consecutive terms fall below 1e-15 of the
/// running sum (alternating series need the second guard term).
SeriesValue kummer_eval(const KummerParams& params, cplx z);
SeriesValue bessel_u_eval(const BesselParams& params, cplx z);

/// Taylor coefficients of Phi(a, c; .) about z0, up to `order`, using
/// Phi^(j) = (a)_j/(c)_j Phi(a+j, c+j; .).
PowerSeries kummer_local(const KummerParams& params, cplx z0, int order);
/// Same for u_p via 4k u_p' = -c u_{p+1}.
PowerSeries bessel_u_local(const BesselParams& params, cplx z0, int order);

/// Max |coefficient| (0..N-2) of z phi'' + (c - z) phi' - a phi where the
/// equation uses `equation` and `phi` may come from different parameters.
double kummer_ode_residual(const PowerSeries& phi, const KummerParams& equation);
double ode_residual_kummer(const KummerParams& params, int order);

/// Max |coefficient| (0..N-2) of 4 z^2 u'' + 4 k z u' + c z u.
double bessel_ode_residual(const PowerSeries& u, const BesselParams& equation);
double ode_residual_bessel(const BesselParams& params, int order);

}  // namespace starlike
