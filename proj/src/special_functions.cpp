#include "starlike/special_functions.hpp"

#include <cmath>
#include <sstream>

#include "starlike/error.hpp"

namespace starlike {

namespace {

constexpr double kRelativeStop = 1e-15;
constexpr int kMaxTerms = 100000;

/// Sums 1 + sum_n t_n with t_n = t_{n-1} * ratio(n) * z.
template <typename Ratio>
SeriesValue sum_hypergeometric(cplx z, Ratio ratio) {
  cplx sum = 1.0;
  cplx term = 1.0;
  int small_in_a_row = 0;
  int n = 1;
  for (; n < kMaxTerms; ++n) {
    term *= ratio(n) * z;
    sum += term;
    if (std::abs(term) <= kRelativeStop * std::abs(sum)) {
      if (++small_in_a_row == 2) break;
    } else {
      small_in_a_row = 0;
    }
  }
  if (n >= kMaxTerms || !std::isfinite(sum.real()) || !std::isfinite(sum.imag())) {
    throw MathError(ErrorCode::EvaluationFailure, "series did not converge");
  }
  return {sum, n + 1};
}

}  // namespace

bool is_nonpositive_integer(double x, double tol) {
  return x <= tol && std::abs(x - std::round(x)) <= tol;
}

KummerParams::KummerParams(double a, double c) : a_(a), c_(c) {
  if (!std::isfinite(a) || !std::isfinite(c)) {
    throw MathError(ErrorCode::InvalidArgument, "Kummer parameters must be finite");
  }
  if (is_nonpositive_integer(c)) {
    std::ostringstream msg;
    msg << "c = " << c << " is a nonpositive integer";
    throw MathError(ErrorCode::PoleParameter, msg.str());
  }
}

BesselParams::BesselParams(double p, double b, double c) : p_(p), b_(b), c_(c) {
  if (!std::isfinite(p) || !std::isfinite(b) || !std::isfinite(c)) {
    throw MathError(ErrorCode::InvalidArgument, "Bessel parameters must be finite");
  }
  if (is_nonpositive_integer(k())) {
    std::ostringstream msg;
    msg << "k = p + (b+1)/2 = " << k() << " is a nonpositive integer";
    throw MathError(ErrorCode::PoleParameter, msg.str());
  }
}

double pochhammer(double lambda, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= lambda + i;
  return r;
}

PowerSeries kummer_series(const KummerParams& params, int order) {
  std::vector<cplx> c(static_cast<std::size_t>(order) + 1);
  double coeff = 1.0;
  c[0] = 1.0;
  for (int k = 1; k <= order; ++k) {
    coeff *= (params.a() + k - 1) / ((params.c() + k - 1) * k);
    c[k] = coeff;
  }
  return PowerSeries(std::move(c));
}

PowerSeries bessel_u_series(const BesselParams& params, int order) {
  std::vector<cplx> c(static_cast<std::size_t>(order) + 1);
  const double k = params.k();
  double coeff = 1.0;
  c[0] = 1.0;
  for (int n = 1; n <= order; ++n) {
    coeff *= (-params.c() / 4.0) / ((k + n - 1) * n);
    c[n] = coeff;
  }
  return PowerSeries(std::move(c));
}

SeriesValue kummer_eval(const KummerParams& params, cplx z) {
  const double a = params.a();
  const double c = params.c();
  return sum_hypergeometric(z, [a, c](int n) { return (a + n - 1) / ((c + n - 1) * n); });
}

SeriesValue bessel_u_eval(const BesselParams& params, cplx z) {
  const double k = params.k();
  const double c = params.c();
  return sum_hypergeometric(z, [k, c](int n) { return (-c / 4.0) / ((k + n - 1) * n); });
}

PowerSeries kummer_local(const KummerParams& params, cplx z0, int order) {
  std::vector<cplx> out(static_cast<std::size_t>(order) + 1);
  double scale = 1.0;
  for (int j = 0; j <= order; ++j) {
    if (j > 0) scale *= (params.a() + j - 1) / ((params.c() + j - 1) * j);
    out[j] = scale * kummer_eval(KummerParams(params.a() + j, params.c() + j), z0).value;
  }
  return PowerSeries(std::move(out));
}

PowerSeries bessel_u_local(const BesselParams& params, cplx z0, int order) {
  std::vector<cplx> out(static_cast<std::size_t>(order) + 1);
  double scale = 1.0;
  BesselParams shifted = params;
  for (int j = 0; j <= order; ++j) {
    if (j > 0) {
      scale *= (-params.c() / 4.0) / ((params.k() + j - 1) * j);
      shifted = shifted.next();
    }
    out[j] = scale * bessel_u_eval(shifted, z0).value;
  }
  return PowerSeries(std::move(out));
}

double kummer_ode_residual(const PowerSeries& phi, const KummerParams& equation) {
  if (phi.order() < 2) throw MathError(ErrorCode::InvalidArgument, "ODE residual needs order >= 2");
  const PowerSeries d1 = ps_deriv(phi);
  const PowerSeries z_d2 = ps_zderiv(d1);  // z * phi''
  const PowerSeries c_minus_z = PowerSeries({equation.c(), -1.0}).padded(d1.order());
  const PowerSeries lhs = z_d2 + ps_mul(c_minus_z, d1) - cplx(equation.a()) * phi;
  return ps_max_abs(lhs, 0, phi.order() - 2);
}

double ode_residual_kummer(const KummerParams& params, int order) {
  return kummer_ode_residual(kummer_series(params, order), params);
}

double bessel_ode_residual(const PowerSeries& u, const BesselParams& equation) {
  if (u.order() < 2) throw MathError(ErrorCode::InvalidArgument, "ODE residual needs order >= 2");
  const PowerSeries zu1 = ps_zderiv(u);
  const PowerSeries z2u2 = ps_zderiv(zu1) - zu1;  // z^2 u'' = theta(theta - 1) u
  const PowerSeries lhs = cplx(4.0) * z2u2 + cplx(4.0 * equation.k()) * zu1 + cplx(equation.c()) * ps_shift_up(u);
  return ps_max_abs(lhs, 0, u.order() - 2);
}

double ode_residual_bessel(const BesselParams& params, int order) {
  return bessel_ode_residual(bessel_u_series(params, order), params);
}

}  // namespace starlike
