#include "starlike/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "starlike/error.hpp"

namespace starlike {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTiny = 1e-14;

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    std::ostringstream msg;
    msg << "alpha = " << alpha << " outside (0, 1]";
    throw MathError(ErrorCode::InvalidArgument, msg.str());
  }
}

std::string where(cplx z) {
  std::ostringstream out;
  out << "z = (" << z.real() << ", " << z.imag() << ")";
  return out.str();
}

/// Parameter grid for boundary sweeps: t_j = -pi + 2 pi j / n, j < n.
std::vector<double> open_t_grid(int n) {
  std::vector<double> ts(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) ts[j] = -kPi + 2.0 * kPi * j / n;
  return ts;
}

/// Distance from t to the parametrization's singular set.
double singular_distance(BoundaryTheorem theorem, double t) {
  const double to_zero = std::abs(t);
  const double to_pi = kPi - std::abs(t);
  if (theorem == BoundaryTheorem::Thm35) return to_zero;
  return std::min(to_zero, to_pi);
}

double quartic_test(double u, double v) {
  const double rho = u * u + v * v;
  const double first = rho - 8.0 * u;
  return first * first - 64.0 * rho;
}

}  // namespace

// ------------------------------------------------------------ triple margin

DiscGrid DiscGrid::standard() {
  DiscGrid grid;
  constexpr int kRungs = 16;
  for (int i = 0; i < kRungs; ++i) {
    const double gap = 0.9 * std::pow(0.001 / 0.9, static_cast<double>(i) / (kRungs - 1));
    grid.radii.push_back(1.0 - gap);
  }
  grid.radii.back() = 0.999;
  grid.angles = 512;
  return grid;
}

AdmissibleTriple::AdmissibleTriple(double C_, Polynomial D_, Polynomial E_, int n_, double alpha_)
    : C(C_), D(std::move(D_)), E(std::move(E_)), n(n_), alpha(alpha_) {
  if (!(C >= 0.0)) throw MathError(ErrorCode::InvalidArgument, "C must be >= 0");
  if (n < 1) throw MathError(ErrorCode::InvalidArgument, "n must be >= 1");
  check_alpha(alpha);
}

AdmissibleTriple AdmissibleTriple::kummer(const KummerParams& params, double alpha, int n) {
  return AdmissibleTriple(1.0, Polynomial{params.c(), -1.0}, Polynomial{0.0, -params.a()}, n, alpha);
}

AdmissibleTriple AdmissibleTriple::bessel(const BesselParams& params, double alpha, int n) {
  return AdmissibleTriple(4.0, Polynomial{4.0 * params.k()}, Polynomial{0.0, params.c()}, n, alpha);
}

double thm21_margin(const AdmissibleTriple& triple, const DiscGrid& grid) {
  double best = std::numeric_limits<double>::infinity();
  const double scale = triple.n * triple.alpha;
  grid.for_each([&](cplx z) {
    const double m = scale * (triple.D(z).real() - triple.C) - std::abs(triple.E(z).imag());
    best = std::min(best, m);
  });
  return best;
}

double kummer_alpha_min(double a, double c) {
  const double s = (c - 1.0) * (c - 1.0) - 1.0;
  if (!(s > 0.0)) throw MathError(ErrorCode::NotApplicable, "(c-1)^2 <= 1: no alpha in (0,1] satisfies |c-1| > sqrt(1 + a^2/alpha^2)");
  return std::abs(a) / std::sqrt(s);
}

double bessel_alpha_min(double p, double b, double c) {
  const double k = BesselParams(p, b, c).k();
  if (!(k > 1.0)) throw MathError(ErrorCode::NotApplicable, "k <= 1");
  return std::abs(c) / (4.0 * (k - 1.0));
}

bool discriminant_check_kummer(double a, double c, double alpha) {
  // a = 0 makes the discriminant vanish identically; the condition is then
  // (c-1)^2 > 1.
  if (a == 0.0) return (c - 1.0) * (c - 1.0) > 1.0;
  const double p = -(a * a + alpha * alpha);
  const double q = 2.0 * alpha * alpha * (c - 1.0);
  const double r = a * a - (c - 1.0) * (c - 1.0) * alpha * alpha;
  return p < 0.0 && q * q - 4.0 * p * r < 0.0;
}

bool discriminant_check_bessel(double p, double b, double c, double alpha) {
  const double k = BesselParams(p, b, c).k();
  if (!(k > 1.0)) return false;
  if (c == 0.0) return true;
  const double P = -c * c;
  const double Q = 0.0;
  const double R = -16.0 * (k - 1.0) * (k - 1.0) * alpha * alpha + c * c;
  return P < 0.0 && Q * Q - 4.0 * P * R < 0.0;
}

double remark_imag_criterion(const AnalyticMap& f, double alpha, const DiscGrid& grid) {
  double best = std::numeric_limits<double>::infinity();
  grid.for_each([&](cplx z) {
    const PowerSeries g = normalized_local(f, z, 2);
    const cplx g1 = g[1];
    const cplx g2 = 2.0 * g[2];
    const cplx f1 = g[0] + z * g1;
    const cplx f2 = 2.0 * g1 + z * g2;
    if (std::abs(f1) < kTiny) throw MathError(ErrorCode::ZeroDerivative, "f' vanishes at " + where(z));
    if (std::abs(g[0]) < kTiny) throw MathError(ErrorCode::ZeroDenominator, "f(z)/z vanishes at " + where(z));
    // 1 + z f''/f' - z f'/f with z f'/f = 1 + z g'/g.
    const cplx expr = z * f2 / f1 - z * g1 / g[0];
    best = std::min(best, alpha - std::abs(expr.imag()));
  });
  return best;
}

double product_criterion(const AnalyticMap& f, const AnalyticMap& g, double alpha, const DiscGrid& grid) {
  double best = std::numeric_limits<double>::infinity();
  grid.for_each([&](cplx z) {
    const PowerSeries fl = f.local(z, 2);
    const PowerSeries gl = g.local(z, 2);
    const PowerSeries fn = normalized_local(f, z, 1);
    const cplx f0 = fl[0], f1 = fl[1], f2 = 2.0 * fl[2];
    const cplx g0 = gl[0], g1 = gl[1], g2 = 2.0 * gl[2];
    const cplx den = f1 * g0 + g1 * f0;
    if (std::abs(den) < kTiny) throw MathError(ErrorCode::ZeroDenominator, "(fg)' vanishes at " + where(z));
    if (std::abs(g0) < kTiny) throw MathError(ErrorCode::ZeroDenominator, "g vanishes at " + where(z));
    if (std::abs(fn[0]) < kTiny) throw MathError(ErrorCode::ZeroDenominator, "f(z)/z vanishes at " + where(z));
    const cplx num = z * f2 * g0 + 2.0 * z * f1 * g1 + z * g2 * f0;
    const cplx zf_over_f = 1.0 + z * fn[1] / fn[0];
    const cplx expr = 1.0 + num / den - (zf_over_f + z * g1 / g0);
    best = std::min(best, alpha - std::abs(expr.imag()));
  });
  return best;
}

// --------------------------------------------------------- 1 + beta zp'/p

double thm31_constant() {
  const double s3 = std::sqrt(3.0);
  return std::sqrt((4.0 * s3 + 8.0) / (3.0 * s3));
}

bool thm31_boundary_condition(double alpha, double beta, const BisectionOptions& options) {
  for (double t : open_t_grid(options.t_samples)) {
    if (singular_distance(BoundaryTheorem::Thm31, t) < options.guard) continue;
    const cplx e = std::polar(1.0, t);
    const cplx w = 4.0 + 12.0 * alpha * beta * e / (1.0 - e * e);
    if (std::abs(std::sqrt(w) - 2.0) < 2.0) return false;
  }
  return true;
}

ThresholdResult thm31_min_beta(double alpha, const BisectionOptions& options) {
  check_alpha(alpha);
  ThresholdResult result;
  result.analytic = thm31_constant() / alpha;
  result.brute = bisect_threshold([&](double beta) { return thm31_boundary_condition(alpha, beta, options); },
                                  1.0, options.iterations);
  result.gap = std::abs(*result.analytic - result.brute);
  result.iterations = options.iterations;
  return result;
}

double thm31_fx(double x, double alpha, double beta) {
  const double ab2 = alpha * alpha * beta * beta;
  return -16.0 * std::pow(x, 4) - 72.0 * ab2 * x * x + 27.0 * ab2 * ab2;
}

// ------------------------------------------------------- 1 + beta zp'/p^2

double thm32a_fx(double x, double beta) {
  const double y = 4.0 * x * x;
  return std::pow(y + 3.0 * beta, 3) * (beta - y) / (16.0 * std::pow(x, 8));
}

Thm32Result thm32_check(double alpha, double beta) {
  check_alpha(alpha);
  Thm32Result result;
  if (alpha == 1.0) {
    constexpr int kGrid = 1000;
    bool ok = true;
    for (int j = 1; j <= kGrid && ok; ++j) {
      const double x = static_cast<double>(j) / kGrid;
      const double y = 4.0 * x * x;
      // Rounding band scaled by the size of the factors.
      const double scale = std::pow(y + 3.0 * std::abs(beta), 3) * (std::abs(beta) + y) / (16.0 * std::pow(x, 8));
      ok = thm32a_fx(x, beta) >= -1e-12 * scale;
    }
    result.holds_a = ok;
  } else if (beta > 0.0) {
    result.holds_b = thm32b_lhs(alpha, beta) >= 16.0;
  }
  return result;
}

double thm32b_lhs(double alpha, double beta) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw MathError(ErrorCode::DomainError, "thm32b needs 0 < alpha < 1 ((1-alpha^2)^-2 is singular at 1)");
  }
  const double K = std::pow((1.0 - alpha) / (1.0 + alpha), alpha);
  const double one_minus = 1.0 - alpha * alpha;
  const double a2b2 = alpha * alpha * beta * beta;
  return 9.0 * a2b2 * K / (one_minus * one_minus) * (-8.0 + alpha * alpha * (8.0 + 3.0 * beta * beta * K)) -
         64.0 * alpha * beta / std::sqrt(one_minus) * std::sqrt(K) * std::sin(alpha * kPi / 2.0);
}

ThresholdResult thm32b_min_beta(double alpha, const BisectionOptions& options) {
  ThresholdResult result;
  result.brute = bisect_threshold([&](double beta) { return thm32b_lhs(alpha, beta) >= 16.0; }, 1.0,
                                  options.iterations);
  result.iterations = options.iterations;
  return result;
}

double thm32b_fx(double x, double alpha, double beta) {
  if (!(x > 0.0 && x < 1.0)) throw MathError(ErrorCode::DomainError, "x must lie in (0, 1)");
  const double s = std::sqrt(1.0 - x * x);
  const double lead = alpha * beta / (2.0 * x * s) * std::pow(s / x, alpha);
  const double inner = -8.0 + 3.0 * alpha * alpha * beta * beta / (4.0 * x * x * (1.0 - x * x)) *
                                  std::pow((1.0 - x * x) / (x * x), alpha);
  return -16.0 + lead * (-64.0 * std::sin(alpha * kPi / 2.0) + 9.0 * lead * inner);
}

double thm32b_fx_at_critical(double alpha, double beta) { return -16.0 + thm32b_lhs(alpha, beta); }

// ---------------------------------------------------------- p + beta zp'/p^k

bool thm34_parameters_in_theorem(double alpha, double beta, int k) {
  switch (k) {
    case 0:
    case 1: return beta > 0.0;
    case 2: return (alpha > 0.0 && alpha < 0.5 && beta > 0.0) || (alpha > 0.5 && alpha <= 1.0 && beta < 0.0);
    default: throw MathError(ErrorCode::InvalidArgument, "k must be 0, 1 or 2");
  }
}

Thm34Result thm34_premise_check(const AnalyticMap& p, double alpha, double beta, int k,
                                const std::vector<double>& radii, int samples) {
  check_alpha(alpha);
  Thm34Result result;
  result.theorem_applies = thm34_parameters_in_theorem(alpha, beta, k);
  if (!result.theorem_applies) {
    std::ostringstream msg;
    msg << "ParameterOutOfTheorem: (alpha=" << alpha << ", beta=" << beta << ", k=" << k
        << ") is outside the theorem's case split; no theorem guarantee";
    result.warning = msg.str();
  }
  const Region target = Region::sector(alpha);
  const AnalyticMap premise = apply_transform(p, TransformSpec::p_plus_beta(k, beta));
  result.premise = check_subordination(premise, target, radii, samples);
  result.conclusion = check_subordination(p, target, radii, samples);
  return result;
}

// ------------------------------------------------------ f' and z^2 f'/f^2

double thm35_fx(double x, double beta) {
  if (!(x > 0.0 && x <= 1.0)) throw MathError(ErrorCode::DomainError, "x must lie in (0, 1]");
  const double x2 = x * x;
  const double poly = 27.0 * std::pow(beta, 4) + 216.0 * beta * beta * (1.0 + beta) * x2 +
                      144.0 * (3.0 + beta * (6.0 + beta)) * x2 * x2 +
                      128.0 * (-9.0 - 5.0 * beta + 6.0 * x2) * x2 * x2 * x2;
  return 3.0 * poly / std::pow(x, 8);
}

double thm35_identity(double beta) {
  return std::abs(thm35_fx(1.0, beta) - 3.0 * (6.0 + beta) * std::pow(2.0 + 3.0 * beta, 3));
}

double thm33_gx(double x) { return 2.0 * std::pow(x, 4) - 7.0 * x * x + 5.0; }

double thm33_fx(double x, double beta) {
  if (!(x > 0.0 && x < 1.0)) throw MathError(ErrorCode::DomainError, "x must lie in (0, 1)");
  const double x2 = x * x;
  const double w = 1.0 - x2;
  const double num = 27.0 * std::pow(beta, 4) * w * w - 216.0 * std::pow(beta, 3) * w * w * x2 +
                     72.0 * beta * beta * thm33_gx(x) * x2 * x2 - 32.0 * beta * w * (20.0 * x2 + 7.0) * std::pow(x, 6) +
                     48.0 * std::pow(1.0 - 4.0 * x2, 2) * std::pow(x, 8);
  return num / (std::pow(x, 8) * w * w);
}

// ----------------------------------------------------------- boundary predicate

double boundary_predicate(BoundaryTheorem theorem, const BoundaryParams& params, double t) {
  if (!(t > -kPi && t < kPi) && theorem != BoundaryTheorem::Thm35) {
    throw MathError(ErrorCode::SingularParameter, "t must lie in (-pi, pi)");
  }
  if (singular_distance(theorem, t) < 1e-12) {
    throw MathError(ErrorCode::SingularParameter, "parametrization undefined at this t");
  }
  const double a = params.alpha;
  const double b = params.beta;
  double u = 0.0;
  double v = 0.0;
  switch (theorem) {
    case BoundaryTheorem::Thm31:
      u = 4.0;
      v = 6.0 * a * b / std::sin(t);
      break;
    case BoundaryTheorem::Thm32: {
      const double amp = 6.0 * a * b * std::pow(std::abs(std::tan(t / 2.0)), a) / std::abs(std::sin(t));
      u = 4.0 + amp * std::sin(a * kPi / 2.0);
      v = (t > 0.0 ? 1.0 : -1.0) * amp * std::cos(a * kPi / 2.0);
      break;
    }
    case BoundaryTheorem::Thm35: {
      const double s = std::sin(t / 2.0);
      u = -2.0 - 3.0 * b / (s * s);
      v = 6.0 * std::cos(t / 2.0) / s;
      break;
    }
    case BoundaryTheorem::Thm33: {
      const double c = std::cos(t / 2.0);
      u = -2.0 + 3.0 * b / (c * c);
      v = 6.0 * c / std::sin(t / 2.0);
      break;
    }
  }
  return quartic_test(u, v);
}

double boundary_predicate_reduced(BoundaryTheorem theorem, const BoundaryParams& params, double t) {
  if (singular_distance(theorem, t) < 1e-12) {
    throw MathError(ErrorCode::SingularParameter, "parametrization undefined at this t");
  }
  switch (theorem) {
    case BoundaryTheorem::Thm31: {
      const double x = std::abs(std::sin(t));
      return 48.0 * thm31_fx(x, params.alpha, params.beta) / std::pow(x, 4);
    }
    case BoundaryTheorem::Thm32: return 48.0 * thm32b_fx(std::cos(t / 2.0), params.alpha, params.beta);
    case BoundaryTheorem::Thm35: return thm35_fx(std::abs(std::sin(t / 2.0)), params.beta);
    case BoundaryTheorem::Thm33: return 3.0 * thm33_fx(std::cos(t / 2.0), params.beta);
  }
  return 0.0;
}

double boundary_predicate_min(BoundaryTheorem theorem, const BoundaryParams& params,
                              const BisectionOptions& options) {
  double best = std::numeric_limits<double>::infinity();
  for (double t : open_t_grid(options.t_samples)) {
    if (singular_distance(theorem, t) < options.guard) continue;
    best = std::min(best, boundary_predicate(theorem, params, t));
  }
  return best;
}

}  // namespace starlike
