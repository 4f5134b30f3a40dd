#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starlike/analytic_map.hpp"
#include "starlike/error.hpp"
#include "starlike/subordination.hpp"

namespace starlike {

/// Polar sample grid over the open disc.
struct DiscGrid {
  std::vector<double> radii;
  int angles = 512;

  /// 16 rungs with 1 - r geometric from 0.9 down to 0.001 (r = 0.1 .. 0.999),
  /// 512 angles each.
  static DiscGrid standard();
  template <typename F>
  void for_each(F&& f) const;
};

/// C z^2 p'' + D(z) z p' + E(z) p = 0 with constant C >= 0 and polynomial
/// D, E. The hypothesis |Im E| < n alpha (Re D - C) gives p < q_alpha.
struct AdmissibleTriple {
  double C;
  Polynomial D;
  Polynomial E;
  int n = 1;
  double alpha = 1.0;

  /// Throws InvalidArgument unless C >= 0, n >= 1, 0 < alpha <= 1.
  AdmissibleTriple(double C, Polynomial D, Polynomial E, int n, double alpha);

  /// C = 1, D = c - z, E = -a z: the Kummer equation.
  static AdmissibleTriple kummer(const KummerParams& params, double alpha, int n = 1);
  /// C = 4, D = 4k, E = c z: the Bessel equation.
  static AdmissibleTriple bessel(const BesselParams& params, double alpha, int n = 1);
};

/// min over the grid of n alpha (Re D - C) - |Im E|.
double thm21_margin(const AdmissibleTriple& triple, const DiscGrid& grid = DiscGrid::standard());

/// |a| / sqrt((c-1)^2 - 1); NotApplicable when (c-1)^2 <= 1.
double kummer_alpha_min(double a, double c);
/// |c| / (4(k-1)); NotApplicable when k <= 1.
double bessel_alpha_min(double p, double b, double c);

/// Quadratic-in-x discriminant tests equivalent to the triple hypothesis
/// for the Kummer and Bessel equations.
bool discriminant_check_kummer(double a, double c, double alpha);
bool discriminant_check_bessel(double p, double b, double c, double alpha);

/// min over the grid of alpha - |Im(1 + z f''/f' - z f'/f)|.
double remark_imag_criterion(const AnalyticMap& f, double alpha, const DiscGrid& grid = DiscGrid::standard());

/// min over the grid of
///   alpha - |Im(1 + (z f'' g + 2 z f' g' + z g'' f)/(f' g + g' f) - (z f'/f + z g'/g))|.
double product_criterion(const AnalyticMap& f, const AnalyticMap& g, double alpha,
                         const DiscGrid& grid = DiscGrid::standard());

struct ThresholdResult {
  std::optional<double> analytic;
  double brute = 0.0;
  double gap = 0.0;  // |analytic - brute| when analytic is known
  int iterations = 0;
};

struct BisectionOptions {
  int iterations = 60;
  int t_samples = 4096;
  double guard = 1e-6;
};

/// Bisection for the smallest x > 0 with predicate(x) true, assuming a
/// monotone predicate (false below, true above). The upper bracket doubles
/// from `start` until the predicate holds.
template <typename Pred>
double bisect_threshold(Pred&& predicate, double start, int iterations);

/// sqrt((4 sqrt 3 + 8)/(3 sqrt 3))
double thm31_constant();

/// |beta| threshold for 1 + beta zp'/p < phi_CAR to imply p < q_alpha:
/// analytic constant / alpha versus bisection of the boundary predicate
/// |sqrt(4 + 12 alpha beta e^{it}/(1 - e^{2it})) - 2| >= 2 on a t-grid.
ThresholdResult thm31_min_beta(double alpha, const BisectionOptions& options = {});

/// True when every t on the grid (guard band removed) satisfies the
/// cardioid boundary condition above for (alpha, beta).
bool thm31_boundary_condition(double alpha, double beta, const BisectionOptions& options = {});

/// -16 x^4 - 72 alpha^2 beta^2 x^2 + 27 alpha^4 beta^4.
double thm31_fx(double x, double alpha, double beta);

struct Thm32Result {
  std::optional<bool> holds_a;  // only for alpha = 1
  std::optional<bool> holds_b;  // only for 0 < alpha < 1, beta > 0
};

/// (a) nonnegativity of (4x^2+3 beta)^3 (beta - 4x^2)/(16 x^8) on a grid of
/// (0, 1]; (b) left side of the sufficient inequality compared with 16.
Thm32Result thm32_check(double alpha, double beta);

/// Left side of the sufficient inequality for 0 < alpha < 1. DomainError at alpha = 1.
double thm32b_lhs(double alpha, double beta);

/// Smallest beta > 0 with thm32b_lhs >= 16 (bisection).
ThresholdResult thm32b_min_beta(double alpha, const BisectionOptions& options = {});

/// The full reduced boundary function in x = cos(t/2); DomainError at x in {0, 1}.
double thm32b_fx(double x, double alpha, double beta);
/// Closed form of thm32b_fx at x = sqrt((1+alpha)/2), alpha in (0, 1).
double thm32b_fx_at_critical(double alpha, double beta);
/// (4x^2 + 3 beta)^3 (beta - 4 x^2) / (16 x^8).
double thm32a_fx(double x, double beta);

/// Premise and conclusion evidence for p + beta z p'/p^k in a sector.
struct Thm34Result {
  SubordinationReport premise;     // p + beta z p'/p^k versus Sector(alpha)
  SubordinationReport conclusion;  // p versus Sector(alpha)
  bool theorem_applies = true;     // false: ParameterOutOfTheorem warning
  std::string warning;

  bool premise_holds() const { return premise.holds(); }
  bool conclusion_holds() const { return conclusion.holds(); }
  /// premise => conclusion on the sampled evidence.
  bool implication_consistent() const { return !premise_holds() || conclusion_holds(); }
};

/// Case split: k = 0, 1 need beta > 0; k = 2 needs 0 < alpha < 1/2 with
/// beta > 0 or 1/2 < alpha <= 1 with beta < 0. Outside the split the reports
/// are still computed with theorem_applies = false.
bool thm34_parameters_in_theorem(double alpha, double beta, int k);
Thm34Result thm34_premise_check(const AnalyticMap& p, double alpha, double beta, int k,
                                const std::vector<double>& radii = kDefaultRadii,
                                int samples = kDefaultSamples);

/// 3/x^8 (27 b^4 + 216 b^2 (1+b) x^2 + 144 (3 + b(6+b)) x^4 + 128(-9 - 5b + 6x^2) x^6).
double thm35_fx(double x, double beta);
/// |thm35_fx(1, beta) - 3 (6+beta)(2+3 beta)^3|.
double thm35_identity(double beta);

/// Reduction of the z^2 f'/f^2 boundary predicate in x = cos(t/2); DomainError at x in {0, 1}.
double thm33_fx(double x, double beta);
/// 2x^4 - 7x^2 + 5.
double thm33_gx(double x);

enum class BoundaryTheorem { Thm31, Thm32, Thm35, Thm33 };

struct BoundaryParams {
  double alpha = 1.0;
  double beta = 0.0;
};

/// (u^2+v^2-8u)^2 - 64(u^2+v^2) at the theorem's boundary point w(t) = u + iv;
/// >= 0 for all t means the boundary of h(D) avoids the closed cardioid.
/// SingularParameter where the parametrization is undefined.
double boundary_predicate(BoundaryTheorem theorem, const BoundaryParams& params, double t);

/// The same quantity computed through the polynomial x-reductions:
///   Thm31: 48 f(x)/x^4, x = |sin t|; Thm32: 48 f(x), x = cos(t/2);
///   Thm35: f(x), x = |sin(t/2)|;     Thm33: 3 f(x), x = cos(t/2).
double boundary_predicate_reduced(BoundaryTheorem theorem, const BoundaryParams& params, double t);

/// min of boundary_predicate over a t-grid on (-pi, pi) with the guard band
/// around singular points removed.
double boundary_predicate_min(BoundaryTheorem theorem, const BoundaryParams& params,
                              const BisectionOptions& options = {});

// ------------------------------------------------------------ implementation

template <typename F>
void DiscGrid::for_each(F&& f) const {
  for (double r : radii) {
    for (int j = 0; j < angles; ++j) f(std::polar(r, 2.0 * 3.14159265358979323846 * j / angles));
  }
}

template <typename Pred>
double bisect_threshold(Pred&& predicate, double start, int iterations) {
  double lo = 0.0;
  double hi = start;
  for (int guard = 0; !predicate(hi); ++guard) {
    if (guard > 200) throw MathError(ErrorCode::EvaluationFailure, "bisection bracket did not close");
    lo = hi;
    hi *= 2.0;
  }
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    (predicate(mid) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace starlike
