#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "starlike/criteria.hpp"
#include "starlike/error.hpp"

using namespace starlike;
using std::numbers::pi;

namespace {

// Boundary point h(e^{it}) from the complex form of each h, then the quartic
// test (u^2+v^2-8u)^2 - 64(u^2+v^2).
double quartic(cplx w) {
  const double rho = std::norm(w);
  return std::pow(rho - 8.0 * w.real(), 2) - 64.0 * rho;
}

cplx boundary_point(BoundaryTheorem th, double alpha, double beta, double t) {
  const cplx e = std::polar(1.0, t);
  switch (th) {
    case BoundaryTheorem::Thm31: return 4.0 + 12.0 * alpha * beta * e / (1.0 - e * e);
    case BoundaryTheorem::Thm32:
      return 4.0 + 12.0 * alpha * beta * e * std::pow(1.0 - e, alpha) / ((1.0 - e * e) * std::pow(1.0 + e, alpha));
    case BoundaryTheorem::Thm35:
      return -2.0 + 12.0 * beta * e / ((1.0 - e) * (1.0 - e)) + 6.0 * (1.0 + e) / (1.0 - e);
    case BoundaryTheorem::Thm33:
      return -2.0 + 12.0 * beta * e / ((1.0 + e) * (1.0 + e)) + 6.0 * (1.0 + e) / (1.0 - e);
  }
  return 0.0;
}

double scale_of(cplx w) { return std::pow(std::norm(w) + 8.0 * std::abs(w.real()), 2) + 64.0 * std::norm(w); }

AnalyticMap rational(Polynomial num, Polynomial den, const std::string& name) {
  return AnalyticMap::from_rational(RationalMap(std::move(num), std::move(den)), name);
}

DiscGrid circle(double r, int angles = 512) { return DiscGrid{{r}, angles}; }

}  // namespace

// ---------------------------------------------------------------- triple margin

TEST_CASE("DiscGrid::standard") {
  const DiscGrid g = DiscGrid::standard();
  REQUIRE(g.radii.size() == 16);
  CHECK(g.radii.front() == doctest::Approx(0.1));
  CHECK(g.radii.back() == 0.999);
  CHECK(g.angles == 512);
  for (std::size_t i = 1; i < g.radii.size(); ++i) CHECK(g.radii[i] > g.radii[i - 1]);
}

TEST_CASE("thm21_margin examples") {
  CHECK(thm21_margin(AdmissibleTriple::kummer(KummerParams(2.0, 6.0), 0.5)) > 0.0);
  CHECK(thm21_margin(AdmissibleTriple::bessel(BesselParams(2.0, 2.0, 6.0), 0.7)) > 0.0);
  const AdmissibleTriple degenerate(1.0, Polynomial{1.0}, Polynomial{0.0, cplx(0.0, 1.0)}, 1, 0.8);
  CHECK(thm21_margin(degenerate) <= 0.0);
  CHECK_THROWS_AS(AdmissibleTriple(-1.0, Polynomial{1.0}, Polynomial{0.0}, 1, 0.5), MathError);
  CHECK_THROWS_AS(AdmissibleTriple(1.0, Polynomial{1.0}, Polynomial{0.0}, 0, 0.5), MathError);
  CHECK_THROWS_AS(AdmissibleTriple(1.0, Polynomial{1.0}, Polynomial{0.0}, 1, 1.5), MathError);
}

TEST_CASE("thm21_margin tracks the alpha threshold") {
  // For the Kummer triple the infimum over the open disc sits at |z| -> 1.
  const double amin = kummer_alpha_min(2.0, 6.0);
  CHECK(thm21_margin(AdmissibleTriple::kummer(KummerParams(2.0, 6.0), amin + 0.01)) > 0.0);
  CHECK(thm21_margin(AdmissibleTriple::kummer(KummerParams(2.0, 6.0), amin - 0.01)) < 0.0);
  const double bmin = bessel_alpha_min(7.0, 6.0, 10.0);
  CHECK(thm21_margin(AdmissibleTriple::bessel(BesselParams(7.0, 6.0, 10.0), bmin + 0.01)) > 0.0);
  CHECK(thm21_margin(AdmissibleTriple::bessel(BesselParams(7.0, 6.0, 10.0), bmin - 0.01)) < 0.0);
}

TEST_CASE("alpha_min closed forms") {
  CHECK(std::abs(kummer_alpha_min(2.0, 6.0) - 1.0 / std::sqrt(6.0)) <= 1e-12);
  CHECK(std::abs(kummer_alpha_min(5.0, 10.0) - std::sqrt(5.0) / 4.0) <= 1e-12);
  CHECK(kummer_alpha_min(0.0, 3.0) == 0.0);
  CHECK(std::abs(bessel_alpha_min(2.0, 2.0, 6.0) - 0.6) <= 1e-12);
  CHECK(std::abs(bessel_alpha_min(7.0, 6.0, 10.0) - 5.0 / 19.0) <= 1e-12);
  CHECK(bessel_alpha_min(2.0, 2.0, 0.0) == 0.0);
  try {
    (void)kummer_alpha_min(1.0, 1.5);
    FAIL("expected NotApplicable");
  } catch (const MathError& e) {
    CHECK(e.code() == ErrorCode::NotApplicable);
  }
  CHECK_THROWS_AS(bessel_alpha_min(0.0, 0.0, 1.0), MathError);  // k = 1/2
}

TEST_CASE("discriminant checks") {
  CHECK(discriminant_check_kummer(2.0, 6.0, 0.5));
  CHECK_FALSE(discriminant_check_kummer(2.0, 6.0, 0.3));
  for (double a : {0.1, 0.5, 1.0}) CHECK(discriminant_check_kummer(0.0, 3.0, a));
  CHECK(discriminant_check_bessel(2.0, 2.0, 6.0, 0.7));
  CHECK_FALSE(discriminant_check_bessel(2.0, 2.0, 6.0, 0.5));
}

TEST_CASE("discriminant and threshold agree on random parameters") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> ua(-6.0, 6.0), uc(-8.0, 10.0), ualpha(0.01, 1.0);
  int kummer_cases = 0, kummer_mismatch = 0;
  while (kummer_cases < 1000) {
    const double a = ua(rng), c = uc(rng), alpha = ualpha(rng);
    if ((c - 1.0) * (c - 1.0) <= 1.0 || is_nonpositive_integer(c)) continue;
    ++kummer_cases;
    if (discriminant_check_kummer(a, c, alpha) != (alpha > kummer_alpha_min(a, c))) ++kummer_mismatch;
  }
  CHECK(kummer_mismatch == 0);

  std::uniform_real_distribution<double> up(-2.0, 8.0), ub(-3.0, 6.0), ucb(-12.0, 12.0);
  int bessel_cases = 0, bessel_mismatch = 0;
  while (bessel_cases < 1000) {
    const double p = up(rng), b = ub(rng), c = ucb(rng), alpha = ualpha(rng);
    if (p + (b + 1.0) / 2.0 <= 1.0) continue;
    ++bessel_cases;
    if (discriminant_check_bessel(p, b, c, alpha) != (alpha > bessel_alpha_min(p, b, c))) ++bessel_mismatch;
  }
  CHECK(bessel_mismatch == 0);
}

TEST_CASE("end-to-end implication for the named instances") {
  struct Instance {
    AnalyticMap map;
    AdmissibleTriple triple;
    double alpha;
  };
  const std::vector<Instance> instances{
      {AnalyticMap::kummer(KummerParams(2.0, 6.0)), AdmissibleTriple::kummer(KummerParams(2.0, 6.0), 0.45), 0.45},
      {AnalyticMap::kummer(KummerParams(5.0, 10.0)), AdmissibleTriple::kummer(KummerParams(5.0, 10.0), 0.6), 0.6},
      {AnalyticMap::bessel(BesselParams(2.0, 2.0, 6.0)), AdmissibleTriple::bessel(BesselParams(2.0, 2.0, 6.0), 0.65), 0.65},
      {AnalyticMap::bessel(BesselParams(7.0, 6.0, 10.0)), AdmissibleTriple::bessel(BesselParams(7.0, 6.0, 10.0), 0.3), 0.3},
  };
  for (const Instance& in : instances) {
    CAPTURE(in.map.name());
    CHECK(thm21_margin(in.triple) > 0.0);
    const SubordinationReport rep = check_subordination(in.map, Region::sector(in.alpha));
    CHECK(rep.min_margin > 0.0);
    CHECK(rep.holds());
  }
}

// -------------------------------------------------------- imaginary-part tests

TEST_CASE("remark_imag_criterion") {
  const AnalyticMap identity = rational(Polynomial{0.0, 1.0}, Polynomial{1.0}, "z");
  CHECK(remark_imag_criterion(identity, 0.4) == doctest::Approx(0.4).epsilon(1e-14));

  // f = z + eps z^2: expr = eps z / (1 + 2 eps z)(1 + eps z) to first order eps z
  for (double eps : {1e-3, 1e-2}) {
    const AnalyticMap f = rational(Polynomial{0.0, 1.0, eps}, Polynomial{1.0}, "z+eps z^2");
    const double m = remark_imag_criterion(f, 0.5);
    CHECK(m <= 0.5);
    CHECK(m >= 0.5 - 1.1 * eps / (1.0 - 3.0 * eps));
  }

  const AnalyticMap koebe = rational(Polynomial{0.0, 1.0}, Polynomial{1.0, -2.0, 1.0}, "z/(1-z)^2");
  CHECK(remark_imag_criterion(koebe, 0.1, circle(0.99)) < 0.0);

  // f = z - z^2/2 has f'(1) = 0
  const AnalyticMap flat = rational(Polynomial{0.0, 1.0, -0.5}, Polynomial{1.0}, "z-z^2/2");
  try {
    (void)remark_imag_criterion(flat, 0.5, DiscGrid{{1.0}, 4});
    FAIL("expected ZeroDerivative");
  } catch (const MathError& e) {
    CHECK(e.code() == ErrorCode::ZeroDerivative);
  }
}

TEST_CASE("product_criterion") {
  const AnalyticMap one = rational(Polynomial{1.0}, Polynomial{1.0}, "1");
  const AnalyticMap identity = rational(Polynomial{0.0, 1.0}, Polynomial{1.0}, "z");
  CHECK(product_criterion(identity, one, 0.7) == doctest::Approx(0.7).epsilon(1e-14));

  const AnalyticMap f = rational(Polynomial{0.0, 1.0, 0.3}, Polynomial{1.0, -0.2}, "f");
  CHECK(std::abs(product_criterion(f, one, 0.6) - remark_imag_criterion(f, 0.6)) <= 1e-12);

  for (double eps : {1e-3, 1e-2}) {
    const AnalyticMap g = rational(Polynomial{1.0, eps}, Polynomial{1.0}, "1+eps z");
    const double m = product_criterion(identity, g, 0.5);
    CHECK(m <= 0.5);
    CHECK(m >= 0.5 - 1.1 * eps / (1.0 - 3.0 * eps));
  }

  // (fg)' = 1 + 2z vanishes at z = -1/2
  const AnalyticMap g = rational(Polynomial{1.0, 1.0}, Polynomial{1.0}, "1+z");
  try {
    (void)product_criterion(identity, g, 0.5, DiscGrid{{0.5}, 2});
    FAIL("expected ZeroDenominator");
  } catch (const MathError& e) {
    CHECK(e.code() == ErrorCode::ZeroDenominator);
  }
}

// ------------------------------------------------------------- 1 + beta zp'/p

TEST_CASE("thm31 threshold") {
  // 1.694972 and 3.389944 are the radical cut to six decimals
  CHECK(std::abs(thm31_constant() - 1.6949731712249416) < 1e-15);
  const ThresholdResult r1 = thm31_min_beta(1.0);
  CHECK(std::abs(*r1.analytic - 1.694972) < 2e-6);
  CHECK(std::abs(*r1.analytic - 1.6947) <= 3e-4);
  CHECK(r1.iterations == 60);
  const ThresholdResult r05 = thm31_min_beta(0.5);
  CHECK(std::abs(*r05.analytic - 3.389944) < 3e-6);
  CHECK(*r05.analytic == doctest::Approx(2.0 * *r1.analytic).epsilon(1e-15));
  CHECK(std::abs(r05.brute - *r05.analytic) <= 1e-4);
  for (double alpha : {0.25, 0.5, 0.75, 1.0}) {
    const ThresholdResult r = thm31_min_beta(alpha);
    CAPTURE(alpha);
    CHECK(r.gap <= 1e-4);
    CHECK(r.gap == doctest::Approx(std::abs(*r.analytic - r.brute)));
  }
  CHECK_THROWS_AS(thm31_min_beta(0.0), MathError);
}

TEST_CASE("thm31_fx") {
  CHECK(thm31_fx(0.0, 0.7, 1.3) == doctest::Approx(27.0 * std::pow(0.7 * 1.3, 4)));
  // at the six-decimal input the quartic is -3.3009e-4 (df/dbeta ~ 282)
  CHECK(thm31_fx(1.0, 1.0, 1.694972) == doctest::Approx(-3.3009146185931665e-4).epsilon(1e-8));
  CHECK(std::abs(thm31_fx(1.0, 1.0, thm31_constant())) <= 1e-12);
  for (double alpha : {0.25, 0.5, 0.75, 1.0}) {
    const double b = thm31_constant() / alpha;
    CHECK(thm31_fx(1.0, alpha, b - 5e-9) < 0.0);
    CHECK(thm31_fx(1.0, alpha, b + 5e-9) > 0.0);
    for (double beta : {-b, 0.3, b}) {
      double prev = thm31_fx(0.0, alpha, beta);
      for (int j = 1; j <= 1000; ++j) {
        const double v = thm31_fx(j / 1000.0, alpha, beta);
        CHECK(v < prev);
        prev = v;
      }
    }
  }
}

// ----------------------------------------------------------- 1 + beta zp'/p^2

TEST_CASE("thm32_check case (a) boundaries") {
  CHECK(thm32_check(1.0, 4.0).holds_a == true);
  CHECK(thm32_check(1.0, -4.0 / 3.0).holds_a == true);
  CHECK(thm32_check(1.0, 3.99).holds_a == false);
  CHECK(thm32_check(1.0, -1.33).holds_a == false);
  CHECK(thm32_check(1.0, 10.0).holds_a == true);
  CHECK(thm32_check(1.0, 0.0).holds_a == false);
  CHECK_FALSE(thm32_check(1.0, 4.0).holds_b.has_value());
  CHECK_FALSE(thm32_check(0.5, -1.0).holds_b.has_value());
  CHECK_FALSE(thm32_check(0.5, 2.0).holds_a.has_value());
}

TEST_CASE("thm32 case (b) flips across the bisection root") {
  CHECK_THROWS_AS(thm32b_lhs(1.0, 2.0), MathError);
  for (double alpha : {0.25, 0.5, 0.75}) {
    const ThresholdResult r = thm32b_min_beta(alpha);
    CAPTURE(alpha);
    CHECK_FALSE(r.analytic.has_value());
    CHECK(thm32_check(alpha, r.brute * (1.0 + 1e-9)).holds_b == true);
    CHECK(thm32_check(alpha, r.brute * (1.0 - 1e-9)).holds_b == false);
    // the critical-point value of the reduced function is the same inequality
    CHECK(std::abs(thm32b_fx(std::sqrt((1.0 + alpha) / 2.0), alpha, r.brute)) < 1e-6);
  }
}

TEST_CASE("thm32b_fx") {
  for (double alpha : {0.25, 0.5, 0.75}) {
    for (double beta : {0.5, 1.0, 2.0}) {
      const double xs = std::sqrt((1.0 + alpha) / 2.0);
      CHECK(std::abs(thm32b_fx(xs, alpha, beta) - thm32b_fx_at_critical(alpha, beta)) <= 1e-9);
    }
  }
  for (double x : {0.3, 0.6, 0.9}) {
    CHECK(std::abs(thm32b_fx(x, 1.0, 2.0) - thm32a_fx(x, 2.0)) <= 1e-9 * std::max(1.0, std::abs(thm32a_fx(x, 2.0))));
  }
  for (double x : {0.1, 0.5, 0.99}) CHECK(thm32b_fx(x, 0.4, 0.0) == -16.0);
  CHECK_THROWS_AS(thm32b_fx(0.0, 0.5, 1.0), MathError);
  CHECK_THROWS_AS(thm32b_fx(1.0, 0.5, 1.0), MathError);
}

TEST_CASE("thm32b: the sufficient inequality gives f >= 0 on (0, 1)") {
  for (double alpha : {0.25, 0.5, 0.75, 0.9}) {
    const double b0 = thm32b_min_beta(alpha).brute;
    for (double factor : {1.0 + 1e-9, 1.001, 1.1, 2.0, 10.0}) {
      const double beta = b0 * factor;
      const double fmin = thm32b_fx_at_critical(alpha, beta);
      CAPTURE(alpha);
      CAPTURE(beta);
      REQUIRE(thm32_check(alpha, beta).holds_b == true);
      for (int j = 1; j < 4000; ++j) {
        const double v = thm32b_fx(j / 4000.0, alpha, beta);
        CHECK(v >= -1e-9 * std::max(1.0, std::abs(fmin)));
        CHECK(v >= fmin - 1e-9 * std::max(1.0, std::abs(fmin)));
      }
    }
  }
}

TEST_CASE("thm32b: below the threshold the critical point need not be the minimum") {
  // f'(x*) = 0 always, but for small beta another critical point is lower.
  const double alpha = 0.5, beta = 0.5;
  const double xs = std::sqrt((1.0 + alpha) / 2.0);
  const double h = 1e-6;
  CHECK(std::abs(thm32b_fx(xs + h, alpha, beta) - thm32b_fx(xs - h, alpha, beta)) / (2 * h) < 1e-4);
  double lowest = std::numeric_limits<double>::infinity();
  for (int j = 1; j < 1000; ++j) lowest = std::min(lowest, thm32b_fx(j / 1000.0, alpha, beta));
  CHECK(lowest < thm32b_fx_at_critical(alpha, beta) - 50.0);
}

// ---------------------------------------------------------- p + beta zp'/p^k

TEST_CASE("thm34 case split") {
  CHECK(thm34_parameters_in_theorem(0.5, 0.1, 0));
  CHECK_FALSE(thm34_parameters_in_theorem(0.5, -0.1, 1));
  CHECK(thm34_parameters_in_theorem(0.75, -0.3, 2));
  CHECK_FALSE(thm34_parameters_in_theorem(0.75, 0.3, 2));
  CHECK(thm34_parameters_in_theorem(0.3, 0.3, 2));
  CHECK_FALSE(thm34_parameters_in_theorem(0.5, 0.3, 2));
  CHECK_THROWS_AS(thm34_parameters_in_theorem(0.5, 0.3, 3), MathError);

  const AnalyticMap p = AnalyticMap::sector_power(0.375, 0.5);
  const Thm34Result in = thm34_premise_check(p, 0.75, -0.3, 2);
  CHECK(in.theorem_applies);
  CHECK(in.warning.empty());
  const Thm34Result out = thm34_premise_check(p, 0.75, 0.3, 2);
  CHECK_FALSE(out.theorem_applies);
  CHECK(out.warning.find("ParameterOutOfTheorem") != std::string::npos);
}

TEST_CASE("thm34 with p = 1") {
  const AnalyticMap one = AnalyticMap::from_series(PowerSeries::constant(1.0, 32));
  for (int k : {0, 1, 2}) {
    const Thm34Result r = thm34_premise_check(one, 0.6, 0.5, k);
    CHECK(r.premise.min_margin == doctest::Approx(0.6 * pi / 2).epsilon(1e-14));
    CHECK(r.conclusion.min_margin == doctest::Approx(0.6 * pi / 2).epsilon(1e-14));
    CHECK(std::abs(r.premise.witness_w - 1.0) == 0.0);
  }
}

TEST_CASE("thm34 on half-order sector powers") {
  // p = ((1+z/2)/(1-z/2))^{alpha/2}: both premise and conclusion are inside Sector(alpha)
  for (double alpha : {0.5, 0.75, 1.0}) {
    for (int k : {0, 1}) {
      const Thm34Result r = thm34_premise_check(AnalyticMap::sector_power(alpha / 2.0, 0.5), alpha, 0.5, k);
      CAPTURE(alpha);
      CAPTURE(k);
      CHECK(r.premise_holds());
      CHECK(r.conclusion_holds());
      CHECK(r.implication_consistent());
    }
  }
  // unscaled: the premise leaves the sector near z = 1 while p itself stays inside
  const Thm34Result r = thm34_premise_check(AnalyticMap::sector_power(0.25), 0.5, 0.5, 0);
  CHECK(r.premise.min_margin < 0.0);
  CHECK(r.conclusion.min_margin > 0.0);
  CHECK(r.implication_consistent());
}

// ------------------------------------------------------------ f' and z^2f'/f^2

TEST_CASE("thm35_fx") {
  for (double beta : {0.0, 0.5, 1.0, 5.0}) CHECK(thm35_identity(beta) <= 1e-9);
  CHECK(thm35_fx(1.0, 0.0) == doctest::Approx(144.0));
  CHECK_THROWS_AS(thm35_fx(0.0, 1.0), MathError);
  for (double beta : {0.5, 2.0}) {
    for (int n : {1000, 2000}) {
      double prev = std::numeric_limits<double>::infinity();
      for (int j = 1; j <= n; ++j) {
        const double v = thm35_fx(static_cast<double>(j) / n, beta);
        CHECK(v < prev);
        CHECK(v > 0.0);
        prev = v;
      }
    }
  }
}

TEST_CASE("thm33_fx and thm33_gx") {
  CHECK(thm33_gx(1.0) == 0.0);
  for (int j = 0; j <= 1000; ++j) CHECK(thm33_gx(j / 1000.0) >= 0.0);
  CHECK_THROWS_AS(thm33_fx(0.0, -1.0), MathError);
  CHECK_THROWS_AS(thm33_fx(1.0, -1.0), MathError);
  for (double beta : {-0.5, -1.0, -2.0}) {
    for (int n : {1000, 2000}) {
      for (int j = 1; j < n; ++j) CHECK(thm33_fx(static_cast<double>(j) / n, beta) >= 0.0);
    }
  }
}

// ----------------------------------------------------------- boundary predicate

TEST_CASE("boundary_predicate examples") {
  const double p31 = boundary_predicate(BoundaryTheorem::Thm31, {1.0, 1.694972}, pi / 2);
  CHECK(std::abs(p31) / scale_of(cplx(4.0, 6.0 * 1.694972)) <= 1e-5);
  CHECK(boundary_predicate(BoundaryTheorem::Thm35, {1.0, 1.0}, pi) == doctest::Approx(2625.0).epsilon(1e-12));
  CHECK(boundary_predicate_reduced(BoundaryTheorem::Thm35, {1.0, 1.0}, pi) == doctest::Approx(2625.0).epsilon(1e-12));
  for (BoundaryTheorem th : {BoundaryTheorem::Thm31, BoundaryTheorem::Thm32, BoundaryTheorem::Thm35, BoundaryTheorem::Thm33}) {
    try {
      (void)boundary_predicate(th, {0.5, 1.0}, 0.0);
      FAIL("expected SingularParameter");
    } catch (const MathError& e) {
      CHECK(e.code() == ErrorCode::SingularParameter);
    }
  }
  CHECK_THROWS_AS(boundary_predicate(BoundaryTheorem::Thm31, {0.5, 1.0}, pi), MathError);
  CHECK_THROWS_AS(boundary_predicate(BoundaryTheorem::Thm33, {0.5, -1.0}, -pi), MathError);
}

TEST_CASE("boundary_predicate matches the complex boundary formula") {
  struct Case {
    BoundaryTheorem th;
    double alpha, beta;
  };
  const std::vector<Case> cases{
      {BoundaryTheorem::Thm31, 1.0, 1.7},   {BoundaryTheorem::Thm31, 0.5, -2.0}, {BoundaryTheorem::Thm32, 1.0, 4.0},
      {BoundaryTheorem::Thm32, 0.5, 3.0},   {BoundaryTheorem::Thm32, 0.3, -1.0}, {BoundaryTheorem::Thm35, 1.0, 1.0},
      {BoundaryTheorem::Thm35, 1.0, 0.2},   {BoundaryTheorem::Thm33, 1.0, -1.0}, {BoundaryTheorem::Thm33, 1.0, 0.7}};
  for (const Case& c : cases) {
    double worst = 0.0;
    for (int j = 1; j < 1024; ++j) {
      const double t = -pi + 2.0 * pi * j / 1024;
      if (std::abs(t) < 1e-9) continue;
      const cplx w = boundary_point(c.th, c.alpha, c.beta, t);
      worst = std::max(worst, std::abs(boundary_predicate(c.th, {c.alpha, c.beta}, t) - quartic(w)) / scale_of(w));
    }
    CAPTURE(static_cast<int>(c.th));
    CAPTURE(c.beta);
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("boundary_predicate equals its x-reduction") {
  struct Case {
    BoundaryTheorem th;
    double alpha, beta;
  };
  const std::vector<Case> cases{
      {BoundaryTheorem::Thm31, 1.0, 1.0}, {BoundaryTheorem::Thm31, 0.4, 5.0},  {BoundaryTheorem::Thm31, 0.75, -2.5},
      {BoundaryTheorem::Thm32, 1.0, 4.0}, {BoundaryTheorem::Thm32, 0.5, 2.0},  {BoundaryTheorem::Thm32, 0.25, 7.0},
      {BoundaryTheorem::Thm35, 1.0, 0.5}, {BoundaryTheorem::Thm35, 1.0, 3.0},  {BoundaryTheorem::Thm35, 1.0, -0.3},
      {BoundaryTheorem::Thm33, 1.0, -1.0}, {BoundaryTheorem::Thm33, 1.0, -0.2}, {BoundaryTheorem::Thm33, 1.0, 0.5}};
  for (const Case& c : cases) {
    int sign_mismatch = 0;
    double worst = 0.0;
    for (int j = 1; j < 4096; ++j) {
      const double t = -pi + 2.0 * pi * j / 4096;
      if (std::abs(t) < 1e-6) continue;
      const double direct = boundary_predicate(c.th, {c.alpha, c.beta}, t);
      const double reduced = boundary_predicate_reduced(c.th, {c.alpha, c.beta}, t);
      const double rel = std::abs(direct - reduced) / std::max(std::abs(direct), std::abs(reduced));
      worst = std::max(worst, rel);
      if ((direct >= 0.0) != (reduced >= 0.0)) ++sign_mismatch;
    }
    CAPTURE(static_cast<int>(c.th));
    CAPTURE(c.beta);
    CHECK(worst <= 1e-8);
    CHECK(sign_mismatch == 0);
  }
}

TEST_CASE("boundary_predicate_min against the thresholds") {
  const double b = thm31_constant();
  CHECK(boundary_predicate_min(BoundaryTheorem::Thm31, {1.0, b * 1.01}) > 0.0);
  CHECK(boundary_predicate_min(BoundaryTheorem::Thm31, {1.0, b * 0.99}) < 0.0);
  CHECK(boundary_predicate_min(BoundaryTheorem::Thm32, {1.0, 4.01}) > 0.0);
  CHECK(boundary_predicate_min(BoundaryTheorem::Thm32, {1.0, 3.9}) < 0.0);
  CHECK(boundary_predicate_min(BoundaryTheorem::Thm35, {1.0, 1.0}) > 0.0);
  CHECK(boundary_predicate_min(BoundaryTheorem::Thm33, {1.0, -1.0}) > 0.0);
  CHECK(thm31_boundary_condition(1.0, b * 1.001));
  CHECK_FALSE(thm31_boundary_condition(1.0, b * 0.999));
}

// ------------------------------------------------------------ Q-starlikeness

TEST_CASE("Q-starlikeness checks") {
  for (double alpha : {0.3, 0.7, 1.0}) {
    const AnalyticMap q = rational(Polynomial{1.0, -2.0 * alpha, 1.0}, Polynomial{1.0, 0.0, -1.0}, "q");
    for (double r : {0.1, 0.5, 0.9, 0.99}) CHECK(min_real_part(q, r, 1024, RealPartMode::Plain) > 0.0);
  }
  const AnalyticMap q31 = rational(Polynomial{0.0, 1.0}, Polynomial{1.0, 0.0, -1.0}, "z/(1-z^2)");
  const AnalyticMap q33 = rational(Polynomial{0.0, -2.0}, Polynomial{1.0, 2.0, 1.0}, "2bz/(1+z)^2");
  for (double r : {0.1, 0.5, 0.9, 0.99}) {
    CHECK(min_real_part(q31, r, 1024, RealPartMode::Starlike) > 0.0);
    // z Q'/Q = (1-z)/(1+z), minimum (1-r)/(1+r) at z = r
    CHECK(min_real_part(q33, r, 1024, RealPartMode::Starlike) == doctest::Approx((1.0 - r) / (1.0 + r)).epsilon(1e-9));
  }
}
