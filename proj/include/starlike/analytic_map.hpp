#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "starlike/power_series.hpp"
#include "starlike/special_functions.hpp"

namespace starlike {

/// Dense polynomial with complex coefficients, index = power of z.
class Polynomial {
 public:
  Polynomial() : coeffs_{0.0} {}
  Polynomial(std::initializer_list<cplx> coeffs);
  explicit Polynomial(std::vector<cplx> coeffs);

  std::span<const cplx> coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  cplx operator()(cplx z) const;
  Polynomial derivative() const;
  /// Multiply by z.
  Polynomial shifted_up() const;
  /// Divide by z; requires a zero constant term.
  Polynomial shifted_down() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(cplx s, const Polynomial& a);

 private:
  std::vector<cplx> coeffs_;
};

/// numerator / denominator, kept unreduced.
class RationalMap {
 public:
  RationalMap(Polynomial numerator, Polynomial denominator = Polynomial{1.0});

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }
  cplx operator()(cplx z) const { return num_(z) / den_(z); }
  RationalMap derivative() const;

  friend RationalMap operator+(const RationalMap& a, const RationalMap& b);
  friend RationalMap operator-(const RationalMap& a, const RationalMap& b);
  friend RationalMap operator*(const RationalMap& a, const RationalMap& b);
  friend RationalMap operator/(const RationalMap& a, const RationalMap& b);
  friend RationalMap operator*(cplx s, const RationalMap& a);

 private:
  Polynomial num_;
  Polynomial den_;
};

/// A function on the unit disc: a truncated power series, an exact rational
/// function, or a named closed form that can produce its Taylor expansion
/// about any point of the disc.
class AnalyticMap {
 public:
  /// Taylor coefficients about z0 up to `order`.
  using LocalExpansion = std::function<PowerSeries(cplx z0, int order)>;

  static AnalyticMap from_series(PowerSeries series, std::string name = "series");
  static AnalyticMap from_rational(RationalMap rational, std::string name);
  static AnalyticMap closed_form(std::string name, LocalExpansion local);

  /// Phi(a, c; z).
  static AnalyticMap kummer(const KummerParams& params);
  /// u_{p,b,c}(z).
  static AnalyticMap bessel(const BesselParams& params);
  /// ((1 + s z)/(1 - s z))^alpha, principal branch, |s| <= 1.
  static AnalyticMap sector_power(double alpha, double scale = 1.0);
  /// z * inner(z).
  static AnalyticMap times_z(const AnalyticMap& inner);

  const std::string& name() const noexcept { return name_; }
  bool is_series() const noexcept { return std::holds_alternative<PowerSeries>(rep_); }
  bool is_rational() const noexcept { return std::holds_alternative<RationalMap>(rep_); }
  const PowerSeries& series() const;
  const RationalMap& rational() const;

  cplx operator()(cplx z) const;
  PowerSeries local(cplx z0, int order) const;

 private:
  using Rep = std::variant<PowerSeries, RationalMap, LocalExpansion>;
  AnalyticMap(std::string name, Rep rep) : name_(std::move(name)), rep_(std::move(rep)) {}

  std::string name_;
  Rep rep_;
};

/// Taylor coefficients of f(z)/z about z0, for f with f(0) = 0.
PowerSeries normalized_local(const AnalyticMap& f, cplx z0, int order);

enum class TransformKind {
  ZFprimeOverF,    ///< z f'/f of f in A
  Fprime,          ///< f'
  Z2FprimeOverF2,  ///< z^2 f'/f^2
  OnePlusBeta,     ///< 1 + beta z p'/p^k, k in {1, 2}
  PPlusBeta,       ///< p + beta z p'/p^k, k in {0, 1, 2}
};

struct TransformSpec {
  TransformKind kind;
  int k = 0;
  double beta = 0.0;

  static TransformSpec zfprime_over_f() { return {TransformKind::ZFprimeOverF}; }
  static TransformSpec fprime() { return {TransformKind::Fprime}; }
  static TransformSpec z2fprime_over_f2() { return {TransformKind::Z2FprimeOverF2}; }
  /// Validates k and beta (InvalidArgument).
  static TransformSpec one_plus_beta(int k, double beta);
  static TransformSpec p_plus_beta(int k, double beta);

  /// True for the transforms whose base is f in A rather than p in H[1,1].
  bool acts_on_f() const noexcept { return kind <= TransformKind::Z2FprimeOverF2; }
  std::string name() const;
};

/// Builds the composite map. Series bases go through power-series
/// arithmetic, rationals symbolically, closed forms through local expansions.
/// Division by a vanishing constant term raises ZeroConstantTerm naming the
/// sub-expression; a base in the wrong role raises NotNormalized.
AnalyticMap apply_transform(const AnalyticMap& base, const TransformSpec& spec);

}  // namespace starlike
