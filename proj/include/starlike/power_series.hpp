#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace starlike {

using cplx = std::complex<double>;

inline constexpr int kDefaultOrder = 64;
inline constexpr double kZeroConstantEps = 1e-13;

/// Truncated Taylor series about 0: coefficient of z^k at index k, k = 0..order.
///
/// Binary arithmetic between series of different orders truncates to the
/// smaller order. Instances are immutable once built.
class PowerSeries {
 public:
  /// Throws InvalidArgument on an empty or non-finite coefficient list.
  explicit PowerSeries(std::vector<cplx> coeffs);
  PowerSeries(std::initializer_list<cplx> coeffs) : PowerSeries(std::vector<cplx>(coeffs)) {}

  static PowerSeries constant(cplx value, int order);
  /// The series `z` (or `shift + z`) truncated at `order`.
  static PowerSeries variable(int order, cplx shift = 0.0);
  /// Polynomial coefficients padded with zeros (or cut) to `order`.
  static PowerSeries polynomial(std::span<const cplx> coeffs, int order);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }
  const cplx& operator[](std::size_t k) const { return coeffs_[k]; }

  PowerSeries truncated(int order) const;
  /// Zero-pads (never truncates) up to `order`.
  PowerSeries padded(int order) const;

 private:
  std::vector<cplx> coeffs_;
};

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator-(const PowerSeries& a);
PowerSeries operator*(cplx s, const PowerSeries& a);
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
PowerSeries operator+(const PowerSeries& a, cplx s);

PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b);

/// Recursive coefficient solve for a/b. Throws ZeroConstantTerm when
/// |b(0)| < eps.
PowerSeries ps_div(const PowerSeries& a, const PowerSeries& b, double eps = kZeroConstantEps);

/// d/dz; the result has order N-1 (order 0 for a constant).
PowerSeries ps_deriv(const PowerSeries& a);

/// z * d/dz, order preserved (coefficient k becomes k*c_k).
PowerSeries ps_zderiv(const PowerSeries& a);

/// Multiply by z^k dropping overflow beyond the order; `shift_down` divides
/// by z and discards c_0 (caller checks it is zero).
PowerSeries ps_shift_up(const PowerSeries& a, int k = 1);
PowerSeries ps_shift_down(const PowerSeries& a, int k = 1);

/// Principal logarithm of a(0) plus the integral of a'/a.
PowerSeries ps_log(const PowerSeries& a, double eps = kZeroConstantEps);
PowerSeries ps_exp(const PowerSeries& a);

/// exp(alpha * log a) for a(0) = 1 (NonUnitBase otherwise).
PowerSeries ps_pow(const PowerSeries& a, double alpha);

/// a(0)^alpha * (a / a(0))^alpha with the principal branch of a(0)^alpha.
/// Used for local expansions of closed forms away from z = 0.
PowerSeries ps_pow_principal(const PowerSeries& a, double alpha);

/// Horner evaluation of the truncated sum.
cplx ps_eval(const PowerSeries& a, cplx z);

/// Coefficients of the same function re-expanded about z0 (Taylor shift),
/// truncated at `order`.
PowerSeries ps_recenter(const PowerSeries& a, cplx z0, int order);

/// Max coefficientwise |a_k - b_k| over the common order.
double ps_max_abs_diff(const PowerSeries& a, const PowerSeries& b);

/// Max |c_k| over k in [first, last] (clamped to the order).
double ps_max_abs(const PowerSeries& a, int first = 0, int last = -1);

/// f = z * g with g(0) = 1: the representation of f in A_n.
class NormalizedFunction {
 public:
  /// Throws NotNormalized unless |g(0) - 1| <= tol.
  explicit NormalizedFunction(PowerSeries g, double tol = 1e-12);
  /// From the coefficients of f itself: requires f(0) = 0 and f'(0) = 1.
  static NormalizedFunction from_f(const PowerSeries& f, double tol = 1e-12);

  const PowerSeries& g() const noexcept { return g_; }
  /// z * g, one order higher.
  PowerSeries f() const;

 private:
  PowerSeries g_;
};

}  // namespace starlike
