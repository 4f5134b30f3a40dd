#include "starlike/power_series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "starlike/error.hpp"

namespace starlike {

namespace {

int min_order(const PowerSeries& a, const PowerSeries& b) { return std::min(a.order(), b.order()); }

bool finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

void require_nonzero_constant(const PowerSeries& a, double eps, const char* what) {
  if (std::abs(a[0]) < eps) {
    std::ostringstream msg;
    msg << what << ": constant term " << std::abs(a[0]) << " below " << eps;
    throw MathError(ErrorCode::ZeroConstantTerm, msg.str());
  }
}

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::NonUnitBase: return "NonUnitBase";
    case ErrorCode::PoleParameter: return "PoleParameter";
    case ErrorCode::OriginPoint: return "OriginPoint";
    case ErrorCode::EvaluationFailure: return "EvaluationFailure";
    case ErrorCode::ZeroOnCircle: return "ZeroOnCircle";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::ZeroDerivative: return "ZeroDerivative";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::SingularParameter: return "SingularParameter";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

PowerSeries::PowerSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw MathError(ErrorCode::InvalidArgument, "power series needs at least one coefficient");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!finite(coeffs_[k])) {
      throw MathError(ErrorCode::InvalidArgument, "non-finite coefficient at index " + std::to_string(k));
    }
  }
}

PowerSeries PowerSeries::constant(cplx value, int order) {
  std::vector<cplx> c(static_cast<std::size_t>(order) + 1, 0.0);
  c[0] = value;
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::variable(int order, cplx shift) {
  std::vector<cplx> c(static_cast<std::size_t>(order) + 1, 0.0);
  c[0] = shift;
  if (order >= 1) c[1] = 1.0;
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::polynomial(std::span<const cplx> coeffs, int order) {
  std::vector<cplx> c(static_cast<std::size_t>(order) + 1, 0.0);
  std::copy_n(coeffs.begin(), std::min(coeffs.size(), c.size()), c.begin());
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::truncated(int order) const {
  if (order >= this->order()) return *this;
  return PowerSeries(std::vector<cplx>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

PowerSeries PowerSeries::padded(int order) const {
  if (order <= this->order()) return *this;
  return polynomial(coeffs_, order);
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const int n = min_order(a, b);
  std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[k] = a[k] + b[k];
  return PowerSeries(std::move(c));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + (-b); }

PowerSeries operator-(const PowerSeries& a) { return cplx(-1.0) * a; }

PowerSeries operator*(cplx s, const PowerSeries& a) {
  std::vector<cplx> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& v : c) v *= s;
  return PowerSeries(std::move(c));
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) { return ps_mul(a, b); }

PowerSeries operator+(const PowerSeries& a, cplx s) {
  std::vector<cplx> c(a.coeffs().begin(), a.coeffs().end());
  c[0] += s;
  return PowerSeries(std::move(c));
}

PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) {
  const int n = min_order(a, b);
  std::vector<cplx> c(static_cast<std::size_t>(n) + 1, 0.0);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0.0) continue;
    for (int j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
  }
  return PowerSeries(std::move(c));
}

PowerSeries ps_div(const PowerSeries& a, const PowerSeries& b, double eps) {
  require_nonzero_constant(b, eps, "division");
  const int n = min_order(a, b);
  std::vector<cplx> q(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    cplx acc = a[k];
    for (int j = 1; j <= k; ++j) acc -= b[j] * q[k - j];
    q[k] = acc / b[0];
  }
  return PowerSeries(std::move(q));
}

PowerSeries ps_deriv(const PowerSeries& a) {
  if (a.order() == 0) return PowerSeries::constant(0.0, 0);
  std::vector<cplx> d(static_cast<std::size_t>(a.order()));
  for (int k = 0; k < a.order(); ++k) d[k] = static_cast<double>(k + 1) * a[k + 1];
  return PowerSeries(std::move(d));
}

PowerSeries ps_zderiv(const PowerSeries& a) {
  std::vector<cplx> d(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t k = 0; k < d.size(); ++k) d[k] *= static_cast<double>(k);
  return PowerSeries(std::move(d));
}

PowerSeries ps_shift_up(const PowerSeries& a, int k) {
  std::vector<cplx> c(static_cast<std::size_t>(a.order()) + 1, 0.0);
  for (int i = 0; i + k <= a.order(); ++i) c[i + k] = a[i];
  return PowerSeries(std::move(c));
}

PowerSeries ps_shift_down(const PowerSeries& a, int k) {
  if (k > a.order()) throw MathError(ErrorCode::InvalidArgument, "shift exceeds series order");
  return PowerSeries(std::vector<cplx>(a.coeffs().begin() + k, a.coeffs().end()));
}

PowerSeries ps_log(const PowerSeries& a, double eps) {
  require_nonzero_constant(a, eps, "logarithm");
  std::vector<cplx> l(static_cast<std::size_t>(a.order()) + 1, 0.0);
  l[0] = std::log(a[0]);
  if (a.order() > 0) {
    const PowerSeries ratio = ps_div(ps_deriv(a), a, eps);
    for (int k = 1; k <= a.order(); ++k) l[k] = ratio[k - 1] / static_cast<double>(k);
  }
  return PowerSeries(std::move(l));
}

PowerSeries ps_exp(const PowerSeries& a) {
  const int n = a.order();
  std::vector<cplx> e(static_cast<std::size_t>(n) + 1, 0.0);
  e[0] = std::exp(a[0]);
  for (int k = 1; k <= n; ++k) {
    cplx acc = 0.0;
    for (int j = 1; j <= k; ++j) acc += static_cast<double>(j) * a[j] * e[k - j];
    e[k] = acc / static_cast<double>(k);
  }
  return PowerSeries(std::move(e));
}

PowerSeries ps_pow(const PowerSeries& a, double alpha) {
  if (std::abs(a[0] - 1.0) > kZeroConstantEps) {
    std::ostringstream msg;
    msg << "power requires a(0) = 1, got (" << a[0].real() << "," << a[0].imag() << ")";
    throw MathError(ErrorCode::NonUnitBase, msg.str());
  }
  return ps_exp(alpha * ps_log(a));
}

PowerSeries ps_pow_principal(const PowerSeries& a, double alpha) {
  require_nonzero_constant(a, kZeroConstantEps, "power");
  const cplx base = a[0];
  PowerSeries unit = (1.0 / base) * a;
  std::vector<cplx> c(unit.coeffs().begin(), unit.coeffs().end());
  c[0] = 1.0;
  return std::pow(base, alpha) * ps_pow(PowerSeries(std::move(c)), alpha);
}

cplx ps_eval(const PowerSeries& a, cplx z) {
  cplx acc = 0.0;
  for (int k = a.order(); k >= 0; --k) acc = acc * z + a[k];
  return acc;
}

PowerSeries ps_recenter(const PowerSeries& a, cplx z0, int order) {
  std::vector<cplx> b(a.coeffs().begin(), a.coeffs().end());
  const int n = a.order();
  for (int i = 0; i < n; ++i) {
    for (int j = n - 1; j >= i; --j) b[j] += z0 * b[j + 1];
  }
  return PowerSeries(std::move(b)).truncated(order).padded(order);
}

double ps_max_abs_diff(const PowerSeries& a, const PowerSeries& b) {
  double worst = 0.0;
  for (int k = 0; k <= min_order(a, b); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

double ps_max_abs(const PowerSeries& a, int first, int last) {
  if (last < 0 || last > a.order()) last = a.order();
  double worst = 0.0;
  for (int k = std::max(first, 0); k <= last; ++k) worst = std::max(worst, std::abs(a[k]));
  return worst;
}

NormalizedFunction::NormalizedFunction(PowerSeries g, double tol) : g_(std::move(g)) {
  if (std::abs(g_[0] - 1.0) > tol) {
    throw MathError(ErrorCode::NotNormalized, "f/z must equal 1 at the origin");
  }
}

NormalizedFunction NormalizedFunction::from_f(const PowerSeries& f, double tol) {
  if (f.order() < 1) throw MathError(ErrorCode::NotNormalized, "f needs at least the z coefficient");
  if (std::abs(f[0]) > tol) throw MathError(ErrorCode::NotNormalized, "f(0) must vanish");
  return NormalizedFunction(ps_shift_down(f), tol);
}

PowerSeries NormalizedFunction::f() const {
  return ps_shift_up(g_.padded(g_.order() + 1));
}

}  // namespace starlike
