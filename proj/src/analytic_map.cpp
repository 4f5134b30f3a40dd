#include "starlike/analytic_map.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "starlike/error.hpp"

namespace starlike {

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::initializer_list<cplx> coeffs) : Polynomial(std::vector<cplx>(coeffs)) {}

Polynomial::Polynomial(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

cplx Polynomial::operator()(cplx z) const {
  cplx acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() == 1) return Polynomial{0.0};
  std::vector<cplx> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted_up() const {
  std::vector<cplx> c(coeffs_.size() + 1, 0.0);
  std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + 1);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::shifted_down() const {
  if (std::abs(coeffs_[0]) > 1e-12) {
    throw MathError(ErrorCode::NotNormalized, "polynomial has nonzero constant term; cannot divide by z");
  }
  if (coeffs_.size() == 1) return Polynomial{0.0};
  return Polynomial(std::vector<cplx>(coeffs_.begin() + 1, coeffs_.end()));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<cplx> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + cplx(-1.0) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<cplx> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(cplx s, const Polynomial& a) {
  std::vector<cplx> c = a.coeffs_;
  for (auto& v : c) v *= s;
  return Polynomial(std::move(c));
}

// --------------------------------------------------------------- RationalMap

RationalMap::RationalMap(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {}

RationalMap RationalMap::derivative() const {
  return RationalMap(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

namespace {

bool same(const Polynomial& a, const Polynomial& b) {
  return std::equal(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

}  // namespace

RationalMap operator+(const RationalMap& a, const RationalMap& b) {
  if (same(a.den_, b.den_)) return RationalMap(a.num_ + b.num_, a.den_);
  return RationalMap(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalMap operator-(const RationalMap& a, const RationalMap& b) { return a + cplx(-1.0) * b; }

RationalMap operator*(const RationalMap& a, const RationalMap& b) {
  return RationalMap(a.num_ * b.num_, a.den_ * b.den_);
}

RationalMap operator/(const RationalMap& a, const RationalMap& b) {
  return RationalMap(a.num_ * b.den_, a.den_ * b.num_);
}

RationalMap operator*(cplx s, const RationalMap& a) { return RationalMap(s * a.num_, a.den_); }

// --------------------------------------------------------------- AnalyticMap

AnalyticMap AnalyticMap::from_series(PowerSeries series, std::string name) {
  return AnalyticMap(std::move(name), std::move(series));
}

AnalyticMap AnalyticMap::from_rational(RationalMap rational, std::string name) {
  return AnalyticMap(std::move(name), std::move(rational));
}

AnalyticMap AnalyticMap::closed_form(std::string name, LocalExpansion local) {
  return AnalyticMap(std::move(name), std::move(local));
}

AnalyticMap AnalyticMap::kummer(const KummerParams& params) {
  std::ostringstream name;
  name << "Kummer(" << params.a() << "," << params.c() << ")";
  return closed_form(name.str(), [params](cplx z0, int order) {
    if (order == 0) return PowerSeries{kummer_eval(params, z0).value};
    return kummer_local(params, z0, order);
  });
}

AnalyticMap AnalyticMap::bessel(const BesselParams& params) {
  std::ostringstream name;
  name << "Bessel(" << params.p() << "," << params.b() << "," << params.c() << ")";
  return closed_form(name.str(), [params](cplx z0, int order) {
    if (order == 0) return PowerSeries{bessel_u_eval(params, z0).value};
    return bessel_u_local(params, z0, order);
  });
}

AnalyticMap AnalyticMap::sector_power(double alpha, double scale) {
  std::ostringstream name;
  name << "SectorPower(" << alpha << "," << scale << ")";
  return closed_form(name.str(), [alpha, scale](cplx z0, int order) {
    const cplx w0 = scale * z0;
    if (order == 0) return PowerSeries{std::pow((1.0 + w0) / (1.0 - w0), alpha)};
    const PowerSeries sz = cplx(scale) * PowerSeries::variable(order, z0);
    const PowerSeries mobius = ps_div(sz + 1.0, -sz + 1.0);
    return ps_pow_principal(mobius, alpha);
  });
}

AnalyticMap AnalyticMap::times_z(const AnalyticMap& inner) {
  const std::string name = "z*" + inner.name();
  if (inner.is_series()) {
    const PowerSeries& s = inner.series();
    return from_series(ps_shift_up(s.padded(s.order() + 1)), name);
  }
  if (inner.is_rational()) {
    const RationalMap& r = inner.rational();
    return from_rational(RationalMap(r.numerator().shifted_up(), r.denominator()), name);
  }
  return closed_form(name, [inner](cplx z0, int order) {
    return ps_mul(PowerSeries::variable(order, z0), inner.local(z0, order));
  });
}

const PowerSeries& AnalyticMap::series() const {
  if (!is_series()) throw MathError(ErrorCode::InvalidArgument, name_ + " is not series-backed");
  return std::get<PowerSeries>(rep_);
}

const RationalMap& AnalyticMap::rational() const {
  if (!is_rational()) throw MathError(ErrorCode::InvalidArgument, name_ + " is not rational");
  return std::get<RationalMap>(rep_);
}

cplx AnalyticMap::operator()(cplx z) const {
  if (const auto* s = std::get_if<PowerSeries>(&rep_)) return ps_eval(*s, z);
  if (const auto* r = std::get_if<RationalMap>(&rep_)) return (*r)(z);
  return std::get<LocalExpansion>(rep_)(z, 0)[0];
}

namespace {

PowerSeries polynomial_local(const Polynomial& p, cplx z0, int order) {
  return ps_recenter(PowerSeries(std::vector<cplx>(p.coeffs().begin(), p.coeffs().end())), z0, order);
}

}  // namespace

PowerSeries AnalyticMap::local(cplx z0, int order) const {
  if (const auto* s = std::get_if<PowerSeries>(&rep_)) return ps_recenter(*s, z0, order);
  if (const auto* r = std::get_if<RationalMap>(&rep_)) {
    return ps_div(polynomial_local(r->numerator(), z0, order), polynomial_local(r->denominator(), z0, order));
  }
  return std::get<LocalExpansion>(rep_)(z0, order);
}

PowerSeries normalized_local(const AnalyticMap& f, cplx z0, int order) {
  if (f.is_series()) {
    const PowerSeries& s = f.series();
    if (std::abs(s[0]) > 1e-12) throw MathError(ErrorCode::NotNormalized, f.name() + ": f(0) must vanish");
    return ps_recenter(ps_shift_down(s), z0, order);
  }
  if (f.is_rational()) {
    const RationalMap& r = f.rational();
    return AnalyticMap::from_rational(RationalMap(r.numerator().shifted_down(), r.denominator()), "")
        .local(z0, order);
  }
  constexpr double kNearOrigin = 1e-6;
  constexpr int kGuardTerms = 6;
  if (std::abs(z0) >= kNearOrigin) {
    return ps_div(f.local(z0, order), PowerSeries::variable(order, z0));
  }
  const PowerSeries at_origin = f.local(0.0, order + kGuardTerms);
  if (std::abs(at_origin[0]) > 1e-12) throw MathError(ErrorCode::NotNormalized, f.name() + ": f(0) must vanish");
  return ps_recenter(ps_shift_down(at_origin), z0, order);
}

// ---------------------------------------------------------------- Transforms

TransformSpec TransformSpec::one_plus_beta(int k, double beta) {
  if (k != 1 && k != 2) throw MathError(ErrorCode::InvalidArgument, "OnePlusBeta needs k in {1, 2}");
  if (!std::isfinite(beta)) throw MathError(ErrorCode::InvalidArgument, "beta must be finite");
  return {TransformKind::OnePlusBeta, k, beta};
}

TransformSpec TransformSpec::p_plus_beta(int k, double beta) {
  if (k < 0 || k > 2) throw MathError(ErrorCode::InvalidArgument, "PPlusBeta needs k in {0, 1, 2}");
  if (!std::isfinite(beta)) throw MathError(ErrorCode::InvalidArgument, "beta must be finite");
  return {TransformKind::PPlusBeta, k, beta};
}

std::string TransformSpec::name() const {
  std::ostringstream out;
  switch (kind) {
    case TransformKind::ZFprimeOverF: out << "zf'/f"; break;
    case TransformKind::Fprime: out << "f'"; break;
    case TransformKind::Z2FprimeOverF2: out << "z^2f'/f^2"; break;
    case TransformKind::OnePlusBeta: out << "1+" << beta << "zp'/p^" << k; break;
    case TransformKind::PPlusBeta: out << "p+" << beta << "zp'/p^" << k; break;
  }
  return out.str();
}

namespace {

/// One formula per transform, shared by every representation. `Ops` supplies
/// z*d/dz, division (with a sub-expression label) and the constant one.
template <typename T, typename Ops>
T transform_formula(const TransformSpec& spec, const T& x, const Ops& ops) {
  switch (spec.kind) {
    case TransformKind::ZFprimeOverF:
      return ops.one(x) + ops.div(ops.zd(x), x, "g in zg'/g");
    case TransformKind::Fprime:
      return x + ops.zd(x);
    case TransformKind::Z2FprimeOverF2:
      return ops.div(x + ops.zd(x), x * x, "g^2 in (g+zg')/g^2");
    case TransformKind::OnePlusBeta:
    case TransformKind::PPlusBeta: {
      T term = ops.zd(x);
      if (spec.k == 1) term = ops.div(term, x, "p in zp'/p");
      if (spec.k == 2) term = ops.div(term, x * x, "p^2 in zp'/p^2");
      const T lead = spec.kind == TransformKind::OnePlusBeta ? ops.one(x) : x;
      return lead + cplx(spec.beta) * term;
    }
  }
  return x;
}

PowerSeries checked_div(const PowerSeries& a, const PowerSeries& b, const std::string& what) {
  try {
    return ps_div(a, b);
  } catch (const MathError& e) {
    if (e.code() != ErrorCode::ZeroConstantTerm) throw;
    throw MathError(ErrorCode::ZeroConstantTerm, "denominator " + what + " vanishes (" + e.what() + ")");
  }
}

struct SeriesOps {
  PowerSeries zd(const PowerSeries& a) const { return ps_zderiv(a); }
  PowerSeries one(const PowerSeries& a) const { return PowerSeries::constant(1.0, a.order()); }
  PowerSeries div(const PowerSeries& a, const PowerSeries& b, const std::string& what) const {
    return checked_div(a, b, what);
  }
};

/// Local expansions about z0: z = z0 + h, so z d/dz costs one order.
struct LocalOps {
  cplx z0;
  PowerSeries zd(const PowerSeries& a) const {
    const PowerSeries d = ps_deriv(a);
    return ps_mul(PowerSeries::variable(d.order(), z0), d);
  }
  PowerSeries one(const PowerSeries& a) const { return PowerSeries::constant(1.0, a.order()); }
  PowerSeries div(const PowerSeries& a, const PowerSeries& b, const std::string& what) const {
    return checked_div(a, b, what);
  }
};

struct RationalOps {
  RationalMap zd(const RationalMap& a) const {
    const RationalMap d = a.derivative();
    return RationalMap(d.numerator().shifted_up(), d.denominator());
  }
  RationalMap one(const RationalMap&) const { return RationalMap(Polynomial{1.0}); }
  RationalMap div(const RationalMap& a, const RationalMap& b, const std::string&) const { return a / b; }
};

void require_unit_at_origin(cplx value, const std::string& what) {
  if (std::abs(value - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg << what << " must equal 1 at the origin, got (" << value.real() << "," << value.imag() << ")";
    throw MathError(ErrorCode::NotNormalized, msg.str());
  }
}

}  // namespace

AnalyticMap apply_transform(const AnalyticMap& base, const TransformSpec& spec) {
  const std::string name = spec.name() + "[" + base.name() + "]";

  if (base.is_series()) {
    if (spec.acts_on_f()) {
      const PowerSeries g = NormalizedFunction::from_f(base.series()).g();
      return AnalyticMap::from_series(transform_formula(spec, g, SeriesOps{}), name);
    }
    require_unit_at_origin(base.series()[0], "p");
    return AnalyticMap::from_series(transform_formula(spec, base.series(), SeriesOps{}), name);
  }

  if (base.is_rational()) {
    const RationalMap& r = base.rational();
    if (spec.acts_on_f()) {
      const RationalMap g(r.numerator().shifted_down(), r.denominator());
      require_unit_at_origin(g(0.0), "f/z");
      return AnalyticMap::from_rational(transform_formula(spec, g, RationalOps{}), name);
    }
    require_unit_at_origin(r(0.0), "p");
    return AnalyticMap::from_rational(transform_formula(spec, r, RationalOps{}), name);
  }

  if (spec.acts_on_f()) {
    require_unit_at_origin(normalized_local(base, 0.0, 0)[0], "f/z");
  } else {
    require_unit_at_origin(base(0.0), "p");
  }
  return AnalyticMap::closed_form(name, [base, spec](cplx z0, int order) {
    const PowerSeries x = spec.acts_on_f() ? normalized_local(base, z0, order + 1) : base.local(z0, order + 1);
    return transform_formula(spec, x, LocalOps{z0}).truncated(order);
  });
}

}  // namespace starlike
