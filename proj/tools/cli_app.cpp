#include "cli_app.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "starlike/criteria.hpp"
#include "starlike/error.hpp"
#include "starlike/series_io.hpp"

namespace starlike::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int order = kDefaultOrder;
  std::vector<double> radii = kDefaultRadii;
  int samples = kDefaultSamples;
  int tgrid = 4096;
  std::string out;
  std::string format;  // empty: the command's own default
};

// ------------------------------------------------------------------ parsing

std::vector<double> parse_radii(const std::string& text) {
  std::vector<double> radii;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double r = 0.0;
    try {
      r = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError("bad radius '" + item + "'");
    }
    if (used != item.size()) throw UsageError("bad radius '" + item + "'");
    radii.push_back(r);
  }
  return radii;
}

double parse_real(const std::string& text) {
  if (text.empty()) return 0.0;
  if (text == "+") return 1.0;
  if (text == "-") return -1.0;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("bad number '" + text + "'");
  }
  if (used != text.size()) throw UsageError("bad number '" + text + "'");
  return v;
}

/// "0.3+0.1i", "-2", "0.5i", "1e-3-2e-1j".
cplx parse_complex(std::string text) {
  text.erase(std::remove(text.begin(), text.end(), ' '), text.end());
  if (text.empty()) throw UsageError("empty complex number");
  const char last = text.back();
  if (last != 'i' && last != 'j') return parse_real(text);
  text.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = text.size(); k-- > 1;) {
    if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) {
    const double im = parse_real(text.empty() ? "+" : text);
    return {0.0, im};
  }
  return {parse_real(text.substr(0, split)), parse_real(text.substr(split))};
}

void load_config(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("config " + path + ": " + e.what());
  }
  if (!j.is_object()) throw UsageError("config must be a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "order") cfg.order = value.get<int>();
      else if (key == "radii") cfg.radii = value.get<std::vector<double>>();
      else if (key == "samples") cfg.samples = value.get<int>();
      else if (key == "tgrid") cfg.tgrid = value.get<int>();
      else if (key == "out") cfg.out = value.get<std::string>();
      else if (key == "format") cfg.format = value.get<std::string>();
      else throw UsageError("unknown config key '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw UsageError("config " + path + ": " + e.what());
  }
}

void validate(const RunConfig& cfg) {
  if (cfg.order < 1) throw UsageError("--order must be positive");
  if (cfg.samples < 1) throw UsageError("--samples must be positive");
  if (cfg.tgrid < 16) throw UsageError("--tgrid must be at least 16");
  if (cfg.radii.empty()) throw UsageError("--radii must not be empty");
  for (std::size_t i = 0; i < cfg.radii.size(); ++i) {
    if (!(cfg.radii[i] > 0.0 && cfg.radii[i] < 1.0)) throw UsageError("radii must lie in (0, 1)");
    if (i > 0 && !(cfg.radii[i] > cfg.radii[i - 1])) throw UsageError("radii must be strictly increasing");
  }
  if (!cfg.format.empty() && cfg.format != "json" && cfg.format != "csv") {
    throw UsageError("--format must be json or csv");
  }
}

// ------------------------------------------------------------------ output

json report_json(const SubordinationReport& r) {
  return {{"map", r.map_name},
          {"region", r.region_name},
          {"route", r.route},
          {"min_margin", r.min_margin},
          {"witness_z", complex_to_json(r.witness_z)},
          {"witness_w", complex_to_json(r.witness_w)},
          {"radii", r.radii},
          {"min_margin_per_radius", r.min_margin_per_radius},
          {"samples_per_circle", r.samples_per_circle},
          {"tail_bound", r.tail_bound},
          {"inconclusive", r.inconclusive},
          {"holds", r.holds()}};
}

json threshold_json(const ThresholdResult& t) {
  json j{{"brute", t.brute}, {"iterations", t.iterations}};
  j["analytic"] = t.analytic ? json(*t.analytic) : json(nullptr);
  j["gap"] = t.analytic ? json(t.gap) : json(nullptr);
  return j;
}

std::string fmt12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct Curve {
  std::string name;
  std::vector<BoundarySample> rows;
};

void write_csv(std::ostream& os, const Curve& c) {
  os << "t,u,v\n";
  for (const BoundarySample& s : c.rows) os << fmt12(s.t) << ',' << fmt12(s.w.real()) << ',' << fmt12(s.w.imag()) << '\n';
}

class Context {
 public:
  Context(RunConfig cfg, std::ostream& out, std::ostream& err) : cfg_(std::move(cfg)), out_(out), err_(err) {}

  const RunConfig& cfg() const { return cfg_; }
  std::ostream& err() { return err_; }

  std::string format(const std::string& fallback, std::initializer_list<const char*> allowed) const {
    const std::string f = cfg_.format.empty() ? fallback : cfg_.format;
    for (const char* a : allowed) {
      if (f == a) return f;
    }
    throw UsageError("--format " + f + " is not available for this command");
  }

  /// Writes to --out when given, else to the output stream.
  void emit(const std::string& text) {
    if (cfg_.out.empty()) {
      out_ << text;
      return;
    }
    write_file(cfg_.out, text);
  }

  void emit(const json& j) { emit(j.dump(2) + "\n"); }

  void print(const std::string& text) { out_ << text; }

  static void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
  }

 private:
  RunConfig cfg_;
  std::ostream& out_;
  std::ostream& err_;
};

// ---------------------------------------------------------------- functions

struct FunctionArgs {
  std::string file;
  std::string preset;
  double a = 2.0, c = 6.0;
  double p = 2.0, b = 2.0;
  CLI::Option* c_opt = nullptr;
};

void add_special_params(CLI::App* cmd, FunctionArgs& f) {
  cmd->add_option("--a", f.a, "Kummer parameter a")->capture_default_str();
  f.c_opt = cmd->add_option("--c", f.c, "Kummer c or Bessel c")->capture_default_str();
  cmd->add_option("--p", f.p, "Bessel parameter p")->capture_default_str();
  cmd->add_option("--b", f.b, "Bessel parameter b")->capture_default_str();
}

PowerSeries read_padded(const std::string& path, int order) {
  const PowerSeries s = read_series_file(path);
  return s.order() >= order ? s.truncated(order) : s.padded(order);
}

RationalMap f1_rational() { return RationalMap(Polynomial{0.0, 4.0}, Polynomial{4.0, -4.0, 1.0}); }
RationalMap f2_rational() { return RationalMap(Polynomial{0.0, 1.0, 0.5, 1.0 / 16.0}); }

AnalyticMap function_in_a(const FunctionArgs& f, int order) {
  if (!f.file.empty() && !f.preset.empty()) throw UsageError("give either --f or --preset, not both");
  if (!f.file.empty()) return AnalyticMap::from_series(read_padded(f.file, order), f.file);
  if (f.preset == "f1") return AnalyticMap::from_rational(f1_rational(), "f1");
  if (f.preset == "f2") return AnalyticMap::from_rational(f2_rational(), "f2");
  if (f.preset == "identity") return AnalyticMap::from_rational(RationalMap(Polynomial{0.0, 1.0}), "z");
  if (f.preset == "kummer") return AnalyticMap::times_z(AnalyticMap::kummer(KummerParams(f.a, f.c)));
  if (f.preset == "bessel") return AnalyticMap::times_z(AnalyticMap::bessel(BesselParams(f.p, f.b, f.c)));
  if (f.preset.empty()) throw UsageError("classify needs --f or --preset");
  throw UsageError("unknown preset '" + f.preset + "'");
}

Region class_region(const std::string& name, const double* alpha) {
  if (name == "S*") return Region::half_plane(0.0);
  if (name == "SSC" || name == "S*_C" || name == "S*C") return Region::cardioid();
  if (name.size() > 4 && name.rfind("S*", 0) == 0) {
    const char open = name[2];
    const char close = name.back();
    const std::string inner = name.substr(3, name.size() - 4);
    double a = 0.0;
    if (inner == "a" || inner == "alpha" || inner == "α") {
      if (!alpha) throw UsageError("class " + name + " needs --alpha");
      a = *alpha;
    } else {
      a = parse_real(inner);
    }
    if (open == '(' && close == ')') {
      if (!(a >= 0.0 && a < 1.0)) throw UsageError("S*(alpha) needs 0 <= alpha < 1");
      return Region::half_plane(a);
    }
    if (open == '[' && close == ']') return Region::sector(a);
  }
  throw UsageError("unknown class '" + name + "' (S*, S*(a), S*[a], SSC)");
}

std::vector<double> ladder_up_to(const std::vector<double>& radii, std::optional<double> r) {
  if (!r) return radii;
  std::vector<double> out;
  for (double x : radii) {
    if (x < *r) out.push_back(x);
  }
  out.push_back(*r);
  return out;
}

int exit_for(const SubordinationReport& r) {
  if (r.inconclusive) return kInconclusive;
  return r.holds() ? kHolds : kFails;
}

// ----------------------------------------------------------------- commands

struct ClassifyArgs {
  FunctionArgs f;
  std::string cls;
  double alpha = 0.0;
  CLI::Option* alpha_opt = nullptr;
  double r = 0.0;
  CLI::Option* r_opt = nullptr;
  int m = 0;
  CLI::Option* m_opt = nullptr;
};

int cmd_classify(Context& ctx, const ClassifyArgs& a) {
  ctx.format("json", {"json"});
  const double* alpha = a.alpha_opt->count() ? &a.alpha : nullptr;
  const std::optional<double> r = a.r_opt->count() ? std::optional(a.r) : std::nullopt;
  const Region region = class_region(a.cls, alpha);
  const AnalyticMap f = function_in_a(a.f, ctx.cfg().order);
  const AnalyticMap p = apply_transform(f, TransformSpec::zfprime_over_f());
  const int m = a.m_opt->count() ? a.m : ctx.cfg().samples;
  const SubordinationReport rep = check_subordination(p, region, ladder_up_to(ctx.cfg().radii, r), m);
  ctx.emit(json{{"command", "classify"}, {"function", f.name()}, {"class", a.cls}, {"report", report_json(rep)}});
  return exit_for(rep);
}

struct CurvesArgs {
  std::string figure;
  std::string region;
  FunctionArgs f;
  double alpha = 1.0;
  CLI::Option* alpha_opt = nullptr;
  double threshold = 0.0;
  double r = 0.999;
};

Curve image_curve(const std::string& name, const AnalyticMap& map, double r, const std::vector<double>& ts) {
  Curve c{name, {}};
  c.rows.reserve(ts.size());
  for (double t : ts) c.rows.push_back({t, map(std::polar(r, t))});
  return c;
}

Curve boundary_curve(const std::string& name, const Region& region, const std::vector<double>& ts) {
  return Curve{name, region_boundary(region, ts)};
}

double min_margin_rows(const Curve& c, const Region& region) {
  double best = std::numeric_limits<double>::infinity();
  for (const BoundarySample& s : c.rows) best = std::min(best, region.margin(s.w));
  return best;
}

int cmd_curves(Context& ctx, const CurvesArgs& a) {
  const std::string fmt = ctx.format("csv", {"csv", "json"});
  if (a.figure.empty() == a.region.empty()) throw UsageError("curves needs exactly one of --figure or --region");
  if (!(a.r > 0.0 && a.r < 1.0)) throw UsageError("--r must lie in (0, 1)");
  const std::vector<double> ts = t_grid(ctx.cfg().samples);

  std::vector<Curve> curves;
  std::optional<Region> target;
  if (!a.region.empty()) {
    if (a.region == "car") target = Region::cardioid();
    else if (a.region == "sector") target = Region::sector(a.alpha);
    else if (a.region == "halfplane") target = Region::half_plane(a.threshold);
    else throw UsageError("unknown region '" + a.region + "' (car, sector, halfplane)");
    curves.push_back(boundary_curve(a.region, *target, ts));
  } else if (a.figure == "fig1") {
    target = Region::cardioid();
    const TransformSpec zf = TransformSpec::zfprime_over_f();
    curves.push_back(boundary_curve("cardioid", *target, ts));
    curves.push_back(image_curve("q1", apply_transform(AnalyticMap::from_rational(f1_rational(), "f1"), zf), a.r, ts));
    curves.push_back(image_curve("q2", apply_transform(AnalyticMap::from_rational(f2_rational(), "f2"), zf), a.r, ts));
  } else if (a.figure == "fig2") {
    const KummerParams kp(a.f.a, a.f.c);
    const double alpha = a.alpha_opt->count() ? a.alpha : kummer_alpha_min(kp.a(), kp.c()) + 0.01;
    target = Region::sector(alpha);
    curves.push_back(boundary_curve("sector", *target, ts));
    curves.push_back(image_curve("phi", AnalyticMap::kummer(kp), a.r, ts));
  } else if (a.figure == "fig3") {
    const double c = a.f.c_opt->count() ? a.f.c : 6.0;
    const BesselParams bp(a.f.p, a.f.b, c);
    const double alpha = a.alpha_opt->count() ? a.alpha : bessel_alpha_min(bp.p(), bp.b(), bp.c()) + 0.01;
    target = Region::sector(alpha);
    curves.push_back(boundary_curve("sector", *target, ts));
    curves.push_back(image_curve("u", AnalyticMap::bessel(bp), a.r, ts));
  } else {
    throw UsageError("unknown figure '" + a.figure + "' (fig1, fig2, fig3)");
  }

  // Image curves must sit strictly inside the target.
  json checks = json::object();
  bool inside = true;
  for (std::size_t i = 1; i < curves.size(); ++i) {
    const double m = min_margin_rows(curves[i], *target);
    checks[curves[i].name] = {{"region", target->name()}, {"min_margin", m}};
    inside = inside && m > 0.0;
  }

  if (fmt == "json") {
    json j{{"command", "curves"}, {"curves", json::object()}, {"checks", checks}};
    for (const Curve& c : curves) {
      json rows = json::array();
      for (const BoundarySample& s : c.rows) rows.push_back({s.t, s.w.real(), s.w.imag()});
      j["curves"][c.name] = std::move(rows);
    }
    ctx.emit(j);
  } else if (ctx.cfg().out.empty()) {
    std::ostringstream os;
    for (const Curve& c : curves) {
      if (curves.size() > 1) os << "# " << c.name << '\n';
      write_csv(os, c);
    }
    ctx.print(os.str());
  } else if (curves.size() == 1) {
    std::ostringstream os;
    write_csv(os, curves.front());
    Context::write_file(ctx.cfg().out, os.str());
  } else {
    std::filesystem::path stem(ctx.cfg().out);
    if (stem.extension() == ".csv") stem.replace_extension();
    json files = json::array();
    for (const Curve& c : curves) {
      const std::string path = stem.string() + "_" + c.name + ".csv";
      std::ostringstream os;
      write_csv(os, c);
      Context::write_file(path, os.str());
      files.push_back(path);
    }
    ctx.print(json{{"command", "curves"}, {"files", files}, {"checks", checks}}.dump(2) + "\n");
  }
  return inside ? kHolds : kFails;
}

struct VerifyArgs {
  std::string theorem;
  FunctionArgs f;
  double alpha = 1.0;
  CLI::Option* alpha_opt = nullptr;
  double beta = 0.0;
  CLI::Option* beta_opt = nullptr;
  int k = 0;
  int n = 1;
};

double require(const CLI::Option* opt, double value, const std::string& name) {
  if (!opt->count()) throw UsageError("this theorem needs " + name);
  return value;
}

BisectionOptions bisection(const RunConfig& cfg) {
  BisectionOptions o;
  o.t_samples = cfg.tgrid;
  return o;
}

double q_check(const RationalMap& q, const RunConfig& cfg, RealPartMode mode) {
  return min_real_part(AnalyticMap::from_rational(q, "Q"), cfg.radii.back(), cfg.samples, mode);
}

int verify_21(Context& ctx, const VerifyArgs& a) {
  const double alpha = require(a.alpha_opt, a.alpha, "--alpha");
  json j{{"command", "verify"}, {"theorem", "2.1"}, {"alpha", alpha}, {"n", a.n}};
  std::optional<AdmissibleTriple> triple;
  std::optional<AnalyticMap> map;
  if (a.f.preset == "kummer") {
    const KummerParams kp(a.f.a, a.f.c);
    triple = AdmissibleTriple::kummer(kp, alpha, a.n);
    map = AnalyticMap::kummer(kp);
    j["params"] = {{"a", kp.a()}, {"c", kp.c()}};
    try {
      j["alpha_min"] = kummer_alpha_min(kp.a(), kp.c());
    } catch (const MathError&) {
      j["alpha_min"] = nullptr;
    }
    j["discriminant_check"] = discriminant_check_kummer(kp.a(), kp.c(), alpha);
  } else if (a.f.preset == "bessel") {
    const BesselParams bp(a.f.p, a.f.b, a.f.c_opt->count() ? a.f.c : 6.0);
    triple = AdmissibleTriple::bessel(bp, alpha, a.n);
    map = AnalyticMap::bessel(bp);
    j["params"] = {{"p", bp.p()}, {"b", bp.b()}, {"c", bp.c()}, {"k", bp.k()}};
    try {
      j["alpha_min"] = bessel_alpha_min(bp.p(), bp.b(), bp.c());
    } catch (const MathError&) {
      j["alpha_min"] = nullptr;
    }
    j["discriminant_check"] = discriminant_check_bessel(bp.p(), bp.b(), bp.c(), alpha);
  } else {
    throw UsageError("theorem 2.1 needs --preset kummer or --preset bessel");
  }
  const double margin = thm21_margin(*triple);
  const SubordinationReport rep = check_subordination(*map, Region::sector(alpha), ctx.cfg().radii, ctx.cfg().samples);
  const bool verdict = margin > 0.0 && rep.holds();
  j["margin"] = margin;
  j["hypothesis_holds"] = margin > 0.0;
  j["subordination"] = report_json(rep);
  j["verdict"] = verdict;
  ctx.emit(j);
  if (rep.inconclusive) return kInconclusive;
  return verdict ? kHolds : kFails;
}

int verify_31(Context& ctx, const VerifyArgs& a) {
  const double alpha = require(a.alpha_opt, a.alpha, "--alpha");
  const double beta = require(a.beta_opt, a.beta, "--beta");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw UsageError("--alpha must lie in (0, 1]");
  const double threshold = thm31_constant() / alpha;
  const double boundary = boundary_predicate_min(BoundaryTheorem::Thm31, {alpha, beta}, bisection(ctx.cfg()));
  const double q = q_check(RationalMap(Polynomial{0.0, 1.0}, Polynomial{1.0, 0.0, -1.0}), ctx.cfg(), RealPartMode::Starlike);
  const bool hypothesis = std::abs(beta) >= threshold;
  const bool verdict = hypothesis && boundary >= 0.0 && q > 0.0;
  ctx.emit(json{{"command", "verify"},
                {"theorem", "3.1"},
                {"alpha", alpha},
                {"beta", beta},
                {"threshold", threshold},
                {"hypothesis_holds", hypothesis},
                {"boundary_min", boundary},
                {"q_starlike_min", q},
                {"verdict", verdict}});
  return verdict ? kHolds : kFails;
}

int verify_32(Context& ctx, const VerifyArgs& a) {
  const double alpha = require(a.alpha_opt, a.alpha, "--alpha");
  const double beta = require(a.beta_opt, a.beta, "--beta");
  const Thm32Result r = thm32_check(alpha, beta);
  const double boundary = boundary_predicate_min(BoundaryTheorem::Thm32, {alpha, beta}, bisection(ctx.cfg()));
  const double q = q_check(RationalMap(Polynomial{1.0, -2.0 * alpha, 1.0}, Polynomial{1.0, 0.0, -1.0}), ctx.cfg(),
                           RealPartMode::Plain);
  const bool applies = r.holds_a.has_value() || r.holds_b.has_value();
  const bool holds = r.holds_a.value_or(false) || r.holds_b.value_or(false);
  const bool verdict = applies && holds && boundary >= 0.0 && q > 0.0;
  json j{{"command", "verify"}, {"theorem", "3.2"}, {"alpha", alpha}, {"beta", beta}, {"applies", applies}};
  j["holds_a"] = r.holds_a ? json(*r.holds_a) : json(nullptr);
  j["holds_b"] = r.holds_b ? json(*r.holds_b) : json(nullptr);
  if (r.holds_b) j["lhs_b"] = thm32b_lhs(alpha, beta);
  j["boundary_min"] = boundary;
  j["q_real_min"] = q;
  j["verdict"] = verdict;
  ctx.emit(j);
  return verdict ? kHolds : kFails;
}

int verify_34(Context& ctx, const VerifyArgs& a) {
  const double alpha = require(a.alpha_opt, a.alpha, "--alpha");
  const double beta = require(a.beta_opt, a.beta, "--beta");
  AnalyticMap p = AnalyticMap::sector_power(alpha / 2.0, 0.5);
  if (!a.f.file.empty()) {
    p = AnalyticMap::from_series(read_padded(a.f.file, ctx.cfg().order), a.f.file);
  } else if (a.f.preset == "one") {
    p = AnalyticMap::from_series(PowerSeries::constant(1.0, ctx.cfg().order), "1");
  } else if (a.f.preset == "sector") {
    p = AnalyticMap::sector_power(alpha);
  } else if (!a.f.preset.empty() && a.f.preset != "half-sector") {
    throw UsageError("theorem 3.4 presets: half-sector, sector, one");
  }
  const Thm34Result r = thm34_premise_check(p, alpha, beta, a.k, ctx.cfg().radii, ctx.cfg().samples);
  if (!r.warning.empty()) ctx.err() << "warning: " << r.warning << '\n';
  ctx.emit(json{{"command", "verify"},
                {"theorem", "3.4"},
                {"alpha", alpha},
                {"beta", beta},
                {"k", a.k},
                {"theorem_applies", r.theorem_applies},
                {"warning", r.warning},
                {"premise", report_json(r.premise)},
                {"conclusion", report_json(r.conclusion)},
                {"premise_holds", r.premise_holds()},
                {"conclusion_holds", r.conclusion_holds()},
                {"verdict", r.implication_consistent()}});
  if (r.premise.inconclusive || r.conclusion.inconclusive) return kInconclusive;
  return r.implication_consistent() ? kHolds : kFails;
}

int verify_35_33(Context& ctx, const VerifyArgs& a, bool is35) {
  const double beta = require(a.beta_opt, a.beta, "--beta");
  const BoundaryTheorem th = is35 ? BoundaryTheorem::Thm35 : BoundaryTheorem::Thm33;
  const bool hypothesis = is35 ? beta >= 0.0 : beta <= 0.0;
  const double boundary = boundary_predicate_min(th, {1.0, beta}, bisection(ctx.cfg()));
  json j{{"command", "verify"},
         {"theorem", is35 ? "3.5" : "3.3"},
         {"beta", beta},
         {"hypothesis_holds", hypothesis},
         {"boundary_min", boundary}};
  bool q_ok = true;
  if (beta != 0.0) {
    // Q = 2 beta z/(1 -+ z)^2
    const double s = is35 ? -1.0 : 1.0;
    const double q = q_check(RationalMap(Polynomial{0.0, 2.0 * beta}, Polynomial{1.0, 2.0 * s, 1.0}), ctx.cfg(),
                             RealPartMode::Starlike);
    j["q_starlike_min"] = q;
    q_ok = q > 0.0;
  }
  const bool verdict = hypothesis && boundary >= 0.0 && q_ok;
  j["verdict"] = verdict;
  ctx.emit(j);
  return verdict ? kHolds : kFails;
}

int cmd_verify(Context& ctx, const VerifyArgs& a) {
  ctx.format("json", {"json"});
  if (a.theorem == "2.1") return verify_21(ctx, a);
  if (a.theorem == "3.1") return verify_31(ctx, a);
  if (a.theorem == "3.2") return verify_32(ctx, a);
  if (a.theorem == "3.4") return verify_34(ctx, a);
  if (a.theorem == "3.5") return verify_35_33(ctx, a, true);
  if (a.theorem == "3.3") return verify_35_33(ctx, a, false);
  throw UsageError("unknown theorem '" + a.theorem + "' (2.1, 3.1, 3.2, 3.3, 3.4, 3.5)");
}

struct ThresholdArgs {
  std::string theorem;
  double alpha = 1.0;
};

int cmd_threshold(Context& ctx, const ThresholdArgs& a) {
  ctx.format("json", {"json"});
  constexpr double kGapTolerance = 1e-4;
  if (a.theorem == "3.1") {
    if (!(a.alpha > 0.0 && a.alpha <= 1.0)) throw UsageError("--alpha must lie in (0, 1]");
    const ThresholdResult r = thm31_min_beta(a.alpha, bisection(ctx.cfg()));
    json j = threshold_json(r);
    j["theorem"] = "3.1";
    j["alpha"] = a.alpha;
    j["t_samples"] = ctx.cfg().tgrid;
    ctx.emit(j);
    return r.gap <= kGapTolerance ? kHolds : kFails;
  }
  if (a.theorem == "3.2") {
    if (!(a.alpha > 0.0 && a.alpha < 1.0)) throw UsageError("theorem 3.2 threshold needs 0 < alpha < 1");
    const ThresholdResult r = thm32b_min_beta(a.alpha, bisection(ctx.cfg()));
    json j = threshold_json(r);
    j["theorem"] = "3.2";
    j["alpha"] = a.alpha;
    ctx.emit(j);
    return kHolds;
  }
  throw UsageError("threshold supports --theorem 3.1 or 3.2");
}

struct SpecialArgs {
  std::string kind = "kummer";
  FunctionArgs f;
  std::string z = "0";
};

int cmd_special_eval(Context& ctx, const SpecialArgs& a) {
  ctx.format("json", {"json"});
  const cplx z = parse_complex(a.z);
  SeriesValue v{};
  if (a.kind == "kummer") v = kummer_eval(KummerParams(a.f.a, a.f.c), z);
  else if (a.kind == "bessel") v = bessel_u_eval(BesselParams(a.f.p, a.f.b, a.f.c), z);
  else throw UsageError("--kind must be kummer or bessel");
  ctx.emit(json{{"value", complex_to_json(v.value)}, {"terms_used", v.terms_used}});
  return kHolds;
}

int cmd_special_series(Context& ctx, const SpecialArgs& a) {
  const std::string fmt = ctx.format("json", {"json", "csv"});
  PowerSeries s{1.0};
  if (a.kind == "kummer") s = kummer_series(KummerParams(a.f.a, a.f.c), ctx.cfg().order);
  else if (a.kind == "bessel") s = bessel_u_series(BesselParams(a.f.p, a.f.b, a.f.c), ctx.cfg().order);
  else throw UsageError("--kind must be kummer or bessel");
  if (fmt == "csv") {
    std::ostringstream os;
    os << "k,re,im\n";
    for (int k = 0; k <= s.order(); ++k) os << k << ',' << fmt12(s[k].real()) << ',' << fmt12(s[k].imag()) << '\n';
    ctx.emit(os.str());
  } else {
    ctx.emit(json{{"order", s.order()}, {"coefficients", series_to_json(s)}});
  }
  return kHolds;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checks for differential-subordination criteria", "starlike"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string config_path;
  int order = 0, samples = 0, tgrid = 0;
  std::string radii, out_path, format;
  app.add_option("--config", config_path, "JSON config file (flags override it)");
  auto* order_opt = app.add_option("--order", order, "truncation order N (default 64)");
  auto* radii_opt = app.add_option("--radii", radii, "comma-separated radii ladder (default 0.9,0.99,0.999)");
  auto* samples_opt = app.add_option("--samples", samples, "samples per circle / curve (default 2048)");
  auto* tgrid_opt = app.add_option("--tgrid", tgrid, "t-grid size for boundary sweeps (default 4096)");
  auto* out_opt = app.add_option("--out", out_path, "output file (CSV curves: path stem)");
  auto* format_opt = app.add_option("--format", format, "json or csv");

  ClassifyArgs ca;
  auto* classify = app.add_subcommand("classify", "test zf'/f against a class region");
  classify->add_option("--f", ca.f.file, "JSON coefficients of f, zero-padded to --order");
  classify->add_option("--preset", ca.f.preset, "f1, f2, identity, kummer (z Phi), bessel (z u)");
  classify->add_option("--class", ca.cls, "S*, S*(a), S*[a], SSC")->required();
  ca.alpha_opt = classify->add_option("--alpha", ca.alpha, "order for S*(a) / S*[a]");
  ca.r_opt = classify->add_option("--r", ca.r, "largest radius; replaces ladder entries above it");
  ca.m_opt = classify->add_option("--m", ca.m, "samples per circle (overrides --samples)");
  add_special_params(classify, ca.f);

  CurvesArgs cu;
  auto* curves = app.add_subcommand("curves", "boundary and image curves as CSV");
  curves->add_option("--figure", cu.figure, "fig1, fig2, fig3");
  curves->add_option("--region", cu.region, "car, sector, halfplane");
  cu.alpha_opt = curves->add_option("--alpha", cu.alpha, "sector order");
  curves->add_option("--threshold", cu.threshold, "half-plane threshold");
  curves->add_option("--r", cu.r, "image circle radius")->capture_default_str();
  add_special_params(curves, cu.f);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check a criterion for given parameters");
  verify->add_option("--theorem", va.theorem, "2.1, 3.1, 3.2, 3.3, 3.4, 3.5")->required();
  verify->add_option("--preset", va.f.preset, "2.1: kummer | bessel; 3.4: half-sector | sector | one");
  verify->add_option("--f", va.f.file, "3.4: JSON coefficients of p");
  va.alpha_opt = verify->add_option("--alpha", va.alpha);
  va.beta_opt = verify->add_option("--beta", va.beta);
  verify->add_option("--k", va.k, "3.4: power k in p + beta zp'/p^k")->check(CLI::Range(0, 2));
  verify->add_option("--n", va.n, "2.1: n")->check(CLI::PositiveNumber);
  add_special_params(verify, va.f);

  ThresholdArgs ta;
  auto* threshold = app.add_subcommand("threshold", "solve for the sharp beta threshold");
  threshold->add_option("--theorem", ta.theorem, "3.1 or 3.2")->required();
  threshold->add_option("--alpha", ta.alpha)->required();

  SpecialArgs sa;
  auto* special = app.add_subcommand("special", "Kummer and Bessel evaluation");
  special->require_subcommand(1);
  auto* eval = special->add_subcommand("eval", "value at one point");
  auto* series = special->add_subcommand("series", "Taylor coefficients up to --order");
  for (CLI::App* sub : {eval, series}) {
    sub->add_option("--kind", sa.kind, "kummer or bessel")->capture_default_str();
    add_special_params(sub, sa.f);
  }
  eval->add_option("--z", sa.z, "complex point, e.g. 0.3+0.1i")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kBadInput;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) load_config(config_path, cfg);
    if (order_opt->count()) cfg.order = order;
    if (radii_opt->count()) cfg.radii = parse_radii(radii);
    if (samples_opt->count()) cfg.samples = samples;
    if (tgrid_opt->count()) cfg.tgrid = tgrid;
    if (out_opt->count()) cfg.out = out_path;
    if (format_opt->count()) cfg.format = format;
    validate(cfg);
    Context ctx(std::move(cfg), out, err);

    if (*classify) return cmd_classify(ctx, ca);
    if (*curves) return cmd_curves(ctx, cu);
    if (*verify) return cmd_verify(ctx, va);
    if (*threshold) return cmd_threshold(ctx, ta);
    if (*eval) return cmd_special_eval(ctx, sa);
    if (*series) return cmd_special_series(ctx, sa);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const MathError& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kBadInput;
}

}  // namespace starlike::cli
