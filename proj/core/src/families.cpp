#include "maxsurf/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "maxsurf/elliptic.hpp"

namespace maxsurf {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNullBand = 1e-10;

CausalCharacter classify_causal(double grad_norm_sq) {
  if (std::abs(grad_norm_sq - 1.0) <= kNullBand) return CausalCharacter::kNull;
  return grad_norm_sq < 1.0 ? CausalCharacter::kSpaceLike
                            : CausalCharacter::kTimeLike;
}

EvalResult cone_apex_result(double z) {
  EvalResult r;
  r.z = z;
  r.zx = kNaN;
  r.zy = kNaN;
  r.hess.reset();
  r.grad_norm_sq = 1.0;
  r.causal = CausalCharacter::kNull;
  r.singular = true;
  return r;
}

/// u = asin(alpha sin(x/sqrt(alpha)) + (1-alpha) sin(y/sqrt(1-alpha))),
/// the double-periodic sine-sum solution for alpha in (0, 1).
class SineSumSurface final : public Surface {
 public:
  explicit SineSumSurface(double alpha)
      : alpha_(alpha),
        beta_(1.0 - alpha),
        ra_(std::sqrt(alpha)),
        rb_(std::sqrt(1.0 - alpha)) {}

  EvalResult evaluate(double x, double y,
                      std::optional<double> /*seed*/) const override {
    const double sa = std::sin(x / ra_);
    const double sb = std::sin(y / rb_);
    const double w = alpha_ * sa + beta_ * sb;
    if (std::abs(w) >= 1.0) {
      return cone_apex_result(std::copysign(0.5 * kPi, w));
    }
    const double s2 = (1.0 - w) * (1.0 + w);
    const double s = std::sqrt(s2);
    const double wx = ra_ * std::cos(x / ra_);
    const double wy = rb_ * std::cos(y / rb_);
    EvalResult r;
    r.z = std::asin(w);
    r.zx = wx / s;
    r.zy = wy / s;
    Hessian h;
    h.zxx = -sa / s + w * wx * wx / (s2 * s);
    h.zyy = -sb / s + w * wy * wy / (s2 * s);
    h.zxy = w * wx * wy / (s2 * s);
    r.hess = h;
    r.grad_norm_sq = (wx * wx + wy * wy) / s2;
    r.causal = classify_causal(r.grad_norm_sq);
    r.singular = false;
    return r;
  }

  std::pair<std::optional<double>, std::optional<double>> periods()
      const override {
    return {2.0 * kPi * ra_, 2.0 * kPi * rb_};
  }

 private:
  double alpha_, beta_, ra_, rb_;
};

/// u = asinh(sqrt(x^2 + y^2)), the rotational maximal catenoid
/// (sinh u)^2 = x^2 + y^2 with a single cone at the origin.
class CatenoidSurface final : public Surface {
 public:
  EvalResult evaluate(double x, double y,
                      std::optional<double> /*seed*/) const override {
    const double r2 = x * x + y * y;
    if (r2 == 0.0) return cone_apex_result(0.0);
    const double rr = std::sqrt(r2);
    const double s2 = 1.0 + r2;
    const double s = std::sqrt(s2);
    EvalResult r;
    r.z = std::asinh(rr);
    r.zx = x / (rr * s);
    r.zy = y / (rr * s);
    const double denom = r2 * rr * s2 * s;
    Hessian h;
    h.zxx = (r2 * s2 - x * x * (1.0 + 2.0 * r2)) / denom;
    h.zyy = (r2 * s2 - y * y * (1.0 + 2.0 * r2)) / denom;
    h.zxy = -x * y * (1.0 + 2.0 * r2) / denom;
    r.hess = h;
    r.grad_norm_sq = 1.0 / s2;
    r.causal = classify_causal(r.grad_norm_sq);
    r.singular = false;
    return r;
  }

  std::pair<std::optional<double>, std::optional<double>> periods()
      const override {
    return {std::nullopt, std::nullopt};
  }
};

std::unique_ptr<Surface> wrap(ImplicitSurface s) {
  return std::make_unique<ImplicitSurface>(std::move(s));
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

Mat3 snsn_family_matrix(double k, double m) {
  const double kp2 = (1.0 - k) * (1.0 + k);
  const double mp2 = (1.0 - m) * (1.0 + m);
  const double l2 = 1.0 / (1.0 - k * k * m * m);
  return Mat3{{{1.0 / kp2, l2 * kp2 * m * m / mp2, k * k / kp2},
               {1.0 / mp2, l2 * k * k * mp2 / kp2, m * m / mp2},
               {l2 * k * k * m * m, 1.0 / (l2 * kp2 * mp2), l2}}};
}

Mat3 sncn_family_matrix(double k, double m) {
  const double kp2 = (1.0 - k) * (1.0 + k);
  const double mp2 = (1.0 - m) * (1.0 + m);
  const double mu2 = 1.0 / (1.0 - kp2 * m * m);
  return Mat3{{{1.0 / kp2, -kp2 * mp2 * m * m * mu2, k * k / kp2},
               {mp2, k * k * mu2 / kp2, -m * m},
               {-k * k * m * m * mu2, 1.0 / (kp2 * mu2), mp2 * mu2}}};
}

Mat3 cncn_family_matrix(double k, double m) {
  const double pk = 1.0 + k * k;
  const double pm = 1.0 + m * m;
  const double l2 = 1.0 / (1.0 - k * k * m * m);
  return Mat3{{{1.0 / pk, -pk * m * m * l2 / pm, -k * k / pk},
               {1.0 / pm, -pm * k * k * l2 / pk, -m * m / pm},
               {k * k * m * m * l2, 1.0 / (l2 * pk * pm), l2}}};
}

Mat3 sinsin1_family_matrix() {
  return Mat3{{{1, 0, 0}, {1, 0, 0}, {0, 1, 1}}};
}

Mat3 one_periodic_family_matrix(double a, double alpha) {
  const double ap2 = (1.0 - alpha) * (1.0 + alpha);
  const double b2 = a * a / ap2;
  const double bb1 = a * a / 2.0;
  const double bb2 = -a * a / 2.0;
  const double bb3 = -b2 * (1.0 + alpha * alpha) / 2.0;
  return Mat3{{{a * a, bb2 + bb3, 0.0},
               {0.0, bb1 + bb3, -a * a},
               {b2 * alpha * alpha, bb1 + bb2, b2}}};
}

Mat3 tanh_scherk_family_matrix() {
  return Mat3{{{1, 0.5, 1}, {1, 0.5, 1}, {0.5, 2, 0.5}}};
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> catalog;

  {
    CatalogEntry e;
    e.name = "catenoid";
    e.summary =
        "rotational maximal catenoid (sinh u)^2 = x^2 + y^2 with one cone "
        "at the origin";
    e.build = [](const Params&) -> std::unique_ptr<Surface> {
      return std::make_unique<CatenoidSurface>();
    };
    e.expected = [](const Params&) {
      ExpectedMetadata m;
      m.census = SectorCensus{1, 0};
      m.singular_cell = {{0.0, 0.0}};
      return m;
    };
    e.extra_checks = [](const Surface& s, const Params&,
                        std::vector<VerifyCheck>& checks) {
      double worst = 0.0;
      for (double r : {0.3, 1.1, 2.4}) {
        const double axis = s.evaluate(r, 0.0).z;
        for (int j = 0; j < 8; ++j) {
          const double th = 2.0 * kPi * j / 8.0 + 0.37;
          const double u = s.evaluate(r * std::cos(th), r * std::sin(th)).z;
          worst = std::max(worst, std::abs(u - axis));
        }
      }
      checks.push_back({"rotational-symmetry", worst <= 1e-10,
                        "max |u(x,y) - u(r,0)| = " + format_double(worst)});
    };
    catalog.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.name = "one-periodic";
    e.summary =
        "slab-confined one-periodic solution sn(a u/alpha'; alpha) = "
        "cos(ax)/cosh(ay)";
    e.parameters = {{"a", 0.0, kInf, 1.0}, {"alpha", 0.0, 1.0, 0.6}};
    e.build = [](const Params& p) -> std::unique_ptr<Surface> {
      BuildOptions o;
      o.phi_init = AtTurningPoint{-1};
      return wrap(build_from_matrix(
          GeneratingMatrix(
              one_periodic_family_matrix(p.at("a"), p.at("alpha"))),
          o));
    };
    e.expected = [](const Params& p) {
      const double a = p.at("a");
      const double alpha = p.at("alpha");
      const double ap = std::sqrt((1.0 - alpha) * (1.0 + alpha));
      ExpectedMetadata m;
      m.discriminant = 0.25 * a * a * a * a;
      m.theta = 0.0;
      m.period_x = 2.0 * kPi / a;
      m.singular_type = SingularType::kType1;
      m.census = SectorCensus{1, 0};
      m.singular_cell = {{0.0, 0.0}, {kPi / a, 0.0}};
      m.slab_bound = complete_K(Modulus(alpha)) * ap / a;
      return m;
    };
    catalog.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.name = "sinsin";
    e.summary =
        "double-periodic sine sum u = asin(alpha sin(x/sqrt alpha) + "
        "(1-alpha) sin(y/sqrt(1-alpha)))";
    e.parameters = {{"alpha", 0.0, 1.0, 0.25}};
    e.build = [](const Params& p) -> std::unique_ptr<Surface> {
      return std::make_unique<SineSumSurface>(p.at("alpha"));
    };
    e.expected = [](const Params& p) {
      const double alpha = p.at("alpha");
      const double ra = std::sqrt(alpha);
      const double rb = std::sqrt(1.0 - alpha);
      ExpectedMetadata m;
      m.period_x = 2.0 * kPi * ra;
      m.period_y = 2.0 * kPi * rb;
      m.census = SectorCensus{1, 0};
      m.singular_cell = {{0.5 * kPi * ra, 0.5 * kPi * rb},
                         {1.5 * kPi * ra, 1.5 * kPi * rb}};
      return m;
    };
    e.extra_checks = [](const Surface& s, const Params& p,
                        std::vector<VerifyCheck>& checks) {
      const double tx = 2.0 * kPi * std::sqrt(p.at("alpha"));
      const double ty = 2.0 * kPi * std::sqrt(1.0 - p.at("alpha"));
      double worst = 0.0;
      for (double x : {0.17, 0.81, 1.93}) {
        for (double y : {0.29, 1.31}) {
          const double u = s.evaluate(x, y).z;
          worst = std::max(worst, std::abs(s.evaluate(x + tx, y).z - u));
          worst = std::max(worst, std::abs(s.evaluate(x, y + ty).z - u));
        }
      }
      checks.push_back({"double-periodicity", worst <= 1e-9,
                        "max translation gap = " + format_double(worst)});
    };
    catalog.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.name = "sinsin1";
    e.summary = "degenerate sine product sin u = sin x sin y";
    e.build = [](const Params&) -> std::unique_ptr<Surface> {
      return wrap(
          build_from_matrix(GeneratingMatrix(sinsin1_family_matrix())));
    };
    e.expected = [](const Params&) {
      ExpectedMetadata m;
      m.discriminant = 0.25;
      m.theta = 0.0;
      m.period_x = 2.0 * kPi;
      m.period_y = 2.0 * kPi;
      m.singular_type = SingularType::kDegenerate;
      m.census = SectorCensus{1, 0};
      m.singular_cell = {{0.5 * kPi, 0.5 * kPi},
                         {0.5 * kPi, 1.5 * kPi},
                         {1.5 * kPi, 0.5 * kPi},
                         {1.5 * kPi, 1.5 * kPi}};
      return m;
    };
    catalog.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.name = "tanh-scherk";
    e.summary =
        "singularity-free mixed-type solution tanh(u/sqrt 2) = tanh x tanh y";
    e.build = [](const Params&) -> std::unique_ptr<Surface> {
      return wrap(
          build_from_matrix(GeneratingMatrix(tanh_scherk_family_matrix())));
    };
    e.expected = [](const Params&) {
      ExpectedMetadata m;
      m.discriminant = 0.0;
      m.theta = 0.5;
      return m;
    };
    e.extra_checks = [](const Surface& s, const Params&,
                        std::vector<VerifyCheck>& checks) {
      const auto* imp = dynamic_cast<const ImplicitSurface*>(&s);
      bool none = false;
      if (imp != nullptr) {
        none = find_special_points(*imp, Window{-3.0, 3.0, -3.0, 3.0}).empty();
      }
      checks.push_back({"no-singular-points", none,
                        none ? "no singular points in [-3,3]^2"
                             : "unexpected singular points"});
      int space = 0;
      int time = 0;
      for (int i = 0; i < 13; ++i) {
        for (int j = 0; j < 13; ++j) {
          const double x = -3.0 + 6.0 * i / 12.0;
          const double y = -3.0 + 6.0 * j / 12.0;
          switch (s.evaluate(x, y).causal) {
            case CausalCharacter::kSpaceLike:
              ++space;
              break;
            case CausalCharacter::kTimeLike:
              ++time;
              break;
            case CausalCharacter::kNull:
              break;
          }
        }
      }
      const bool mixed = space > 0 && time > 0;
      std::ostringstream os;
      os << space << " space-like and " << time
         << " time-like samples on [-3,3]^2";
      checks.push_back({"mixed-type", mixed, os.str()});
    };
    catalog.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.name = "cncn";
    e.summary = "first-type surface from the product of two cn profiles";
    e.parameters = {{"k", 0.0, 1.0, 0.5}, {"m", 0.0, 1.0, 0.5}};
    e.build = [](const Params& p) -> std::unique_ptr<Surface> {
      BuildOptions o;
      o.phi_init = AtTurningPoint{-1};
      o.psi_init = AtTurningPoint{-1};
      return wrap(build_from_matrix(
          GeneratingMatrix(cncn_family_matrix(p.at("k"), p.at("m"))), o));
    };
    e.expected = [](const Params& p) {
      const double k = p.at("k");
      const double m = p.at("m");
      const double kk = complete_K(Modulus(k / std::sqrt(1.0 + k * k)));
      const double km = complete_K(Modulus(m / std::sqrt(1.0 + m * m)));
      ExpectedMetadata md;
      md.discriminant = 0.25;
      md.theta = k * k * m * m /
                 ((1.0 - k * k * m * m) * (1.0 + k * k) * (1.0 + m * m));
      md.period_x = 4.0 * kk;
      md.period_y = 4.0 * km;
      md.singular_type = SingularType::kType1;
      md.census = SectorCensus{1, 0};
      md.singular_cell = {{0.0, 0.0},
                          {0.0, 2.0 * km},
                          {2.0 * kk, 0.0},
                          {2.0 * kk, 2.0 * km}};
      return md;
    };
    catalog.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.name = "sncn";
    e.summary = "second-type surface from the product of sn and cn profiles";
    e.parameters = {{"k", 0.0, 1.0, 0.8}, {"m", 0.0, 1.0, 0.8}};
    e.build = [](const Params& p) -> std::unique_ptr<Surface> {
      BuildOptions o;
      o.psi_init = AtTurningPoint{-1};
      o.zeta_init = AtTurningPoint{-1};
      return wrap(build_from_matrix(
          GeneratingMatrix(sncn_family_matrix(p.at("k"), p.at("m"))), o));
    };
    e.expected = [](const Params& p) {
      const double k = p.at("k");
      const double m = p.at("m");
      const double kp = std::sqrt((1.0 - k) * (1.0 + k));
      const double qx = kp * complete_K(Modulus(k));
      const double km = complete_K(Modulus(m));
      ExpectedMetadata md;
      md.discriminant = 0.25;
      md.theta = -k * k * m * m * (1.0 - m * m) /
                 ((1.0 - (1.0 - k * k) * m * m) * (1.0 - k * k));
      md.period_x = 4.0 * qx;
      md.period_y = 4.0 * km;
      md.singular_type = SingularType::kType2;
      md.census = SectorCensus{1, 1};
      md.singular_cell = {
          {qx, 0.0}, {qx, 2.0 * km}, {3.0 * qx, 0.0}, {3.0 * qx, 2.0 * km}};
      return md;
    };
    catalog.push_back(std::move(e));
  }

  {
    CatalogEntry e;
    e.name = "snsn";
    e.summary = "third-type surface from the product of two sn profiles";
    e.parameters = {{"k", 0.0, 1.0, 0.8}, {"m", 0.0, 1.0, 0.8}};
    e.build = [](const Params& p) -> std::unique_ptr<Surface> {
      return wrap(build_from_matrix(
          GeneratingMatrix(snsn_family_matrix(p.at("k"), p.at("m")))));
    };
    e.expected = [](const Params& p) {
      const double k = p.at("k");
      const double m = p.at("m");
      const double qx = std::sqrt((1.0 - k) * (1.0 + k)) *
                        complete_K(Modulus(k));
      const double qy = std::sqrt((1.0 - m) * (1.0 + m)) *
                        complete_K(Modulus(m));
      ExpectedMetadata md;
      md.discriminant = 0.25;
      md.theta = k * k * m * m /
                 ((1.0 - k * k * m * m) * (1.0 - k * k) * (1.0 - m * m));
      md.period_x = 4.0 * qx;
      md.period_y = 4.0 * qy;
      md.singular_type = SingularType::kType3;
      md.census = SectorCensus{2, 2};
      md.singular_cell = {
          {qx, qy}, {qx, 3.0 * qy}, {3.0 * qx, qy}, {3.0 * qx, 3.0 * qy}};
      return md;
    };
    catalog.push_back(std::move(e));
  }

  return catalog;
}

const CatalogEntry* find_entry(const std::string& name) {
  static const std::vector<CatalogEntry> catalog = build_catalog();
  for (const CatalogEntry& e : catalog) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

Params resolve_params(const CatalogEntry& e, const Params& given) {
  Params full;
  for (const ParameterSpec& spec : e.parameters) {
    full[spec.name] = spec.default_value;
  }
  for (const auto& [name, value] : given) {
    const auto it =
        std::find_if(e.parameters.begin(), e.parameters.end(),
                     [&name](const ParameterSpec& s) { return s.name == name; });
    if (it == e.parameters.end()) {
      throw std::invalid_argument("unknown parameter '" + name +
                                  "' for catalog entry '" + e.name + "'");
    }
    full[name] = value;
  }
  for (const ParameterSpec& spec : e.parameters) {
    const double v = full.at(spec.name);
    if (!(spec.lower < v) || !(v < spec.upper)) {
      std::ostringstream os;
      os << "parameter '" << spec.name << "' = " << v << " of entry '"
         << e.name << "' is outside (" << spec.lower << ", " << spec.upper
         << ")";
      throw std::invalid_argument(os.str());
    }
  }
  return full;
}

std::unique_ptr<Surface> build_entry(const CatalogEntry& e,
                                     const Params& given) {
  return e.build(resolve_params(e, given));
}

namespace {

/// Expected singular points inside the window: cell representatives plus
/// their lattice translates.
std::vector<PlanePoint> predicted_singulars(const ExpectedMetadata& exp,
                                            const Window& w) {
  std::vector<PlanePoint> out;
  for (const PlanePoint& rep : exp.singular_cell) {
    for (int jx = -2; jx <= 2; ++jx) {
      if (jx != 0 && !exp.period_x) continue;
      const double x = rep.x + jx * exp.period_x.value_or(0.0);
      if (x < w.x0 || x > w.x1) continue;
      for (int jy = -2; jy <= 2; ++jy) {
        if (jy != 0 && !exp.period_y) continue;
        const double y = rep.y + jy * exp.period_y.value_or(0.0);
        if (y < w.y0 || y > w.y1) continue;
        out.push_back({x, y});
      }
    }
  }
  return out;
}

double distance_to_nearest(const std::vector<PlanePoint>& pts, double x,
                           double y) {
  double best = kInf;
  for (const PlanePoint& p : pts) {
    best = std::min(best, std::hypot(x - p.x, y - p.y));
  }
  return best;
}

}  // namespace

VerifyReport verify_entry(const CatalogEntry& e, const Params& given) {
  VerifyReport report;
  report.entry = e.name;
  auto add = [&report](const std::string& name, bool passed,
                       const std::string& detail) {
    report.checks.push_back({name, passed, detail});
  };

  std::unique_ptr<Surface> s;
  ExpectedMetadata exp;
  try {
    report.params = resolve_params(e, given);
    s = e.build(report.params);
    exp = e.expected(report.params);
    add("build", true, "surface assembled");
  } catch (const std::exception& ex) {
    add("build", false, ex.what());
    report.ok = false;
    return report;
  }

  const GeneratingMatrix* mat = s->matrix();
  if (mat != nullptr) {
    add("generating", is_generating(mat->entries()),
        "stored 3x3 matrix passes the generating test");
    if (exp.discriminant) {
      const double d = discriminant(*mat);
      const bool ok =
          std::abs(d - *exp.discriminant) <=
          1e-12 * (1.0 + std::abs(*exp.discriminant));
      add("discriminant", ok,
          "discriminant = " + format_double(d) + ", expected " +
              format_double(*exp.discriminant));
    }
    if (exp.theta) {
      const double th = module_theta(*mat);
      const bool ok =
          std::abs(th - *exp.theta) <= 1e-12 * (1.0 + std::abs(*exp.theta));
      add("module", ok,
          "module = " + format_double(th) + ", expected " +
              format_double(*exp.theta));
    }
  }

  {
    const auto [px, py] = s->periods();
    bool ok = px.has_value() == exp.period_x.has_value() &&
              py.has_value() == exp.period_y.has_value();
    if (ok && px) ok = std::abs(*px - *exp.period_x) <= 1e-9;
    if (ok && py) ok = std::abs(*py - *exp.period_y) <= 1e-9;
    std::ostringstream os;
    os << "periods (" << (px ? format_double(*px) : "none") << ", "
       << (py ? format_double(*py) : "none") << ")";
    add("periods", ok, os.str());
  }

  const Window window{
      exp.period_x ? -*exp.period_x / 8.0 : -1.5,
      exp.period_x ? 7.0 * *exp.period_x / 8.0 : 1.5,
      exp.period_y ? -*exp.period_y / 8.0 : -1.5,
      exp.period_y ? 7.0 * *exp.period_y / 8.0 : 1.5,
  };
  const std::vector<PlanePoint> predicted = predicted_singulars(exp, window);

  {
    double worst = 0.0;
    int used = 0;
    const int n = 21;
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        const double x = window.x0 + (window.x1 - window.x0) * i / (n - 1);
        const double y = window.y0 + (window.y1 - window.y0) * j / (n - 1);
        if (distance_to_nearest(predicted, x, y) < 5e-2) continue;
        try {
          worst = std::max(worst, std::abs(s->pde_residual_implicit(x, y)));
          ++used;
        } catch (const std::domain_error&) {
          // a singular sample slipped through the exclusion disks
        }
      }
    }
    add("pde-residual", worst <= 1e-8 && used >= 300,
        "max residual " + format_double(worst) + " over " +
            std::to_string(used) + " grid points");
  }

  std::vector<SingularPoint> found;
  {
    bool ok = true;
    std::string detail;
    if (const auto* imp = dynamic_cast<const ImplicitSurface*>(s.get())) {
      found = find_special_points(*imp, window);
      ok = found.size() == predicted.size();
      for (const SingularPoint& p : found) {
        if (!ok) break;
        ok = distance_to_nearest(predicted, p.x0, p.y0) <= 1e-8;
      }
      detail = std::to_string(found.size()) + " singular points found, " +
               std::to_string(predicted.size()) + " predicted";
    } else {
      for (const PlanePoint& p : predicted) {
        if (!s->evaluate(p.x, p.y).singular) {
          ok = false;
          break;
        }
      }
      detail = "evaluated " + std::to_string(predicted.size()) +
               " predicted singular points";
    }
    add("singular-points", ok, detail);
  }

  if (exp.singular_type) {
    bool ok = false;
    std::string detail = "no singular point available";
    if (!found.empty()) {
      const auto* imp = dynamic_cast<const ImplicitSurface*>(s.get());
      const Classification cls = classify(*imp, found.front());
      ok = cls.type == *exp.singular_type;
      detail = "classified type matches expectation";
      if (!ok) detail = "classification differs from expectation";
    }
    add("classification", ok, detail);
  }

  if (exp.census && !predicted.empty()) {
    SingularPoint probe{predicted.front().x, predicted.front().y, 0.0, -1,
                        SingularType::kDegenerate, std::nullopt, 0.0};
    if (!found.empty()) probe = found.front();
    double cap = kInf;
    const auto [px, py] = s->periods();
    if (px) cap = std::min(cap, 0.25 * *px);
    if (py) cap = std::min(cap, 0.25 * *py);
    const double radius = std::min(0.1, 0.4 * cap);
    bool ok = false;
    std::string detail;
    try {
      const SectorCensus c = sector_census(*s, probe, radius);
      ok = c.space_like == exp.census->space_like &&
           c.time_like == exp.census->time_like;
      std::ostringstream os;
      os << "census (" << c.space_like << ", " << c.time_like
         << "), expected (" << exp.census->space_like << ", "
         << exp.census->time_like << ")";
      detail = os.str();
    } catch (const std::exception& ex) {
      detail = ex.what();
    }
    add("sector-census", ok, detail);
  }

  if (exp.slab_bound) {
    double worst = 0.0;
    const int n = 41;
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        const double x = window.x0 + (window.x1 - window.x0) * i / (n - 1);
        const double y = window.y0 + (window.y1 - window.y0) * j / (n - 1);
        worst = std::max(worst, std::abs(s->evaluate(x, y).z));
      }
    }
    add("slab-bound", worst <= *exp.slab_bound + 1e-9,
        "max |u| = " + format_double(worst) + ", bound " +
            format_double(*exp.slab_bound));
  }

  if (e.extra_checks) e.extra_checks(*s, report.params, report.checks);

  report.ok = std::all_of(report.checks.begin(), report.checks.end(),
                          [](const VerifyCheck& c) { return c.passed; });
  return report;
}

}  // namespace maxsurf
