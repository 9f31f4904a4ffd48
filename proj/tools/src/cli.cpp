#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "maxsurf/families.hpp"
#include "maxsurf/genmat.hpp"
#include "maxsurf/singular.hpp"
#include "maxsurf/surface.hpp"

namespace maxsurf::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

/// Bad flags, config keys, or input files; mapped to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_double(const std::string& text, const std::string& what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(what + ": cannot parse '" + text + "' as a number");
}

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(text, &pos);
    if (pos == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(what + ": cannot parse '" + text + "' as an integer");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

/// Fully resolved settings of one invocation, after the precedence chain
/// defaults < MAXSURF_TOL < config file < flags.
struct Config {
  std::string entry;
  std::string matrix_file;
  Params params;
  std::optional<double> x0, x1, y0, y1;
  int resolution = 64;
  int grid = 256;
  std::optional<double> radius;
  double tolerance = 1e-8;
  std::string output;
  std::string mesh;
};

/// Raw option storage for one subcommand plus the CLI handles that tell
/// which flags were actually given.
struct Opts {
  std::string entry, matrix_file, config_path, output, mesh;
  std::vector<std::string> params;
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  int resolution = 64;
  int grid = 256;
  double radius = 0;
  double tolerance = 1e-8;
  CLI::Option* o_entry = nullptr;
  CLI::Option* o_matrix = nullptr;
  CLI::Option* o_x0 = nullptr;
  CLI::Option* o_x1 = nullptr;
  CLI::Option* o_y0 = nullptr;
  CLI::Option* o_y1 = nullptr;
  CLI::Option* o_resolution = nullptr;
  CLI::Option* o_grid = nullptr;
  CLI::Option* o_radius = nullptr;
  CLI::Option* o_tolerance = nullptr;
  CLI::Option* o_output = nullptr;
  CLI::Option* o_mesh = nullptr;
};

void add_source_options(CLI::App* cmd, Opts& o) {
  o.o_entry =
      cmd->add_option("--entry", o.entry, "catalog entry name (see 'catalog list')");
  o.o_matrix = cmd->add_option("--matrix", o.matrix_file,
                               "file of nine whitespace-separated reals");
  cmd->add_option("--param", o.params,
                  "catalog parameter override, e.g. --param k=0.8");
  cmd->add_option("--config", o.config_path,
                  "key=value config file (flags take precedence)");
}

void add_window_options(CLI::App* cmd, Opts& o) {
  o.o_x0 = cmd->add_option("--x0", o.x0, "window lower x");
  o.o_x1 = cmd->add_option("--x1", o.x1, "window upper x");
  o.o_y0 = cmd->add_option("--y0", o.y0, "window lower y");
  o.o_y1 = cmd->add_option("--y1", o.y1, "window upper y");
}

void apply_config_file(Config& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    const auto eq = text.find('=');
    const std::string where = path + ":" + std::to_string(lineno);
    if (eq == std::string::npos) {
      throw UsageError(where + ": expected key=value");
    }
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key == "entry") {
      cfg.entry = value;
    } else if (key == "matrix") {
      cfg.matrix_file = value;
    } else if (key == "x0") {
      cfg.x0 = parse_double(value, where);
    } else if (key == "x1") {
      cfg.x1 = parse_double(value, where);
    } else if (key == "y0") {
      cfg.y0 = parse_double(value, where);
    } else if (key == "y1") {
      cfg.y1 = parse_double(value, where);
    } else if (key == "resolution") {
      cfg.resolution = parse_int(value, where);
    } else if (key == "grid") {
      cfg.grid = parse_int(value, where);
    } else if (key == "radius") {
      cfg.radius = parse_double(value, where);
    } else if (key == "tolerance") {
      cfg.tolerance = parse_double(value, where);
    } else if (key == "output") {
      cfg.output = value;
    } else if (key == "mesh") {
      cfg.mesh = value;
    } else if (key.rfind("param.", 0) == 0 && key.size() > 6) {
      cfg.params[key.substr(6)] = parse_double(value, where);
    } else {
      throw UsageError(where + ": unknown config key '" + key + "'");
    }
  }
}

Config resolve(const Opts& o) {
  Config cfg;
  if (const char* env = std::getenv("MAXSURF_TOL")) {
    cfg.tolerance = parse_double(env, "MAXSURF_TOL");
  }
  if (!o.config_path.empty()) apply_config_file(cfg, o.config_path);
  if (o.o_entry != nullptr && o.o_entry->count() > 0) cfg.entry = o.entry;
  if (o.o_matrix != nullptr && o.o_matrix->count() > 0) {
    cfg.matrix_file = o.matrix_file;
  }
  for (const std::string& kv : o.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError("--param expects name=value, got '" + kv + "'");
    }
    cfg.params[trim(kv.substr(0, eq))] =
        parse_double(trim(kv.substr(eq + 1)), "--param " + kv);
  }
  if (o.o_x0 != nullptr && o.o_x0->count() > 0) cfg.x0 = o.x0;
  if (o.o_x1 != nullptr && o.o_x1->count() > 0) cfg.x1 = o.x1;
  if (o.o_y0 != nullptr && o.o_y0->count() > 0) cfg.y0 = o.y0;
  if (o.o_y1 != nullptr && o.o_y1->count() > 0) cfg.y1 = o.y1;
  if (o.o_resolution != nullptr && o.o_resolution->count() > 0) {
    cfg.resolution = o.resolution;
  }
  if (o.o_grid != nullptr && o.o_grid->count() > 0) cfg.grid = o.grid;
  if (o.o_radius != nullptr && o.o_radius->count() > 0) cfg.radius = o.radius;
  if (o.o_tolerance != nullptr && o.o_tolerance->count() > 0) {
    cfg.tolerance = o.tolerance;
  }
  if (o.o_output != nullptr && o.o_output->count() > 0) cfg.output = o.output;
  if (o.o_mesh != nullptr && o.o_mesh->count() > 0) cfg.mesh = o.mesh;

  if (!(cfg.tolerance > 0.0)) {
    throw UsageError("tolerance must be positive");
  }
  if (cfg.resolution < 2) throw UsageError("resolution must be at least 2");
  if (cfg.grid < 2) throw UsageError("grid must be at least 2");
  if (cfg.radius && !(*cfg.radius > 0.0)) {
    throw UsageError("radius must be positive");
  }
  const int coords = int(cfg.x0.has_value()) + int(cfg.x1.has_value()) +
                     int(cfg.y0.has_value()) + int(cfg.y1.has_value());
  if (coords != 0 && coords != 4) {
    throw UsageError("a window needs all of x0, x1, y0, y1");
  }
  if (coords == 4 && (!(*cfg.x0 < *cfg.x1) || !(*cfg.y0 < *cfg.y1))) {
    throw UsageError("window is degenerate");
  }
  return cfg;
}

std::unique_ptr<Surface> make_surface(const Config& cfg) {
  const bool has_entry = !cfg.entry.empty();
  const bool has_matrix = !cfg.matrix_file.empty();
  if (has_entry == has_matrix) {
    throw UsageError("exactly one of --entry and --matrix is required");
  }
  if (has_entry) {
    const CatalogEntry* e = find_entry(cfg.entry);
    if (e == nullptr) {
      throw UsageError("unknown catalog entry '" + cfg.entry +
                       "' (see 'catalog list')");
    }
    try {
      return build_entry(*e, cfg.params);
    } catch (const std::invalid_argument& ex) {
      throw UsageError(ex.what());
    }
  }
  if (!cfg.params.empty()) {
    throw UsageError("parameter overrides apply only to catalog entries");
  }
  Mat3 m;
  try {
    m = read_matrix_file(cfg.matrix_file);
  } catch (const std::runtime_error& ex) {
    throw UsageError(ex.what());
  }
  try {
    return std::make_unique<ImplicitSurface>(
        build_from_matrix(GeneratingMatrix(m)));
  } catch (const std::exception& ex) {
    throw UsageError("cannot build a surface from '" + cfg.matrix_file +
                     "': " + ex.what());
  }
}

/// Window from the config, or one period cell (aperiodic axes fall back to
/// [-half, half]).
Window resolve_window(const Config& cfg, const Surface& s, double half) {
  if (cfg.x0) return Window{*cfg.x0, *cfg.x1, *cfg.y0, *cfg.y1};
  const auto per = s.periods();
  Window w{};
  w.x0 = per.first ? 0.0 : -half;
  w.x1 = per.first ? *per.first : half;
  w.y0 = per.second ? 0.0 : -half;
  w.y1 = per.second ? *per.second : half;
  return w;
}

/// Writes to a file when `path` names one, otherwise to `fallback`.
/// Files open in binary mode so output bytes are platform-independent.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path.empty() || path == "-") {
      os_ = &fallback;
      return;
    }
    file_.emplace(path, std::ios::binary);
    if (!file_->is_open()) {
      throw UsageError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& os() { return file_ ? *file_ : *os_; }

 private:
  std::optional<std::ofstream> file_;
  std::ostream* os_ = nullptr;
};

const char* causal_name(CausalCharacter c) {
  switch (c) {
    case CausalCharacter::kSpaceLike:
      return "space";
    case CausalCharacter::kTimeLike:
      return "time";
    case CausalCharacter::kNull:
      return "null";
  }
  return "unknown";
}

const char* type_name(SingularType t) {
  switch (t) {
    case SingularType::kType1:
      return "type1";
    case SingularType::kType2:
      return "type2";
    case SingularType::kType3:
      return "type3";
    case SingularType::kDegenerate:
      return "degenerate";
  }
  return "unknown";
}

const char* pattern_name(ParabolicForm::Pattern p) {
  switch (p) {
    case ParabolicForm::Pattern::kZeroDiagonal:
      return "zero-diagonal";
    case ParabolicForm::Pattern::kBordered:
      return "bordered";
    case ParabolicForm::Pattern::kDiagonal:
      return "diagonal";
    case ParabolicForm::Pattern::kZeroRowOrColumn:
      return "zero-row-or-column";
  }
  return "unknown";
}

int cmd_matrix_check(const std::string& path, std::ostream& out,
                     std::ostream& err) {
  Mat3 m;
  try {
    m = read_matrix_file(path);
  } catch (const std::runtime_error& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  }
  out << "file: " << path << "\n";
  const bool generating = is_generating(m);
  out << "generating: " << (generating ? "yes" : "no") << "\n";
  if (!generating) return 1;
  const GeneratingMatrix g(m);
  out << "module: " << format17(module_theta(g)) << "\n";
  out << "discriminant: " << format17(discriminant(g)) << "\n";
  try {
    const CanonicalForm f = canonical_elliptic_form(g);
    out << "class: elliptic\n";
    out << "canonical.a: " << format17(f.a) << "\n";
    out << "canonical.b: " << format17(f.b) << "\n";
    out << "canonical.c: " << format17(f.c) << "\n";
    out << "canonical.eps2: " << f.eps2 << "\n";
    out << "canonical.eps3: " << f.eps3 << "\n";
    out << "canonical.lambda1: " << format17(f.lambda1) << "\n";
    out << "canonical.lambda2: " << format17(f.lambda2) << "\n";
  } catch (const std::domain_error&) {
    const ParabolicForm f = classify_parabolic(g);
    out << "class: parabolic\n";
    out << "pattern: " << pattern_name(f.pattern) << "\n";
    out << "row_perm: " << f.row_perm[0] << " " << f.row_perm[1] << " "
        << f.row_perm[2] << "\n";
    out << "col_perm: " << f.col_perm[0] << " " << f.col_perm[1] << " "
        << f.col_perm[2] << "\n";
  }
  return 0;
}

int cmd_sample(const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto s = make_surface(cfg);
  const Window w = resolve_window(cfg, *s, 2.0);
  const int n = cfg.resolution;

  struct Cell {
    double x, y;
    EvalResult r;
    bool failed;
  };
  std::vector<Cell> cells;
  cells.reserve(std::size_t(n) * n);
  int singular = 0;
  int failed = 0;
  for (int jy = 0; jy < n; ++jy) {
    const double y = w.y0 + (w.y1 - w.y0) * jy / (n - 1);
    std::optional<double> seed;
    for (int ix = 0; ix < n; ++ix) {
      const double x = w.x0 + (w.x1 - w.x0) * ix / (n - 1);
      Cell c{x, y, {}, false};
      try {
        c.r = s->evaluate(x, y, seed);
        seed = c.r.z;
      } catch (const std::exception&) {
        c.failed = true;
        ++failed;
        seed.reset();
      }
      if (!c.failed && c.r.singular) ++singular;
      cells.push_back(c);
    }
  }

  Sink sink(cfg.output, out);
  std::ostream& os = sink.os();
  os << "x,y,z,zx,zy,grad_norm_sq,causal,residual\n";
  double max_residual = 0.0;
  for (const Cell& c : cells) {
    if (c.failed) {
      os << format17(c.x) << ',' << format17(c.y)
         << ",nan,nan,nan,nan,failed,nan\n";
      continue;
    }
    double residual = kNaN;
    if (!c.r.singular) {
      try {
        residual = s->pde_residual_implicit(c.x, c.y);
      } catch (const std::exception&) {
      }
    }
    if (std::isfinite(residual)) {
      max_residual = std::max(max_residual, std::abs(residual));
    }
    os << format17(c.x) << ',' << format17(c.y) << ',' << format17(c.r.z)
       << ',' << format17(c.r.zx) << ',' << format17(c.r.zy) << ','
       << format17(c.r.grad_norm_sq) << ',' << causal_name(c.r.causal) << ','
       << format17(residual) << "\n";
  }

  if (!cfg.mesh.empty()) {
    if (cfg.mesh == "-") {
      throw UsageError("mesh output needs a file path");
    }
    Sink mesh_sink(cfg.mesh, out);
    std::ostream& ms = mesh_sink.os();
    ms << "# triangle mesh: v <x> <y> <z> <singular 0|1>; f <i> <j> <k> "
          "(1-based)\n";
    for (const Cell& c : cells) {
      ms << "v " << format17(c.x) << ' ' << format17(c.y) << ' '
         << (c.failed ? "nan" : format17(c.r.z)) << ' '
         << ((!c.failed && c.r.singular) ? 1 : 0) << "\n";
    }
    int faces = 0;
    for (int jy = 0; jy + 1 < n; ++jy) {
      for (int ix = 0; ix + 1 < n; ++ix) {
        const int a = jy * n + ix;
        const int b = a + 1;
        const int c2 = a + n;
        const int d = c2 + 1;
        if (cells[a].failed || cells[b].failed || cells[c2].failed ||
            cells[d].failed) {
          continue;
        }
        ms << "f " << a + 1 << ' ' << b + 1 << ' ' << d + 1 << "\n";
        ms << "f " << a + 1 << ' ' << d + 1 << ' ' << c2 + 1 << "\n";
        faces += 2;
      }
    }
    err << "mesh: " << cfg.mesh << " (" << cells.size() << " vertices, "
        << faces << " faces)\n";
  }

  err << "rows: " << cells.size() << "\n";
  err << "singular: " << singular << "\n";
  err << "failed: " << failed << "\n";
  err << "max_residual: " << format17(max_residual) << "\n";
  err << "residual_within_tolerance: "
      << (max_residual <= cfg.tolerance ? "yes" : "no") << "\n";
  return 0;
}

int cmd_singular(const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto s = make_surface(cfg);
  const auto* imp = dynamic_cast<const ImplicitSurface*>(s.get());
  if (imp == nullptr) {
    throw UsageError(
        "the singular report needs a matrix-built surface with profile form");
  }
  const Window w = resolve_window(cfg, *s, 2.0);
  const std::vector<SingularPoint> pts = find_special_points(*imp, w);

  double cap = std::numeric_limits<double>::infinity();
  const auto per = s->periods();
  if (per.first) cap = std::min(cap, 0.25 * *per.first);
  if (per.second) cap = std::min(cap, 0.25 * *per.second);
  const double radius = cfg.radius ? *cfg.radius : std::min(0.1, 0.4 * cap);

  Sink sink(cfg.output, out);
  std::ostream& os = sink.os();
  os << "count: " << pts.size() << "\n";
  int index = 0;
  for (const SingularPoint& p : pts) {
    os << "\n";
    os << "point.index: " << index++ << "\n";
    os << "point.x: " << format17(p.x0) << "\n";
    os << "point.y: " << format17(p.y0) << "\n";
    os << "point.z: " << format17(p.z0) << "\n";
    os << "point.root_delta: " << p.delta << "\n";
    try {
      const LightconeFit fit =
          lightcone_fit(*s, p, {1e-2, 5e-3, 2.5e-3});
      os << "point.sheet_delta: " << fit.delta << "\n";
    } catch (const std::exception&) {
      os << "point.sheet_delta: unknown\n";
    }
    os << "point.cone_fit_error: " << format17(p.cone_fit_error) << "\n";
    os << "point.type: " << type_name(p.type) << "\n";
    if (p.xi_roots) {
      os << "point.xi1: " << format17(p.xi_roots->first) << "\n";
      os << "point.xi2: " << format17(p.xi_roots->second) << "\n";
    }
    try {
      const SectorCensus c = sector_census(*s, p, radius);
      os << "point.census.space: " << c.space_like << "\n";
      os << "point.census.time: " << c.time_like << "\n";
    } catch (const std::exception& ex) {
      os << "point.census.error: " << ex.what() << "\n";
    }
  }
  err << "points: " << pts.size() << "\n";
  return 0;
}

int cmd_levelset(const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto s = make_surface(cfg);
  const Window w = resolve_window(cfg, *s, 3.0);
  const auto curves = trace_unit_gradient_levelset(*s, w, cfg.grid);

  Sink sink(cfg.output, out);
  std::ostream& os = sink.os();
  os << "curve,vertex,x,y\n";
  std::size_t vertices = 0;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    for (std::size_t j = 0; j < curves[i].size(); ++j) {
      os << i << ',' << j << ',' << format17(curves[i][j].x) << ','
         << format17(curves[i][j].y) << "\n";
    }
    vertices += curves[i].size();
  }
  err << "curves: " << curves.size() << "\n";
  err << "vertices: " << vertices << "\n";

  // Compare traced directions near each singular point against the tangent
  // slopes of the level set there (available when xi roots are positive).
  const double pi = std::acos(-1.0);
  double worst = 0.0;
  int checked = 0;
  if (const auto* imp = dynamic_cast<const ImplicitSurface*>(s.get())) {
    for (const SingularPoint& p : find_special_points(*imp, w)) {
      if (!p.xi_roots) continue;
      std::vector<double> expected;  // line angles in [0, pi)
      for (double xi : {p.xi_roots->first, p.xi_roots->second}) {
        if (xi > 0.0) {
          const double a = std::atan(std::sqrt(xi));
          expected.push_back(a);
          expected.push_back(pi - a);
        }
      }
      if (expected.empty()) continue;
      for (const auto& curve : curves) {
        for (const PlanePoint& v : curve) {
          const double d = std::hypot(v.x - p.x0, v.y - p.y0);
          if (d < 0.06 || d > 0.2) continue;
          const double angle =
              std::fmod(std::atan2(v.y - p.y0, v.x - p.x0) + pi, pi);
          double best = pi;
          for (double a : expected) {
            const double diff = std::abs(angle - a);
            best = std::min(best, std::min(diff, pi - diff));
          }
          worst = std::max(worst, best);
          ++checked;
        }
      }
    }
  }
  if (checked > 0) {
    err << "tangent_check: max_deviation_deg="
        << format17(worst * 180.0 / pi) << " over " << checked
        << " vertices\n";
  } else {
    err << "tangent_check: skipped\n";
  }
  return 0;
}

int cmd_verify(const std::string& name, const Config& cfg, std::ostream& out,
               std::ostream& err) {
  const CatalogEntry* e = find_entry(name);
  if (e == nullptr) {
    throw UsageError("unknown catalog entry '" + name +
                     "' (see 'catalog list')");
  }
  const VerifyReport r = verify_entry(*e, cfg.params);
  out << "entry: " << r.entry << "\n";
  for (const auto& [key, value] : r.params) {
    out << "param." << key << ": " << format17(value) << "\n";
  }
  for (const VerifyCheck& c : r.checks) {
    out << "check " << c.name << ": " << (c.passed ? "pass" : "FAIL") << " ("
        << c.detail << ")\n";
  }
  out << "result: " << (r.ok ? "ok" : "failed") << "\n";
  return r.ok ? 0 : 1;
}

int cmd_catalog_list(std::ostream& out) {
  for (const CatalogEntry& e : build_catalog()) {
    out << e.name << "\n";
    out << "  " << e.summary << "\n";
    for (const ParameterSpec& p : e.parameters) {
      out << "  " << p.name << " in (" << format17(p.lower) << ", "
          << format17(p.upper) << "), default " << format17(p.default_value)
          << "\n";
    }
  }
  return 0;
}

}  // namespace

std::string format17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Mat3 read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open matrix file '" + path + "'");
  Mat3 m{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (!(in >> m[i][j])) {
        throw std::runtime_error("matrix file '" + path +
                                 "' must hold nine real numbers");
      }
    }
  }
  std::string extra;
  if (in >> extra) {
    throw std::runtime_error("matrix file '" + path +
                             "' holds more than nine numbers");
  }
  return m;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"double-periodic maximal surfaces: grids, reports, and "
               "verification",
               "maxsurf"};
  app.require_subcommand(1);

  CLI::App* matrix =
      app.add_subcommand("matrix", "inspect a generating-matrix file");
  matrix->require_subcommand(1);
  std::string matrix_path;
  CLI::App* matrix_check = matrix->add_subcommand(
      "check", "report the generating test, module, discriminant, and "
               "normal form");
  matrix_check->add_option("file", matrix_path, "nine whitespace-separated reals")
      ->required();

  Opts sample_o;
  CLI::App* sample = app.add_subcommand(
      "sample", "sample a surface to a CSV grid and an optional mesh");
  add_source_options(sample, sample_o);
  add_window_options(sample, sample_o);
  sample_o.o_resolution =
      sample->add_option("--res", sample_o.resolution, "grid points per axis");
  sample_o.o_output =
      sample->add_option("--output", sample_o.output, "CSV path ('-' = stdout)");
  sample_o.o_mesh =
      sample->add_option("--mesh", sample_o.mesh, "triangle mesh path");
  sample_o.o_tolerance = sample->add_option(
      "--tol", sample_o.tolerance, "residual tolerance for the summary");

  Opts singular_o;
  CLI::App* singular = app.add_subcommand(
      "singular", "report singular points with classification and census");
  add_source_options(singular, singular_o);
  add_window_options(singular, singular_o);
  singular_o.o_radius = singular->add_option(
      "--radius", singular_o.radius, "sector census radius");
  singular_o.o_output = singular->add_option(
      "--output", singular_o.output, "report path ('-' = stdout)");

  Opts levelset_o;
  CLI::App* levelset = app.add_subcommand(
      "levelset", "trace the |grad u| = 1 curves as CSV polylines");
  add_source_options(levelset, levelset_o);
  add_window_options(levelset, levelset_o);
  levelset_o.o_grid = levelset->add_option(
      "--grid", levelset_o.grid, "marching-squares grid points per axis");
  levelset_o.o_output = levelset->add_option(
      "--output", levelset_o.output, "CSV path ('-' = stdout)");

  Opts verify_o;
  std::string verify_name;
  CLI::App* verify = app.add_subcommand(
      "verify", "run the invariant battery of one catalog entry");
  verify->add_option("name", verify_name, "catalog entry name")->required();
  verify->add_option("--param", verify_o.params,
                     "catalog parameter override, e.g. --param k=0.8");
  verify->add_option("--config", verify_o.config_path,
                     "key=value config file (flags take precedence)");

  CLI::App* catalog = app.add_subcommand("catalog", "catalog inspection");
  catalog->require_subcommand(1);
  CLI::App* catalog_list =
      catalog->add_subcommand("list", "list entries with their parameters");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (matrix_check->parsed()) return cmd_matrix_check(matrix_path, out, err);
    if (sample->parsed()) return cmd_sample(resolve(sample_o), out, err);
    if (singular->parsed()) return cmd_singular(resolve(singular_o), out, err);
    if (levelset->parsed()) return cmd_levelset(resolve(levelset_o), out, err);
    if (verify->parsed()) {
      return cmd_verify(verify_name, resolve(verify_o), out, err);
    }
    if (catalog_list->parsed()) return cmd_catalog_list(out);
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace maxsurf::cli
