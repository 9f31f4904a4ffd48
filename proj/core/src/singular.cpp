#include "maxsurf/singular.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "maxsurf/genmat.hpp"
#include "maxsurf/profiles.hpp"

namespace maxsurf {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

/// Zeros of a profile derivative on [lo, hi]: sign-change bracketing on a grid
/// of at least 512 cells per profile period, refined by bisection.
std::vector<double> deriv_zeros(const Profile& f, double lo, double hi) {
  std::vector<double> roots;
  const double span = hi - lo;
  int cells = 512;
  if (f.period() && *f.period() > 0.0) {
    const double per_period = 512.0 * span / *f.period();
    cells = static_cast<int>(std::min(std::ceil(per_period), 1.0e6));
    cells = std::max(cells, 64);
  }
  double prev_t = lo;
  double prev_v = f.deriv(lo);
  for (int i = 1; i <= cells; ++i) {
    const double t = lo + span * i / cells;
    const double v = f.deriv(t);
    if (prev_v == 0.0) {
      roots.push_back(prev_t);
    } else if (v != 0.0 && std::signbit(v) != std::signbit(prev_v)) {
      double a = prev_t;
      double b = t;
      double fa = prev_v;
      for (int it = 0; it < 80; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = f.deriv(m);
        if (fm == 0.0) {
          a = m;
          b = m;
          break;
        }
        if (std::signbit(fm) == std::signbit(fa)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    prev_t = t;
    prev_v = v;
  }
  if (prev_v == 0.0) roots.push_back(prev_t);
  std::sort(roots.begin(), roots.end());
  std::vector<double> out;
  for (double r : roots) {
    if (out.empty() || r - out.back() > 1e-9 * (1.0 + std::abs(span))) {
      out.push_back(r);
    }
  }
  return out;
}

/// True if f0sq equals the turning value of the quartic row (a, b, c) selected
/// by delta: (b + delta*sqrt(D))/c, or its finite limit a/(2b) when c
/// vanishes (which forces delta = -sign(b)).
bool turning_value_matches(double a, double b, double c, double sqrt_d,
                           double f0sq, int delta) {
  const double tol = 1e-8;
  const double row_scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
  if (std::abs(c) > 1e-12 * row_scale) {
    const double root = (b + delta * sqrt_d) / c;
    return std::abs(f0sq - root) <= tol * (1.0 + std::abs(root));
  }
  if (delta != (b > 0.0 ? -1 : 1)) return false;
  const double residual = a - 2.0 * b * f0sq;
  return std::abs(residual) <=
         tol * (1.0 + std::abs(a) + 2.0 * std::abs(b) * std::abs(f0sq));
}

Classification classify_matrix(const GeneratingMatrix& mat) {
  const double d = discriminant(mat);
  if (!(d > 0.0)) {
    throw std::domain_error(
        "singular-point classification requires a positive discriminant");
  }
  const Mat3& m = mat.entries();
  const double beta1 = m[0][1];
  const double beta2 = m[1][1];
  const double beta3 = m[2][1];
  const double b3 = 0.5 * (beta1 + beta2 - beta3);
  const double scale =
      std::max({std::abs(beta1), std::abs(beta2), std::abs(b3)});
  const double degenerate_tol = 1e-10;
  if (std::abs(beta1) <= degenerate_tol * scale ||
      std::abs(beta2) <= degenerate_tol * scale ||
      std::abs(b3) <= degenerate_tol * scale) {
    return {SingularType::kDegenerate, std::nullopt};
  }
  // beta1*xi^2 + 2*b3*xi + beta2 = 0; quarter-discriminant b3^2 - beta1*beta2
  // equals the matrix discriminant, hence positive: two real roots.
  const double sq = std::sqrt(std::max(b3 * b3 - beta1 * beta2, 0.0));
  const double q = -(b3 + std::copysign(sq, b3));
  double xi1 = q / beta1;
  double xi2 = beta2 / q;
  if (xi1 > xi2) std::swap(xi1, xi2);
  SingularType type;
  if (xi1 > 0.0) {
    type = SingularType::kType3;
  } else if (xi2 < 0.0) {
    type = SingularType::kType1;
  } else {
    type = SingularType::kType2;
  }
  return {type, std::make_pair(xi1, xi2)};
}

}  // namespace

std::vector<SingularPoint> find_special_points(const ImplicitSurface& s,
                                               const Window& window) {
  if (!(window.x1 > window.x0) || !(window.y1 > window.y0)) {
    throw std::invalid_argument("search window is degenerate");
  }
  std::vector<SingularPoint> out;
  const std::vector<double> xs = deriv_zeros(s.phi(), window.x0, window.x1);
  if (xs.empty()) return out;
  const std::vector<double> ys = deriv_zeros(s.psi(), window.y0, window.y1);
  if (ys.empty()) return out;

  const GeneratingMatrix* mat = s.matrix();
  const double d = discriminant(*mat);
  if (!(d > 0.0)) return out;  // light-cone points need a positive discriminant
  const double sqrt_d = std::sqrt(d);
  const QuarticCoeffs q1 = s.phi().coeffs().as_phi_like();
  const QuarticCoeffs q2 = s.psi().coeffs().as_phi_like();

  Classification cls{SingularType::kDegenerate, std::nullopt};
  try {
    cls = classify_matrix(*mat);
  } catch (const std::domain_error&) {
    return out;
  }

  for (double x0 : xs) {
    const double phi0 = s.phi().value(x0);
    for (double y0 : ys) {
      EvalResult r;
      try {
        r = s.evaluate(x0, y0);
      } catch (const std::domain_error&) {
        continue;
      }
      if (!r.singular || r.grad_norm_sq != 1.0) continue;  // cone apex only
      const double psi0 = s.psi().value(y0);
      int delta = 0;
      for (int cand : {-1, 1}) {
        if (turning_value_matches(q1.a, q1.b, q1.c, sqrt_d, phi0 * phi0,
                                  cand) &&
            turning_value_matches(q2.a, q2.b, q2.c, sqrt_d, psi0 * psi0,
                                  cand)) {
          delta = cand;
          break;
        }
      }
      if (delta == 0) continue;
      SingularPoint p{x0, y0, r.z, delta, cls.type, cls.xi_roots, kNaN};
      try {
        const LightconeFit fit = lightcone_fit(s, p, {1e-2, 5e-3, 2.5e-3});
        p.cone_fit_error = fit.fit_error;
      } catch (const std::exception&) {
        // leave NaN: the point stands, only the default fit failed
      }
      out.push_back(p);
    }
  }
  return out;
}

LightconeFit lightcone_fit(const Surface& s, const SingularPoint& p,
                           const std::vector<double>& radii) {
  if (radii.empty()) {
    throw std::invalid_argument("lightcone_fit needs at least one radius");
  }
  for (double r : radii) {
    if (!(r > 0.0)) {
      throw std::invalid_argument("lightcone_fit radii must be positive");
    }
  }
  const int n = 128;
  const double two_pi = 2.0 * std::acos(-1.0);
  const double r_min = *std::min_element(radii.begin(), radii.end());

  double mean_offset = 0.0;
  for (int j = 0; j < n; ++j) {
    const double th = two_pi * j / n;
    const EvalResult r =
        s.evaluate(p.x0 + r_min * std::cos(th), p.y0 + r_min * std::sin(th));
    mean_offset += r.z - p.z0;
  }
  const int delta = mean_offset >= 0.0 ? 1 : -1;

  std::vector<std::pair<double, double>> samples;  // (r^2, u - z0 - delta*r)
  samples.reserve(radii.size() * n);
  for (double rad : radii) {
    for (int j = 0; j < n; ++j) {
      const double th = two_pi * j / n;
      const EvalResult r =
          s.evaluate(p.x0 + rad * std::cos(th), p.y0 + rad * std::sin(th));
      samples.emplace_back(rad * rad, r.z - p.z0 - delta * rad);
    }
  }
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& [r2, e] : samples) {
    sxx += r2 * r2;
    sxy += r2 * e;
  }
  const double c = sxx > 0.0 ? sxy / sxx : 0.0;
  double fit_error = 0.0;
  for (const auto& [r2, e] : samples) {
    fit_error = std::max(fit_error, std::abs(e - c * r2));
  }
  return {delta, c, fit_error};
}

Classification classify(const ImplicitSurface& s, const SingularPoint&) {
  const GeneratingMatrix* mat = s.matrix();
  if (mat == nullptr) {
    throw std::invalid_argument("surface carries no generating matrix");
  }
  return classify_matrix(*mat);
}

SectorCensus sector_census(const Surface& s, const SingularPoint& p,
                           double r) {
  if (!(r > 0.0)) {
    throw std::invalid_argument("census radius must be positive");
  }
  const auto per = s.periods();
  double cap = std::numeric_limits<double>::infinity();
  if (per.first) cap = std::min(cap, 0.25 * *per.first);
  if (per.second) cap = std::min(cap, 0.25 * *per.second);
  if (r >= cap) {
    throw std::invalid_argument(
        "census radius reaches neighboring singular points");
  }
  const int n = 720;  // even: antipodal partner of sample i is i + n/2
  const double two_pi = 2.0 * std::acos(-1.0);
  std::vector<int> tag(n);  // 0 space-like, 1 time-like, 2 null or unknown
  for (int i = 0; i < n; ++i) {
    const double th = two_pi * i / n;
    try {
      const auto [causal, g] = s.causal_character(p.x0 + r * std::cos(th),
                                                  p.y0 + r * std::sin(th));
      switch (causal) {
        case CausalCharacter::kSpaceLike:
          tag[i] = 0;
          break;
        case CausalCharacter::kTimeLike:
          tag[i] = 1;
          break;
        case CausalCharacter::kNull:
          tag[i] = 2;
          break;
      }
    } catch (const std::domain_error&) {
      tag[i] = 2;
    }
  }
  int mismatches = 0;
  for (int i = 0; i < n / 2; ++i) {
    if (tag[i] != tag[i + n / 2]) ++mismatches;
  }
  if (mismatches > n / 50) {
    throw std::domain_error(
        "causal sectors are not antipodally symmetric at this radius");
  }
  // Count maximal arcs on the antipodal quotient: the half circle [0, pi)
  // with its ends identified.
  std::vector<int> seq;
  for (int i = 0; i < n / 2; ++i) {
    if (tag[i] != 2) seq.push_back(tag[i]);
  }
  if (seq.empty()) return {0, 0};
  int space = 0;
  int time = 0;
  int transitions = 0;
  const std::size_t len = seq.size();
  for (std::size_t i = 0; i < len; ++i) {
    const int prev = seq[(i + len - 1) % len];
    if (seq[i] != prev) {
      ++transitions;
      (seq[i] == 0 ? space : time) += 1;
    }
  }
  if (transitions == 0) {
    return seq[0] == 0 ? SectorCensus{1, 0} : SectorCensus{0, 1};
  }
  return {space, time};
}

std::vector<std::vector<PlanePoint>> trace_unit_gradient_levelset(
    const Surface& s, const Window& region, int grid_n) {
  if (grid_n < 2) {
    throw std::invalid_argument("level-set grid needs at least 2 samples");
  }
  if (!(region.x1 > region.x0) || !(region.y1 > region.y0)) {
    throw std::invalid_argument("level-set window is degenerate");
  }
  const int n = grid_n;
  std::vector<double> xs(n), ys(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = region.x0 + (region.x1 - region.x0) * i / (n - 1);
    ys[i] = region.y0 + (region.y1 - region.y0) * i / (n - 1);
  }

  auto eval_level = [&s](double x, double y) -> double {
    try {
      const EvalResult r = s.evaluate(x, y);
      const double f = r.grad_norm_sq - 1.0;
      // Exact zeros would defeat the sign convention (positive means f > 0);
      // nudge them onto the level set's negative side.
      return f == 0.0 ? -std::numeric_limits<double>::min() : f;
    } catch (const std::domain_error&) {
      return kNaN;
    }
  };

  std::vector<double> f(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    std::optional<double> seed;
    for (int i = 0; i < n; ++i) {
      double v = kNaN;
      try {
        const EvalResult r = s.evaluate(xs[i], ys[j], seed);
        seed = r.z;
        v = r.grad_norm_sq - 1.0;
        if (v == 0.0) v = -std::numeric_limits<double>::min();
      } catch (const std::domain_error&) {
        // keep NaN and the previous seed
      }
      f[static_cast<std::size_t>(j) * n + i] = v;
    }
  }
  auto fat = [&f, n](int i, int j) {
    return f[static_cast<std::size_t>(j) * n + i];
  };

  // Global edge ids: 2*(j*n + i) for the horizontal edge from grid point
  // (i, j) to (i+1, j), +1 for the vertical edge from (i, j) to (i, j+1).
  auto hedge = [n](int i, int j) {
    return 2 * (static_cast<std::int64_t>(j) * n + i);
  };
  auto vedge = [n](int i, int j) {
    return 2 * (static_cast<std::int64_t>(j) * n + i) + 1;
  };

  std::map<std::int64_t, PlanePoint> verts;
  std::vector<std::pair<std::int64_t, std::int64_t>> segs;

  // Crossing vertex on the edge from (xa, ya) to (xb, yb), polished by
  // bisection of the live level function; falls back to linear interpolation
  // if an evaluation fails mid-polish.
  auto edge_vertex = [&](double xa, double ya, double fa, double xb, double yb,
                         double fb) -> PlanePoint {
    double t_lin = fa / (fa - fb);
    if (!std::isfinite(t_lin)) t_lin = 0.5;
    double lo = 0.0;
    double hi = 1.0;
    double flo = fa;
    bool ok = true;
    for (int it = 0; it < 40; ++it) {
      const double m = 0.5 * (lo + hi);
      const double fm = eval_level(xa + (xb - xa) * m, ya + (yb - ya) * m);
      if (std::isnan(fm)) {
        ok = false;
        break;
      }
      if (std::signbit(fm) == std::signbit(flo)) {
        lo = m;
        flo = fm;
      } else {
        hi = m;
      }
    }
    const double t = ok ? 0.5 * (lo + hi) : t_lin;
    return {xa + (xb - xa) * t, ya + (yb - ya) * t};
  };

  auto ensure_vertex = [&](std::int64_t id, int ia, int ja, int ib, int jb) {
    if (verts.count(id)) return;
    verts[id] = edge_vertex(xs[ia], ys[ja], fat(ia, ja), xs[ib], ys[jb],
                            fat(ib, jb));
  };

  for (int j = 0; j + 1 < n; ++j) {
    for (int i = 0; i + 1 < n; ++i) {
      const double c0 = fat(i, j);
      const double c1 = fat(i + 1, j);
      const double c2 = fat(i + 1, j + 1);
      const double c3 = fat(i, j + 1);
      if (std::isnan(c0) || std::isnan(c1) || std::isnan(c2) ||
          std::isnan(c3)) {
        continue;
      }
      const int mask = (c0 > 0.0 ? 1 : 0) | (c1 > 0.0 ? 2 : 0) |
                       (c2 > 0.0 ? 4 : 0) | (c3 > 0.0 ? 8 : 0);
      if (mask == 0 || mask == 15) continue;

      // Local edges: 0 bottom, 1 right, 2 top, 3 left.
      const std::array<std::int64_t, 4> eid = {hedge(i, j), vedge(i + 1, j),
                                               hedge(i, j + 1), vedge(i, j)};
      auto make_vertex = [&](int local) {
        switch (local) {
          case 0:
            ensure_vertex(eid[0], i, j, i + 1, j);
            break;
          case 1:
            ensure_vertex(eid[1], i + 1, j, i + 1, j + 1);
            break;
          case 2:
            ensure_vertex(eid[2], i, j + 1, i + 1, j + 1);
            break;
          default:
            ensure_vertex(eid[3], i, j, i, j + 1);
            break;
        }
      };
      auto emit = [&](int la, int lb) {
        make_vertex(la);
        make_vertex(lb);
        segs.emplace_back(eid[la], eid[lb]);
      };

      switch (mask) {
        case 1:
        case 14:
          emit(3, 0);
          break;
        case 2:
        case 13:
          emit(0, 1);
          break;
        case 3:
        case 12:
          emit(3, 1);
          break;
        case 4:
        case 11:
          emit(1, 2);
          break;
        case 6:
        case 9:
          emit(0, 2);
          break;
        case 7:
        case 8:
          emit(2, 3);
          break;
        case 5:
        case 10: {
          double center = eval_level(0.5 * (xs[i] + xs[i + 1]),
                                     0.5 * (ys[j] + ys[j + 1]));
          if (std::isnan(center)) center = 0.25 * (c0 + c1 + c2 + c3);
          const bool center_pos = center > 0.0;
          if ((mask == 5) == center_pos) {
            emit(0, 1);
            emit(2, 3);
          } else {
            emit(3, 0);
            emit(1, 2);
          }
          break;
        }
        default:
          break;
      }
    }
  }

  // Chain segments into polylines: every crossing edge touches at most two
  // segments, so the segment graph is a union of paths and cycles.
  struct EdgeAdj {
    std::array<int, 2> seg = {-1, -1};
    int count = 0;
  };
  std::map<std::int64_t, EdgeAdj> adj;
  for (std::size_t si = 0; si < segs.size(); ++si) {
    for (std::int64_t e : {segs[si].first, segs[si].second}) {
      EdgeAdj& a = adj[e];
      if (a.count < 2) a.seg[a.count] = static_cast<int>(si);
      ++a.count;
    }
  }
  std::vector<char> used(segs.size(), 0);
  auto next_unused = [&](std::int64_t e, int exclude) -> int {
    const EdgeAdj& a = adj.at(e);
    for (int k = 0; k < std::min(a.count, 2); ++k) {
      if (a.seg[k] != exclude && a.seg[k] >= 0 && !used[a.seg[k]]) {
        return a.seg[k];
      }
    }
    return -1;
  };
  auto walk = [&](std::int64_t start) {
    std::vector<PlanePoint> line;
    line.push_back(verts.at(start));
    std::int64_t cur = start;
    int last = -1;
    for (;;) {
      const int si = next_unused(cur, last);
      if (si < 0) break;
      used[si] = 1;
      cur = segs[si].first == cur ? segs[si].second : segs[si].first;
      line.push_back(verts.at(cur));
      last = si;
    }
    return line;
  };

  std::vector<std::vector<PlanePoint>> polylines;
  for (const auto& [e, a] : adj) {
    if (a.count == 1 && !used[a.seg[0]]) {
      polylines.push_back(walk(e));
    }
  }
  for (std::size_t si = 0; si < segs.size(); ++si) {
    if (!used[si]) {
      polylines.push_back(walk(segs[si].first));
    }
  }
  return polylines;
}

}  // namespace maxsurf
