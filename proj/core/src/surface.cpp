// Implicit surface assembly, height solves and residual checks.
#include "maxsurf/surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace maxsurf {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Height solve: bisection count and absolute range slack.
constexpr int kBisectIterations = 90;
constexpr double kRangeSlackRel = 1e-9;

// Singular classification: |zeta'| below kSingularRel of its sampled scale
// marks the point singular; numerators below kConeRel of theirs make it a
// light-cone point rather than a fold.  Rounding in the target phi * psi can
// stop the solve ~sqrt(eps) short of a turning, so the band must be wider
// than that.
constexpr double kSingularRel = 1e-6;
constexpr double kConeRel = 1e-5;

// A singular height this close to its branch endpoint is snapped onto it
// (the cone apex); beyond the window the profile is merely saturating.
constexpr double kApexSnapRel = 1e-3;

// Width of the |grad u|^2 = 1 band reported as null.
constexpr double kNullBand = 1e-10;

// Residual spot check applied by build_from_matrix.
constexpr double kSpotRelTol = 1e-7;
constexpr double kSpotAbsTol = 1e-12;

long floor_div2(long m) { return (m >= 0) ? m / 2 : -((-m + 1) / 2); }

// Largest |f| and |f'| over a representative window: one period when the
// profile is periodic, [-8, 8] otherwise.
struct ProfileScales {
  double value;
  double deriv;
};

ProfileScales sample_scales(const Profile& p) {
  double lo = -8.0;
  double hi = 8.0;
  if (p.period()) {
    lo = 0.0;
    hi = *p.period();
  }
  ProfileScales s{0.0, 0.0};
  constexpr int kSamples = 256;
  for (int i = 0; i <= kSamples; ++i) {
    const double t = lo + (hi - lo) * static_cast<double>(i) / kSamples;
    s.value = std::max(s.value, std::abs(p.value(t)));
    s.deriv = std::max(s.deriv, std::abs(p.deriv(t)));
  }
  return s;
}

bool is_constant_profile(const Profile& p) {
  for (double t : {0.0, 0.31, 0.97, 1.73}) {
    if (p.deriv(t) != 0.0) return false;
  }
  return true;
}

double causal_gap(double grad_norm_sq) { return grad_norm_sq - 1.0; }

CausalCharacter classify_causal(double grad_norm_sq) {
  const double gap = causal_gap(grad_norm_sq);
  if (std::abs(gap) <= kNullBand) return CausalCharacter::kNull;
  return gap < 0.0 ? CausalCharacter::kSpaceLike : CausalCharacter::kTimeLike;
}

}  // namespace

double Surface::pde_residual_implicit(double x, double y) const {
  const EvalResult r = evaluate(x, y);
  if (r.singular || !r.hess) {
    throw std::domain_error(
        "pde_residual_implicit: the point is singular, the residual has no "
        "classical value");
  }
  const Hessian& h = *r.hess;
  return (1.0 - r.zy * r.zy) * h.zxx + 2.0 * r.zx * r.zy * h.zxy +
         (1.0 - r.zx * r.zx) * h.zyy;
}

double Surface::pde_residual_fd(double x, double y, double h) const {
  if (!(h > 0.0)) {
    throw std::invalid_argument("pde_residual_fd: step h must be positive");
  }
  const EvalResult c = evaluate(x, y);
  const auto probe = [&](double px, double py) {
    const EvalResult r = evaluate(px, py, c.z);
    if (r.singular) {
      throw std::domain_error(
          "pde_residual_fd: the stencil touches a singular point");
    }
    return r.z;
  };
  if (c.singular) {
    throw std::domain_error(
        "pde_residual_fd: the stencil touches a singular point");
  }
  const double e = probe(x + h, y);
  const double w = probe(x - h, y);
  const double n = probe(x, y + h);
  const double s = probe(x, y - h);
  const double ne = probe(x + h, y + h);
  const double nw = probe(x - h, y + h);
  const double se = probe(x + h, y - h);
  const double sw = probe(x - h, y - h);

  const double ux = (e - w) / (2.0 * h);
  const double uy = (n - s) / (2.0 * h);
  const double uxx = (e - 2.0 * c.z + w) / (h * h);
  const double uyy = (n - 2.0 * c.z + s) / (h * h);
  const double uxy = (ne - nw - se + sw) / (4.0 * h * h);
  return (1.0 - uy * uy) * uxx + 2.0 * ux * uy * uxy + (1.0 - ux * ux) * uyy;
}

std::pair<CausalCharacter, double> Surface::causal_character(double x,
                                                             double y) const {
  const EvalResult r = evaluate(x, y);
  return {r.causal, r.grad_norm_sq};
}

ImplicitSurface::ImplicitSurface(Profile phi, Profile psi, Profile zeta,
                                 GeneratingMatrix matrix, BranchPolicy branch)
    : phi_(std::move(phi)),
      psi_(std::move(psi)),
      zeta_(std::move(zeta)),
      matrix_(std::move(matrix)),
      branch_(std::move(branch)) {
  breaks_ = zeta_.turning_points();
  zeta_period_ = zeta_.period();
  if (zeta_period_ && breaks_.size() != 2) {
    throw std::invalid_argument(
        "implicit surface: periodic height profile must have two turning "
        "instants per period");
  }
  fundamental_sheet_ = sheet_containing(0.0);

  zeta_deriv_scale_ = std::max(sample_scales(zeta_).deriv, 1e-300);
  const ProfileScales ps = sample_scales(phi_);
  const ProfileScales qs = sample_scales(psi_);
  numer_x_scale_ = std::max(ps.deriv * qs.value, 1e-300);
  numer_y_scale_ = std::max(ps.value * qs.deriv, 1e-300);

  // A translation by a full profile period reproduces the height exactly;
  // the half period survives only when a sign symmetry of zeta absorbs the
  // profile's flip.  Probe that numerically.
  const auto refine_period = [&](bool along_x) -> std::optional<double> {
    const Profile& p = along_x ? phi_ : psi_;
    const Profile& q = along_x ? psi_ : phi_;
    if (!p.period()) return std::nullopt;
    const double full = *p.period();
    const double half = 0.5 * full;
    const double qspan = q.period() ? *q.period() : 2.0;
    int valid = 0;
    bool halves = true;
    for (double fp : {0.17, 0.43, 0.71}) {
      for (double fq : {0.29, 0.61}) {
        const double a = fp * full;
        const double b = fq * qspan;
        try {
          const double x = along_x ? a : b;
          const double y = along_x ? b : a;
          const EvalResult base = evaluate(x, y);
          const EvalResult moved =
              along_x ? evaluate(x + half, y) : evaluate(x, y + half);
          ++valid;
          if (std::abs(moved.z - base.z) > 1e-9 * (1.0 + std::abs(base.z))) {
            halves = false;
          }
        } catch (const std::domain_error&) {
          continue;  // sample fell outside the branch; try another
        }
        if (!halves) break;
      }
      if (!halves) break;
    }
    return (halves && valid >= 2) ? half : full;
  };
  period_x_ = refine_period(true);
  period_y_ = refine_period(false);
}

std::pair<double, double> ImplicitSurface::sheet_interval(long m) const {
  if (zeta_period_) {
    const double t0 = breaks_[0];
    const double t1 = breaks_[1];
    const double period = *zeta_period_;
    const long i = floor_div2(m);
    const long r = m - 2 * i;
    const double shift = static_cast<double>(i) * period;
    if (r == 0) return {t0 + shift, t1 + shift};
    return {t1 + shift, t0 + period + shift};
  }
  if (breaks_.empty()) {
    if (m != 0) {
      throw std::invalid_argument(
          "implicit surface: monotone height profile has a single sheet");
    }
    return {-kInf, kInf};
  }
  const double tau = breaks_.front();
  if (m == 0) return {tau, kInf};
  if (m == -1) return {-kInf, tau};
  throw std::invalid_argument("implicit surface: sheet index out of range");
}

long ImplicitSurface::sheet_containing(double z) const {
  if (zeta_period_) {
    const double t0 = breaks_[0];
    const double t1 = breaks_[1];
    const double period = *zeta_period_;
    long k = static_cast<long>(std::floor((z - t0) / period));
    double zs = z - static_cast<double>(k) * period;
    if (zs < t0) {
      --k;
      zs += period;
    } else if (zs >= t0 + period) {
      ++k;
      zs -= period;
    }
    return (zs <= t1) ? 2 * k : 2 * k + 1;
  }
  if (breaks_.empty()) return 0;
  return (z >= breaks_.front()) ? 0 : -1;
}

double ImplicitSurface::solve_height(double target, long sheet) const {
  auto [lo, hi] = sheet_interval(sheet);

  // Reduce to a finite bracket.  On an unbounded side expand geometrically
  // until zeta passes the target or saturates.
  const auto expand = [&](double anchor, double direction) {
    double step = 1.0;
    double at = anchor;
    double value = zeta_.value(at);
    for (int i = 0; i < 64 && std::abs(step) < 1e9; ++i) {
      const double next = anchor + direction * step;
      const double v = zeta_.value(next);
      at = next;
      value = v;
      if ((v - target) * (zeta_.value(anchor) - target) <= 0.0) break;
      step *= 2.0;
    }
    return std::pair<double, double>{at, value};
  };

  double a = lo;
  double b = hi;
  double va;
  double vb;
  if (std::isinf(a) && std::isinf(b)) {
    const auto left = expand(0.0, -1.0);
    const auto right = expand(0.0, 1.0);
    a = left.first;
    va = left.second;
    b = right.first;
    vb = right.second;
  } else if (std::isinf(b)) {
    va = zeta_.value(a);
    const auto right = expand(a, 1.0);
    b = right.first;
    vb = right.second;
  } else if (std::isinf(a)) {
    vb = zeta_.value(b);
    const auto left = expand(b, -1.0);
    a = left.first;
    va = left.second;
  } else {
    va = zeta_.value(a);
    vb = zeta_.value(b);
  }

  double fa = va - target;
  double fb = vb - target;
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (fa * fb > 0.0) {
    // Outside the branch range.  Allow a hair of slack at a finite turning
    // endpoint, where rounding in phi * psi can overshoot the extreme value.
    const double vmin = std::min(va, vb);
    const double vmax = std::max(va, vb);
    const double slack =
        kRangeSlackRel * std::max({1.0, std::abs(vmin), std::abs(vmax)});
    if (target > vmax && target <= vmax + slack) {
      return (va == vmax) ? a : b;
    }
    if (target < vmin && target >= vmin - slack) {
      return (va == vmin) ? a : b;
    }
    throw std::domain_error(
        "implicit surface: height target lies outside the branch range");
  }

  for (int i = 0; i < kBisectIterations; ++i) {
    const double mid = 0.5 * (a + b);
    if (mid == a || mid == b) break;
    const double fm = zeta_.value(mid) - target;
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (fa > 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
      fb = fm;
    }
  }
  return 0.5 * (a + b);
}

EvalResult ImplicitSurface::evaluate(double x, double y,
                                     std::optional<double> seed) const {
  const double pv = phi_.value(x);
  const double qv = psi_.value(y);
  const double target = pv * qv;

  long sheet = fundamental_sheet_;
  if (seed && std::isfinite(*seed)) {
    sheet = sheet_containing(*seed);
  } else if (const auto* cont = std::get_if<ContinuationFrom>(&branch_)) {
    sheet = fundamental_sheet_ + cont->sheet;
  }

  EvalResult r;
  r.z = solve_height(target, sheet);

  const double dz = zeta_.deriv(r.z);
  const double nx = phi_.deriv(x) * qv;
  const double ny = pv * psi_.deriv(y);

  if (std::abs(dz) <= kSingularRel * zeta_deriv_scale_) {
    // Snap the height onto the cone apex when the solve stopped a rounding
    // step short of the branch endpoint.
    const auto [blo, bhi] = sheet_interval(sheet_containing(r.z));
    for (double endpoint : {blo, bhi}) {
      if (std::isfinite(endpoint) &&
          std::abs(r.z - endpoint) <=
              kApexSnapRel * (1.0 + std::abs(endpoint))) {
        r.z = endpoint;
        break;
      }
    }
    const bool cone = std::abs(nx) <= kConeRel * numer_x_scale_ &&
                      std::abs(ny) <= kConeRel * numer_y_scale_;
    r.zx = kNaN;
    r.zy = kNaN;
    r.hess.reset();
    r.singular = true;
    r.grad_norm_sq = cone ? 1.0 : kInf;
    r.causal = cone ? CausalCharacter::kNull : CausalCharacter::kTimeLike;
    return r;
  }

  r.zx = nx / dz;
  r.zy = ny / dz;
  const double d2 = zeta_.second_deriv(r.z);
  Hessian h;
  h.zxx = (phi_.second_deriv(x) * qv - d2 * r.zx * r.zx) / dz;
  h.zyy = (pv * psi_.second_deriv(y) - d2 * r.zy * r.zy) / dz;
  h.zxy = (phi_.deriv(x) * psi_.deriv(y) - d2 * r.zx * r.zy) / dz;
  r.hess = h;
  r.grad_norm_sq = r.zx * r.zx + r.zy * r.zy;
  r.causal = classify_causal(r.grad_norm_sq);
  r.singular = false;
  return r;
}

std::pair<std::optional<double>, std::optional<double>>
ImplicitSurface::periods() const {
  return {period_x_, period_y_};
}

ImplicitSurface build_from_matrix(const GeneratingMatrix& a,
                                  const BuildOptions& options) {
  const Mat3& m = a.entries();
  const double beta1 = m[0][1];
  const double beta2 = m[1][1];
  const double beta3 = m[2][1];
  const double b1 = 0.5 * (beta2 + beta3 - beta1);
  const double b2 = 0.5 * (beta3 + beta1 - beta2);
  const double b3 = 0.5 * (beta1 + beta2 - beta3);

  QuarticCoeffs q1{m[0][0], b1, m[0][2], QuarticCoeffs::Convention::kPhiLike};
  QuarticCoeffs q2{m[1][0], b2, m[1][2], QuarticCoeffs::Convention::kPhiLike};
  QuarticCoeffs q3{m[2][0], b3, m[2][2], QuarticCoeffs::Convention::kZetaLike};

  const auto solve_row = [](const QuarticCoeffs& q,
                            const std::optional<ProfileInit>& init,
                            const char* row) {
    try {
      if (init) return solve_profile(q, *init);
      try {
        return solve_profile(q, AtZero{});
      } catch (const std::domain_error&) {
        return solve_profile(q, AtTurningPoint{-1});
      }
    } catch (const std::exception& e) {
      throw std::invalid_argument(std::string("build_from_matrix: the ") +
                                  row + " row admits no profile: " + e.what());
    }
  };

  Profile phi = solve_row(q1, options.phi_init, "first");
  Profile psi = solve_row(q2, options.psi_init, "second");
  Profile zeta = solve_row(q3, options.zeta_init, "third");
  const std::pair<const Profile*, const char*> rows[] = {
      {&phi, "first"}, {&psi, "second"}, {&zeta, "third"}};
  for (const auto& named : rows) {
    if (is_constant_profile(*named.first)) {
      throw std::invalid_argument(std::string("build_from_matrix: the ") +
                                  named.second +
                                  " row produces a constant profile");
    }
  }

  ImplicitSurface s(std::move(phi), std::move(psi), std::move(zeta), a,
                    options.branch);

  // Spot check: the assembled graph must satisfy the zero-mean-curvature
  // equation wherever we can evaluate it classically.
  const double sx = s.phi().period() ? *s.phi().period() : 2.0;
  const double sy = s.psi().period() ? *s.psi().period() : 2.0;
  int valid = 0;
  for (double fx : {0.171, 0.383, 0.657, 0.829}) {
    for (double fy : {0.237, 0.541, 0.913}) {
      try {
        const EvalResult r = s.evaluate(fx * sx, fy * sy);
        if (r.singular || !r.hess) continue;
        const Hessian& h = *r.hess;
        const double res = (1.0 - r.zy * r.zy) * h.zxx +
                           2.0 * r.zx * r.zy * h.zxy +
                           (1.0 - r.zx * r.zx) * h.zyy;
        const double scale = (1.0 + r.grad_norm_sq) *
                             (std::abs(h.zxx) + std::abs(h.zxy) +
                              std::abs(h.zyy));
        if (std::abs(res) > kSpotRelTol * scale + kSpotAbsTol) {
          throw std::invalid_argument(
              "build_from_matrix: assembled surface fails the residual spot "
              "check");
        }
        ++valid;
      } catch (const std::domain_error&) {
        continue;  // outside the branch or singular; try another sample
      }
    }
  }
  if (valid < 3) {
    throw std::invalid_argument(
        "build_from_matrix: too few classically evaluable points to verify "
        "the assembled surface");
  }
  return s;
}

std::vector<EvalResult> sample_grid(const Surface& s, const GridSpec& g) {
  if (g.nx < 2 || g.ny < 2) {
    throw std::invalid_argument("sample_grid: need at least 2x2 points");
  }
  std::vector<EvalResult> out;
  out.reserve(static_cast<std::size_t>(g.nx) * static_cast<std::size_t>(g.ny));
  for (int iy = 0; iy < g.ny; ++iy) {
    const double y =
        g.y0 + (g.y1 - g.y0) * static_cast<double>(iy) / (g.ny - 1);
    std::optional<double> seed;
    for (int ix = 0; ix < g.nx; ++ix) {
      const double x =
          g.x0 + (g.x1 - g.x0) * static_cast<double>(ix) / (g.nx - 1);
      const EvalResult r = s.evaluate(x, y, seed);
      seed = r.z;
      out.push_back(r);
    }
  }
  return out;
}

}  // namespace maxsurf
