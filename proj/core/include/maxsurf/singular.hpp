// Singular-point detection, light-cone asymptotics, and level-set tracing.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "maxsurf/surface.hpp"

namespace maxsurf {

/// Axis-aligned rectangle in the (x, y) parameter plane.
struct Window {
  double x0;
  double x1;
  double y0;
  double y1;
};

/// Local structure of an isolated singular point, keyed to the sign pattern of
/// the tangent-direction quadratic (see classify()).
enum class SingularType {
  kType1,      ///< no real tangent directions; punctured neighborhood space-like
  kType2,      ///< one tangent-line pair; one space-like and one time-like sector pair
  kType3,      ///< two tangent-line pairs; sectors alternate space/time twice
  kDegenerate  ///< some coefficient of the tangent quadratic vanishes
};

/// An isolated singular point of a surface graph, where the gradient norm
/// reaches 1 and the graph has a light-cone (conical) tangent.
///
/// delta is the root selector in the turning-value relations
/// phi(x0)^2 = (b1 + delta*sqrt(D))/c1 and psi(y0)^2 = (b2 + delta*sqrt(D))/c2,
/// where D is the matrix discriminant; when the leading coefficient vanishes
/// the relation degenerates to P(f^2) = 0 with delta = -sign(b).  The sign of
/// the cone sheet actually taken by the graph (u ~ z0 +/- r) is a property of
/// the branch — it depends on whether the branch meets the turning height
/// from below or from above — and is reported by lightcone_fit().
struct SingularPoint {
  double x0;
  double y0;
  double z0;
  int delta;  ///< root selector in the turning-value relation, +1 or -1
  SingularType type;
  /// Roots (xi1 <= xi2) of the tangent-direction quadratic, when it is
  /// non-degenerate; the tangent lines of the unit-gradient level set are
  /// y - y0 = +/- sqrt(xi_i) (x - x0) for the positive roots.
  std::optional<std::pair<double, double>> xi_roots;
  /// Maximal residual of the quadratic cone fit produced by lightcone_fit()
  /// at the default radii; NaN if the fit could not be evaluated.
  double cone_fit_error;
};

/// Locates singular points of an implicit-product surface inside a window.
///
/// Scans for zeros of phi' and psi' with at least 512 sample cells per profile
/// period (sign-change bracketing plus bisection), pairs them, keeps pairs
/// whose height lands on a turning value of the height profile, and verifies
/// the turning-value relations for a common root selector delta.  Pairs that
/// fail the relations are discarded.  Returns an empty list when the surface
/// has no singular points in the window.
std::vector<SingularPoint> find_special_points(const ImplicitSurface& s,
                                               const Window& window);

/// Result of fitting the light-cone expansion u = z0 + delta*r + c*r^2.
struct LightconeFit {
  int delta;         ///< sheet sign of the branch: sign of u - z0 near the apex
  double c;          ///< least-squares coefficient of r^2
  double fit_error;  ///< max |u - z0 - delta*r - c*r^2| over all samples
};

/// Samples circles of the given radii around a singular point and fits the
/// light-cone expansion.  The sheet sign is measured from the data on the
/// smallest circle.  Throws std::invalid_argument if radii is empty or
/// contains a non-positive value; evaluation failures propagate.
LightconeFit lightcone_fit(const Surface& s, const SingularPoint& p,
                           const std::vector<double>& radii);

/// Local type and tangent directions derived from the generating matrix.
struct Classification {
  SingularType type;
  std::optional<std::pair<double, double>> xi_roots;  ///< ascending; none if degenerate
};

/// Classifies a singular point from the matrix data (beta1, beta2, b3): the
/// tangent-direction quadratic beta1*xi^2 + 2*b3*xi + beta2 = 0 has two real
/// roots whenever the matrix discriminant D is positive (its own discriminant
/// equals 4D); the sign pattern of the roots gives the type.  The result is
/// the same for every singular point of the surface.  Throws
/// std::invalid_argument if the surface carries no matrix and
/// std::domain_error if D <= 0.
Classification classify(const ImplicitSurface& s, const SingularPoint& p);

/// Counts of maximal causal sectors around a singular point.
struct SectorCensus {
  int space_like;
  int time_like;
};

/// Walks a circle of radius r around a singular point, tags each sample
/// space-like or time-like, verifies the antipodal symmetry of the tags, and
/// counts maximal arcs of each kind on the antipodal quotient (opposite
/// sectors are congruent, so each pair counts once).  Throws
/// std::invalid_argument if r is not positive or exceeds a quarter of the
/// smallest period (another singular point would fall inside the circle), and
/// std::domain_error if the antipodal symmetry check fails.
SectorCensus sector_census(const Surface& s, const SingularPoint& p, double r);

/// A point in the (x, y) parameter plane.
struct PlanePoint {
  double x;
  double y;
};

/// Traces the level set |grad u|^2 = 1 inside a window by marching squares on
/// a grid_n x grid_n sample grid.  Each crossing vertex is polished by
/// bisection along its grid edge; chained segments are returned as polylines
/// (closed loops end at their starting vertex; open chains end at the window
/// boundary or at evaluation failures).  Cells whose corners cannot be
/// evaluated are skipped.  Throws std::invalid_argument if the window is
/// degenerate or grid_n < 2.
std::vector<std::vector<PlanePoint>> trace_unit_gradient_levelset(
    const Surface& s, const Window& region, int grid_n = 512);

}  // namespace maxsurf
