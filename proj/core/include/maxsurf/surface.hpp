// Implicit surfaces zeta(z) = phi(x) psi(y) assembled from generating
// matrices, with evaluation, causal classification and residual checks.
#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "maxsurf/genmat.hpp"
#include "maxsurf/profiles.hpp"

namespace maxsurf {

/// Causal character of the graph at a point, by sign of |grad u|^2 - 1.
enum class CausalCharacter { kSpaceLike, kTimeLike, kNull };

/// Second derivatives of the height function u(x, y).
struct Hessian {
  double zxx = 0.0;
  double zxy = 0.0;
  double zyy = 0.0;
};

/// Result of evaluating a surface at one point.
///
/// At singular points (where the height stays well defined but the gradient
/// does not) `singular` is set, `zx`/`zy` are NaN and `hess` is empty;
/// `grad_norm_sq` carries the limit value (1 at a light-cone point, +inf at
/// a fold).
struct EvalResult {
  double z = 0.0;
  double zx = 0.0;
  double zy = 0.0;
  std::optional<Hessian> hess;
  double grad_norm_sq = 0.0;
  CausalCharacter causal = CausalCharacter::kSpaceLike;
  bool singular = false;
};

/// Solve on the maximal monotone branch of zeta nearest the origin.
struct FundamentalBranch {};

/// Solve on the monotone branch `sheet` intervals away from the fundamental
/// one; `x`/`y` record the reference point the continuation was anchored at.
struct ContinuationFrom {
  double x = 0.0;
  double y = 0.0;
  int sheet = 0;
};

using BranchPolicy = std::variant<FundamentalBranch, ContinuationFrom>;

/// Abstract entire graph u(x, y) over the plane.
class Surface {
 public:
  virtual ~Surface() = default;

  /// Evaluates the height and its derivatives at (x, y).  When `seed` is
  /// given it selects the branch containing the seed height, which lets
  /// callers continue a sheet across a grid.  Throws std::domain_error when
  /// the point admits no height on the selected branch.
  virtual EvalResult evaluate(double x, double y,
                              std::optional<double> seed = std::nullopt)
      const = 0;

  /// Periods of u in x and y (empty where aperiodic).
  virtual std::pair<std::optional<double>, std::optional<double>> periods()
      const = 0;

  /// Generating matrix when the surface was built from one, else nullptr.
  virtual const GeneratingMatrix* matrix() const { return nullptr; }

  /// Residual of (1 - u_y^2) u_xx + 2 u_x u_y u_xy + (1 - u_x^2) u_yy from
  /// the implicit derivatives.  Throws std::domain_error at singular points.
  double pde_residual_implicit(double x, double y) const;

  /// Same residual from second-order central differences of the height with
  /// step h; O(h^2) accurate.  Throws std::domain_error when the stencil
  /// touches a singular point, std::invalid_argument for h <= 0.
  double pde_residual_fd(double x, double y, double h) const;

  /// Causal character together with |grad u|^2.  At singular points the
  /// marker pair from the evaluation is returned instead of throwing.
  std::pair<CausalCharacter, double> causal_character(double x, double y)
      const;
};

/// Options for assembling a surface from a generating matrix.
///
/// Row initial conditions default to the zero-crossing start and fall back
/// to a decreasing turning-point start when the row admits no zero crossing.
struct BuildOptions {
  std::optional<ProfileInit> phi_init;
  std::optional<ProfileInit> psi_init;
  std::optional<ProfileInit> zeta_init;
  BranchPolicy branch = FundamentalBranch{};
};

/// Doubly indexed graph cut from zeta(z) = phi(x) psi(y).
class ImplicitSurface : public Surface {
 public:
  EvalResult evaluate(double x, double y,
                      std::optional<double> seed = std::nullopt) const
      override;
  std::pair<std::optional<double>, std::optional<double>> periods() const
      override;
  const GeneratingMatrix* matrix() const override { return &matrix_; }

  const Profile& phi() const { return phi_; }
  const Profile& psi() const { return psi_; }
  const Profile& zeta() const { return zeta_; }
  const BranchPolicy& branch_policy() const { return branch_; }

 private:
  friend ImplicitSurface build_from_matrix(const GeneratingMatrix& a,
                                           const BuildOptions& options);

  ImplicitSurface(Profile phi, Profile psi, Profile zeta,
                  GeneratingMatrix matrix, BranchPolicy branch);

  // Monotone branches of zeta are indexed by consecutive turning instants;
  // interval m covers [break(m), break(m + 1)].
  std::pair<double, double> sheet_interval(long m) const;
  long sheet_containing(double z) const;
  double solve_height(double target, long sheet) const;

  Profile phi_;
  Profile psi_;
  Profile zeta_;
  GeneratingMatrix matrix_;
  BranchPolicy branch_;

  long fundamental_sheet_ = 0;
  std::vector<double> breaks_;  // zeta turning instants within one period
  std::optional<double> zeta_period_;
  double zeta_deriv_scale_ = 1.0;
  double numer_x_scale_ = 1.0;  // scale of phi' psi, for fold detection
  double numer_y_scale_ = 1.0;  // scale of phi psi'
  std::optional<double> period_x_;
  std::optional<double> period_y_;
};

/// Assembles the surface whose rows (a_i, beta_i, c_i) prescribe the profile
/// equations with b_i = (beta_j + beta_k - beta_i) / 2; the third row is
/// read in the zeta orientation.  Throws std::invalid_argument when a row
/// admits no profile, a profile degenerates to a constant, or the assembled
/// surface fails a residual spot check.
ImplicitSurface build_from_matrix(const GeneratingMatrix& a,
                                  const BuildOptions& options = {});

/// Rectangular sampling window, nx-by-ny points inclusive of both edges.
struct GridSpec {
  double x0 = 0.0;
  double x1 = 1.0;
  int nx = 2;
  double y0 = 0.0;
  double y1 = 1.0;
  int ny = 2;
};

/// Samples the window row-major ([iy * nx + ix]); within a row each solve
/// is seeded from its left neighbour so sheets continue across the grid.
std::vector<EvalResult> sample_grid(const Surface& s, const GridSpec& g);

}  // namespace maxsurf
