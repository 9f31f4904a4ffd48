// Closed-form and numeric solutions of the separable profile equations.
#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "maxsurf/elliptic.hpp"

namespace maxsurf {

/// Coefficients of the first-order profile equation f'^2 = P(f^2) in one of
/// the two sign conventions of the separable system:
///   phi-like : f'^2 = a - 2b f^2 + c f^4
///   zeta-like: f'^2 = c + 2b f^2 + a f^4
/// The conventions swap into each other by (a, b, c) -> (c, -b, a).
struct QuarticCoeffs {
  enum class Convention { kPhiLike, kZetaLike };

  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  Convention convention = Convention::kPhiLike;

  QuarticCoeffs as_phi_like() const;
  QuarticCoeffs as_zeta_like() const;
};

/// Start the profile at a zero: f(0) = 0, f'(0) = sqrt(P(0)) >= 0.
struct AtZero {};

/// Start the profile at a turning value: f(0) = sqrt(root), f'(0) = 0,
/// where root = (b + delta sqrt(b^2 - ac)) / c in phi-like coefficients.
/// For c = 0 the single finite root a/(2b) corresponds to delta = -sign(b).
struct AtTurningPoint {
  int delta = -1;  // +1 or -1: which root of P(s) = 0 to start on
};

using ProfileInit = std::variant<AtZero, AtTurningPoint>;

/// Shape family of a solved profile.
enum class FormTag {
  kSnScaled,  // A sn(rho t + phase; kappa), or the unbounded ratio A sn/cn
  kCnScaled,  // A cn(rho t + phase; kappa)
  kDnScaled,  // A dn(rho t + phase; kappa)
  kTanh,      // bounded hyperbolic: A tanh, A sech (modulus-1 limits), equilibria
  kTrig,      // A sin, A tan, A t
  kExpLike,   // A sinh, A cosh
  kNumeric,   // grid-backed numeric solution
};

/// A solution f of f'^2 = P(f^2) with evaluators for f, f', f''.
///
/// Closed forms are exact Jacobi/trigonometric/hyperbolic expressions chosen
/// by root analysis of the quadratic P(s) = a - 2bs + cs^2 in s = f^2;
/// numeric profiles interpolate a fixed-step integration of the second-order
/// form f'' = 2f(c f^2 - b).  Either way the evaluators are pure and the
/// object is immutable and safe to share.
class Profile {
 public:
  double value(double t) const;
  double deriv(double t) const;
  /// Always evaluated through the second-order form 2 f (c f^2 - b).
  double second_deriv(double t) const;

  /// Least period of the profile, or nullopt for aperiodic forms.
  const std::optional<double>& period() const { return period_; }

  /// Parameters t in [0, period) with f'(t) = 0 (for aperiodic closed forms:
  /// all of them; for numeric profiles: every zero of f' detected on the
  /// integration range).
  const std::vector<double>& turning_points() const { return turning_; }

  FormTag form_tag() const { return tag_; }

  /// Coefficients in phi-like normal form.
  const QuarticCoeffs& coeffs() const { return phi_; }

 private:
  friend Profile solve_profile(const QuarticCoeffs& q,
                               const ProfileInit& init);
  friend Profile integrate_profile_numeric(const QuarticCoeffs& q,
                                           const ProfileInit& init,
                                           double t_max);

  enum class Kind {
    kJacobiSn,
    kJacobiCn,
    kJacobiDn,
    kJacobiSc,
    kSin,
    kTan,
    kSinh,
    kCosh,
    kLinear,
    kConst,
    kGrid,
  };

  Profile() = default;

  double grid_eval(double t, bool want_deriv) const;

  Kind kind_ = Kind::kConst;
  FormTag tag_ = FormTag::kNumeric;
  QuarticCoeffs phi_;
  double amp_ = 0.0;      // overall scale A
  double rate_ = 0.0;     // argument rate rho (or omega)
  double phase_ = 0.0;    // argument offset, rho t + phase
  double modulus_ = 0.0;  // Jacobi modulus for the elliptic kinds
  std::optional<double> period_;
  std::vector<double> turning_;
  // Numeric representation: node values of (f, f') with spacing step_ on
  // [0, t_max], extended to negative t by parity.
  double step_ = 0.0;
  bool odd_ = false;
  std::vector<double> grid_f_;
  std::vector<double> grid_df_;
};

/// Solves f'^2 = P(f^2) in closed form.
///
/// The phase is fixed by `init`; translations are otherwise irrelevant.
/// Throws std::invalid_argument when P is identically zero and
/// std::domain_error when the initial condition is inconsistent with P, when
/// P(s) < 0 for every s >= 0, when the requested orbit is unbounded (the
/// reciprocal 1/sn-type families), or when P has complex roots (unsupported).
Profile solve_profile(const QuarticCoeffs& q, const ProfileInit& init);

/// Integrates f'' = 2f(c f^2 - b) with a classical fixed-step 4th-order
/// scheme on [0, t_max] (4096 steps per period, or per characteristic time
/// for aperiodic profiles) and returns a grid-backed Profile.  Serves as an
/// independent oracle for solve_profile.  Evaluation outside [-t_max, t_max]
/// throws std::domain_error; an unrepresentably small step throws
/// std::runtime_error.
Profile integrate_profile_numeric(const QuarticCoeffs& q,
                                  const ProfileInit& init, double t_max);

/// Checks the two compatibility conditions for the bounded monotone family
/// f_i' = alpha_i - gamma_i f_i^2 with b_i = alpha_i gamma_i:
///   1/b1 + 1/b2 + 1/b3 = 0   and   b1 b2 b3 = -(alpha1 alpha2 alpha3)^2.
/// Throws std::domain_error when some b_i = 0.
bool tanh_family_conditions(double b1, double b2, double b3,
                            const std::array<double, 3>& alphas,
                            double tol = 1e-9);

}  // namespace maxsurf
