#include "maxsurf/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace maxsurf {
namespace {

constexpr double kPi = 3.14159265358979323846;
// Roots of P(s) closer than this collapse to the double-root branch.
constexpr double kRootCollapseTol = 1e-12;
constexpr int kStepsPerPeriod = 4096;
constexpr std::size_t kMaxNumericSteps = std::size_t{1} << 26;

double fmod_pos(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0.0) r += period;
  // Values that wrap to the far end of the period are the same point as 0.
  if (period - r < 1e-12 * period) r = 0.0;
  return r;
}

}  // namespace

QuarticCoeffs QuarticCoeffs::as_phi_like() const {
  if (convention == Convention::kPhiLike) return *this;
  return {c, -b, a, Convention::kPhiLike};
}

QuarticCoeffs QuarticCoeffs::as_zeta_like() const {
  if (convention == Convention::kZetaLike) return *this;
  return {c, -b, a, Convention::kZetaLike};
}

double Profile::value(double t) const {
  const double u = rate_ * t + phase_;
  switch (kind_) {
    case Kind::kJacobiSn:
      return amp_ * jacobi_sn_cn_dn(u, Modulus(modulus_)).sn;
    case Kind::kJacobiCn:
      return amp_ * jacobi_sn_cn_dn(u, Modulus(modulus_)).cn;
    case Kind::kJacobiDn:
      return amp_ * jacobi_sn_cn_dn(u, Modulus(modulus_)).dn;
    case Kind::kJacobiSc: {
      const JacobiValues v = jacobi_sn_cn_dn(u, Modulus(modulus_));
      return amp_ * v.sn / v.cn;
    }
    case Kind::kSin:
      return amp_ * std::sin(u);
    case Kind::kTan:
      return amp_ * std::tan(u);
    case Kind::kSinh:
      return amp_ * std::sinh(u);
    case Kind::kCosh:
      return amp_ * std::cosh(u);
    case Kind::kLinear:
      return amp_ * t;
    case Kind::kConst:
      return amp_;
    case Kind::kGrid:
      return grid_eval(t, false);
  }
  throw std::logic_error("profile: unknown kind");
}

double Profile::deriv(double t) const {
  const double u = rate_ * t + phase_;
  switch (kind_) {
    case Kind::kJacobiSn: {
      const JacobiValues v = jacobi_sn_cn_dn(u, Modulus(modulus_));
      return amp_ * rate_ * v.cn * v.dn;
    }
    case Kind::kJacobiCn: {
      const JacobiValues v = jacobi_sn_cn_dn(u, Modulus(modulus_));
      return -amp_ * rate_ * v.sn * v.dn;
    }
    case Kind::kJacobiDn: {
      const JacobiValues v = jacobi_sn_cn_dn(u, Modulus(modulus_));
      return -amp_ * rate_ * modulus_ * modulus_ * v.sn * v.cn;
    }
    case Kind::kJacobiSc: {
      const JacobiValues v = jacobi_sn_cn_dn(u, Modulus(modulus_));
      return amp_ * rate_ * v.dn / (v.cn * v.cn);
    }
    case Kind::kSin:
      return amp_ * rate_ * std::cos(u);
    case Kind::kTan: {
      const double w = std::tan(u);
      return amp_ * rate_ * (1.0 + w * w);
    }
    case Kind::kSinh:
      return amp_ * rate_ * std::cosh(u);
    case Kind::kCosh:
      return amp_ * rate_ * std::sinh(u);
    case Kind::kLinear:
      return amp_;
    case Kind::kConst:
      return 0.0;
    case Kind::kGrid:
      return grid_eval(t, true);
  }
  throw std::logic_error("profile: unknown kind");
}

double Profile::second_deriv(double t) const {
  const double f = value(t);
  return 2.0 * f * (phi_.c * f * f - phi_.b);
}

double Profile::grid_eval(double t, bool want_deriv) const {
  double sign_f = 1.0;
  double sign_df = 1.0;
  double tt = t;
  if (tt < 0.0) {
    tt = -tt;
    if (odd_) {
      sign_f = -1.0;  // odd value, even derivative
    } else {
      sign_df = -1.0;  // even value, odd derivative
    }
  }
  const std::size_t n = grid_f_.size();
  const double t_max = step_ * static_cast<double>(n - 1);
  if (tt > t_max * (1.0 + 1e-12)) {
    throw std::domain_error(
        "profile: evaluation outside the numeric integration range");
  }
  tt = std::min(tt, t_max);
  std::size_t i = static_cast<std::size_t>(tt / step_);
  i = std::min(i, n - 2);
  const double tau = (tt - static_cast<double>(i) * step_) / step_;
  const double f0 = grid_f_[i], f1 = grid_f_[i + 1];
  const double m0 = step_ * grid_df_[i], m1 = step_ * grid_df_[i + 1];
  if (want_deriv) {
    const double d = (6.0 * tau * tau - 6.0 * tau) * (f0 - f1) +
                     (3.0 * tau * tau - 4.0 * tau + 1.0) * m0 +
                     (3.0 * tau * tau - 2.0 * tau) * m1;
    return sign_df * d / step_;
  }
  const double h00 = (1.0 + 2.0 * tau) * (1.0 - tau) * (1.0 - tau);
  const double h10 = tau * (1.0 - tau) * (1.0 - tau);
  const double h01 = tau * tau * (3.0 - 2.0 * tau);
  const double h11 = tau * tau * (tau - 1.0);
  return sign_f * (h00 * f0 + h10 * m0 + h01 * f1 + h11 * m1);
}

namespace {

[[noreturn]] void throw_zero_profile() {
  throw std::domain_error(
      "solve_profile: initial condition selects the identically-zero "
      "profile, which admits no surface");
}

[[noreturn]] void throw_unbounded() {
  throw std::domain_error(
      "solve_profile: the requested orbit is unbounded (reciprocal "
      "1/sn-type family) and is not supported");
}

[[noreturn]] void throw_no_real() {
  throw std::domain_error(
      "solve_profile: P(s) < 0 for every s >= 0, no real solution");
}

}  // namespace

Profile solve_profile(const QuarticCoeffs& q0, const ProfileInit& init) {
  const QuarticCoeffs q = q0.as_phi_like();
  const double a = q.a, b = q.b, c = q.c;
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
    throw std::invalid_argument("solve_profile: coefficients must be finite");
  }
  if (a == 0.0 && b == 0.0 && c == 0.0) {
    throw std::invalid_argument("solve_profile: P is identically zero");
  }

  const bool at_zero = std::holds_alternative<AtZero>(init);
  int delta = 0;
  if (at_zero) {
    if (a < 0.0) {
      throw std::domain_error("solve_profile: AtZero requires P(0) >= 0");
    }
    if (a == 0.0) throw_zero_profile();
  } else {
    delta = std::get<AtTurningPoint>(init).delta;
    if (delta != 1 && delta != -1) {
      throw std::invalid_argument("solve_profile: delta must be +1 or -1");
    }
  }

  Profile p;
  p.phi_ = q;

  const double disc = b * b - a * c;
  const bool double_root =
      c != 0.0 && 4.0 * std::abs(disc) <= (kRootCollapseTol * c) *
                                              (kRootCollapseTol * c);

  // Selected representation; materialized at the end.
  auto make_const = [&](double s0) {
    p.kind_ = Profile::Kind::kConst;
    p.tag_ = FormTag::kTanh;
    p.amp_ = std::sqrt(s0);
    p.turning_ = {0.0};
  };

  if (c > 0.0) {
    if (double_root) {
      const double s0 = b / c;
      if (at_zero) {
        if (s0 > 0.0) {  // bounded orbit through zero: A tanh
          p.kind_ = Profile::Kind::kJacobiSn;
          p.tag_ = FormTag::kTanh;
          p.amp_ = std::sqrt(s0);
          p.rate_ = std::sqrt(c * s0);
          p.modulus_ = 1.0;
        } else {  // monotone unbounded through zero: A tan
          p.kind_ = Profile::Kind::kTan;
          p.tag_ = FormTag::kTrig;
          p.amp_ = std::sqrt(-s0);
          p.rate_ = std::sqrt(-c * s0);
        }
      } else {
        if (s0 < 0.0) {
          throw std::domain_error(
              "solve_profile: turning root is negative, inconsistent "
              "initial condition");
        }
        if (s0 == 0.0) throw_zero_profile();
        make_const(s0);  // equilibrium at the double root
      }
    } else if (disc > 0.0) {
      const double sq = std::sqrt(disc);
      const double s_minus = (b - sq) / c;
      const double s_plus = (b + sq) / c;
      if (at_zero) {
        if (s_minus > 0.0) {  // 0 < s- < s+: oscillation, A sn
          p.kind_ = Profile::Kind::kJacobiSn;
          p.tag_ = FormTag::kSnScaled;
          p.amp_ = std::sqrt(s_minus);
          p.rate_ = std::sqrt(c * s_plus);
          p.modulus_ = std::sqrt(s_minus / s_plus);
        } else if (s_plus <= 0.0) {  // both roots negative: monotone A sn/cn
          const double rho2 = -b + sq;
          p.kind_ = Profile::Kind::kJacobiSc;
          p.tag_ = FormTag::kSnScaled;
          p.amp_ = std::sqrt(a / rho2);
          p.rate_ = std::sqrt(rho2);
          p.modulus_ = std::sqrt(1.0 - (-b - sq) / rho2);
        } else {
          // s- < 0 < s+ forces a = c s- s+ < 0, excluded above.
          throw std::logic_error("solve_profile: unreachable sign pattern");
        }
      } else {
        if (delta > 0) {
          // Orbit with f^2 >= s+ is the reciprocal family.
          if (s_plus < 0.0) {
            throw std::domain_error(
                "solve_profile: turning root is negative, inconsistent "
                "initial condition");
          }
          throw_unbounded();
        }
        if (s_minus < 0.0) {
          throw std::domain_error(
              "solve_profile: turning root is negative, inconsistent "
              "initial condition");
        }
        if (s_minus == 0.0) throw_zero_profile();
        p.kind_ = Profile::Kind::kJacobiSn;  // phase-shifted oscillation
        p.tag_ = FormTag::kSnScaled;
        p.amp_ = std::sqrt(s_minus);
        p.rate_ = std::sqrt(c * s_plus);
        p.modulus_ = std::sqrt(s_minus / s_plus);
        p.phase_ = 1.0;  // placeholder: one quarter period, fixed below
      }
    } else {
      throw std::domain_error(
          "solve_profile: P has complex roots, which is not supported");
    }
  } else if (c < 0.0) {
    if (double_root) {
      const double s0 = b / c;
      if (at_zero) {
        // P <= 0 everywhere, so a <= 0 and the AtZero guards fired already.
        throw std::logic_error("solve_profile: unreachable sign pattern");
      }
      if (s0 < 0.0) throw_no_real();
      if (s0 == 0.0) throw_zero_profile();
      make_const(s0);
    } else if (disc > 0.0) {
      const double sq = std::sqrt(disc);
      const double r_lo = (b + sq) / c;
      const double r_hi = (b - sq) / c;
      if (r_hi < 0.0) throw_no_real();
      if (r_hi == 0.0) throw_zero_profile();
      if (at_zero) {
        // a > 0 here, hence r_lo < 0 and the orbit crosses zero: A cn,
        // phase-shifted a quarter period behind the turning value so that
        // f'(0) = +sqrt(a).
        p.kind_ = Profile::Kind::kJacobiCn;
        p.tag_ = FormTag::kCnScaled;
        p.amp_ = std::sqrt(r_hi);
        p.rate_ = std::sqrt(-c * (r_hi - r_lo));
        p.modulus_ = std::sqrt(r_hi / (r_hi - r_lo));
        p.phase_ = -1.0;  // placeholder: one quarter period, fixed below
      } else if (delta < 0) {
        // Start at the outer turning value r_hi.
        if (r_lo > 0.0) {  // f^2 in [r_lo, r_hi]: A dn
          p.kind_ = Profile::Kind::kJacobiDn;
          p.tag_ = FormTag::kDnScaled;
          p.amp_ = std::sqrt(r_hi);
          p.rate_ = std::sqrt(-c * r_hi);
          p.modulus_ = std::sqrt(1.0 - r_lo / r_hi);
        } else if (r_lo == 0.0) {  // homoclinic limit: A sech
          p.kind_ = Profile::Kind::kJacobiDn;
          p.tag_ = FormTag::kTanh;
          p.amp_ = std::sqrt(r_hi);
          p.rate_ = std::sqrt(-c * r_hi);
          p.modulus_ = 1.0;
        } else {  // f^2 in [0, r_hi]: A cn
          p.kind_ = Profile::Kind::kJacobiCn;
          p.tag_ = FormTag::kCnScaled;
          p.amp_ = std::sqrt(r_hi);
          p.rate_ = std::sqrt(-c * (r_hi - r_lo));
          p.modulus_ = std::sqrt(r_hi / (r_hi - r_lo));
        }
      } else {
        // Start at the inner turning value r_lo.
        if (r_lo < 0.0) {
          throw std::domain_error(
              "solve_profile: turning root is negative, inconsistent "
              "initial condition");
        }
        if (r_lo == 0.0) throw_zero_profile();
        p.kind_ = Profile::Kind::kJacobiDn;
        p.tag_ = FormTag::kDnScaled;
        p.amp_ = std::sqrt(r_hi);
        p.rate_ = std::sqrt(-c * r_hi);
        p.modulus_ = std::sqrt(1.0 - r_lo / r_hi);
        p.phase_ = 1.0;  // placeholder: one half period, fixed below
      }
    } else {
      throw_no_real();
    }
  } else {  // c == 0
    if (b == 0.0) {
      if (a < 0.0) throw_no_real();
      if (at_zero) {  // P constant and positive: A t
        p.kind_ = Profile::Kind::kLinear;
        p.tag_ = FormTag::kTrig;
        p.amp_ = std::sqrt(a);
      } else {
        throw std::domain_error(
            "solve_profile: P(s) = a has no turning root");
      }
    } else {
      const double s_star = a / (2.0 * b);
      if (at_zero) {
        if (b > 0.0) {  // A sin
          p.kind_ = Profile::Kind::kSin;
          p.tag_ = FormTag::kTrig;
          p.amp_ = std::sqrt(s_star);
          p.rate_ = std::sqrt(2.0 * b);
        } else {  // A sinh
          p.kind_ = Profile::Kind::kSinh;
          p.tag_ = FormTag::kExpLike;
          p.amp_ = std::sqrt(a / (-2.0 * b));
          p.rate_ = std::sqrt(-2.0 * b);
        }
      } else {
        if ((b > 0.0 && delta != -1) || (b < 0.0 && delta != 1)) {
          throw std::domain_error(
              "solve_profile: with c = 0 the single finite root "
              "corresponds to delta = -sign(b)");
        }
        if (s_star < 0.0) {
          if (b > 0.0) throw_no_real();  // a < 0: P < 0 for all s >= 0
          throw std::domain_error(
              "solve_profile: turning root is negative, inconsistent "
              "initial condition");
        }
        if (s_star == 0.0) throw_zero_profile();
        if (b > 0.0) {  // A cos
          p.kind_ = Profile::Kind::kSin;
          p.tag_ = FormTag::kTrig;
          p.amp_ = std::sqrt(s_star);
          p.rate_ = std::sqrt(2.0 * b);
          p.phase_ = 0.5 * kPi;
        } else {  // A cosh
          p.kind_ = Profile::Kind::kCosh;
          p.tag_ = FormTag::kExpLike;
          p.amp_ = std::sqrt(s_star);
          p.rate_ = std::sqrt(-2.0 * b);
          p.turning_ = {0.0};
        }
      }
    }
  }

  // Periods, exact phases, and turning points for the periodic kinds.
  switch (p.kind_) {
    case Profile::Kind::kJacobiSn:
    case Profile::Kind::kJacobiCn:
    case Profile::Kind::kJacobiDn: {
      if (p.modulus_ == 1.0) {
        // tanh never turns; sech turns once at its peak.
        if (p.kind_ != Profile::Kind::kJacobiSn) p.turning_ = {0.0};
        break;
      }
      const double kk = complete_K(Modulus(p.modulus_));
      if (p.phase_ != 0.0) {
        // Start a quarter (sn, cn) or half (dn) period away, in the
        // direction recorded by the placeholder's sign.
        p.phase_ = std::copysign(kk, p.phase_);
      }
      const bool is_dn = p.kind_ == Profile::Kind::kJacobiDn;
      const double period = (is_dn ? 2.0 : 4.0) * kk / p.rate_;
      // Arguments of the extreme values over one argument period.
      const double u0 = p.kind_ == Profile::Kind::kJacobiSn ? kk : 0.0;
      const double u1 = u0 + (is_dn ? kk : 2.0 * kk);
      double t0 = fmod_pos((u0 - p.phase_) / p.rate_, period);
      double t1 = fmod_pos((u1 - p.phase_) / p.rate_, period);
      if (t1 < t0) std::swap(t0, t1);
      p.period_ = period;
      p.turning_ = {t0, t1};
      break;
    }
    case Profile::Kind::kSin: {
      const double period = 2.0 * kPi / p.rate_;
      double t0 = fmod_pos((0.5 * kPi - p.phase_) / p.rate_, period);
      double t1 = fmod_pos((1.5 * kPi - p.phase_) / p.rate_, period);
      if (t1 < t0) std::swap(t0, t1);
      p.period_ = period;
      p.turning_ = {t0, t1};
      break;
    }
    default:
      break;  // aperiodic kinds keep whatever the case tree set
  }
  return p;
}

Profile integrate_profile_numeric(const QuarticCoeffs& q0,
                                  const ProfileInit& init, double t_max) {
  if (!(t_max > 0.0) || !std::isfinite(t_max)) {
    throw std::invalid_argument(
        "integrate_profile_numeric: t_max must be positive and finite");
  }
  // Validate the setup and anchor the step size to the analytic period; the
  // trajectory itself comes from the integration below.
  const Profile closed = solve_profile(q0, init);
  const QuarticCoeffs q = q0.as_phi_like();
  const double a = q.a, b = q.b, c = q.c;

  double f0 = 0.0, g0 = 0.0;
  const bool at_zero = std::holds_alternative<AtZero>(init);
  if (at_zero) {
    g0 = std::sqrt(a);
  } else {
    const int delta = std::get<AtTurningPoint>(init).delta;
    const double disc = std::max(b * b - a * c, 0.0);
    const double root =
        c != 0.0 ? (b + delta * std::sqrt(disc)) / c : a / (2.0 * b);
    f0 = std::sqrt(std::max(root, 0.0));
  }

  double anchor;
  if (closed.period().has_value()) {
    anchor = *closed.period();
  } else if (closed.rate_ > 0.0) {
    anchor = 2.0 * kPi / closed.rate_;
  } else {
    anchor = 2.0 * kPi;
  }
  const double step = anchor / kStepsPerPeriod;
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw std::runtime_error("integrate_profile_numeric: step size underflow");
  }
  const double steps_needed = std::ceil(t_max / step);
  if (steps_needed > static_cast<double>(kMaxNumericSteps)) {
    throw std::runtime_error(
        "integrate_profile_numeric: step size underflow for the requested "
        "range");
  }
  const std::size_t n_steps = static_cast<std::size_t>(steps_needed);

  Profile p;
  p.kind_ = Profile::Kind::kGrid;
  p.tag_ = FormTag::kNumeric;
  p.phi_ = q;
  p.step_ = step;
  p.odd_ = at_zero;
  p.grid_f_.reserve(n_steps + 1);
  p.grid_df_.reserve(n_steps + 1);
  p.grid_f_.push_back(f0);
  p.grid_df_.push_back(g0);

  const auto accel = [&](double f) { return 2.0 * f * (c * f * f - b); };
  double f = f0, g = g0;
  for (std::size_t i = 0; i < n_steps; ++i) {
    const double k1f = g, k1g = accel(f);
    const double k2f = g + 0.5 * step * k1g,
                 k2g = accel(f + 0.5 * step * k1f);
    const double k3f = g + 0.5 * step * k2g,
                 k3g = accel(f + 0.5 * step * k2f);
    const double k4f = g + step * k3g, k4g = accel(f + step * k3f);
    f += step / 6.0 * (k1f + 2.0 * k2f + 2.0 * k3f + k4f);
    g += step / 6.0 * (k1g + 2.0 * k2g + 2.0 * k3g + k4g);
    p.grid_f_.push_back(f);
    p.grid_df_.push_back(g);
  }

  // Locate the zeros of f' on the stored range.
  const std::size_t n = p.grid_f_.size();
  if (p.grid_df_[0] == 0.0) p.turning_.push_back(0.0);
  for (std::size_t i = 1; i < n; ++i) {
    const double d0 = p.grid_df_[i - 1], d1 = p.grid_df_[i];
    if (d1 == 0.0) {
      p.turning_.push_back(static_cast<double>(i) * step);
      continue;
    }
    if (d0 == 0.0 || (d0 < 0.0) == (d1 < 0.0)) continue;
    double lo = static_cast<double>(i - 1) * step;
    double hi = static_cast<double>(i) * step;
    const bool lo_neg = d0 < 0.0;
    for (int iter = 0; iter < 64; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if ((p.grid_eval(mid, true) < 0.0) == lo_neg) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    p.turning_.push_back(0.5 * (lo + hi));
  }
  return p;
}

bool tanh_family_conditions(double b1, double b2, double b3,
                            const std::array<double, 3>& alphas, double tol) {
  if (b1 == 0.0 || b2 == 0.0 || b3 == 0.0) {
    throw std::domain_error("tanh_family_conditions: every b_i must be nonzero");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("tanh_family_conditions: tol must be positive");
  }
  const double i1 = 1.0 / b1, i2 = 1.0 / b2, i3 = 1.0 / b3;
  const double inv_scale =
      std::max({std::abs(i1), std::abs(i2), std::abs(i3)});
  if (std::abs(i1 + i2 + i3) > tol * inv_scale) return false;

  const double prod = b1 * b2 * b3;
  const double alpha_prod = alphas[0] * alphas[1] * alphas[2];
  const double rhs = -(alpha_prod * alpha_prod);
  const double prod_scale = std::max(std::abs(prod), std::abs(rhs));
  return std::abs(prod - rhs) <= tol * prod_scale;
}

}  // namespace maxsurf
