#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "maxsurf/elliptic.hpp"
#include "maxsurf/profiles.hpp"

using maxsurf::AtTurningPoint;
using maxsurf::AtZero;
using maxsurf::FormTag;
using maxsurf::Modulus;
using maxsurf::Profile;
using maxsurf::ProfileInit;
using maxsurf::QuarticCoeffs;

namespace {

constexpr double kPi = 3.14159265358979323846;

QuarticCoeffs phi_like(double a, double b, double c) {
  return {a, b, c, QuarticCoeffs::Convention::kPhiLike};
}

QuarticCoeffs zeta_like(double a, double b, double c) {
  return {a, b, c, QuarticCoeffs::Convention::kZetaLike};
}

// Rows of the three doubly periodic families in phi-like convention
// (a_i, b_i, c_i), modulus pair (k, m).
QuarticCoeffs snsn_phi_row(double k) {
  const double kp2 = (1.0 - k) * (1.0 + k);
  return phi_like(1.0 / kp2, (1.0 + k * k) / (2.0 * kp2), k * k / kp2);
}

QuarticCoeffs sncn_psi_row(double m) {
  const double mp2 = (1.0 - m) * (1.0 + m);
  return phi_like(mp2, (mp2 - m * m) / 2.0, -m * m);
}

QuarticCoeffs sncn_zeta_row(double k, double m) {
  const double kp2 = (1.0 - k) * (1.0 + k);
  const double mp2 = (1.0 - m) * (1.0 + m);
  const double mu2 = 1.0 / (1.0 - kp2 * m * m);
  return zeta_like(-k * k * m * m * mu2, mu2 * (k * k * m * m - mp2) / 2.0,
                   mp2 * mu2);
}

QuarticCoeffs cncn_phi_row(double k) {
  const double pk = 1.0 + k * k;
  return phi_like(1.0 / pk, (1.0 - k * k) / (2.0 * pk), -k * k / pk);
}

QuarticCoeffs cncn_zeta_row(double k, double m) {
  const double l2 = 1.0 / (1.0 - k * k * m * m);
  return zeta_like(l2 * k * k * m * m, -l2 * (1.0 + k * k * m * m) / 2.0, l2);
}

// Max of |f'^2 - P(f^2)| / scale over a dense grid.
double max_first_order_residual(const Profile& p, const QuarticCoeffs& q0,
                                double t_lo, double t_hi, int n = 1000) {
  const QuarticCoeffs q = q0.as_phi_like();
  double worst = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double t = t_lo + (t_hi - t_lo) * i / n;
    const double f = p.value(t);
    const double s = f * f;
    const double d = p.deriv(t);
    const double rhs = q.a - 2.0 * q.b * s + q.c * s * s;
    const double scale =
        1.0 + std::abs(q.a) + 2.0 * std::abs(q.b) * s + std::abs(q.c) * s * s;
    worst = std::max(worst, std::abs(d * d - rhs) / scale);
  }
  return worst;
}

// Max of |f' - dF/dt| and |f'' - dG/dt| via central differences.
double max_derivative_mismatch(const Profile& p, double t_lo, double t_hi,
                               int n = 200) {
  const double h = 1e-6;
  double worst = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double t = t_lo + (t_hi - t_lo) * i / n;
    const double fd1 = (p.value(t + h) - p.value(t - h)) / (2.0 * h);
    const double fd2 = (p.deriv(t + h) - p.deriv(t - h)) / (2.0 * h);
    worst = std::max(worst, std::abs(fd1 - p.deriv(t)));
    worst = std::max(worst, std::abs(fd2 - p.second_deriv(t)));
  }
  return worst;
}

double max_profile_difference(const Profile& p, const Profile& r, double t_lo,
                              double t_hi, int n = 1000) {
  double worst = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double t = t_lo + (t_hi - t_lo) * i / n;
    worst = std::max(worst, std::abs(p.value(t) - r.value(t)));
  }
  return worst;
}

}  // namespace

TEST_CASE("conventions convert into each other") {
  const QuarticCoeffs z = zeta_like(2.0, -3.0, 5.0);
  const QuarticCoeffs p = z.as_phi_like();
  CHECK(p.a == 5.0);
  CHECK(p.b == 3.0);
  CHECK(p.c == 2.0);
  CHECK(p.convention == QuarticCoeffs::Convention::kPhiLike);
  const QuarticCoeffs back = p.as_zeta_like();
  CHECK(back.a == 2.0);
  CHECK(back.b == -3.0);
  CHECK(back.c == 5.0);
  CHECK(p.as_phi_like().a == 5.0);  // idempotent on its own convention
}

TEST_CASE("linear coefficients with positive slope solve to sine") {
  const Profile p = maxsurf::solve_profile(phi_like(1.0, 0.5, 0.0), AtZero{});
  CHECK(p.form_tag() == FormTag::kTrig);
  REQUIRE(p.period().has_value());
  CHECK(*p.period() == doctest::Approx(2.0 * kPi).epsilon(1e-14));
  for (int i = 0; i <= 100; ++i) {
    const double t = -2.0 * kPi + 4.0 * kPi * i / 100.0;
    CHECK(p.value(t) == doctest::Approx(std::sin(t)).epsilon(1e-13));
    CHECK(p.deriv(t) == doctest::Approx(std::cos(t)).epsilon(1e-13));
  }
  REQUIRE(p.turning_points().size() == 2);
  CHECK(p.turning_points()[0] == doctest::Approx(kPi / 2).epsilon(1e-13));
  CHECK(p.turning_points()[1] == doctest::Approx(3 * kPi / 2).epsilon(1e-13));

  const Profile c =
      maxsurf::solve_profile(phi_like(1.0, 0.5, 0.0), AtTurningPoint{-1});
  for (int i = 0; i <= 50; ++i) {
    const double t = -5.0 + 10.0 * i / 50.0;
    CHECK(c.value(t) == doctest::Approx(std::cos(t)).epsilon(1e-13));
  }
  CHECK(c.turning_points()[0] == doctest::Approx(0.0));
  CHECK(c.turning_points()[1] == doctest::Approx(kPi).epsilon(1e-13));
}

TEST_CASE("double positive root solves to tanh") {
  const Profile p = maxsurf::solve_profile(phi_like(1.0, 1.0, 1.0), AtZero{});
  CHECK(p.form_tag() == FormTag::kTanh);
  CHECK_FALSE(p.period().has_value());
  CHECK(p.turning_points().empty());
  for (int i = 0; i <= 100; ++i) {
    const double t = -8.0 + 16.0 * i / 100.0;
    CHECK(p.value(t) == doctest::Approx(std::tanh(t)).epsilon(1e-13));
  }
}

TEST_CASE("double-root equilibrium solves to a constant") {
  for (int delta : {-1, 1}) {
    const Profile p =
        maxsurf::solve_profile(phi_like(1.0, 1.0, 1.0), AtTurningPoint{delta});
    CHECK(p.form_tag() == FormTag::kTanh);
    CHECK(p.value(3.7) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(p.deriv(3.7) == 0.0);
    CHECK(p.second_deriv(3.7) == doctest::Approx(0.0));
    REQUIRE(p.turning_points().size() == 1);
    CHECK(p.turning_points()[0] == 0.0);
  }
}

TEST_CASE("first doubly periodic row solves to scaled sn") {
  const double k = 0.8;
  const double kp = std::sqrt((1.0 - k) * (1.0 + k));
  const QuarticCoeffs q = snsn_phi_row(k);
  const Profile p = maxsurf::solve_profile(q, AtZero{});
  CHECK(p.form_tag() == FormTag::kSnScaled);

  const Modulus mod(k);
  const double kk = maxsurf::complete_K(mod);
  REQUIRE(p.period().has_value());
  CHECK(*p.period() == doctest::Approx(4.0 * kk * kp).epsilon(1e-13));
  for (int i = 0; i <= 200; ++i) {
    const double t = -*p.period() + 2.0 * *p.period() * i / 200.0;
    const double expect = maxsurf::jacobi_sn_cn_dn(t / kp, mod).sn;
    CHECK(p.value(t) == doctest::Approx(expect).epsilon(1e-12));
  }
  REQUIRE(p.turning_points().size() == 2);
  CHECK(p.turning_points()[0] == doctest::Approx(kk * kp).epsilon(1e-12));
  CHECK(p.turning_points()[1] == doctest::Approx(3.0 * kk * kp).epsilon(1e-12));

  // Turning start on the same orbit: one quarter period of phase.
  const Profile s = maxsurf::solve_profile(q, AtTurningPoint{-1});
  CHECK(s.value(0.0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(s.deriv(0.0) == doctest::Approx(0.0));
  CHECK(s.value(kk * kp) == doctest::Approx(0.0));
  CHECK(s.turning_points()[0] == doctest::Approx(0.0));
}

TEST_CASE("mixed-family rows solve to scaled cn") {
  const double m = 0.8;
  const QuarticCoeffs q = sncn_psi_row(m);
  const Profile p = maxsurf::solve_profile(q, AtTurningPoint{-1});
  CHECK(p.form_tag() == FormTag::kCnScaled);

  const Modulus mod(m);
  const double km = maxsurf::complete_K(mod);
  REQUIRE(p.period().has_value());
  CHECK(*p.period() == doctest::Approx(4.0 * km).epsilon(1e-13));
  for (int i = 0; i <= 200; ++i) {
    const double t = -6.0 + 12.0 * i / 200.0;
    const double expect = maxsurf::jacobi_sn_cn_dn(t, mod).cn;
    CHECK(p.value(t) == doctest::Approx(expect).epsilon(1e-12));
  }
  REQUIRE(p.turning_points().size() == 2);
  CHECK(p.turning_points()[0] == doctest::Approx(0.0));
  CHECK(p.turning_points()[1] == doctest::Approx(2.0 * km).epsilon(1e-12));

  // The same orbit through its zero is the quarter-period shift of cn.
  const Profile z = maxsurf::solve_profile(q, AtZero{});
  CHECK(z.value(0.0) == doctest::Approx(0.0));
  const double mp = std::sqrt((1.0 - m) * (1.0 + m));
  CHECK(z.deriv(0.0) == doctest::Approx(mp).epsilon(1e-13));
  for (int i = 0; i <= 100; ++i) {
    const double t = -4.0 + 8.0 * i / 100.0;
    CHECK(z.value(t) ==
          doctest::Approx(maxsurf::jacobi_sn_cn_dn(t - km, mod).cn)
              .epsilon(1e-12));
  }
}

TEST_CASE("mixed-family vertical row solves to cn of the combined modulus") {
  const double k = 0.8, m = 0.8;
  const QuarticCoeffs q = sncn_zeta_row(k, m);
  const Profile p = maxsurf::solve_profile(q, AtTurningPoint{-1});
  CHECK(p.form_tag() == FormTag::kCnScaled);

  const double nu = 16.0 / std::sqrt(481.0);
  const Modulus mod(nu);
  for (int i = 0; i <= 200; ++i) {
    const double t = -6.0 + 12.0 * i / 200.0;
    const double expect = maxsurf::jacobi_sn_cn_dn(t, mod).cn;
    CHECK(p.value(t) == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("second doubly periodic family rows solve to cn and scaled sn") {
  const double k = 0.5, m = 0.5;
  const Profile phi =
      maxsurf::solve_profile(cncn_phi_row(k), AtTurningPoint{-1});
  CHECK(phi.form_tag() == FormTag::kCnScaled);
  const Modulus mod_phi(k / std::sqrt(1.0 + k * k));
  for (int i = 0; i <= 200; ++i) {
    const double t = -6.0 + 12.0 * i / 200.0;
    CHECK(phi.value(t) ==
          doctest::Approx(maxsurf::jacobi_sn_cn_dn(t, mod_phi).cn)
              .epsilon(1e-12));
  }

  const Profile zeta = maxsurf::solve_profile(cncn_zeta_row(k, m), AtZero{});
  CHECK(zeta.form_tag() == FormTag::kSnScaled);
  const double lambda = 1.0 / std::sqrt(1.0 - k * k * m * m);
  const Modulus mod_zeta(k * m);
  REQUIRE(zeta.period().has_value());
  CHECK(*zeta.period() ==
        doctest::Approx(4.0 * maxsurf::complete_K(mod_zeta) / lambda)
            .epsilon(1e-13));
  for (int i = 0; i <= 200; ++i) {
    const double t = -6.0 + 12.0 * i / 200.0;
    CHECK(zeta.value(t) ==
          doctest::Approx(maxsurf::jacobi_sn_cn_dn(lambda * t, mod_zeta).sn)
              .epsilon(1e-12));
  }
}

TEST_CASE("band between two positive roots solves to scaled dn") {
  // P(s) = -(s - 1)(s - 3): roots 1 and 3.
  const QuarticCoeffs q = phi_like(-3.0, -2.0, -1.0);
  const Profile hi = maxsurf::solve_profile(q, AtTurningPoint{-1});
  CHECK(hi.form_tag() == FormTag::kDnScaled);
  CHECK(hi.value(0.0) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
  CHECK(hi.deriv(0.0) == doctest::Approx(0.0));

  const double rho = std::sqrt(3.0);
  const Modulus mod(std::sqrt(2.0 / 3.0));
  const double kk = maxsurf::complete_K(mod);
  REQUIRE(hi.period().has_value());
  CHECK(*hi.period() == doctest::Approx(2.0 * kk / rho).epsilon(1e-13));
  for (int i = 0; i <= 200; ++i) {
    const double t = -4.0 + 8.0 * i / 200.0;
    const double expect = std::sqrt(3.0) * maxsurf::jacobi_sn_cn_dn(rho * t, mod).dn;
    CHECK(hi.value(t) == doctest::Approx(expect).epsilon(1e-12));
  }
  REQUIRE(hi.turning_points().size() == 2);
  CHECK(hi.turning_points()[0] == doctest::Approx(0.0));
  CHECK(hi.turning_points()[1] == doctest::Approx(kk / rho).epsilon(1e-12));

  // Starting on the inner root is the half-period shift of the same orbit.
  const Profile lo = maxsurf::solve_profile(q, AtTurningPoint{+1});
  CHECK(lo.form_tag() == FormTag::kDnScaled);
  CHECK(lo.value(0.0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(lo.deriv(0.0) == doctest::Approx(0.0));
  CHECK(lo.value(kk / rho) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("simple root at zero solves to sech") {
  const QuarticCoeffs q = phi_like(0.0, -0.5, -1.0);
  const Profile p = maxsurf::solve_profile(q, AtTurningPoint{-1});
  CHECK(p.form_tag() == FormTag::kTanh);
  CHECK_FALSE(p.period().has_value());
  REQUIRE(p.turning_points().size() == 1);
  CHECK(p.turning_points()[0] == 0.0);
  for (int i = 0; i <= 100; ++i) {
    const double t = -8.0 + 16.0 * i / 100.0;
    CHECK(p.value(t) == doctest::Approx(1.0 / std::cosh(t)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(maxsurf::solve_profile(q, AtZero{}), std::domain_error);
  CHECK_THROWS_AS(maxsurf::solve_profile(q, AtTurningPoint{+1}),
                  std::domain_error);
}

TEST_CASE("hyperbolic growth cases solve to sinh and cosh") {
  const Profile s = maxsurf::solve_profile(phi_like(1.0, -0.5, 0.0), AtZero{});
  CHECK(s.form_tag() == FormTag::kExpLike);
  CHECK_FALSE(s.period().has_value());
  for (int i = 0; i <= 100; ++i) {
    const double t = -4.0 + 8.0 * i / 100.0;
    CHECK(s.value(t) == doctest::Approx(std::sinh(t)).epsilon(1e-13));
  }

  const Profile c =
      maxsurf::solve_profile(phi_like(-1.0, -0.5, 0.0), AtTurningPoint{+1});
  CHECK(c.form_tag() == FormTag::kExpLike);
  REQUIRE(c.turning_points().size() == 1);
  CHECK(c.turning_points()[0] == 0.0);
  for (int i = 0; i <= 100; ++i) {
    const double t = -4.0 + 8.0 * i / 100.0;
    CHECK(c.value(t) == doctest::Approx(std::cosh(t)).epsilon(1e-13));
  }
  // The only finite root of P carries delta = -sign(b) = +1 here.
  CHECK_THROWS_AS(maxsurf::solve_profile(phi_like(-1.0, -0.5, 0.0),
                                         AtTurningPoint{-1}),
                  std::domain_error);
  CHECK_THROWS_AS(maxsurf::solve_profile(phi_like(-1.0, -0.5, 0.0), AtZero{}),
                  std::domain_error);
}

TEST_CASE("negative double root solves to tan") {
  const Profile p = maxsurf::solve_profile(phi_like(1.0, -1.0, 1.0), AtZero{});
  CHECK(p.form_tag() == FormTag::kTrig);
  CHECK_FALSE(p.period().has_value());
  for (int i = 0; i <= 100; ++i) {
    const double t = -1.4 + 2.8 * i / 100.0;
    CHECK(p.value(t) == doctest::Approx(std::tan(t)).epsilon(1e-12));
  }
}

TEST_CASE("two negative roots solve to the unbounded sn over cn ratio") {
  const QuarticCoeffs q = phi_like(0.5, -1.0, 1.0);
  const Profile p = maxsurf::solve_profile(q, AtZero{});
  CHECK(p.form_tag() == FormTag::kSnScaled);
  CHECK_FALSE(p.period().has_value());
  CHECK(p.turning_points().empty());
  CHECK(p.value(0.0) == doctest::Approx(0.0));
  CHECK(p.deriv(0.0) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-13));
  CHECK(max_first_order_residual(p, q, -1.0, 1.0) < 1e-12);
  // Both turning roots are negative: no consistent turning start.
  CHECK_THROWS_AS(maxsurf::solve_profile(q, AtTurningPoint{-1}),
                  std::domain_error);
}

TEST_CASE("constant positive coefficients solve to a linear profile") {
  const Profile p = maxsurf::solve_profile(phi_like(4.0, 0.0, 0.0), AtZero{});
  CHECK(p.form_tag() == FormTag::kTrig);
  CHECK_FALSE(p.period().has_value());
  CHECK(p.turning_points().empty());
  CHECK(p.value(2.5) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(p.deriv(-3.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(maxsurf::solve_profile(phi_like(4.0, 0.0, 0.0),
                                         AtTurningPoint{-1}),
                  std::domain_error);
}

TEST_CASE("closed forms satisfy both profile equations on a dense grid") {
  struct Case {
    QuarticCoeffs q;
    ProfileInit init;
    double t_lo, t_hi;
  };
  const std::vector<Case> cases = {
      {snsn_phi_row(0.8), AtZero{}, -5.0, 5.0},
      {snsn_phi_row(0.5), AtZero{}, -5.0, 5.0},
      {sncn_psi_row(0.8), AtTurningPoint{-1}, -5.0, 5.0},
      {sncn_zeta_row(0.8, 0.8), AtTurningPoint{-1}, -5.0, 5.0},
      {cncn_phi_row(0.5), AtTurningPoint{-1}, -5.0, 5.0},
      {cncn_zeta_row(0.5, 0.5), AtZero{}, -5.0, 5.0},
      {phi_like(-3.0, -2.0, -1.0), AtTurningPoint{-1}, -4.0, 4.0},
      {phi_like(-3.0, -2.0, -1.0), AtTurningPoint{+1}, -4.0, 4.0},
      {phi_like(0.0, -0.5, -1.0), AtTurningPoint{-1}, -6.0, 6.0},
      {phi_like(1.0, 0.5, 0.0), AtZero{}, -7.0, 7.0},
      {phi_like(1.0, 1.0, 1.0), AtZero{}, -6.0, 6.0},
      {zeta_like(0.5, -0.5, 0.5), AtZero{}, -6.0, 6.0},
      {phi_like(1.0, -0.5, 0.0), AtZero{}, -3.0, 3.0},
      {phi_like(-1.0, -0.5, 0.0), AtTurningPoint{+1}, -3.0, 3.0},
      {phi_like(1.0, -1.0, 1.0), AtZero{}, -1.3, 1.3},
      {phi_like(0.5, -1.0, 1.0), AtZero{}, -1.0, 1.0},
      {phi_like(4.0, 0.0, 0.0), AtZero{}, -4.0, 4.0},
  };
  for (const Case& tc : cases) {
    const Profile p = maxsurf::solve_profile(tc.q, tc.init);
    CAPTURE(tc.q.a);
    CAPTURE(tc.q.b);
    CAPTURE(tc.q.c);
    CHECK(max_first_order_residual(p, tc.q, tc.t_lo, tc.t_hi) < 1e-9);
    CHECK(max_derivative_mismatch(p, tc.t_lo, tc.t_hi) < 5e-7);
  }
}

TEST_CASE("turning values land on roots of P") {
  struct Case {
    QuarticCoeffs q;
    ProfileInit init;
  };
  const std::vector<Case> cases = {
      {snsn_phi_row(0.8), AtZero{}},
      {sncn_psi_row(0.8), AtTurningPoint{-1}},
      {cncn_phi_row(0.5), AtTurningPoint{-1}},
      {cncn_zeta_row(0.5, 0.5), AtZero{}},
      {phi_like(-3.0, -2.0, -1.0), AtTurningPoint{-1}},
      {phi_like(1.0, 0.5, 0.0), AtZero{}},
  };
  for (const Case& tc : cases) {
    const Profile p = maxsurf::solve_profile(tc.q, tc.init);
    const QuarticCoeffs q = tc.q.as_phi_like();
    for (double t : p.turning_points()) {
      CHECK(std::abs(p.deriv(t)) < 1e-9);
      const double s = p.value(t) * p.value(t);
      const double res = q.a - 2.0 * q.b * s + q.c * s * s;
      CHECK(std::abs(res) < 1e-9);  // value^2 is a root of P
    }
  }
}

TEST_CASE("monotone double-root profiles have no turning points") {
  const Profile p =
      maxsurf::solve_profile(zeta_like(0.5, -0.5, 0.5), AtZero{});
  CHECK(p.form_tag() == FormTag::kTanh);
  CHECK_FALSE(p.period().has_value());
  CHECK(p.turning_points().empty());
  // tanh(t / sqrt(2)) is strictly increasing.
  double prev = p.value(-5.0);
  for (int i = 1; i <= 100; ++i) {
    const double cur = p.value(-5.0 + 10.0 * i / 100.0);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("numeric integration reproduces the sine example") {
  const QuarticCoeffs q = phi_like(1.0, 0.5, 0.0);
  const Profile p = maxsurf::integrate_profile_numeric(q, AtZero{}, 4.0 * kPi);
  CHECK(p.form_tag() == FormTag::kNumeric);
  double worst = 0.0;
  for (int i = 0; i <= 2000; ++i) {
    const double t = 4.0 * kPi * i / 2000.0;
    worst = std::max(worst, std::abs(p.value(t) - std::sin(t)));
  }
  CHECK(worst < 1e-8);
  // Parity extension: AtZero profiles are odd.
  CHECK(p.value(-1.3) == doctest::Approx(-p.value(1.3)).epsilon(1e-14));
  CHECK(p.deriv(-1.3) == doctest::Approx(p.deriv(1.3)).epsilon(1e-14));
}

TEST_CASE("numeric integration matches every closed family row") {
  struct Case {
    QuarticCoeffs q;
    ProfileInit init;
  };
  const std::vector<Case> cases = {
      {snsn_phi_row(0.8), AtZero{}},
      {sncn_psi_row(0.8), AtTurningPoint{-1}},
      {sncn_zeta_row(0.8, 0.8), AtTurningPoint{-1}},
      {cncn_phi_row(0.8), AtTurningPoint{-1}},
      {cncn_zeta_row(0.8, 0.8), AtZero{}},
      {phi_like(-3.0, -2.0, -1.0), AtTurningPoint{-1}},
      {zeta_like(0.5, -0.5, 0.5), AtZero{}},
      {phi_like(0.0, -0.5, -1.0), AtTurningPoint{-1}},
  };
  for (const Case& tc : cases) {
    const Profile closed = maxsurf::solve_profile(tc.q, tc.init);
    const double range = closed.period().value_or(6.0);
    const Profile numeric =
        maxsurf::integrate_profile_numeric(tc.q, tc.init, range);
    CAPTURE(tc.q.a);
    CAPTURE(tc.q.b);
    CAPTURE(tc.q.c);
    CHECK(max_profile_difference(closed, numeric, 0.0, range) < 1e-8);
  }
}

TEST_CASE("numeric integration conserves the first-order equation") {
  const QuarticCoeffs q = snsn_phi_row(0.8);
  const Profile closed = maxsurf::solve_profile(q, AtZero{});
  const double ten_periods = 10.0 * *closed.period();
  const Profile p = maxsurf::integrate_profile_numeric(q, AtZero{}, ten_periods);
  // Drift of f'^2 - P(f^2) away from zero over ten periods.
  double worst = 0.0;
  for (int i = 0; i <= 4000; ++i) {
    const double t = ten_periods * i / 4000.0;
    const double f = p.value(t), s = f * f;
    const double rhs = q.a - 2.0 * q.b * s + q.c * s * s;
    worst = std::max(worst, std::abs(p.deriv(t) * p.deriv(t) - rhs));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("numeric profiles expose detected turning points") {
  const QuarticCoeffs q = sncn_psi_row(0.8);
  const double km = maxsurf::complete_K(Modulus(0.8));
  const Profile p =
      maxsurf::integrate_profile_numeric(q, AtTurningPoint{-1}, 4.0 * km + 0.1);
  REQUIRE(p.turning_points().size() >= 3);
  CHECK(p.turning_points()[0] == doctest::Approx(0.0));
  CHECK(p.turning_points()[1] == doctest::Approx(2.0 * km).epsilon(1e-8));
  CHECK(p.turning_points()[2] == doctest::Approx(4.0 * km).epsilon(1e-8));
}

TEST_CASE("numeric evaluation outside the integrated range throws") {
  const QuarticCoeffs q = phi_like(1.0, 0.5, 0.0);
  const Profile p = maxsurf::integrate_profile_numeric(q, AtZero{}, 2.0);
  CHECK_NOTHROW(p.value(1.999999));
  CHECK_NOTHROW(p.value(-1.999999));
  CHECK_THROWS_AS(p.value(2.5), std::domain_error);
  CHECK_THROWS_AS(p.deriv(-2.5), std::domain_error);
  CHECK_THROWS_AS(maxsurf::integrate_profile_numeric(q, AtZero{}, -1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(maxsurf::integrate_profile_numeric(q, AtZero{}, 0.0),
                  std::invalid_argument);
}

TEST_CASE("inconsistent or unsupported setups are rejected") {
  // P identically zero.
  CHECK_THROWS_AS(maxsurf::solve_profile(phi_like(0.0, 0.0, 0.0), AtZero{}),
                  std::invalid_argument);
  // AtZero needs P(0) >= 0.
  CHECK_THROWS_AS(maxsurf::solve_profile(phi_like(-1.0, 0.5, 1.0), AtZero{}),
                  std::domain_error);
  // P(0) = 0 pins the identically-zero profile.
  CHECK_THROWS_AS(maxsurf::solve_profile(phi_like(0.0, -1.0, 1.0), AtZero{}),
                  std::domain_error);
  // Complex roots.
  CHECK_THROWS_AS(maxsurf::solve_profile(phi_like(1.0, 0.0, 1.0), AtZero{}),
                  std::domain_error);
  // Negative everywhere.
  CHECK_THROWS_AS(
      maxsurf::solve_profile(phi_like(-1.0, 0.0, -1.0), AtTurningPoint{-1}),
      std::domain_error);
  CHECK_THROWS_AS(
      maxsurf::solve_profile(phi_like(-1.0, 1.0, 0.0), AtTurningPoint{-1}),
      std::domain_error);
  // Unbounded reciprocal orbit from the outer root.
  CHECK_THROWS_AS(
      maxsurf::solve_profile(snsn_phi_row(0.8), AtTurningPoint{+1}),
      std::domain_error);
  CHECK_THROWS_AS(
      maxsurf::solve_profile(phi_like(-1.0, 0.0, 1.0), AtTurningPoint{+1}),
      std::domain_error);
  // Inner root of the mixed row is negative.
  CHECK_THROWS_AS(
      maxsurf::solve_profile(sncn_psi_row(0.8), AtTurningPoint{+1}),
      std::domain_error);
  // delta must be +1 or -1.
  CHECK_THROWS_AS(
      maxsurf::solve_profile(snsn_phi_row(0.8), AtTurningPoint{0}),
      std::invalid_argument);
  // Wrong delta for the single finite root at c = 0.
  CHECK_THROWS_AS(
      maxsurf::solve_profile(phi_like(1.0, 0.5, 0.0), AtTurningPoint{+1}),
      std::domain_error);
  // Non-finite coefficients.
  CHECK_THROWS_AS(
      maxsurf::solve_profile(
          phi_like(std::numeric_limits<double>::quiet_NaN(), 0.0, 1.0),
          AtZero{}),
      std::invalid_argument);
}

TEST_CASE("bounded monotone family conditions") {
  const std::array<double, 3> good = {1.0, 1.0, std::sqrt(0.5)};
  CHECK(maxsurf::tanh_family_conditions(1.0, 1.0, -0.5, good));
  CHECK_FALSE(maxsurf::tanh_family_conditions(1.0, 1.0, 1.0, {1.0, 1.0, 1.0}));
  CHECK_FALSE(maxsurf::tanh_family_conditions(1.0 + 1e-3, 1.0, -0.5, good));
  CHECK_FALSE(maxsurf::tanh_family_conditions(1.0, 1.0, -0.5 + 1e-3, good));
  CHECK_THROWS_AS(maxsurf::tanh_family_conditions(0.0, 1.0, -0.5, good),
                  std::domain_error);
  CHECK_THROWS_AS(maxsurf::tanh_family_conditions(1.0, 1.0, -0.5, good, -1.0),
                  std::invalid_argument);
}

TEST_CASE("coefficients accessor reports the phi-like normal form") {
  const Profile p =
      maxsurf::solve_profile(zeta_like(0.5, -0.5, 0.5), AtZero{});
  CHECK(p.coeffs().convention == QuarticCoeffs::Convention::kPhiLike);
  CHECK(p.coeffs().a == 0.5);
  CHECK(p.coeffs().b == 0.5);
  CHECK(p.coeffs().c == 0.5);
}
