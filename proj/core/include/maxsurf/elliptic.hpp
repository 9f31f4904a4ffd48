// Jacobi elliptic functions and elliptic integrals of the first kind.
#pragma once

namespace maxsurf {

/// Elliptic modulus k together with the complementary modulus k' = sqrt(1 - k^2).
///
/// The complementary modulus is computed as sqrt((1 - k)(1 + k)) so that it
/// stays accurate when k is close to 1.  Throws std::domain_error unless
/// 0 <= k <= 1.
struct Modulus {
  double k;
  double kprime;

  explicit Modulus(double modulus);
};

/// Complete elliptic integral of the first kind,
///   K(k) = int_0^{pi/2} dtheta / sqrt(1 - k^2 sin^2 theta),
/// evaluated with the arithmetic-geometric mean: K = pi / (2 agm(1, k')).
///
/// Throws std::domain_error for k = 1, where the integral diverges.
double complete_K(const Modulus& mod);

/// Values of the three basic Jacobi elliptic functions at a common argument.
struct JacobiValues {
  double sn;
  double cn;
  double dn;
};

/// Jacobi sn, cn, dn evaluated by the descending Landen transformation
/// (Abramowitz & Stegun 16.4).  The argument is first reduced modulo the
/// real period 4K using the quarter-period symmetries, so any finite t is
/// accepted.  The degenerate moduli short-circuit to
///   k = 0: (sin t, cos t, 1)        k = 1: (tanh t, sech t, sech t).
JacobiValues jacobi_sn_cn_dn(double t, const Modulus& mod);

/// Incomplete elliptic integral of the first kind in Jacobi form,
///   F(s; k) = int_0^{arcsin s} dtheta / sqrt(1 - k^2 sin^2 theta),
/// the functional inverse of sn on [-K, K].  Evaluated by adaptive Simpson
/// quadrature, deliberately independent of the Landen machinery above so the
/// two can be used to cross-check each other.
///
/// Requires |s| <= 1 and k < 1; throws std::domain_error otherwise.
double incomplete_F(double s, const Modulus& mod);

}  // namespace maxsurf
