// Arithmetic-geometric mean, Landen descent, and adaptive Simpson quadrature.
#include "maxsurf/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace maxsurf {
namespace {

// Depth cap for the AGM / Landen sequences.  Convergence is quadratic, so
// double precision needs five or six steps; the cap only guards pathologies.
constexpr int kMaxIterations = 32;
// Relative termination threshold for the AGM / Landen sequences.
constexpr double kAgmTol = 1e-15;

double integrand(double theta, double k2) {
  const double s = std::sin(theta);
  return 1.0 / std::sqrt(1.0 - k2 * s * s);
}

// One level of adaptive Simpson refinement on [a, b] with cached endpoint and
// midpoint integrand values; `whole` is the single-interval Simpson estimate.
double refine(double a, double b, double fa, double fm, double fb,
              double whole, double k2, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = integrand(lm, k2);
  const double frm = integrand(rm, k2);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  if (depth <= 0) {
    throw std::runtime_error("incomplete_F: quadrature failed to converge");
  }
  return refine(a, m, fa, flm, fm, left, k2, 0.5 * tol, depth - 1) +
         refine(m, b, fm, frm, fb, right, k2, 0.5 * tol, depth - 1);
}

}  // namespace

Modulus::Modulus(double modulus) : k(modulus), kprime(0.0) {
  if (!(modulus >= 0.0 && modulus <= 1.0)) {
    throw std::domain_error("Modulus: requires 0 <= k <= 1");
  }
  kprime = std::sqrt((1.0 - modulus) * (1.0 + modulus));
}

double complete_K(const Modulus& mod) {
  if (mod.k == 1.0) {
    throw std::domain_error("complete_K: integral diverges at k = 1");
  }
  double a = 1.0;
  double b = mod.kprime;
  for (int i = 0; i < kMaxIterations && a - b > kAgmTol * a; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return std::numbers::pi / (2.0 * a);
}

JacobiValues jacobi_sn_cn_dn(double t, const Modulus& mod) {
  if (!std::isfinite(t)) {
    throw std::domain_error("jacobi_sn_cn_dn: argument must be finite");
  }
  if (mod.k == 0.0) {
    return {std::sin(t), std::cos(t), 1.0};
  }
  if (mod.k == 1.0) {
    const double sech = 1.0 / std::cosh(t);
    return {std::tanh(t), sech, sech};
  }

  // Reduce the argument to [0, K] using oddness/evenness and the
  // quarter-period symmetries
  //   sn(t + 2K) = -sn t,  cn(t + 2K) = -cn t,  dn(t + 2K) = dn t,
  //   sn(2K - t) =  sn t,  cn(2K - t) = -cn t,  dn(2K - t) = dn t.
  const double K = complete_K(mod);
  double sn_sign = 1.0;
  double cn_sign = 1.0;
  double r = t;
  if (r < 0.0) {
    r = -r;
    sn_sign = -sn_sign;
  }
  r = std::fmod(r, 4.0 * K);
  if (r >= 2.0 * K) {
    r -= 2.0 * K;
    sn_sign = -sn_sign;
    cn_sign = -cn_sign;
  }
  if (r > K) {
    r = 2.0 * K - r;
    cn_sign = -cn_sign;
  }

  // Descending Landen transformation (Abramowitz & Stegun 16.4): run the AGM
  // upward recording c_n = (a_{n-1} - b_{n-1}) / 2, then unwind the amplitude
  // phi_{n-1} = (phi_n + asin((c_n / a_n) sin phi_n)) / 2 from
  // phi_N = 2^N a_N t.
  double a[kMaxIterations + 1];
  double c[kMaxIterations + 1];
  a[0] = 1.0;
  c[0] = mod.k;
  double b = mod.kprime;
  int n = 0;
  while (c[n] > kAgmTol * a[n]) {
    if (n == kMaxIterations) {
      throw std::runtime_error("jacobi_sn_cn_dn: Landen sequence failed to converge");
    }
    const double an = 0.5 * (a[n] + b);
    c[n + 1] = 0.5 * (a[n] - b);
    b = std::sqrt(a[n] * b);
    a[n + 1] = an;
    ++n;
  }

  double phi = std::ldexp(1.0, n) * a[n] * r;
  for (int i = n; i > 0; --i) {
    const double s = std::clamp(c[i] / a[i] * std::sin(phi), -1.0, 1.0);
    phi = 0.5 * (phi + std::asin(s));
  }

  const double sn = std::sin(phi);
  const double cn = std::cos(phi);
  // dn^2 = 1 - k^2 sn^2 = k'^2 + k^2 cn^2; the second form is a sum of
  // non-negative terms, so it loses no precision near sn = 1.
  const double dn = std::sqrt(mod.kprime * mod.kprime + mod.k * mod.k * cn * cn);
  return {sn_sign * sn, cn_sign * cn, dn};
}

double incomplete_F(double s, const Modulus& mod) {
  if (!(s >= -1.0 && s <= 1.0)) {
    throw std::domain_error("incomplete_F: requires |s| <= 1");
  }
  if (mod.k == 1.0) {
    throw std::domain_error("incomplete_F: requires k < 1");
  }
  if (s == 0.0) {
    return 0.0;
  }
  const double k2 = mod.k * mod.k;
  const double b = std::asin(std::abs(s));
  const double fa = 1.0;
  const double fm = integrand(0.5 * b, k2);
  const double fb = integrand(b, k2);
  const double whole = b / 6.0 * (fa + 4.0 * fm + fb);
  const double value = refine(0.0, b, fa, fm, fb, whole, k2, 1e-14, 48);
  return s > 0.0 ? value : -value;
}

}  // namespace maxsurf
