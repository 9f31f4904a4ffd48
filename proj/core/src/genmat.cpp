// Generating-matrix algebra: validity, invariants, group action, normal forms.
#include "maxsurf/genmat.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>

namespace maxsurf {
namespace {

Mat3 act_entries(double l1, double l2, const Mat3& a) {
  return Mat3{{{a[0][0] / l1, a[0][1], l1 * a[0][2]},
               {a[1][0] / l2, a[1][1], l2 * a[1][2]},
               {l1 * l2 * a[2][0], a[2][1], a[2][2] / (l1 * l2)}}};
}

int sign_of(double x) { return x < 0.0 ? -1 : 1; }

// All six permutations of {0,1,2}.
constexpr std::array<std::array<int, 3>, 6> kPerms = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

}  // namespace

double matrix_scale(const Mat3& A) {
  double s = 0.0;
  for (const auto& row : A) {
    for (double e : row) {
      s = std::max(s, std::abs(e));
    }
  }
  return s;
}

Mat3 derived_matrix(const Mat3& A) {
  return Mat3{{{A[0][0], A[1][1], A[2][2]},
               {A[1][2], A[2][0], A[0][1]},
               {A[2][1], A[0][2], A[1][0]}}};
}

bool is_generating(const Mat3& A, double tol) {
  const double scale = matrix_scale(A);
  if (scale == 0.0) {
    return false;
  }
  const Mat3 d = derived_matrix(A);
  const double thresh = tol * scale * scale;
  for (int r1 = 0; r1 < 3; ++r1) {
    for (int r2 = r1 + 1; r2 < 3; ++r2) {
      for (int c1 = 0; c1 < 3; ++c1) {
        for (int c2 = c1 + 1; c2 < 3; ++c2) {
          const double minor = d[r1][c1] * d[r2][c2] - d[r1][c2] * d[r2][c1];
          if (std::abs(minor) > thresh) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

GeneratingMatrix::GeneratingMatrix(const Mat3& entries, double tol)
    : entries_(entries), tol_(tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("GeneratingMatrix: tolerance must be positive");
  }
  if (!is_generating(entries, tol)) {
    throw std::invalid_argument(
        "GeneratingMatrix: matrix is not generating within tolerance");
  }
}

GeneratingMatrix from_factors(const FactorVectors& f, double tol) {
  if (f.p1 * f.p1 + f.q1 * f.q1 + f.r1 * f.r1 == 0.0 ||
      f.p2 * f.p2 + f.q2 * f.q2 + f.r2 * f.r2 == 0.0) {
    throw std::domain_error("from_factors: factor triple must be nonzero");
  }
  const Mat3 m = {{{f.p1 * f.p2, f.q1 * f.r2, f.r1 * f.q2},
                   {f.r1 * f.r2, f.p1 * f.q2, f.q1 * f.p2},
                   {f.q1 * f.q2, f.r1 * f.p2, f.p1 * f.r2}}};
  return GeneratingMatrix(m, tol);
}

double module_theta(const GeneratingMatrix& A) {
  const Mat3& a = A.entries();
  double products[6];
  for (int i = 0; i < 3; ++i) {
    products[i] = a[i][0] * a[i][1] * a[i][2];
    products[3 + i] = a[0][i] * a[1][i] * a[2][i];
  }
  const auto [lo, hi] = std::minmax_element(products, products + 6);
  const double scale = matrix_scale(a);
  if (*hi - *lo > A.tol() * scale * scale * scale) {
    throw std::invalid_argument(
        "module_theta: row/column products disagree; matrix not generating");
  }
  double sum = 0.0;
  for (double p : products) {
    sum += p;
  }
  return sum / 6.0;
}

double discriminant(const GeneratingMatrix& A) {
  const Mat3& a = A.entries();
  const double scale = matrix_scale(a);
  const double thresh = A.tol() * scale * scale;
  double delta2 = 0.0;
  for (int alpha = 0; alpha < 3; ++alpha) {
    const int beta = (alpha + 1) % 3;
    const int gamma = (alpha + 2) % 3;
    double values[3];
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3;
      const int k = (i + 2) % 3;
      const double root = a[j][alpha] + a[k][alpha] - a[i][alpha];
      values[i] = root * root - 4.0 * a[i][beta] * a[i][gamma];
    }
    const auto [lo, hi] = std::minmax_element(values, values + 3);
    if (*hi - *lo > thresh) {
      throw std::invalid_argument(
          "discriminant: values disagree across row choices; matrix not "
          "generating");
    }
    if (alpha == 1) {
      delta2 = (values[0] + values[1] + values[2]) / 3.0;
    }
  }
  return 0.25 * delta2;
}

GeneratingMatrix act(double lambda1, double lambda2,
                     const GeneratingMatrix& A) {
  if (!(lambda1 > 0.0) || !(lambda2 > 0.0) || !std::isfinite(lambda1) ||
      !std::isfinite(lambda2)) {
    throw std::domain_error("act: lambdas must be positive and finite");
  }
  return GeneratingMatrix(act_entries(lambda1, lambda2, A.entries()), A.tol());
}

bool equivalent(const GeneratingMatrix& A, const GeneratingMatrix& B) {
  const Mat3& a = A.entries();
  const Mat3& b = B.entries();
  const double tol = std::max(A.tol(), B.tol());
  const double scale = std::max(matrix_scale(a), matrix_scale(b));
  const double zero = tol * scale;

  // Positive ratio y/x, nullopt when either side vanishes (the action leaves
  // zero entries zero, so a one-sided zero is settled by final verification).
  bool sign_clash = false;
  auto ratio = [&](double y, double x) -> std::optional<double> {
    if (std::abs(x) <= zero || std::abs(y) <= zero) {
      return std::nullopt;
    }
    const double r = y / x;
    if (r <= 0.0) {
      sign_clash = true;
      return std::nullopt;
    }
    return r;
  };
  auto first_of = [](std::optional<double> u,
                     std::optional<double> v) { return u ? u : v; };

  // b11 = a11/l1, b13 = l1 a13; b21 = a21/l2, b23 = l2 a23;
  // b31 = l1 l2 a31, b33 = a33/(l1 l2).
  std::optional<double> l1 = first_of(ratio(a[0][0], b[0][0]),
                                      ratio(b[0][2], a[0][2]));
  std::optional<double> l2 = first_of(ratio(a[1][0], b[1][0]),
                                      ratio(b[1][2], a[1][2]));
  std::optional<double> l12 = first_of(ratio(b[2][0], a[2][0]),
                                       ratio(a[2][2], b[2][2]));
  if (sign_clash) {
    return false;
  }
  if (!l1) {
    l1 = (l2 && l12) ? *l12 / *l2 : (l12 && !l2 ? *l12 : 1.0);
  }
  if (!l2) {
    l2 = l12 ? *l12 / *l1 : 1.0;
  }

  const Mat3 acted = act_entries(*l1, *l2, a);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (std::abs(acted[i][j] - b[i][j]) > zero) {
        return false;
      }
    }
  }
  return true;
}

Mat3 canonical_matrix(const CanonicalForm& form) {
  const double a = form.a, b = form.b, c = form.c;
  const double e2 = form.eps2, e3 = form.eps3;
  return Mat3{{{a, b, c},
               {e2 * e3 * c, e2 * a, e3 * b},
               {e2 * e3 * b, e2 * c, e3 * a}}};
}

CanonicalForm canonical_elliptic_form(const GeneratingMatrix& A) {
  const double theta = module_theta(A);
  const Mat3& a = A.entries();
  const double scale = matrix_scale(a);
  if (std::abs(theta) <= A.tol() * scale * scale * scale) {
    throw std::domain_error(
        "canonical_elliptic_form: not applicable to a parabolic matrix");
  }
  // theta != 0 forces every entry nonzero, so the sign/ratio reads are safe.
  CanonicalForm form{};
  form.eps2 = sign_of(a[1][1] / a[0][0]);
  form.eps3 = sign_of(a[2][2] / a[0][0]);
  form.lambda1 = form.eps2 * a[0][0] / a[1][1];
  form.lambda2 = form.eps3 * a[2][2] / a[0][0];

  const Mat3 m = act_entries(form.lambda1, form.lambda2, a);
  form.a = m[0][0];
  form.b = m[0][1];
  form.c = m[0][2];

  const Mat3 expected = canonical_matrix(form);
  const double thresh = A.tol() * matrix_scale(m);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (std::abs(m[i][j] - expected[i][j]) > thresh) {
        throw std::invalid_argument(
            "canonical_elliptic_form: acted matrix violates the canonical "
            "pattern; matrix not generating");
      }
    }
  }
  return form;
}

ParabolicForm classify_parabolic(const GeneratingMatrix& A) {
  const double theta = module_theta(A);
  const Mat3& a = A.entries();
  const double scale = matrix_scale(a);
  const double zero = A.tol() * scale;
  if (std::abs(theta) > A.tol() * scale * scale * scale) {
    throw std::domain_error(
        "classify_parabolic: not applicable to an elliptic matrix");
  }

  const auto is_zero = [&](double e) { return std::abs(e) <= zero; };

  // The three normal forms have 3, 5 and 6 zero entries, with every displayed
  // entry nonzero, so they are mutually exclusive under permutations.
  const auto matches = [&](const std::array<int, 3>& rp,
                           const std::array<int, 3>& cp,
                           ParabolicForm::Pattern p) {
    const auto e = [&](int i, int j) { return a[rp[i]][cp[j]]; };
    switch (p) {
      case ParabolicForm::Pattern::kZeroDiagonal:
        return is_zero(e(0, 0)) && is_zero(e(1, 1)) && is_zero(e(2, 2)) &&
               !is_zero(e(0, 1)) && !is_zero(e(0, 2)) && !is_zero(e(1, 0)) &&
               !is_zero(e(1, 2)) && !is_zero(e(2, 0)) && !is_zero(e(2, 1));
      case ParabolicForm::Pattern::kBordered:
        return is_zero(e(0, 0)) && is_zero(e(1, 1)) && is_zero(e(1, 2)) &&
               is_zero(e(2, 1)) && is_zero(e(2, 2)) && !is_zero(e(0, 1)) &&
               !is_zero(e(0, 2)) && !is_zero(e(1, 0)) && !is_zero(e(2, 0));
      case ParabolicForm::Pattern::kDiagonal:
        return !is_zero(e(0, 0)) && !is_zero(e(1, 1)) && !is_zero(e(2, 2)) &&
               is_zero(e(0, 1)) && is_zero(e(0, 2)) && is_zero(e(1, 0)) &&
               is_zero(e(1, 2)) && is_zero(e(2, 0)) && is_zero(e(2, 1));
      default:
        return false;
    }
  };

  for (auto pattern : {ParabolicForm::Pattern::kDiagonal,
                       ParabolicForm::Pattern::kZeroDiagonal,
                       ParabolicForm::Pattern::kBordered}) {
    for (const auto& rp : kPerms) {
      for (const auto& cp : kPerms) {
        if (matches(rp, cp, pattern)) {
          return ParabolicForm{pattern, rp, cp};
        }
      }
    }
  }

  for (int i = 0; i < 3; ++i) {
    const bool zero_row =
        is_zero(a[i][0]) && is_zero(a[i][1]) && is_zero(a[i][2]);
    const bool zero_col =
        is_zero(a[0][i]) && is_zero(a[1][i]) && is_zero(a[2][i]);
    if (zero_row || zero_col) {
      return ParabolicForm{ParabolicForm::Pattern::kZeroRowOrColumn,
                           {0, 1, 2},
                           {0, 1, 2}};
    }
  }
  throw std::invalid_argument(
      "classify_parabolic: matrix matches no parabolic normal form");
}

}  // namespace maxsurf
