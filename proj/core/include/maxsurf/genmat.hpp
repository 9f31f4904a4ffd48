// Generating matrices: validity, invariants, group action, normal forms.
#pragma once

#include <array>

namespace maxsurf {

/// 3x3 real matrix, row-major.
using Mat3 = std::array<std::array<double, 3>, 3>;

/// Default relative tolerance for generating-matrix validity checks.
inline constexpr double kDefaultMatrixTol = 1e-12;

/// Largest absolute entry of A.
double matrix_scale(const Mat3& A);

/// The rearrangement A' with rows (a11,a22,a33), (a23,a31,a12), (a32,a13,a21).
/// A nonzero A satisfies the generating identities exactly when rank A' = 1.
Mat3 derived_matrix(const Mat3& A);

/// True iff A != 0 and every 2x2 minor of derived_matrix(A) vanishes within
/// tol * max|entry|^2 (the minors are quadratic in the entries of A).
bool is_generating(const Mat3& A, double tol = kDefaultMatrixTol);

/// Two factor triples (p1,q1,r1) and (p2,q2,r2).  Each triple must be nonzero
/// as a vector; the matrix they generate is then automatically generating.
struct FactorVectors {
  double p1, q1, r1;
  double p2, q2, r2;
};

/// A validated generating matrix together with the relative tolerance used
/// for its validity and consistency checks.
class GeneratingMatrix {
 public:
  /// Throws std::invalid_argument unless is_generating(entries, tol).
  explicit GeneratingMatrix(const Mat3& entries,
                            double tol = kDefaultMatrixTol);

  const Mat3& entries() const { return entries_; }
  double tol() const { return tol_; }

 private:
  Mat3 entries_;
  double tol_;
};

/// Builds the matrix with rows (p1p2, q1r2, r1q2), (r1r2, p1q2, q1p2),
/// (q1q2, r1p2, p1r2).  Every such matrix is generating; conversely every
/// generating matrix arises this way.  Throws std::domain_error if either
/// factor triple is the zero vector.
GeneratingMatrix from_factors(const FactorVectors& f,
                              double tol = kDefaultMatrixTol);

/// The module theta(A): the common value of the three row products and three
/// column products of the entries.  theta = 0 makes A parabolic, theta != 0
/// elliptic.  Throws std::invalid_argument if the six products disagree
/// beyond tol * max|entry|^3.
double module_theta(const GeneratingMatrix& A);

/// The discriminant Delta(A) = (1/4) Delta_2, where
///   Delta_alpha = (a_{j,alpha} + a_{k,alpha} - a_{i,alpha})^2
///                 - 4 a_{i,beta} a_{i,gamma}
/// for cyclic (i,j,k) and (alpha,beta,gamma).  For a generating matrix
/// Delta_alpha is independent of the choice of i; this is checked for every
/// alpha and a violation throws std::invalid_argument.  (Different alpha may
/// give different values; the normalization fixes alpha = 2.)
double discriminant(const GeneratingMatrix& A);

/// Group action of (lambda1, lambda2) in (0, inf)^2:
///   row 1: (a11/l1,    a12, l1 a13)
///   row 2: (a21/l2,    a22, l2 a23)
///   row 3: (l1 l2 a31, a32, a33/(l1 l2))
/// The action preserves the generating property, theta, and the discriminant.
/// Throws std::domain_error unless both lambdas are positive and finite.
GeneratingMatrix act(double lambda1, double lambda2,
                     const GeneratingMatrix& A);

/// True when B = act(lambda1, lambda2, A) for some positive lambdas.  The
/// lambdas are recovered from entry ratios where available (zero patterns are
/// preserved by the action) and the candidate action is verified entrywise.
bool equivalent(const GeneratingMatrix& A, const GeneratingMatrix& B);

/// Data of the canonical representative of an elliptic equivalence class:
/// the reconstructed matrix is rows (a, b, c), (e2 e3 c, e2 a, e3 b),
/// (e2 e3 b, e2 c, e3 a).  lambda1/lambda2 map the original matrix onto it.
struct CanonicalForm {
  double a, b, c;
  int eps2, eps3;  // each +1 or -1
  double lambda1, lambda2;
};

/// Reconstructs the matrix of a canonical form.  The pattern is generating
/// for every choice of (a, b, c, eps2, eps3).
Mat3 canonical_matrix(const CanonicalForm& form);

/// Canonical form of an elliptic generating matrix: eps_k = sign(a_kk/a_11),
/// lambda1 = eps2 a11/a22, lambda2 = eps3 a33/a11, and (a, b, c) is the first
/// row of act(lambda1, lambda2, A).  The remaining six entries of the acted
/// matrix are verified against the canonical pattern.  Throws
/// std::domain_error for parabolic input (theta = 0).
CanonicalForm canonical_elliptic_form(const GeneratingMatrix& A);

/// Result of matching a parabolic generating matrix against the three
/// permutation normal forms.
struct ParabolicForm {
  enum class Pattern {
    kZeroDiagonal,     // zero diagonal, all six off-diagonal entries nonzero
    kBordered,         // nonzero entries exactly at (1,2),(1,3),(2,1),(3,1)
    kDiagonal,         // nonzero diagonal, zero off-diagonal
    kZeroRowOrColumn,  // degenerate alternative: A has a zero row or column
  };
  Pattern pattern;
  // Permutations such that B[i][j] = A[row_perm[i]][col_perm[j]] shows the
  // pattern; identity for kZeroRowOrColumn.
  std::array<int, 3> row_perm;
  std::array<int, 3> col_perm;
};

/// Classifies a parabolic generating matrix by exhaustive search over the
/// 36 row/column permutation pairs.  Throws std::domain_error for elliptic
/// input and std::invalid_argument if nothing matches (not reachable for a
/// valid parabolic generating matrix).
ParabolicForm classify_parabolic(const GeneratingMatrix& A);

}  // namespace maxsurf
