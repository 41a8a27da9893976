#pragma once

#include "interlace_kit/errors.hpp"
#include "interlace_kit/index_set.hpp"
#include "interlace_kit/poly.hpp"
#include "interlace_kit/rational.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <vector>

namespace ikit {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<Poly>;
using RationalVector = Vector<Rational>;

/// Fraction-free (Bareiss) elimination with row pivoting. Empty matrix -> 1.
Rational determinant(const RationalMatrix& a);
/// Cofactor expansion along rows, memoised over column subsets.
Poly determinant(const PolyMatrix& a);

RationalMatrix identity_matrix(int n);

/// A - x I as a polynomial matrix.
PolyMatrix lambda_matrix(const RationalMatrix& a);

template <class Scalar>
Matrix<Scalar> submatrix(const Matrix<Scalar>& a, const IndexSet& rows, const IndexSet& cols) {
  if (rows.bound() > a.rows() || cols.bound() > a.cols()) throw DomainError("index set out of range");
  Matrix<Scalar> out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(rows[i], cols[j]);
    }
  }
  return out;
}

template <class Scalar>
Matrix<Scalar> principal_submatrix(const Matrix<Scalar>& a, const IndexSet& alpha) {
  return submatrix(a, alpha, alpha);
}

/// A(rows; cols). Throws DomainError on mismatched sizes, empty sets or out-of-range indices.
template <class Scalar>
Scalar minor(const Matrix<Scalar>& a, const IndexSet& rows, const IndexSet& cols) {
  if (rows.size() != cols.size()) throw DomainError("minor needs |rows| = |cols|");
  if (rows.empty()) throw DomainError("minor of an empty index set");
  return determinant(submatrix(a, rows, cols));
}

/// k-th compound: all k x k minors, rows and columns in lexicographic order.
template <class Scalar>
Matrix<Scalar> compound(const Matrix<Scalar>& a, int k) {
  const int n = static_cast<int>(a.rows());
  if (a.rows() != a.cols()) throw DomainError("compound of a non-square matrix");
  if (k < 1 || k > n) throw DomainError("compound order out of range");
  const std::vector<IndexSet> sets = subsets_of_size(n, k);
  const auto m = static_cast<Eigen::Index>(sets.size());
  Matrix<Scalar> out(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      out(i, j) = minor(a, sets[static_cast<std::size_t>(i)], sets[static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

/// B(i, j) = A(perm[i], perm[j]), i.e. P A P^-1 for the permutation matrix with rows e_perm[i].
template <class Scalar>
Matrix<Scalar> permute_symmetric(const Matrix<Scalar>& a, const std::vector<int>& perm) {
  const auto n = a.rows();
  if (static_cast<Eigen::Index>(perm.size()) != n) throw DomainError("permutation size mismatch");
  Matrix<Scalar> out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = a(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  }
  return out;
}

/// Schur complement with entries A(alpha + l; alpha + r) / A(alpha; alpha),
/// every index set read in increasing order; l and r run over the complement
/// of alpha in increasing order. Throws SingularError if A(alpha) is singular.
RationalMatrix schur_complement(const RationalMatrix& a, const IndexSet& alpha);

/// A22 - A21 A11^-1 A12 with 1 = alpha, 2 = its complement (both increasing).
RationalMatrix schur_complement_block(const RationalMatrix& a, const IndexSet& alpha);

/// b(l, r) = A(rows + l; cols + r) for l outside rows and r outside cols,
/// increasing. Empty rows and cols give A itself.
RationalMatrix sylvester_b_matrix(const RationalMatrix& a, const IndexSet& rows, const IndexSet& cols);

/// Exact inverse by Gauss-Jordan elimination. Throws SingularError.
RationalMatrix inverse(const RationalMatrix& a);

struct JkMap {
  /// complement_rank[r] = lexicographic rank of the complement of the k-set with rank r.
  std::vector<std::size_t> complement_rank;
  /// sign[r] = (-1)^(p + 1), p the 1-based index sum of the k-set with rank r.
  std::vector<int> sign;
};

/// Throws DomainError unless 1 <= k < n.
JkMap jk_map_signs(int n, int k);

/// The C(n, n-k) x C(n, k) matrix of J_k: column rank(I) holds sign(I) in row rank(complement I).
RationalMatrix jk_matrix(int n, int k);

/// diag(1, -1, 1, ...) of size m.
RationalMatrix alternating_sign_matrix(int m);
/// Reversal permutation matrix of size m.
RationalMatrix reversal_matrix(int m);

}  // namespace ikit
