#include "interlace_kit/matrix.hpp"

#include <unordered_map>
#include <utility>

namespace ikit {

Rational determinant(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("determinant of a non-square matrix");
  const Eigen::Index n = a.rows();
  if (n == 0) return Rational(1);
  RationalMatrix m = a;
  Rational prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return Rational(0);
      m.row(k).swap(m.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : Rational(-m(n - 1, n - 1));
}

Poly determinant(const PolyMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("determinant of a non-square matrix");
  const int n = static_cast<int>(a.rows());
  if (n == 0) return Poly(1);
  if (n > 20) throw DomainError("polynomial determinant limited to n <= 20");

  // memo[mask] = det of the rows n-|mask|..n-1 restricted to the columns in mask.
  std::unordered_map<unsigned, Poly> memo;
  for (int c = 0; c < n; ++c) memo.emplace(1u << c, a(n - 1, c));
  for (int size = 2; size <= n; ++size) {
    const int row = n - size;
    for (const IndexSet& cols : subsets_of_size(n, size)) {
      unsigned mask = 0;
      for (int c : cols) mask |= 1u << c;
      Poly acc;
      int sign = 1;
      for (int c : cols) {
        if (!a(row, c).is_zero()) {
          const Poly& rest = memo.at(mask & ~(1u << c));
          if (!rest.is_zero()) {
            Poly term = a(row, c) * rest;
            if (sign > 0) {
              acc += term;
            } else {
              acc -= term;
            }
          }
        }
        sign = -sign;
      }
      memo.emplace(mask, std::move(acc));
    }
  }
  return memo.at((1u << n) - 1u);
}

RationalMatrix identity_matrix(int n) { return RationalMatrix::Identity(n, n); }

PolyMatrix lambda_matrix(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("A - xI needs a square matrix");
  PolyMatrix out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out(i, j) = Poly(a(i, j));
      if (i == j) out(i, j) -= Poly::x();
    }
  }
  return out;
}

RationalMatrix schur_complement(const RationalMatrix& a, const IndexSet& alpha) {
  const int n = static_cast<int>(a.rows());
  if (a.rows() != a.cols()) throw DomainError("Schur complement of a non-square matrix");
  if (alpha.bound() > n) throw DomainError("index set out of range");
  if (static_cast<int>(alpha.size()) == n) throw DomainError("Schur complement needs a proper subset");
  const Rational pivot = alpha.empty() ? Rational(1) : minor(a, alpha, alpha);
  if (pivot == 0) throw SingularError("pivot block " + alpha.to_string() + " is singular");
  const IndexSet rest = alpha.complement(n);
  const auto m = static_cast<Eigen::Index>(rest.size());
  RationalMatrix out(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      out(i, j) = minor(a, alpha.with(rest[static_cast<std::size_t>(i)]), alpha.with(rest[static_cast<std::size_t>(j)])) / pivot;
    }
  }
  return out;
}

RationalMatrix schur_complement_block(const RationalMatrix& a, const IndexSet& alpha) {
  const int n = static_cast<int>(a.rows());
  if (a.rows() != a.cols()) throw DomainError("Schur complement of a non-square matrix");
  if (static_cast<int>(alpha.size()) == n) throw DomainError("Schur complement needs a proper subset");
  const IndexSet rest = alpha.complement(n);
  if (alpha.empty()) return principal_submatrix(a, rest);
  const RationalMatrix a11 = principal_submatrix(a, alpha);
  const RationalMatrix a12 = submatrix(a, alpha, rest);
  const RationalMatrix a21 = submatrix(a, rest, alpha);
  const RationalMatrix a22 = principal_submatrix(a, rest);
  const RationalMatrix a11_inv = inverse(a11);
  const RationalMatrix correction = a21 * a11_inv * a12;
  return a22 - correction;
}

RationalMatrix sylvester_b_matrix(const RationalMatrix& a, const IndexSet& rows, const IndexSet& cols) {
  if (rows.size() != cols.size()) throw DomainError("Sylvester matrix needs |rows| = |cols|");
  if (rows.bound() > a.rows() || cols.bound() > a.cols()) throw DomainError("index set out of range");
  if (rows.empty()) return a;
  const IndexSet free_rows = rows.complement(static_cast<int>(a.rows()));
  const IndexSet free_cols = cols.complement(static_cast<int>(a.cols()));
  RationalMatrix out(static_cast<Eigen::Index>(free_rows.size()), static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t i = 0; i < free_rows.size(); ++i) {
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          minor(a, rows.with(free_rows[i]), cols.with(free_cols[j]));
    }
  }
  return out;
}

RationalMatrix inverse(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("inverse of a non-square matrix");
  const Eigen::Index n = a.rows();
  RationalMatrix m = a;
  RationalMatrix inv = RationalMatrix::Identity(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) throw SingularError("matrix is singular");
    if (p != k) {
      m.row(k).swap(m.row(p));
      inv.row(k).swap(inv.row(p));
    }
    const Rational scale = Rational(1) / m(k, k);
    m.row(k) *= scale;
    inv.row(k) *= scale;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0) continue;
      const Rational f = m(i, k);
      m.row(i) -= f * m.row(k);
      inv.row(i) -= f * inv.row(k);
    }
  }
  return inv;
}

JkMap jk_map_signs(int n, int k) {
  if (k < 1 || k >= n) throw DomainError("J_k needs 1 <= k < n");
  JkMap map;
  for (const IndexSet& s : subsets_of_size(n, k)) {
    int p = 0;
    for (int i : s) p += i + 1;
    map.complement_rank.push_back(lex_rank(s.complement(n), n));
    map.sign.push_back((p + 1) % 2 == 0 ? 1 : -1);
  }
  return map;
}

RationalMatrix jk_matrix(int n, int k) {
  const JkMap map = jk_map_signs(n, k);
  RationalMatrix out = RationalMatrix::Zero(static_cast<Eigen::Index>(binomial(n, n - k)),
                                            static_cast<Eigen::Index>(binomial(n, k)));
  for (std::size_t r = 0; r < map.sign.size(); ++r) {
    out(static_cast<Eigen::Index>(map.complement_rank[r]), static_cast<Eigen::Index>(r)) = map.sign[r];
  }
  return out;
}

RationalMatrix alternating_sign_matrix(int m) {
  RationalMatrix d = RationalMatrix::Zero(m, m);
  for (int i = 0; i < m; ++i) d(i, i) = i % 2 == 0 ? 1 : -1;
  return d;
}

RationalMatrix reversal_matrix(int m) {
  RationalMatrix p = RationalMatrix::Zero(m, m);
  for (int i = 0; i < m; ++i) p(i, m - 1 - i) = 1;
  return p;
}

}  // namespace ikit
