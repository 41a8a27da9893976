#pragma once

#include "interlace_kit/matrix.hpp"
#include "interlace_kit/roots.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace ikit {

/// det(A - xI) by Faddeev-LeVerrier. Degree n, leading coefficient (-1)^n.
Poly charpoly(const RationalMatrix& a);

/// Marks l(A) for a matrix without real eigenvalues.
struct Infinity {
  bool operator==(const Infinity&) const = default;
};

using LValue = std::variant<IsolatedRoot, Infinity>;

inline bool is_infinite(const LValue& l) { return std::holds_alternative<Infinity>(l); }

/// Three-way comparison of l-values with Infinity above every real number.
/// Refines finite values in place.
int compare(LValue& a, LValue& b);

std::string to_string(const LValue& l);

struct Spectrum {
  Poly charpoly;
  /// Distinct real eigenvalues, largest first, with pairwise disjoint intervals.
  std::vector<IsolatedRoot> real_roots;
  bool has_nonreal = false;
  LValue l_value = Infinity{};

  int real_count_with_multiplicity() const;
  /// n real eigenvalues, each of multiplicity one.
  bool all_real_simple() const;
};

Spectrum spectrum(const RationalMatrix& a);

/// Smallest real eigenvalue, or Infinity when there is none.
LValue l_of(const RationalMatrix& a);

struct PerronData {
  IsolatedRoot rho;
  /// Rational approximations of the right and left Perron vectors, largest entry 1.
  RationalVector right;
  RationalVector left;
  /// Exact sup-norm residuals |A x - r x| and |A^T y - r y| at the rational r below.
  Rational approximate_rho;
  Rational right_residual;
  Rational left_residual;
  bool right_positive = false;
  bool left_positive = false;
  bool simple = false;
  /// rho exceeds the absolute value of every other real eigenvalue.
  bool dominates_real_spectrum = false;
};

/// 10^-30.
Rational default_perron_tolerance();

/// Perron root and vectors of an entrywise positive matrix. The vectors are
/// columns (rows for the left vector) of adj(A - rI) at a rational r close
/// to rho, so the residual equals |charpoly(r)| / (largest entry) and shrinks
/// with r. Throws DomainError for a matrix that is not entrywise positive.
PerronData spectral_radius_positive(const RationalMatrix& a, const Rational& tolerance = default_perron_tolerance());

struct LowerBoundCheck {
  /// 0 != (A x - alpha x) >= 0 entrywise.
  bool premise = false;
  /// rho(A) > alpha, decided against the isolated Perron root. Set only when the premise holds.
  std::optional<bool> rho_exceeds_alpha;
};

/// Throws DomainError unless A is positive, x is nonnegative and nonzero, and alpha > 0.
LowerBoundCheck perron_lower_bound_check(const RationalMatrix& a, const RationalVector& x, const Rational& alpha);

struct RadiusBoundResult {
  bool holds = true;
  /// First principal index set whose spectral radius exceeds that of A.
  std::optional<IndexSet> witness;
  int checked = 0;
};

/// rho(A(alpha)) <= rho(A) for every nonempty proper alpha, for positive A.
RadiusBoundResult verify_submatrix_radius_bound(const RationalMatrix& a);

}  // namespace ikit
