#pragma once

#include "interlace_kit/poly.hpp"

#include <string>
#include <vector>

namespace ikit {

/// p, p', then negated remainders, each scaled to a leading coefficient of +-1.
std::vector<Poly> sturm_sequence(const Poly& p);

/// Number of distinct real roots of p in the open interval (lo, hi).
/// Throws EndpointRootError if p(lo) or p(hi) is zero, DomainError if p is zero or lo >= hi.
int sturm_count(const Poly& p, const Rational& lo, const Rational& hi);
int sturm_count(const std::vector<Poly>& sequence, const Rational& lo, const Rational& hi);

/// Number of distinct real roots of p on the whole line.
int count_real_roots(const Poly& p);

/// Sign changes in the sequence of nonzero coefficients.
int descartes_sign_variations(const Poly& p);

/// Cauchy bound: every complex root z of p has |z| < the returned value.
Rational cauchy_root_bound(const Poly& p);

/// A real algebraic number: the unique root of a square-free polynomial in
/// the closed interval [lo, hi]. When lo == hi the root is that rational and
/// refinement is a no-op; otherwise neither endpoint is a root.
class IsolatedRoot {
 public:
  IsolatedRoot(Poly square_free, Rational lo, Rational hi, int multiplicity = 1);

  const Poly& poly() const noexcept { return poly_; }
  const Rational& lo() const noexcept { return lo_; }
  const Rational& hi() const noexcept { return hi_; }
  int multiplicity() const noexcept { return multiplicity_; }
  bool is_rational() const noexcept { return lo_ == hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }
  double approx() const { return to_double(midpoint()); }

  /// Halves the interval, keeping the root inside.
  void refine();
  /// Refines until the width is at most `max_width`.
  void refine_to(const Rational& max_width);

  std::string to_string() const;

 private:
  Poly poly_;
  Rational lo_;
  Rational hi_;
  int lo_sign_ = 0;
  int multiplicity_;
};

/// All distinct real roots of p sorted increasing, intervals pairwise
/// disjoint, multiplicities taken from the square-free decomposition.
/// Throws DomainError for the zero polynomial.
std::vector<IsolatedRoot> isolate_real_roots(const Poly& p);

/// Exact three-way comparison (-1, 0, +1). Refines both arguments in place
/// until their intervals separate; equality is detected through the gcd of
/// the defining polynomials, so this always terminates.
int compare(IsolatedRoot& a, IsolatedRoot& b);
int compare(IsolatedRoot& a, const Rational& q);

/// Refines every root until all intervals are pairwise disjoint.
/// Throws EqualRootsError naming the first pair that denotes the same number.
std::vector<IsolatedRoot> refine_until_disjoint(std::vector<IsolatedRoot> roots);

}  // namespace ikit
