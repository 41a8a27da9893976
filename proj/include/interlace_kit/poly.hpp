#pragma once

#include "interlace_kit/rational.hpp"

#include <Eigen/Core>

#include <string>
#include <string_view>
#include <vector>

namespace ikit {

/// Univariate polynomial over Rational. coefficients()[i] multiplies x^i; the
/// highest stored coefficient is nonzero, so the zero polynomial stores nothing.
class Poly {
 public:
  Poly() = default;
  Poly(int constant) : Poly(Rational(constant)) {}  // NOLINT(google-explicit-constructor): Eigen builds Scalar(0)
  Poly(const Rational& constant);                   // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rational> coefficients);

  static Poly x();
  static Poly monomial(const Rational& coefficient, std::size_t degree);
  /// Product of (x - r) over the given roots.
  static Poly from_roots(const std::vector<Rational>& roots);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(std::size_t power) const;
  /// Zero for the zero polynomial.
  Rational leading() const;

  Rational operator()(const Rational& at) const;
  int sign_at(const Rational& at) const { return (*this)(at).sign(); }
  double eval_double(double at) const;

  Poly derivative() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rational& rhs);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Poly& rhs) { return lhs *= rhs; }
  friend Poly operator*(Poly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Poly operator*(const Rational& lhs, Poly rhs) { return rhs *= lhs; }
  Poly operator-() const;
  /// Exact division; the divisor must divide this polynomial.
  Poly& operator/=(const Poly& rhs);
  friend Poly operator/(Poly lhs, const Poly& rhs) { return lhs /= rhs; }

  friend bool operator==(const Poly& lhs, const Poly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }
  friend bool operator!=(const Poly& lhs, const Poly& rhs) { return !(lhs == rhs); }

  std::string to_string(std::string_view variable = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division over Q. Throws DomainError when the divisor is zero.
PolyDivision divmod(const Poly& dividend, const Poly& divisor);

/// Scales by 1/|leading| so the leading coefficient is +1 or -1. Signs at every
/// point are preserved, which is all Sturm chains need.
Poly normalize_leading(const Poly& p);
Poly monic(const Poly& p);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

/// Yun's algorithm: returns f_1, ..., f_m with p = c * f_1 * f_2^2 * ... * f_m^m,
/// each f_i monic, square-free and pairwise coprime (some may be 1).
std::vector<Poly> square_free_decomposition(const Poly& p);
Poly square_free_part(const Poly& p);

}  // namespace ikit

namespace Eigen {

template <>
struct NumTraits<ikit::Poly> : GenericNumTraits<ikit::Poly> {
  using Real = ikit::Poly;
  using NonInteger = ikit::Poly;
  using Nested = ikit::Poly;
  using Literal = ikit::Poly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 64
  };
};

}  // namespace Eigen
