#include "interlace_kit/spectral.hpp"

#include "interlace_kit/errors.hpp"

#include <algorithm>

namespace ikit {
namespace {

void require_square(const RationalMatrix& a, const char* what) {
  if (a.rows() != a.cols()) throw DomainError(std::string(what) + " needs a square matrix");
}

bool entrywise_positive(const RationalMatrix& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j).sign() <= 0) return false;
    }
  }
  return a.size() > 0;
}

RationalMatrix drop(const RationalMatrix& m, Eigen::Index row, Eigen::Index col) {
  const Eigen::Index n = m.rows();
  RationalMatrix out(n - 1, n - 1);
  for (Eigen::Index i = 0, r = 0; i < n; ++i) {
    if (i == row) continue;
    for (Eigen::Index j = 0, c = 0; j < n; ++j) {
      if (j == col) continue;
      out(r, c++) = m(i, j);
    }
    ++r;
  }
  return out;
}

// First column of adj(m), scaled so its largest entry in absolute value is 1.
RationalVector adjugate_column(const RationalMatrix& m) {
  const Eigen::Index n = m.rows();
  RationalVector v(n);
  if (n == 1) {
    v(0) = 1;
    return v;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    const Rational cof = determinant(drop(m, 0, i));
    v(i) = (i % 2 == 0) ? cof : Rational(-cof);
  }
  Rational pivot = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (abs_value(v(i)) > abs_value(pivot)) pivot = v(i);
  }
  if (pivot == 0) return v;
  return v / pivot;
}

Rational residual(const RationalMatrix& a, const RationalVector& x, const Rational& r) {
  const RationalVector d = a * x - x * r;
  Rational out = 0;
  for (Eigen::Index i = 0; i < d.size(); ++i) out = std::max(out, abs_value(d(i)));
  return out;
}

bool all_positive(const RationalVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i).sign() <= 0) return false;
  }
  return true;
}

}  // namespace

Poly charpoly(const RationalMatrix& a) {
  require_square(a, "charpoly");
  const int n = static_cast<int>(a.rows());
  // c[k] is the coefficient of x^k in det(xI - A).
  std::vector<Rational> c(static_cast<std::size_t>(n + 1));
  c[static_cast<std::size_t>(n)] = 1;
  RationalMatrix m = RationalMatrix::Zero(n, n);
  for (int k = 1; k <= n; ++k) {
    m = a * m;
    for (int i = 0; i < n; ++i) m(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    const RationalMatrix am = a * m;
    c[static_cast<std::size_t>(n - k)] = -am.trace() / k;
  }
  const Poly p(c);
  return n % 2 == 0 ? p : -p;
}

int compare(LValue& a, LValue& b) {
  const bool ia = is_infinite(a), ib = is_infinite(b);
  if (ia || ib) return ia == ib ? 0 : (ia ? 1 : -1);
  return compare(std::get<IsolatedRoot>(a), std::get<IsolatedRoot>(b));
}

std::string to_string(const LValue& l) {
  if (is_infinite(l)) return "inf";
  return std::get<IsolatedRoot>(l).to_string();
}

int Spectrum::real_count_with_multiplicity() const {
  int total = 0;
  for (const IsolatedRoot& r : real_roots) total += r.multiplicity();
  return total;
}

bool Spectrum::all_real_simple() const {
  return !has_nonreal && static_cast<int>(real_roots.size()) == charpoly.degree();
}

Spectrum spectrum(const RationalMatrix& a) {
  Spectrum s;
  s.charpoly = charpoly(a);
  if (a.rows() == 0) return s;
  s.real_roots = isolate_real_roots(s.charpoly);
  std::reverse(s.real_roots.begin(), s.real_roots.end());
  s.has_nonreal = s.real_count_with_multiplicity() < s.charpoly.degree();
  if (!s.real_roots.empty()) s.l_value = s.real_roots.back();
  return s;
}

LValue l_of(const RationalMatrix& a) { return spectrum(a).l_value; }

Rational default_perron_tolerance() {
  Integer ten = 1;
  for (int i = 0; i < 30; ++i) ten *= 10;
  return Rational(Integer(1), ten);
}

PerronData spectral_radius_positive(const RationalMatrix& a, const Rational& tolerance) {
  require_square(a, "spectral_radius_positive");
  if (!entrywise_positive(a)) {
    throw DomainError("spectral_radius_positive needs an entrywise positive matrix; use spectrum() for real roots");
  }
  if (tolerance.sign() <= 0) throw DomainError("tolerance must be positive");
  Spectrum s = spectrum(a);
  IsolatedRoot rho = s.real_roots.front();
  const Eigen::Index n = a.rows();

  bool dominates = true;
  for (std::size_t i = 1; i < s.real_roots.size(); ++i) {
    IsolatedRoot& other = s.real_roots[i];
    // Negating the defining polynomial's argument gives -other.
    std::vector<Rational> coeffs = other.poly().coefficients();
    for (std::size_t k = 1; k < coeffs.size(); k += 2) coeffs[k] = -coeffs[k];
    IsolatedRoot negated(Poly(coeffs), -other.hi(), -other.lo(), other.multiplicity());
    if (compare(rho, negated) <= 0) dominates = false;
  }

  PerronData out{rho, {}, {}, {}, {}, {}, false, false, rho.multiplicity() == 1, dominates};
  const RationalMatrix at = a.transpose();
  for (;;) {
    const Rational r = out.rho.midpoint();
    const RationalMatrix shifted = a - RationalMatrix::Identity(n, n) * r;
    out.right = adjugate_column(shifted);
    out.left = adjugate_column(RationalMatrix(shifted.transpose()));
    out.right_residual = residual(a, out.right, r);
    out.left_residual = residual(at, out.left, r);
    out.approximate_rho = r;
    if (out.right_residual <= tolerance && out.left_residual <= tolerance) break;
    out.rho.refine_to(out.rho.width() * pow2_inverse(16));
  }
  out.right_positive = all_positive(out.right);
  out.left_positive = all_positive(out.left);
  return out;
}

LowerBoundCheck perron_lower_bound_check(const RationalMatrix& a, const RationalVector& x, const Rational& alpha) {
  require_square(a, "perron_lower_bound_check");
  if (!entrywise_positive(a)) throw DomainError("perron_lower_bound_check needs an entrywise positive matrix");
  if (x.size() != a.rows()) throw DomainError("vector size mismatch");
  bool nonzero = false;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x(i).sign() < 0) throw DomainError("x must be nonnegative");
    if (x(i).sign() > 0) nonzero = true;
  }
  if (!nonzero) throw DomainError("x must be nonzero");
  if (alpha.sign() <= 0) throw DomainError("alpha must be positive");

  const RationalVector d = a * x - x * alpha;
  LowerBoundCheck out;
  out.premise = true;
  bool any_positive = false;
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    if (d(i).sign() < 0) out.premise = false;
    if (d(i).sign() > 0) any_positive = true;
  }
  out.premise = out.premise && any_positive;
  if (out.premise) {
    IsolatedRoot rho = spectrum(a).real_roots.front();
    out.rho_exceeds_alpha = compare(rho, alpha) > 0;
  }
  return out;
}

RadiusBoundResult verify_submatrix_radius_bound(const RationalMatrix& a) {
  require_square(a, "verify_submatrix_radius_bound");
  if (!entrywise_positive(a)) throw DomainError("verify_submatrix_radius_bound needs an entrywise positive matrix");
  const int n = static_cast<int>(a.rows());
  IsolatedRoot rho = spectrum(a).real_roots.front();
  RadiusBoundResult out;
  for (const IndexSet& alpha : nonempty_subsets(n)) {
    if (static_cast<int>(alpha.size()) == n) continue;
    IsolatedRoot sub = spectrum(principal_submatrix(a, alpha)).real_roots.front();
    ++out.checked;
    if (compare(sub, rho) > 0) {
      out.holds = false;
      out.witness = alpha;
      return out;
    }
  }
  return out;
}

}  // namespace ikit
