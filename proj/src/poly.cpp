#include "interlace_kit/poly.hpp"

#include "interlace_kit/errors.hpp"

#include <algorithm>
#include <utility>

namespace ikit {

Poly::Poly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly Poly::x() { return Poly(std::vector<Rational>{0, 1}); }

Poly Poly::monomial(const Rational& coefficient, std::size_t degree) {
  std::vector<Rational> c(degree + 1);
  c[degree] = coefficient;
  return Poly(std::move(c));
}

Poly Poly::from_roots(const std::vector<Rational>& roots) {
  Poly p(1);
  for (const Rational& r : roots) p *= Poly(std::vector<Rational>{-r, 1});
  return p;
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational Poly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational Poly::operator()(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

double Poly::eval_double(double at) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + to_double(*it);
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Poly(std::move(d));
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& rhs) {
  if (rhs == 0) {
    coeffs_.clear();
    return *this;
  }
  for (Rational& c : coeffs_) c *= rhs;
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (Rational& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator/=(const Poly& rhs) {
  PolyDivision qr = divmod(*this, rhs);
  if (!qr.remainder.is_zero()) throw DomainError("polynomial division is not exact");
  *this = std::move(qr.quotient);
  return *this;
}

std::string Poly::to_string(std::string_view variable) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c.sign() < 0;
    const Rational magnitude = abs_value(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = magnitude == 1;
    if (!unit || k == 0) out += ikit::to_string(magnitude);
    if (k >= 1) {
      if (!unit) out += "*";
      out += variable;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

PolyDivision divmod(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  if (dividend.degree() < divisor.degree()) return {Poly(), dividend};

  std::vector<Rational> rem = dividend.coefficients();
  const std::vector<Rational>& d = divisor.coefficients();
  const std::size_t dn = d.size() - 1;
  const Rational lead_inv = Rational(1) / d.back();
  std::vector<Rational> quot(rem.size() - dn);
  for (std::size_t k = rem.size(); k-- > dn;) {
    const Rational factor = rem[k] * lead_inv;
    quot[k - dn] = factor;
    if (factor == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) rem[k - dn + j] -= factor * d[j];
  }
  rem.resize(dn);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly normalize_leading(const Poly& p) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / abs_value(p.leading()));
}

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / p.leading());
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).remainder;
    a = std::move(b);
    b = normalize_leading(r);
  }
  return monic(a);
}

std::vector<Poly> square_free_decomposition(const Poly& p) {
  if (p.is_zero()) throw DomainError("square-free decomposition of the zero polynomial");
  std::vector<Poly> factors;
  if (p.degree() == 0) return factors;

  const Poly dp = p.derivative();
  Poly a = gcd(p, dp);
  Poly b = p / a;
  Poly c = dp / a;
  Poly d = c - b.derivative();
  while (b.degree() > 0) {
    Poly f = gcd(b, d);
    b = b / f;
    c = d / f;
    d = c - b.derivative();
    factors.push_back(monic(f));
  }
  while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
  return factors;
}

Poly square_free_part(const Poly& p) {
  if (p.is_zero()) throw DomainError("square-free part of the zero polynomial");
  if (p.degree() <= 0) return Poly(1);
  return monic(p / gcd(p, p.derivative()));
}

}  // namespace ikit
