#include "interlace_kit/roots.hpp"

#include "interlace_kit/errors.hpp"

#include <algorithm>
#include <utility>

namespace ikit {
namespace {

int variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int variations_at(const std::vector<Poly>& sequence, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(sequence.size());
  for (const Poly& q : sequence) signs.push_back(q.sign_at(x));
  return variations(signs);
}

int variations_at_infinity(const std::vector<Poly>& sequence, bool positive) {
  std::vector<int> signs;
  signs.reserve(sequence.size());
  for (const Poly& q : sequence) {
    int s = q.leading().sign();
    if (!positive && q.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return variations(signs);
}

// A point strictly inside (lo, hi) that is not a root of p.
Rational split_point(const Poly& p, const Rational& lo, const Rational& hi) {
  for (int den = 2;; ++den) {
    for (int num = den / 2; num >= 1; --num) {
      for (int k : {num, den - num}) {
        Rational m = lo + (hi - lo) * Rational(k, den);
        if (p.sign_at(m) != 0) return m;
      }
    }
  }
}

void isolate_square_free(const Poly& f, const std::vector<Poly>& sequence, const Rational& lo,
                         const Rational& hi, int multiplicity, std::vector<IsolatedRoot>& out) {
  const int count = sturm_count(sequence, lo, hi);
  if (count == 0) return;
  if (count == 1) {
    out.emplace_back(f, lo, hi, multiplicity);
    return;
  }
  const Rational mid = split_point(f, lo, hi);
  isolate_square_free(f, sequence, lo, mid, multiplicity, out);
  isolate_square_free(f, sequence, mid, hi, multiplicity, out);
}

bool has_root_in_closed(const Poly& g, const Rational& lo, const Rational& hi) {
  if (g.sign_at(lo) == 0 || g.sign_at(hi) == 0) return true;
  if (lo == hi) return false;
  return sturm_count(g, lo, hi) > 0;
}

}  // namespace

std::vector<Poly> sturm_sequence(const Poly& p) {
  if (p.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
  std::vector<Poly> seq{normalize_leading(p)};
  Poly next = normalize_leading(p.derivative());
  while (!next.is_zero()) {
    seq.push_back(next);
    next = normalize_leading(-divmod(seq[seq.size() - 2], seq.back()).remainder);
  }
  return seq;
}

int sturm_count(const std::vector<Poly>& sequence, const Rational& lo, const Rational& hi) {
  if (sequence.empty()) throw DomainError("empty Sturm sequence");
  if (!(lo < hi)) throw DomainError("sturm_count needs lo < hi");
  if (sequence.front().sign_at(lo) == 0 || sequence.front().sign_at(hi) == 0) {
    throw EndpointRootError("interval endpoint is a root");
  }
  return variations_at(sequence, lo) - variations_at(sequence, hi);
}

int sturm_count(const Poly& p, const Rational& lo, const Rational& hi) {
  return sturm_count(sturm_sequence(p), lo, hi);
}

int count_real_roots(const Poly& p) {
  const std::vector<Poly> seq = sturm_sequence(p);
  return variations_at_infinity(seq, false) - variations_at_infinity(seq, true);
}

int descartes_sign_variations(const Poly& p) {
  if (p.is_zero()) throw DomainError("sign variations of the zero polynomial");
  std::vector<int> signs;
  for (const Rational& c : p.coefficients()) signs.push_back(c.sign());
  return variations(signs);
}

Rational cauchy_root_bound(const Poly& p) {
  if (p.is_zero()) throw DomainError("root bound of the zero polynomial");
  const Rational lead = abs_value(p.leading());
  Rational worst = 0;
  for (int i = 0; i < p.degree(); ++i) worst = std::max(worst, abs_value(p.coefficient(i)) / lead);
  return worst + 1;
}

IsolatedRoot::IsolatedRoot(Poly square_free, Rational lo, Rational hi, int multiplicity)
    : poly_(std::move(square_free)), lo_(std::move(lo)), hi_(std::move(hi)), multiplicity_(multiplicity) {
  if (hi_ < lo_) throw DomainError("isolating interval with hi < lo");
  if (multiplicity_ < 1) throw DomainError("root multiplicity must be positive");
  lo_sign_ = poly_.sign_at(lo_);
  if (lo_ == hi_) {
    if (lo_sign_ != 0) throw DomainError("degenerate interval is not a root");
  } else if (lo_sign_ == 0 || poly_.sign_at(hi_) == 0) {
    throw DomainError("isolating interval endpoint is a root");
  }
}

void IsolatedRoot::refine() {
  if (is_rational()) return;
  Rational mid = midpoint();
  const int s = poly_.sign_at(mid);
  if (s == 0) {
    lo_ = mid;
    hi_ = std::move(mid);
    lo_sign_ = 0;
  } else if (s == lo_sign_) {
    lo_ = std::move(mid);
  } else {
    hi_ = std::move(mid);
  }
}

void IsolatedRoot::refine_to(const Rational& max_width) {
  while (width() > max_width) refine();
}

std::string IsolatedRoot::to_string() const {
  return "[" + ikit::to_string(lo_) + ", " + ikit::to_string(hi_) + "]";
}

std::vector<IsolatedRoot> isolate_real_roots(const Poly& p) {
  if (p.is_zero()) throw DomainError("cannot isolate roots of the zero polynomial");
  std::vector<IsolatedRoot> roots;
  const std::vector<Poly> factors = square_free_decomposition(p);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const Poly& f = factors[i];
    if (f.degree() < 1) continue;
    if (f.degree() == 1) {
      const Rational r = -f.coefficient(0) / f.coefficient(1);
      roots.emplace_back(f, r, r, static_cast<int>(i + 1));
      continue;
    }
    const Rational bound = cauchy_root_bound(f);
    isolate_square_free(f, sturm_sequence(f), -bound, bound, static_cast<int>(i + 1), roots);
  }
  roots = refine_until_disjoint(std::move(roots));
  std::sort(roots.begin(), roots.end(),
            [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.hi() < b.lo(); });
  return roots;
}

int compare(IsolatedRoot& a, IsolatedRoot& b) {
  bool gcd_checked = false;
  for (;;) {
    if (a.hi() < b.lo()) return -1;
    if (b.hi() < a.lo()) return 1;
    if (a.is_rational() && b.is_rational()) return 0;
    if (!gcd_checked) {
      gcd_checked = true;
      const Poly g = gcd(a.poly(), b.poly());
      if (g.degree() >= 1) {
        const Rational lo = std::max(a.lo(), b.lo());
        const Rational hi = std::min(a.hi(), b.hi());
        if (has_root_in_closed(g, lo, hi)) return 0;
      }
    }
    if (a.width() >= b.width()) {
      a.refine();
    } else {
      b.refine();
    }
  }
}

int compare(IsolatedRoot& a, const Rational& q) {
  if (a.poly().sign_at(q) == 0 && a.lo() <= q && q <= a.hi()) return 0;
  while (a.lo() <= q && q <= a.hi()) a.refine();
  return q < a.lo() ? 1 : -1;
}

std::vector<IsolatedRoot> refine_until_disjoint(std::vector<IsolatedRoot> roots) {
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (compare(roots[i], roots[j]) == 0) throw EqualRootsError(i, j);
    }
  }
  return roots;
}

}  // namespace ikit
