#pragma once

// Helpers shared by the interlacing tests and the acceptance suite: a seeded
// SK corpus, a grid sign sampler for the paired-minor products and a float
// root finder.

#include "oracle.hpp"

#include "interlace_kit/gen.hpp"
#include "interlace_kit/interlace.hpp"
#include "interlace_kit/roots.hpp"

#include <vector>

namespace sampler {

using ikit::Poly;
using ikit::Rational;
using ikit::RationalMatrix;

inline std::vector<RationalMatrix> sk_corpus(int count) {
  std::vector<RationalMatrix> out{ikit::example1()};
  for (int seed = 0; static_cast<int>(out.size()) < count; ++seed) {
    ikit::GenConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(seed);
    cfg.n = 2 + seed % 5;
    cfg.target = seed % 3 == 0 ? ikit::GenTarget::STP : ikit::GenTarget::SKNotSTP;
    out.push_back(ikit::generate(cfg));
  }
  return out;
}

// Products of the paired minors evaluated exactly at a rational point with the
// oracle's Laplace expansion.
inline std::vector<Rational> products_at(const RationalMatrix& a, const Rational& t) {
  const int n = static_cast<int>(a.rows());
  RationalMatrix s = a;
  for (int i = 0; i < n; ++i) s(i, i) -= t;
  const oracle::Dense d = oracle::to_dense(s);
  std::vector<Rational> out;
  for (int k = 0; k + 1 < n; ++k) {
    std::vector<int> with_k{k}, shifted;
    for (int i = k + 2; i < n; ++i) with_k.push_back(i);
    for (int i = k + 1; i < n; ++i) shifted.push_back(i);
    out.push_back(oracle::minor_of(d, with_k, shifted) * oracle::minor_of(d, shifted, with_k));
  }
  return out;
}

// Grid sampler with `points` equally spaced points, endpoints included.
// Returns the first 1-based k whose product is not positive at a grid point, or 0.
inline int grid_failure(const RationalMatrix& a, const Rational& alpha, const Rational& beta, int points = 1000) {
  for (int i = 0; i < points; ++i) {
    const Rational t = alpha + (beta - alpha) * Rational(i, points - 1);
    const std::vector<Rational> p = products_at(a, t);
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (p[k].sign() <= 0) return static_cast<int>(k) + 1;
    }
  }
  return 0;
}

// True when every root of p in [lo, hi] has even multiplicity, so p never changes sign there.
inline bool only_even_roots_in(const Poly& p, const Rational& lo, const Rational& hi) {
  const std::vector<Poly> factors = ikit::square_free_decomposition(p);
  for (std::size_t m = 0; m < factors.size(); m += 2) {
    const Poly& f = factors[m];
    if (f.degree() < 1) continue;
    if (f.sign_at(lo) == 0 || f.sign_at(hi) == 0 || ikit::sturm_count(f, lo, hi) > 0) return false;
  }
  return true;
}

inline std::vector<double> float_roots(const Poly& p) {
  // Companion matrix of the monic polynomial.
  const Poly m = ikit::monic(p);
  const int d = m.degree();
  RationalMatrix c = RationalMatrix::Zero(d, d);
  for (int i = 1; i < d; ++i) c(i, i - 1) = 1;
  for (int i = 0; i < d; ++i) c(i, d - 1) = -m.coefficient(static_cast<std::size_t>(i));
  return oracle::float_real_eigenvalues(c);
}

}  // namespace sampler
