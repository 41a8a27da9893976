#pragma once

#include "interlace_kit/gen.hpp"
#include "interlace_kit/io.hpp"
#include "interlace_kit/matrix.hpp"

#include <boost/random/uniform_int_distribution.hpp>

namespace support {

inline ikit::RationalMatrix mat(const char* text) { return ikit::parse_matrix_text(text); }

inline ikit::Rational q(const char* s) { return ikit::parse_rational(s); }

inline ikit::RationalMatrix random_matrix(ikit::Rng& rng, int rows, int cols, int bound = 9, int max_den = 5) {
  ikit::RationalMatrix a(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) a(i, j) = ikit::random_rational(rng, -bound, bound, max_den);
  }
  return a;
}

inline ikit::RationalMatrix random_nonsingular(ikit::Rng& rng, int n) {
  for (;;) {
    ikit::RationalMatrix a = random_matrix(rng, n, n);
    if (ikit::determinant(a) != 0) return a;
  }
}

inline int random_int(ikit::Rng& rng, int lo, int hi) {
  return boost::random::uniform_int_distribution<int>(lo, hi)(rng);
}

inline ikit::RationalMatrix diagonal(const std::vector<ikit::Rational>& d) {
  const auto n = static_cast<Eigen::Index>(d.size());
  ikit::RationalMatrix m = ikit::RationalMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

}  // namespace support
