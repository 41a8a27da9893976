#pragma once

#include "interlace_kit/gen.hpp"
#include "interlace_kit/interlace.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ikit {

struct SearchConfig {
  std::uint64_t seed = 0;
  long budget = 0;
  /// Sample i uses sizes[i % sizes.size()].
  std::vector<int> sizes{4};
  GenTarget target = GenTarget::STP;
};

/// Sample i is generated from derive_seed(config.seed, i).
std::uint64_t sample_seed(const SearchConfig& config, long sample);

struct InteriorHit {
  long sample = 0;
  std::uint64_t seed = 0;
  RationalMatrix matrix;
  /// 1-based deleted index and chain position (j = 0 when the submatrix
  /// spectrum is not real and simple).
  int r = 0;
  int j = 0;
  RootViolation violation;
  bool reverified = false;
};

struct SearchResult {
  SearchConfig config;
  std::optional<InteriorHit> hit;
  long samples = 0;
  /// Samples the generator could not produce within its attempt budget.
  long skipped = 0;
  long interior_chains = 0;
  /// Border chains that failed. Always zero on SK input.
  long border_failures = 0;
};

/// Samples matrices of config.target, evaluates every interior chain
/// lambda_j > mu_j^(r) > lambda_{j+1}, and stops at the first violation,
/// which is re-verified from scratch before being returned.
SearchResult search_interior_counterexample(const SearchConfig& config);

/// Recomputes both spectra and confirms the recorded violation exactly.
bool reverify_interior_hit(const InteriorHit& hit);

}  // namespace ikit
