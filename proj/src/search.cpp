#include "interlace_kit/search.hpp"

#include "interlace_kit/errors.hpp"

namespace ikit {

std::uint64_t sample_seed(const SearchConfig& config, long sample) {
  return derive_seed(config.seed, static_cast<std::uint64_t>(sample));
}

SearchResult search_interior_counterexample(const SearchConfig& config) {
  if (config.target != GenTarget::STP && config.target != GenTarget::SKNotSTP) {
    throw DomainError("the interior search samples SK matrices; use target stp or sk-not-stp");
  }
  if (config.sizes.empty()) throw DomainError("search needs at least one matrix size");
  for (int n : config.sizes) {
    if (n < 1) throw DomainError("matrix sizes must be positive");
  }
  SearchResult out;
  out.config = config;
  for (long i = 0; i < config.budget; ++i) {
    ++out.samples;
    GenConfig gc;
    gc.seed = sample_seed(config, i);
    gc.n = config.sizes[static_cast<std::size_t>(i) % config.sizes.size()];
    gc.target = config.target;
    RationalMatrix a;
    try {
      a = generate(gc);
    } catch (const GenerationError&) {
      ++out.skipped;
      continue;
    }
    const int n = static_cast<int>(a.rows());
    const InterlaceReport report = verify_theorem10(a);
    for (const ChainResult& c : report.chains) {
      const bool border = c.r == 1 || c.r == n;
      if (border) {
        if (!c.holds) ++out.border_failures;
        continue;
      }
      ++out.interior_chains;
      if (!c.holds && !out.hit) {
        InteriorHit hit{i, gc.seed, a, c.r, c.violation->j, *c.violation, false};
        hit.reverified = reverify_interior_hit(hit);
        if (!hit.reverified) throw Error("internal: interior violation did not re-verify");
        out.hit = std::move(hit);
      }
    }
    if (out.hit) break;
  }
  return out;
}

bool reverify_interior_hit(const InteriorHit& hit) {
  const int n = static_cast<int>(hit.matrix.rows());
  if (hit.r < 1 || hit.r > n) return false;
  Spectrum whole = spectrum(hit.matrix);
  Spectrum part = spectrum(principal_submatrix(hit.matrix, IndexSet::full(n).without(hit.r - 1)));
  if (!whole.all_real_simple()) return false;
  if (hit.j == 0) return !part.all_real_simple();
  if (!part.all_real_simple() || hit.j >= n) return false;
  IsolatedRoot& lj = whole.real_roots[static_cast<std::size_t>(hit.j - 1)];
  IsolatedRoot& lnext = whole.real_roots[static_cast<std::size_t>(hit.j)];
  IsolatedRoot& mj = part.real_roots[static_cast<std::size_t>(hit.j - 1)];
  return compare(lj, mj) <= 0 || compare(mj, lnext) <= 0;
}

}  // namespace ikit
