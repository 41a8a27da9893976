#include "interlace_kit/gen.hpp"

#include "interlace_kit/io.hpp"

#include <boost/random/uniform_int_distribution.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace ikit {
namespace {

constexpr const char* kExample1 =
    "3   2 1 0.6\n"
    "2   3 2 1\n"
    "1   2 3 2\n"
    "0.6 1 2 3\n";

constexpr const char* kExample2 =
    "5.6 1.2 0.7 0.5\n"
    "6.6 6.2 4.1 8.1\n"
    "4.4 4.4 3.5 8\n"
    "1   3.8 3.4 9\n";

constexpr const char* kExample3 =
    "7   8   7 3\n"
    "4.5 8   4 4\n"
    "3.5 3   9 4\n"
    "2.5 5.5 8 7\n";

int uniform(Rng& rng, int lo, int hi) { return boost::random::uniform_int_distribution<int>(lo, hi)(rng); }

RationalMatrix unit_lower(int n, int i, const Rational* entries) {
  RationalMatrix f = RationalMatrix::Identity(n, n);
  for (int r = i; r < n; ++r) f(r, r - 1) = entries[r - i];
  return f;
}

void require_positive(const std::vector<Rational>& v, std::size_t expected, const char* what) {
  if (v.size() != expected) throw DomainError(std::string(what) + " has the wrong length");
  for (const Rational& x : v) {
    if (x.sign() <= 0) throw DomainError(std::string(what) + " entries must be positive");
  }
}

}  // namespace

std::string_view target_name(GenTarget t) {
  switch (t) {
    case GenTarget::Positive: return "positive";
    case GenTarget::STP: return "stp";
    case GenTarget::SKNotSTP: return "sk-not-stp";
    case GenTarget::SJSKConjugated: return "sjsk-conjugated";
    case GenTarget::Arbitrary: return "arbitrary";
  }
  return "?";
}

GenTarget parse_target(std::string_view name) {
  for (GenTarget t : {GenTarget::Positive, GenTarget::STP, GenTarget::SKNotSTP, GenTarget::SJSKConjugated,
                      GenTarget::Arbitrary}) {
    if (target_name(t) == name) return t;
  }
  throw ParseError("unknown generator target '" + std::string(name) + "'");
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rational random_rational(Rng& rng, int num_lo, int num_hi, int max_den) {
  const int num = uniform(rng, num_lo, num_hi);
  const int den = uniform(rng, 1, std::max(1, max_den));
  return Rational(num, den);
}

RationalMatrix example1() { return parse_matrix_text(kExample1); }
RationalMatrix example2() { return parse_matrix_text(kExample2); }
RationalMatrix example3() { return parse_matrix_text(kExample3); }

RationalMatrix stp_from_parameters(int n, const BidiagonalParameters& params) {
  if (n < 1) throw DomainError("STP construction needs n >= 1");
  const auto half = static_cast<std::size_t>(n * (n - 1) / 2);
  require_positive(params.lower, half, "lower factor parameters");
  require_positive(params.upper, half, "upper factor parameters");
  require_positive(params.diagonal, static_cast<std::size_t>(n), "diagonal parameters");

  RationalMatrix a = RationalMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = params.diagonal[static_cast<std::size_t>(i)];
  std::size_t offset = 0;
  for (int i = 1; i < n; ++i) {
    a = unit_lower(n, i, params.lower.data() + offset) * a;
    RationalMatrix g = unit_lower(n, i, params.upper.data() + offset).transpose();
    a = a * g;
    offset += static_cast<std::size_t>(n - i);
  }
  return a;
}

RationalMatrix gen_stp(const GenConfig& config) {
  if (config.n < 1) throw DomainError("n must be at least 1");
  Rng rng(config.seed);
  const int n = config.n;
  const auto half = static_cast<std::size_t>(n * (n - 1) / 2);
  BidiagonalParameters p;
  for (std::size_t i = 0; i < half; ++i) p.lower.push_back(random_rational(rng, 1, 10, config.max_denominator));
  for (int i = 0; i < n; ++i) p.diagonal.push_back(random_rational(rng, 1, 10, config.max_denominator));
  for (std::size_t i = 0; i < half; ++i) p.upper.push_back(random_rational(rng, 1, 10, config.max_denominator));
  RationalMatrix a = stp_from_parameters(n, p);
  if (!is_stp(a).member) throw GenerationError("bidiagonal product failed the STP check");
  return a;
}

RationalMatrix sk_from_profile(const std::vector<Rational>& t, const Rational& corner) {
  const int n = static_cast<int>(t.size());
  if (n < 2) throw DomainError("profile needs at least two entries");
  RationalMatrix a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = t[static_cast<std::size_t>(std::abs(i - j))];
  }
  a(0, n - 1) = corner;
  a(n - 1, 0) = corner;
  return a;
}

std::optional<RationalMatrix> scan_corner(const std::vector<Rational>& t, int steps) {
  const std::size_t n = t.size();
  if (n < 2 || steps < 1) throw DomainError("corner scan needs n >= 2 and steps >= 1");
  const Rational& lo = t[n - 1];
  const Rational& hi = t[n - 2];
  for (int j = steps; j >= 0; --j) {
    RationalMatrix a = sk_from_profile(t, lo + (hi - lo) * Rational(j, steps));
    if (is_sk(a).member && !is_stp(a).member) return a;
  }
  return std::nullopt;
}

SkNotStp gen_sk_not_stp(const GenConfig& config) {
  if (config.n < 4) return SkNotStp{gen_stp(config), std::nullopt};
  Rng rng(config.seed);
  const int n = config.n;
  for (int attempt = 0; attempt < config.attempt_budget; ++attempt) {
    const Rational q(uniform(rng, 10, 16), 20);
    const Rational s(uniform(rng, 1, 5));
    std::vector<Rational> t;
    for (int k = 0; k < n; ++k) {
      Rational power = 1;
      for (int e = 0; e < k * k; ++e) power *= q;
      t.push_back(s * power);
    }
    std::optional<RationalMatrix> base = scan_corner(t, 40);
    if (!base) continue;

    std::vector<Rational> d;
    for (int i = 0; i < n; ++i) d.push_back(Rational(uniform(rng, 1, 3)));
    std::vector<int> identity(static_cast<std::size_t>(n));
    std::iota(identity.begin(), identity.end(), 0);
    RationalMatrix a = conjugate(*base, identity, d);

    Membership stp = is_stp(a);
    if (!is_sk(a).member || stp.member) throw GenerationError("diagonal similarity changed the SK/STP verdict");
    return SkNotStp{std::move(a), std::get<MinorWitness>(*stp.witness)};
  }
  throw GenerationError("no SK matrix outside STP found within " + std::to_string(config.attempt_budget) +
                        " profiles");
}

RationalMatrix conjugate(const RationalMatrix& a, const std::vector<int>& perm, const std::vector<Rational>& d) {
  const int n = static_cast<int>(a.rows());
  if (a.rows() != a.cols()) throw DomainError("conjugate needs a square matrix");
  if (static_cast<int>(d.size()) != n) throw DomainError("diagonal size mismatch");
  for (const Rational& x : d) {
    if (x == 0) throw DomainError("singular diagonal in conjugation");
  }
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i) {
    if (sorted.size() != static_cast<std::size_t>(n) || sorted[static_cast<std::size_t>(i)] != i) {
      throw DomainError("invalid permutation");
    }
  }
  RationalMatrix b(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) b(i, j) = d[static_cast<std::size_t>(i)] * a(i, j) / d[static_cast<std::size_t>(j)];
  }
  return permute_symmetric(b, perm);
}

std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(uniform(rng, 0, i))]);
  return p;
}

std::vector<Rational> random_sign_diagonal(Rng& rng, int n) {
  std::vector<Rational> d;
  for (int i = 0; i < n; ++i) d.push_back(Rational(uniform(rng, 0, 1) == 0 ? -1 : 1));
  return d;
}

RationalMatrix gen_sjsk_conjugated(const GenConfig& config) {
  GenConfig inner = config;
  inner.seed = derive_seed(config.seed, 0);
  const RationalMatrix base = gen_sk_not_stp(inner).matrix;
  Rng rng(derive_seed(config.seed, 1));
  const std::vector<int> perm = random_permutation(rng, config.n);
  const std::vector<Rational> d = random_sign_diagonal(rng, config.n);
  return conjugate(base, perm, d);
}

RationalMatrix gen_positive(const GenConfig& config) {
  if (config.n < 1) throw DomainError("n must be at least 1");
  Rng rng(config.seed);
  RationalMatrix a(config.n, config.n);
  for (int i = 0; i < config.n; ++i) {
    for (int j = 0; j < config.n; ++j) a(i, j) = random_rational(rng, 1, config.entry_bound, config.max_denominator);
  }
  return a;
}

RationalMatrix gen_arbitrary(const GenConfig& config) {
  if (config.n < 1) throw DomainError("n must be at least 1");
  Rng rng(config.seed);
  RationalMatrix a(config.n, config.n);
  for (int i = 0; i < config.n; ++i) {
    for (int j = 0; j < config.n; ++j) {
      a(i, j) = random_rational(rng, -config.entry_bound, config.entry_bound, config.max_denominator);
    }
  }
  return a;
}

RationalMatrix generate(const GenConfig& config) {
  switch (config.target) {
    case GenTarget::Positive: return gen_positive(config);
    case GenTarget::STP: return gen_stp(config);
    case GenTarget::SKNotSTP: return gen_sk_not_stp(config).matrix;
    case GenTarget::SJSKConjugated: return gen_sjsk_conjugated(config);
    case GenTarget::Arbitrary: return gen_arbitrary(config);
  }
  throw DomainError("unknown generator target");
}

}  // namespace ikit
