#pragma once

#include "interlace_kit/classify.hpp"
#include "interlace_kit/matrix.hpp"

#include <boost/random/mersenne_twister.hpp>

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace ikit {

using Rng = boost::random::mt19937_64;

enum class GenTarget { Positive, STP, SKNotSTP, SJSKConjugated, Arbitrary };

std::string_view target_name(GenTarget t);
/// Throws ParseError for an unknown name.
GenTarget parse_target(std::string_view name);

struct GenConfig {
  std::uint64_t seed = 0;
  int n = 4;
  /// Numerator bound for Positive and Arbitrary entries.
  int entry_bound = 10;
  int max_denominator = 10;
  GenTarget target = GenTarget::STP;
  /// Profiles tried by gen_sk_not_stp before giving up.
  int attempt_budget = 64;
};

/// Independent 64-bit seed for the index-th sample of a run (splitmix64 mix).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform num/den with num in [num_lo, num_hi], den in [1, max_den].
Rational random_rational(Rng& rng, int num_lo, int num_hi, int max_den);

RationalMatrix example1();
RationalMatrix example2();
RationalMatrix example3();

/// Parameters of A = F_{n-1} ... F_1 D G_1 ... G_{n-1}. F_i is unit lower
/// bidiagonal with free subdiagonal entries in rows i..n-1 (0-based), G_i is
/// its upper analogue; `lower` and `upper` list F_1's entries first, each
/// n(n-1)/2 long, and `diagonal` has n entries. All must be positive.
struct BidiagonalParameters {
  std::vector<Rational> lower;
  std::vector<Rational> diagonal;
  std::vector<Rational> upper;
};

RationalMatrix stp_from_parameters(int n, const BidiagonalParameters& params);

/// Random positive parameters, product checked with is_stp before returning.
RationalMatrix gen_stp(const GenConfig& config);

/// Symmetric Toeplitz matrix a(i, j) = t[|i - j|] with the two corner entries
/// (1, n) and (n, 1) replaced by `corner`.
RationalMatrix sk_from_profile(const std::vector<Rational>& t, const Rational& corner);

/// Scans corner = t[n-1] + (t[n-2] - t[n-1]) * j / steps for j = steps .. 0
/// and returns the first matrix that is SK and not STP.
std::optional<RationalMatrix> scan_corner(const std::vector<Rational>& t, int steps);

struct SkNotStp {
  RationalMatrix matrix;
  /// Negative minor proving the matrix is not STP; empty when n < 4 fell back to gen_stp.
  std::optional<MinorWitness> negative_minor;
};

/// Gaussian Toeplitz profile t_k = s q^(k^2) with a scanned corner, then a
/// random positive diagonal similarity. Throws GenerationError when the
/// attempt budget runs out.
SkNotStp gen_sk_not_stp(const GenConfig& config);

/// P D A D^-1 P^-1 with result(i, j) = (D A D^-1)(perm[i], perm[j]).
/// Throws DomainError for a zero diagonal entry or an invalid permutation.
RationalMatrix conjugate(const RationalMatrix& a, const std::vector<int>& perm, const std::vector<Rational>& d);

std::vector<int> random_permutation(Rng& rng, int n);
std::vector<Rational> random_sign_diagonal(Rng& rng, int n);

/// SK instance (SK-not-STP for n >= 4, STP below) conjugated by a random
/// permutation and sign diagonal.
RationalMatrix gen_sjsk_conjugated(const GenConfig& config);

RationalMatrix gen_positive(const GenConfig& config);
RationalMatrix gen_arbitrary(const GenConfig& config);

RationalMatrix generate(const GenConfig& config);

}  // namespace ikit
