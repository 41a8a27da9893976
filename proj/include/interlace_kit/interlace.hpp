#pragma once

#include "interlace_kit/index_set.hpp"
#include "interlace_kit/spectral.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ikit {

/// A failed comparison in the subset lattice. `beta` is empty when the
/// failure concerns a single set (l(A) sign or an infinite l-value).
struct LatticeViolation {
  IndexSet alpha;
  std::optional<IndexSet> beta;
  LValue l_alpha = Infinity{};
  std::optional<LValue> l_beta;
  std::string reason;
  bool equality = false;
};

/// A named real number taking part in a failed eigenvalue comparison.
/// `value` is empty when the eigenvalue does not exist (nonreal or missing).
struct NamedRoot {
  std::string name;
  std::optional<IsolatedRoot> value;
};

/// A failed eigenvalue inequality. `index` is the deleted row/column r or k
/// (1-based) and `j` the position in the chain (1-based, 0 if not applicable).
struct RootViolation {
  int index = 0;
  int j = 0;
  std::string relation;
  std::vector<NamedRoot> values;
  std::string reason;
  bool equality = false;
};

/// The chain lambda_j > mu_j > lambda_{j+1} for one deleted index r.
struct ChainResult {
  int r = 0;
  /// Border indices are asserted; interior ones are recorded only.
  bool asserted = false;
  bool holds = false;
  std::vector<IsolatedRoot> mu;
  std::optional<RootViolation> violation;
};

struct InterlaceReport {
  std::string property;
  bool holds = true;
  std::variant<std::monostate, LatticeViolation, RootViolation> counterexample;
  /// True when the violation is an exact tie of two algebraic numbers.
  bool equality = false;
  long checked_pairs = 0;
  /// Eigenvalues of A, largest first (theorem10 and weak interlacing).
  std::vector<IsolatedRoot> eigenvalues;
  std::vector<ChainResult> chains;
};

/// INTERLACE_KIT_LATTICE_BOUND, default 10. Throws ParseError for a malformed value.
int lattice_bound();

struct TauOptions {
  /// Compare every nested pair instead of covering pairs only.
  bool all_pairs = false;
  /// Overrides lattice_bound().
  std::optional<int> bound;
};

/// l(A) >= 0 (strict: > 0), every l(A(beta)) finite, and l(A(alpha)) <= l(A(beta))
/// (strict: <) for beta = alpha minus one element. Throws DomainError when n
/// exceeds the lattice bound.
InterlaceReport verify_tau(const RationalMatrix& a, bool strict, const TauOptions& options = {});

/// lambda_1 > mu_1^(k) and mu_{n-1}^(k) > lambda_n for every k, where lambda_1,
/// lambda_n (mu_1, mu_{n-1}) are the largest and smallest real eigenvalues of A (A_k).
InterlaceReport verify_weak_interlacing(const RationalMatrix& a);

/// n positive simple eigenvalues and the chains for r = 1 and r = n; every
/// interior r is evaluated and recorded without affecting the verdict. When
/// `only_r` is set, just that chain is evaluated and asserted.
/// Throws DomainError unless A is SK.
InterlaceReport verify_theorem10(const RationalMatrix& a, std::optional<int> only_r = std::nullopt);

/// Exact minor of A - xI.
Poly lambda_minor(const RationalMatrix& a, const IndexSet& rows, const IndexSet& cols);

/// Trailing principal minors of A - xI on {k, ..., n}, k = 1..n.
std::vector<Poly> enclosed_minors(const RationalMatrix& a);

/// True when every enclosed minor is positive at alpha and has sign
/// (-1)^degree at beta, and alpha < beta.
bool bracket_valid(const RationalMatrix& a, const Rational& alpha, const Rational& beta);

/// Doubles alpha = -B, beta = B from B = 1 + max absolute row sum until the
/// bracket is valid.
std::pair<Rational, Rational> choose_alpha_beta(const RationalMatrix& a);

/// A valid bracket just outside the real roots of the enclosed minors. alpha
/// stays positive when every such root is positive.
std::pair<Rational, Rational> tight_alpha_beta(const RationalMatrix& a);

/// Products of the paired almost-principal minors of A - xI,
/// p_k = A_x({k} u {k+2..n}; {k+1..n}) * A_x({k+1..n}; {k} u {k+2..n}), k = 1..n-1.
std::vector<Poly> kotelyansky_products(const RationalMatrix& a);

struct HypothesisResult {
  bool holds = true;
  /// 1-based k of the first failing product.
  std::optional<int> failing_k;
  std::string reason;
  std::vector<Poly> products;
};

/// Each p_k is nonzero, has no root in [alpha, beta] and is positive at the
/// midpoint. Throws DomainError for an invalid bracket.
HypothesisResult check_kotelyansky_hypothesis(const RationalMatrix& a, const Rational& alpha, const Rational& beta);

struct ConclusionResult {
  bool holds = true;
  std::optional<int> failing_k;
  std::string reason;
  /// Roots of each enclosed minor, increasing.
  std::vector<std::vector<IsolatedRoot>> roots;
};

/// Every enclosed minor has real simple roots in (alpha, beta) and the roots
/// of consecutive minors strictly interlace. Throws DomainError when the
/// hypothesis does not hold on the bracket.
ConclusionResult verify_theorem9_conclusion(const RationalMatrix& a, const Rational& alpha, const Rational& beta);

/// (1, n, 2, n-1, ...) as a 0-based permutation.
std::vector<int> zigzag(int n);

struct DescartesEntry {
  IndexSet rows;
  IndexSet cols;
  Poly minor;
  int variations = 0;
};

struct DescartesResult {
  bool holds = true;
  std::vector<DescartesEntry> entries;
};

/// For every contiguous window i..j of A, the two border minors
/// A_x(i..j-1; i+1..j) and A_x(i+1..j; i..j-1) are nonzero with no sign
/// variation in their coefficients.
DescartesResult descartes_border_check(const RationalMatrix& a);

struct KotelyanskyPipeline {
  RationalMatrix matrix;
  bool zigzag_applied = false;
  Rational alpha;
  Rational beta;
  HypothesisResult hypothesis;
  std::optional<ConclusionResult> conclusion;
  bool holds() const { return hypothesis.holds && conclusion && conclusion->holds; }
};

/// Optionally conjugates by the zigzag permutation, brackets with
/// tight_alpha_beta unless a bracket is given, then checks the hypothesis and,
/// if it holds, the conclusion.
KotelyanskyPipeline run_kotelyansky_pipeline(const RationalMatrix& a, bool apply_zigzag,
                                             std::optional<std::pair<Rational, Rational>> bracket = std::nullopt);

}  // namespace ikit
