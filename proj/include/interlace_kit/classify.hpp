#pragma once

#include "interlace_kit/index_set.hpp"
#include "interlace_kit/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

namespace ikit {

enum class MatrixClass { Positive, P, TP, STP, K, SK, JS, SJS, TJS, STJS, JSK, SJSK };

inline constexpr MatrixClass kAllClasses[] = {
    MatrixClass::Positive, MatrixClass::P,   MatrixClass::TP,   MatrixClass::STP,
    MatrixClass::K,        MatrixClass::SK,  MatrixClass::JS,   MatrixClass::SJS,
    MatrixClass::TJS,      MatrixClass::STJS, MatrixClass::JSK, MatrixClass::SJSK};

std::string_view class_name(MatrixClass c);

enum class Verdict { Member, NonMember, NotApplicable };

std::string_view verdict_name(Verdict v);

/// A minor whose sign violates the class definition.
struct MinorWitness {
  IndexSet rows;
  IndexSet cols;
  Rational value;
};

/// An entry whose sign violates the class definition (0-based position).
struct EntryWitness {
  int row = 0;
  int col = 0;
  Rational value;
};

/// Why a matrix is not (strictly) J-sign-symmetric. Either a single zero entry
/// (strict case only), or a closed walk of nonzero entries whose signs
/// multiply to a negative number, which no sign vector can satisfy.
struct JsWitness {
  bool zero_entry = false;
  /// (row, col) positions. For a cycle, consecutive entries share an index
  /// and the walk returns to its start.
  std::vector<std::pair<int, int>> entries;
};

/// A failure inside a compound matrix. `principal` is the principal
/// submatrix the compound was taken of (JSK/SJSK) or the full set (TJS/STJS).
struct CompoundWitness {
  int order = 0;
  IndexSet principal;
  JsWitness inner;
};

using Witness = std::variant<MinorWitness, EntryWitness, JsWitness, CompoundWitness>;

std::string describe(const Witness& w);

/// J holds the indices with sign +1; index 0 is always in J.
struct SignPattern {
  int n = 0;
  IndexSet J;
  bool consistent = false;
};

struct Membership {
  bool member = false;
  std::optional<Witness> witness;
  std::optional<SignPattern> pattern;

  explicit operator bool() const noexcept { return member; }
};

/// Lazily computed minors of one matrix, cached by (rows, cols). n <= 32.
class MinorTable {
 public:
  explicit MinorTable(const RationalMatrix& a);
  const RationalMatrix& matrix() const noexcept { return a_; }
  const Rational& operator()(const IndexSet& rows, const IndexSet& cols);
  /// Compound of the principal submatrix on `alpha` at the given order,
  /// rows and columns lexicographic within alpha.
  RationalMatrix principal_compound(const IndexSet& alpha, int order);

 private:
  RationalMatrix a_;
  std::unordered_map<std::uint64_t, Rational> cache_;
};

/// Decides J-sign-symmetry by parity propagation over nonzero entries in
/// row-major order. The witness reports the first entry that conflicts.
Membership is_js(const RationalMatrix& a, bool strict);

Membership is_positive(const RationalMatrix& a);
Membership is_p_matrix(const RationalMatrix& a);
Membership is_k(const RationalMatrix& a);
Membership is_sk(const RationalMatrix& a);
/// Rectangular input allowed.
Membership is_tp(const RationalMatrix& a);
Membership is_stp(const RationalMatrix& a);
Membership is_tjs(const RationalMatrix& a);
Membership is_stjs(const RationalMatrix& a);
Membership is_jsk(const RationalMatrix& a);
Membership is_sjsk(const RationalMatrix& a);

Membership check_class(const RationalMatrix& a, MatrixClass c);

struct ClassResult {
  MatrixClass cls{};
  Verdict verdict = Verdict::NotApplicable;
  std::optional<Witness> witness;
  std::optional<SignPattern> pattern;
};

struct ClassReport {
  std::vector<ClassResult> results;
  /// Observations that are not errors, e.g. an SJSK matrix with a non-positive principal minor.
  std::vector<std::string> findings;

  const ClassResult& at(MatrixClass c) const;
  bool is(MatrixClass c) const { return at(c).verdict == Verdict::Member; }
};

/// Every class in kAllClasses. Non-square input gives NotApplicable except for TP/STP/Positive.
ClassReport classify(const RationalMatrix& a);

/// Re-evaluates a witness against the matrix from scratch and returns true
/// if it shows a genuine violation of class c.
bool witness_reproduces(const RationalMatrix& a, MatrixClass c, const Witness& w);

/// Almost-principal: |rows| = |cols| = m and |rows intersect cols| = m - 1.
bool is_almost_principal(const IndexSet& rows, const IndexSet& cols);

struct ObservationCheck {
  bool sk_direct = false;
  bool sk_via_compounds = false;
  bool k_direct = false;
  bool k_via_compounds = false;
  std::optional<MinorWitness> sk_direct_witness;
  std::optional<MinorWitness> sk_compound_witness;

  bool agree() const noexcept { return sk_direct == sk_via_compounds && k_direct == k_via_compounds; }
};

/// Decides K and SK both from minors and from the compounds of principal
/// submatrices (det A > 0 and every (j-1)-th compound of a j x j principal
/// submatrix positive, resp. nonnegative with positive principal minors).
ObservationCheck verify_observation_characterizations(const RationalMatrix& a);

struct ClosureResult {
  std::string transform;
  bool holds = false;
  std::optional<Witness> witness;
};

/// Checks that the transpose, D A D^-1 (random positive D from `seed`),
/// D A^-1 D (alternating signs), the reversal conjugate, every principal
/// submatrix and every Schur complement of a principal submatrix stay in
/// the class of A (SK if A is SK, else K). Throws DomainError if A is not K.
std::vector<ClosureResult> proposition1_closure_suite(const RationalMatrix& a, std::uint64_t seed = 1);

/// Checks A = D P B P^T D with B positive and B^(2) positive, where
/// D = diag(signs) and B(i, j) = (D A D)(perm[i], perm[j]).
bool verify_sign_permutation_witness(const RationalMatrix& a, const std::vector<int>& signs, const std::vector<int>& perm);

}  // namespace ikit
