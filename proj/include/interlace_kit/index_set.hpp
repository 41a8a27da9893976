#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace ikit {

/// Strictly increasing set of 0-based indices into [0, n).
///
/// Everything inside the library is 0-based. The 1-based convention used for
/// user-facing text (reports, CLI flags) lives only in from_one_based(),
/// one_based() and to_string().
class IndexSet {
 public:
  IndexSet() = default;
  /// Throws DomainError unless the values are strictly increasing and >= 0.
  explicit IndexSet(std::vector<int> zero_based);
  IndexSet(std::initializer_list<int> zero_based) : IndexSet(std::vector<int>(zero_based)) {}

  static IndexSet from_one_based(const std::vector<int>& one_based);
  /// {first, first + 1, ..., last - 1}.
  static IndexSet range(int first, int last);
  static IndexSet full(int n) { return range(0, n); }

  std::size_t size() const noexcept { return idx_.size(); }
  bool empty() const noexcept { return idx_.empty(); }
  int operator[](std::size_t i) const { return idx_[i]; }
  auto begin() const noexcept { return idx_.begin(); }
  auto end() const noexcept { return idx_.end(); }
  const std::vector<int>& indices() const noexcept { return idx_; }
  bool contains(int i) const;
  /// Largest element plus one, or 0 when empty.
  int bound() const noexcept { return idx_.empty() ? 0 : idx_.back() + 1; }

  IndexSet complement(int n) const;
  IndexSet with(int i) const;
  IndexSet without(int i) const;
  /// Position of i inside the set; throws DomainError if absent.
  std::size_t position(int i) const;

  std::vector<int> one_based() const;
  /// "(1,2,4)" in 1-based form; "()" for the empty set.
  std::string to_string() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  /// Lexicographic on the element sequence.
  friend auto operator<=>(const IndexSet& a, const IndexSet& b) { return a.idx_ <=> b.idx_; }

 private:
  std::vector<int> idx_;
};

IndexSet set_union(const IndexSet& a, const IndexSet& b);

std::size_t binomial(int n, int k);

/// All k-subsets of [0, n) in lexicographic order.
std::vector<IndexSet> subsets_of_size(int n, int k);

/// All nonempty subsets of [0, n), by size, then lexicographically.
std::vector<IndexSet> nonempty_subsets(int n);

/// 0-based position of s among the |s|-subsets of [0, n) in lexicographic order.
std::size_t lex_rank(const IndexSet& s, int n);
IndexSet lex_unrank(std::size_t rank, int n, int k);

}  // namespace ikit
