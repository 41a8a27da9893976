#include "interlace_kit/index_set.hpp"

#include "interlace_kit/errors.hpp"

#include <algorithm>
#include <iterator>
#include <utility>

namespace ikit {

IndexSet::IndexSet(std::vector<int> zero_based) : idx_(std::move(zero_based)) {
  for (std::size_t i = 0; i < idx_.size(); ++i) {
    if (idx_[i] < 0) throw DomainError("negative index in index set");
    if (i > 0 && idx_[i - 1] >= idx_[i]) throw DomainError("index set must be strictly increasing");
  }
}

IndexSet IndexSet::from_one_based(const std::vector<int>& one_based) {
  std::vector<int> v;
  v.reserve(one_based.size());
  for (int i : one_based) {
    if (i < 1) throw DomainError("1-based index must be at least 1");
    v.push_back(i - 1);
  }
  return IndexSet(std::move(v));
}

IndexSet IndexSet::range(int first, int last) {
  std::vector<int> v;
  for (int i = first; i < last; ++i) v.push_back(i);
  return IndexSet(std::move(v));
}

bool IndexSet::contains(int i) const { return std::binary_search(idx_.begin(), idx_.end(), i); }

IndexSet IndexSet::complement(int n) const {
  std::vector<int> v;
  for (int i = 0; i < n; ++i) {
    if (!contains(i)) v.push_back(i);
  }
  return IndexSet(std::move(v));
}

IndexSet IndexSet::with(int i) const {
  if (contains(i)) return *this;
  std::vector<int> v = idx_;
  v.insert(std::upper_bound(v.begin(), v.end(), i), i);
  return IndexSet(std::move(v));
}

IndexSet IndexSet::without(int i) const {
  std::vector<int> v;
  std::copy_if(idx_.begin(), idx_.end(), std::back_inserter(v), [i](int x) { return x != i; });
  return IndexSet(std::move(v));
}

std::size_t IndexSet::position(int i) const {
  auto it = std::lower_bound(idx_.begin(), idx_.end(), i);
  if (it == idx_.end() || *it != i) throw DomainError("index not in set");
  return static_cast<std::size_t>(it - idx_.begin());
}

std::vector<int> IndexSet::one_based() const {
  std::vector<int> v;
  v.reserve(idx_.size());
  for (int i : idx_) v.push_back(i + 1);
  return v;
}

std::string IndexSet::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < idx_.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(idx_[i] + 1);
  }
  return s + ")";
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  std::vector<int> v;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(v));
  return IndexSet(std::move(v));
}

std::size_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

std::vector<IndexSet> subsets_of_size(int n, int k) {
  std::vector<IndexSet> out;
  if (k < 0 || k > n) return out;
  out.reserve(binomial(n, k));
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  for (;;) {
    out.emplace_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::vector<IndexSet> nonempty_subsets(int n) {
  std::vector<IndexSet> out;
  for (int k = 1; k <= n; ++k) {
    std::vector<IndexSet> level = subsets_of_size(n, k);
    out.insert(out.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
  }
  return out;
}

std::size_t lex_rank(const IndexSet& s, int n) {
  const int k = static_cast<int>(s.size());
  if (s.bound() > n) throw DomainError("index set exceeds dimension");
  std::size_t rank = 0;
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    for (int v = prev + 1; v < s[static_cast<std::size_t>(i)]; ++v) rank += binomial(n - v - 1, k - i - 1);
    prev = s[static_cast<std::size_t>(i)];
  }
  return rank;
}

IndexSet lex_unrank(std::size_t rank, int n, int k) {
  if (rank >= binomial(n, k)) throw DomainError("lexicographic rank out of range");
  std::vector<int> v;
  int next = 0;
  for (int i = 0; i < k; ++i) {
    for (;; ++next) {
      const std::size_t block = binomial(n - next - 1, k - i - 1);
      if (rank < block) break;
      rank -= block;
    }
    v.push_back(next++);
  }
  return IndexSet(std::move(v));
}

}  // namespace ikit
