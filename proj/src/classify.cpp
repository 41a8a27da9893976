#include "interlace_kit/classify.hpp"

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/uniform_int_distribution.hpp>

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace ikit {
namespace {

void require_square(const RationalMatrix& a, std::string_view what) {
  if (a.rows() != a.cols()) throw DomainError(std::string(what) + " needs a square matrix");
  if (a.rows() == 0) throw DomainError(std::string(what) + " needs a nonempty matrix");
}

int dim(const RationalMatrix& a) { return static_cast<int>(a.rows()); }

std::uint64_t mask_of(const IndexSet& s) {
  std::uint64_t m = 0;
  for (int i : s) m |= std::uint64_t{1} << i;
  return m;
}

Membership member() { return Membership{true, std::nullopt, std::nullopt}; }
Membership failure(Witness w) { return Membership{false, std::move(w), std::nullopt}; }

// Parity union-find: parity_[v] is the parity of v relative to parent_[v].
class ParityForest {
 public:
  explicit ParityForest(int n) : parent_(static_cast<std::size_t>(n)), parity_(static_cast<std::size_t>(n), 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::pair<int, int> find(int v) {
    int p = 0;
    int root = v;
    while (parent_[static_cast<std::size_t>(root)] != root) {
      p ^= parity_[static_cast<std::size_t>(root)];
      root = parent_[static_cast<std::size_t>(root)];
    }
    return {root, p};
  }

  void unite(int u, int v, int relative) {
    auto [ru, pu] = find(u);
    auto [rv, pv] = find(v);
    parent_[static_cast<std::size_t>(ru)] = rv;
    parity_[static_cast<std::size_t>(ru)] = pu ^ pv ^ relative;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> parity_;
};

struct Edge {
  int to;
  std::pair<int, int> entry;
};

// Entries along the unique forest path from `from` to `to`.
std::vector<std::pair<int, int>> forest_path(const std::vector<std::vector<Edge>>& adj, int from, int to) {
  std::vector<int> prev(adj.size(), -1);
  std::vector<std::pair<int, int>> via(adj.size());
  std::queue<int> q;
  q.push(from);
  prev[static_cast<std::size_t>(from)] = from;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    if (u == to) break;
    for (const Edge& e : adj[static_cast<std::size_t>(u)]) {
      if (prev[static_cast<std::size_t>(e.to)] != -1) continue;
      prev[static_cast<std::size_t>(e.to)] = u;
      via[static_cast<std::size_t>(e.to)] = e.entry;
      q.push(e.to);
    }
  }
  std::vector<std::pair<int, int>> path;
  for (int v = to; v != from; v = prev[static_cast<std::size_t>(v)]) path.push_back(via[static_cast<std::size_t>(v)]);
  std::reverse(path.begin(), path.end());
  return path;
}

bool js_witness_reproduces(const RationalMatrix& a, bool strict, const JsWitness& w) {
  if (w.entries.empty()) return false;
  for (auto [r, c] : w.entries) {
    if (r < 0 || c < 0 || r >= a.rows() || c >= a.cols()) return false;
  }
  if (w.zero_entry) return strict && w.entries.size() == 1 && a(w.entries[0].first, w.entries[0].second) == 0;
  int sign = 1;
  const int start = w.entries.front().first;
  int at = start;
  for (auto [r, c] : w.entries) {
    const int s = a(r, c).sign();
    if (s == 0) return false;
    sign *= s;
    if (at == r) {
      at = c;
    } else if (at == c) {
      at = r;
    } else {
      return false;
    }
  }
  return at == start && sign < 0;
}

Membership k_like(const RationalMatrix& a, bool strict) {
  require_square(a, strict ? "SK test" : "K test");
  MinorTable minors(a);
  const int n = dim(a);
  for (int k = 1; k <= n; ++k) {
    const std::vector<IndexSet> sets = subsets_of_size(n, k);
    for (const IndexSet& r : sets) {
      for (const IndexSet& c : sets) {
        const bool principal = r == c;
        if (!principal && !is_almost_principal(r, c)) continue;
        const Rational& v = minors(r, c);
        const bool bad = principal || strict ? v.sign() <= 0 : v.sign() < 0;
        if (bad) return failure(MinorWitness{r, c, v});
      }
    }
  }
  return member();
}

Membership tp_like(const RationalMatrix& a, bool strict) {
  if (a.rows() == 0 || a.cols() == 0) throw DomainError("TP test needs a nonempty matrix");
  MinorTable minors(a);
  const int m = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  for (int k = 1; k <= std::min(m, n); ++k) {
    const std::vector<IndexSet> rows = subsets_of_size(m, k);
    const std::vector<IndexSet> cols = subsets_of_size(n, k);
    for (const IndexSet& r : rows) {
      for (const IndexSet& c : cols) {
        const Rational& v = minors(r, c);
        if (strict ? v.sign() <= 0 : v.sign() < 0) return failure(MinorWitness{r, c, v});
      }
    }
  }
  return member();
}

Membership tjs_like(const RationalMatrix& a, bool strict) {
  require_square(a, strict ? "STJS test" : "TJS test");
  MinorTable minors(a);
  const int n = dim(a);
  const IndexSet full = IndexSet::full(n);
  for (int j = 1; j <= n; ++j) {
    Membership inner = is_js(minors.principal_compound(full, j), strict);
    if (!inner) return failure(CompoundWitness{j, full, std::get<JsWitness>(*inner.witness)});
  }
  return member();
}

Membership jsk_like(const RationalMatrix& a, bool strict) {
  require_square(a, strict ? "SJSK test" : "JSK test");
  MinorTable minors(a);
  const int n = dim(a);
  if (strict) {
    const IndexSet full = IndexSet::full(n);
    const Rational& d = minors(full, full);
    if (d.sign() <= 0) return failure(MinorWitness{full, full, d});
  } else {
    for (const IndexSet& s : nonempty_subsets(n)) {
      const Rational& v = minors(s, s);
      if (v.sign() <= 0) return failure(MinorWitness{s, s, v});
    }
  }
  for (int j = 2; j <= n; ++j) {
    for (const IndexSet& alpha : subsets_of_size(n, j)) {
      Membership inner = is_js(minors.principal_compound(alpha, j - 1), strict);
      if (!inner) return failure(CompoundWitness{j - 1, alpha, std::get<JsWitness>(*inner.witness)});
    }
  }
  return member();
}

bool is_strict_class(MatrixClass c) {
  switch (c) {
    case MatrixClass::SJS:
    case MatrixClass::STJS:
    case MatrixClass::SJSK:
      return true;
    default:
      return false;
  }
}

bool minor_violates(MatrixClass c, const IndexSet& r, const IndexSet& col, const Rational& v, int n) {
  const bool principal = r == col;
  switch (c) {
    case MatrixClass::P:
    case MatrixClass::JSK:
      return principal && v.sign() <= 0;
    case MatrixClass::K:
      return (principal && v.sign() <= 0) || (is_almost_principal(r, col) && v.sign() < 0);
    case MatrixClass::SK:
      return (principal || is_almost_principal(r, col)) && v.sign() <= 0;
    case MatrixClass::TP:
      return v.sign() < 0;
    case MatrixClass::STP:
      return v.sign() <= 0;
    case MatrixClass::SJSK:
      return principal && static_cast<int>(r.size()) == n && v.sign() <= 0;
    default:
      return false;
  }
}

std::string entry_text(int r, int c) { return "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")"; }

}  // namespace

std::string_view class_name(MatrixClass c) {
  switch (c) {
    case MatrixClass::Positive: return "positive";
    case MatrixClass::P: return "P";
    case MatrixClass::TP: return "TP";
    case MatrixClass::STP: return "STP";
    case MatrixClass::K: return "K";
    case MatrixClass::SK: return "SK";
    case MatrixClass::JS: return "JS";
    case MatrixClass::SJS: return "SJS";
    case MatrixClass::TJS: return "TJS";
    case MatrixClass::STJS: return "STJS";
    case MatrixClass::JSK: return "JSK";
    case MatrixClass::SJSK: return "SJSK";
  }
  return "?";
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Member: return "member";
    case Verdict::NonMember: return "non-member";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

std::string describe(const Witness& w) {
  struct Visitor {
    std::string operator()(const MinorWitness& m) const {
      auto strip = [](std::string s) { return s.substr(1, s.size() - 2); };
      return "minor A(" + strip(m.rows.to_string()) + ";" + strip(m.cols.to_string()) + ") = " + to_string(m.value);
    }
    std::string operator()(const EntryWitness& e) const {
      return "entry a" + entry_text(e.row, e.col) + " = " + to_string(e.value);
    }
    std::string operator()(const JsWitness& j) const {
      if (j.zero_entry) return "zero entry at " + entry_text(j.entries[0].first, j.entries[0].second);
      std::string s = "sign cycle";
      for (auto [r, c] : j.entries) s += " " + entry_text(r, c);
      return s;
    }
    std::string operator()(const CompoundWitness& c) const {
      return "compound of order " + std::to_string(c.order) + " of A" + c.principal.to_string() + ": " +
             (*this)(c.inner);
    }
  };
  return std::visit(Visitor{}, w);
}

bool is_almost_principal(const IndexSet& rows, const IndexSet& cols) {
  if (rows.size() != cols.size() || rows.empty()) return false;
  std::size_t common = 0;
  for (int r : rows) common += cols.contains(r) ? 1 : 0;
  return common + 1 == rows.size();
}

MinorTable::MinorTable(const RationalMatrix& a) : a_(a) {
  if (a.rows() > 32 || a.cols() > 32) throw DomainError("minor table limited to 32 x 32");
}

const Rational& MinorTable::operator()(const IndexSet& rows, const IndexSet& cols) {
  const std::uint64_t key = mask_of(rows) | (mask_of(cols) << 32);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(key, minor(a_, rows, cols)).first->second;
}

RationalMatrix MinorTable::principal_compound(const IndexSet& alpha, int order) {
  const int j = static_cast<int>(alpha.size());
  if (order < 1 || order > j) throw DomainError("compound order out of range");
  std::vector<IndexSet> sets;
  for (const IndexSet& local : subsets_of_size(j, order)) {
    std::vector<int> global;
    for (int i : local) global.push_back(alpha[static_cast<std::size_t>(i)]);
    sets.emplace_back(std::move(global));
  }
  const auto m = static_cast<Eigen::Index>(sets.size());
  RationalMatrix out(m, m);
  for (Eigen::Index r = 0; r < m; ++r) {
    for (Eigen::Index c = 0; c < m; ++c) out(r, c) = (*this)(sets[static_cast<std::size_t>(r)], sets[static_cast<std::size_t>(c)]);
  }
  return out;
}

Membership is_js(const RationalMatrix& a, bool strict) {
  require_square(a, strict ? "SJS test" : "JS test");
  const int n = dim(a);
  if (strict) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (a(i, j) == 0) return failure(JsWitness{true, {{i, j}}});
      }
    }
  }
  ParityForest forest(n);
  std::vector<std::vector<Edge>> adj(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int s = a(i, j).sign();
      if (s == 0) continue;
      const int relative = s < 0 ? 1 : 0;
      if (i == j) {
        if (s < 0) return failure(JsWitness{false, {{i, i}}});
        continue;
      }
      auto [ri, pi] = forest.find(i);
      auto [rj, pj] = forest.find(j);
      if (ri == rj) {
        if ((pi ^ pj) != relative) {
          JsWitness w;
          w.entries.emplace_back(i, j);
          for (auto e : forest_path(adj, j, i)) w.entries.push_back(e);
          return failure(std::move(w));
        }
        continue;
      }
      forest.unite(i, j, relative);
      adj[static_cast<std::size_t>(i)].push_back({j, {i, j}});
      adj[static_cast<std::size_t>(j)].push_back({i, {i, j}});
    }
  }

  // The smallest index of each component takes sign +1.
  std::vector<int> component_anchor_parity(static_cast<std::size_t>(n), -1);
  std::vector<int> j_indices;
  for (int v = 0; v < n; ++v) {
    auto [root, parity] = forest.find(v);
    int& anchor = component_anchor_parity[static_cast<std::size_t>(root)];
    if (anchor < 0) anchor = parity;
    if (parity == anchor) j_indices.push_back(v);
  }
  Membership m = member();
  m.pattern = SignPattern{n, IndexSet(std::move(j_indices)), true};
  return m;
}

Membership is_positive(const RationalMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) throw DomainError("positivity test needs a nonempty matrix");
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j).sign() <= 0) return failure(EntryWitness{static_cast<int>(i), static_cast<int>(j), a(i, j)});
    }
  }
  return member();
}

Membership is_p_matrix(const RationalMatrix& a) {
  require_square(a, "P-matrix test");
  MinorTable minors(a);
  for (const IndexSet& s : nonempty_subsets(dim(a))) {
    const Rational& v = minors(s, s);
    if (v.sign() <= 0) return failure(MinorWitness{s, s, v});
  }
  return member();
}

Membership is_k(const RationalMatrix& a) { return k_like(a, false); }
Membership is_sk(const RationalMatrix& a) { return k_like(a, true); }
Membership is_tp(const RationalMatrix& a) { return tp_like(a, false); }
Membership is_stp(const RationalMatrix& a) { return tp_like(a, true); }
Membership is_tjs(const RationalMatrix& a) { return tjs_like(a, false); }
Membership is_stjs(const RationalMatrix& a) { return tjs_like(a, true); }
Membership is_jsk(const RationalMatrix& a) { return jsk_like(a, false); }
Membership is_sjsk(const RationalMatrix& a) { return jsk_like(a, true); }

Membership check_class(const RationalMatrix& a, MatrixClass c) {
  switch (c) {
    case MatrixClass::Positive: return is_positive(a);
    case MatrixClass::P: return is_p_matrix(a);
    case MatrixClass::TP: return is_tp(a);
    case MatrixClass::STP: return is_stp(a);
    case MatrixClass::K: return is_k(a);
    case MatrixClass::SK: return is_sk(a);
    case MatrixClass::JS: return is_js(a, false);
    case MatrixClass::SJS: return is_js(a, true);
    case MatrixClass::TJS: return is_tjs(a);
    case MatrixClass::STJS: return is_stjs(a);
    case MatrixClass::JSK: return is_jsk(a);
    case MatrixClass::SJSK: return is_sjsk(a);
  }
  throw std::logic_error("unknown matrix class");
}

const ClassResult& ClassReport::at(MatrixClass c) const {
  for (const ClassResult& r : results) {
    if (r.cls == c) return r;
  }
  throw DomainError("class not present in report");
}

ClassReport classify(const RationalMatrix& a) {
  ClassReport report;
  const bool square = a.rows() == a.cols();
  for (MatrixClass c : kAllClasses) {
    ClassResult r;
    r.cls = c;
    const bool rectangular_ok = c == MatrixClass::Positive || c == MatrixClass::TP || c == MatrixClass::STP;
    if (!square && !rectangular_ok) {
      report.results.push_back(std::move(r));
      continue;
    }
    Membership m = check_class(a, c);
    r.verdict = m.member ? Verdict::Member : Verdict::NonMember;
    r.witness = std::move(m.witness);
    r.pattern = std::move(m.pattern);
    report.results.push_back(std::move(r));
  }
  if (square && report.is(MatrixClass::SJSK) && !report.is(MatrixClass::P)) {
    report.findings.push_back("SJSK matrix with a non-positive principal minor: " +
                              describe(*report.at(MatrixClass::P).witness));
  }
  return report;
}

bool witness_reproduces(const RationalMatrix& a, MatrixClass c, const Witness& w) {
  const int n = static_cast<int>(a.rows());
  if (const auto* m = std::get_if<MinorWitness>(&w)) {
    if (m->rows.empty() || m->rows.size() != m->cols.size()) return false;
    if (m->rows.bound() > a.rows() || m->cols.bound() > a.cols()) return false;
    const Rational v = determinant(submatrix(a, m->rows, m->cols));
    return v == m->value && minor_violates(c, m->rows, m->cols, v, n);
  }
  if (const auto* e = std::get_if<EntryWitness>(&w)) {
    if (c != MatrixClass::Positive || e->row < 0 || e->col < 0 || e->row >= a.rows() || e->col >= a.cols()) return false;
    return a(e->row, e->col) == e->value && e->value.sign() <= 0;
  }
  if (const auto* j = std::get_if<JsWitness>(&w)) {
    if (c != MatrixClass::JS && c != MatrixClass::SJS) return false;
    return a.rows() == a.cols() && js_witness_reproduces(a, c == MatrixClass::SJS, *j);
  }
  const auto& cw = std::get<CompoundWitness>(w);
  const bool total = c == MatrixClass::TJS || c == MatrixClass::STJS;
  const bool kotelyansky = c == MatrixClass::JSK || c == MatrixClass::SJSK;
  if (!total && !kotelyansky) return false;
  if (cw.principal.empty() || cw.principal.bound() > n) return false;
  if (total && cw.principal != IndexSet::full(n)) return false;
  if (kotelyansky && cw.order != static_cast<int>(cw.principal.size()) - 1) return false;
  if (cw.order < 1 || cw.order > static_cast<int>(cw.principal.size())) return false;
  const RationalMatrix comp = compound(principal_submatrix(a, cw.principal), cw.order);
  return js_witness_reproduces(comp, is_strict_class(c), cw.inner);
}

ObservationCheck verify_observation_characterizations(const RationalMatrix& a) {
  require_square(a, "observation check");
  ObservationCheck out;
  Membership sk = is_sk(a);
  out.sk_direct = sk.member;
  if (sk.witness) out.sk_direct_witness = std::get<MinorWitness>(*sk.witness);
  out.k_direct = is_k(a).member;

  const int n = dim(a);
  MinorTable minors(a);
  if (n == 1) {
    out.sk_via_compounds = out.k_via_compounds = a(0, 0).sign() > 0;
    if (!out.sk_via_compounds) out.sk_compound_witness = MinorWitness{IndexSet{0}, IndexSet{0}, a(0, 0)};
    return out;
  }

  const IndexSet full = IndexSet::full(n);
  bool sk_ok = minors(full, full).sign() > 0;
  if (!sk_ok) out.sk_compound_witness = MinorWitness{full, full, minors(full, full)};
  bool k_ok = true;
  for (int j = 2; j <= n; ++j) {
    for (const IndexSet& alpha : subsets_of_size(n, j)) {
      if (minors(alpha, alpha).sign() <= 0) k_ok = false;
      const std::vector<IndexSet> faces = subsets_of_size(j, j - 1);
      for (const IndexSet& fr : faces) {
        for (const IndexSet& fc : faces) {
          std::vector<int> gr, gc;
          for (int i : fr) gr.push_back(alpha[static_cast<std::size_t>(i)]);
          for (int i : fc) gc.push_back(alpha[static_cast<std::size_t>(i)]);
          const IndexSet r(std::move(gr)), c(std::move(gc));
          const int s = minors(r, c).sign();
          if (s < 0) k_ok = false;
          if (s <= 0 && sk_ok) {
            sk_ok = false;
            out.sk_compound_witness = MinorWitness{r, c, minors(r, c)};
          }
        }
      }
    }
  }
  out.sk_via_compounds = sk_ok;
  out.k_via_compounds = k_ok;
  return out;
}

std::vector<ClosureResult> proposition1_closure_suite(const RationalMatrix& a, std::uint64_t seed) {
  require_square(a, "closure suite");
  const bool strict = is_sk(a).member;
  if (!strict && !is_k(a).member) throw DomainError("closure suite needs a K or SK matrix");
  const MatrixClass target = strict ? MatrixClass::SK : MatrixClass::K;
  const int n = dim(a);

  std::vector<ClosureResult> out;
  auto record = [&](std::string name, const RationalMatrix& m) {
    Membership r = check_class(m, target);
    out.push_back(ClosureResult{std::move(name), r.member, std::move(r.witness)});
  };

  record("transpose", a.transpose());

  boost::random::mt19937_64 rng(seed);
  boost::random::uniform_int_distribution<int> draw(1, 10);
  RationalMatrix d = RationalMatrix::Zero(n, n);
  RationalMatrix d_inv = RationalMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    d(i, i) = Rational(draw(rng), draw(rng));
    d_inv(i, i) = Rational(1) / d(i, i);
  }
  record("positive diagonal similarity", d * a * d_inv);

  const RationalMatrix s = alternating_sign_matrix(n);
  record("alternating sign inverse", s * inverse(a) * s);

  std::vector<int> reverse(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) reverse[static_cast<std::size_t>(i)] = n - 1 - i;
  record("reversal conjugate", permute_symmetric(a, reverse));

  for (const IndexSet& alpha : nonempty_subsets(n)) record("principal submatrix " + alpha.to_string(), principal_submatrix(a, alpha));
  for (const IndexSet& alpha : nonempty_subsets(n)) {
    if (static_cast<int>(alpha.size()) == n) continue;
    record("Schur complement of " + alpha.to_string(), schur_complement(a, alpha));
  }
  return out;
}

bool verify_sign_permutation_witness(const RationalMatrix& a, const std::vector<int>& signs, const std::vector<int>& perm) {
  require_square(a, "sign and permutation witness check");
  const int n = dim(a);
  if (static_cast<int>(signs.size()) != n || static_cast<int>(perm.size()) != n) return false;
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i) {
    if (sorted[static_cast<std::size_t>(i)] != i) return false;
    if (signs[static_cast<std::size_t>(i)] != 1 && signs[static_cast<std::size_t>(i)] != -1) return false;
  }
  RationalMatrix dad = a;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) dad(i, j) *= signs[static_cast<std::size_t>(i)] * signs[static_cast<std::size_t>(j)];
  }
  const RationalMatrix b = permute_symmetric(dad, perm);
  if (!is_positive(b).member) return false;
  return n < 2 || is_positive(compound(b, 2)).member;
}

}  // namespace ikit
