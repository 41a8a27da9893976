#include "interlace_kit/interlace.hpp"

#include "interlace_kit/classify.hpp"
#include "interlace_kit/errors.hpp"

#include <cstdlib>
#include <string>

namespace ikit {
namespace {

void require_square(const RationalMatrix& a, const char* what) {
  if (a.rows() != a.cols()) throw DomainError(std::string(what) + " needs a square matrix");
}

unsigned mask_of(const IndexSet& s) {
  unsigned m = 0;
  for (int i : s) m |= 1u << i;
  return m;
}

IndexSet from_mask(unsigned mask) {
  std::vector<int> v;
  for (int i = 0; mask >> i; ++i) {
    if (mask & (1u << i)) v.push_back(i);
  }
  return IndexSet(std::move(v));
}

std::string sub(const std::string& name, int j) { return name + "_" + std::to_string(j); }

RootViolation violation(int index, int j, std::string relation, std::vector<NamedRoot> values, std::string reason,
                        bool equality = false) {
  return RootViolation{index, j, std::move(relation), std::move(values), std::move(reason), equality};
}

// Ties count as failures of a strict inequality.
ChainResult evaluate_chain(const RationalMatrix& a, std::vector<IsolatedRoot>& lambda, int r) {
  const int n = static_cast<int>(a.rows());
  ChainResult out;
  out.r = r;
  const Spectrum s = spectrum(principal_submatrix(a, IndexSet::full(n).without(r - 1)));
  out.mu = s.real_roots;
  const std::string mu = "mu^(" + std::to_string(r) + ")";
  if (!s.all_real_simple()) {
    out.violation = violation(r, 0, mu + " real and simple", {},
                              "the submatrix without row and column " + std::to_string(r) +
                                  " does not have n-1 real simple eigenvalues");
    return out;
  }
  for (int j = 1; j < n; ++j) {
    IsolatedRoot& lj = lambda[static_cast<std::size_t>(j - 1)];
    IsolatedRoot& mj = out.mu[static_cast<std::size_t>(j - 1)];
    IsolatedRoot& lnext = lambda[static_cast<std::size_t>(j)];
    const int upper = compare(lj, mj);
    const int lower = upper > 0 ? compare(mj, lnext) : 1;
    if (upper <= 0 || lower <= 0) {
      out.violation = violation(r, j, "lambda_j > " + mu + "_j > lambda_{j+1}",
                                {{sub("lambda", j), lj}, {sub(mu, j), mj}, {sub("lambda", j + 1), lnext}},
                                upper <= 0 ? "lambda_j > mu_j fails" : "mu_j > lambda_{j+1} fails",
                                upper == 0 || lower == 0);
      return out;
    }
  }
  out.holds = true;
  return out;
}

}  // namespace

int lattice_bound() {
  const char* env = std::getenv("INTERLACE_KIT_LATTICE_BOUND");
  if (env == nullptr || *env == '\0') return 10;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 30) {
    throw ParseError(std::string("INTERLACE_KIT_LATTICE_BOUND must be an integer in [1, 30], got '") + env + "'");
  }
  return static_cast<int>(v);
}

InterlaceReport verify_tau(const RationalMatrix& a, bool strict, const TauOptions& options) {
  require_square(a, "verify_tau");
  const int n = static_cast<int>(a.rows());
  if (n < 1) throw DomainError("verify_tau needs n >= 1");
  const int bound = options.bound.value_or(lattice_bound());
  if (n > bound) {
    throw DomainError("n = " + std::to_string(n) + " exceeds the subset-lattice bound " + std::to_string(bound) +
                      " (set INTERLACE_KIT_LATTICE_BOUND to raise it)");
  }
  InterlaceReport report;
  report.property = strict ? "tau-strict" : "tau";

  const std::vector<IndexSet> sets = nonempty_subsets(n);
  std::vector<LValue> l(std::size_t{1} << n, Infinity{});
  for (const IndexSet& s : sets) l[mask_of(s)] = l_of(principal_submatrix(a, s));

  auto fail = [&](LatticeViolation v) {
    report.holds = false;
    report.equality = v.equality;
    report.counterexample = std::move(v);
    return report;
  };

  const IndexSet full = IndexSet::full(n);
  LValue& lf = l[mask_of(full)];
  if (is_infinite(lf)) return fail(LatticeViolation{full, std::nullopt, lf, std::nullopt, "l(A) is infinite"});
  const int sign = compare(std::get<IsolatedRoot>(lf), Rational(0));
  if (sign < 0 || (strict && sign == 0)) {
    return fail(LatticeViolation{full, std::nullopt, lf, std::nullopt,
                                 strict ? "l(A) is not positive" : "l(A) is negative", sign == 0});
  }
  for (const IndexSet& s : sets) {
    if (is_infinite(l[mask_of(s)])) {
      return fail(LatticeViolation{s, std::nullopt, l[mask_of(s)], std::nullopt, "l-value is infinite"});
    }
  }

  for (const IndexSet& alpha : sets) {
    if (alpha.size() < 2) continue;
    const unsigned am = mask_of(alpha);
    std::vector<unsigned> betas;
    if (options.all_pairs) {
      for (unsigned bm = (am - 1) & am; bm != 0; bm = (bm - 1) & am) betas.push_back(bm);
    } else {
      for (auto it = alpha.end(); it != alpha.begin();) betas.push_back(am & ~(1u << *--it));
    }
    for (unsigned bm : betas) {
      ++report.checked_pairs;
      const int c = compare(l[am], l[bm]);
      if (c > 0 || (strict && c == 0)) {
        return fail(LatticeViolation{alpha, from_mask(bm), l[am], l[bm],
                                     c == 0 ? "l(A(alpha)) = l(A(beta))" : "l(A(alpha)) > l(A(beta))", c == 0});
      }
    }
  }
  return report;
}

InterlaceReport verify_weak_interlacing(const RationalMatrix& a) {
  require_square(a, "verify_weak_interlacing");
  const int n = static_cast<int>(a.rows());
  if (n < 2) throw DomainError("weak interlacing needs n >= 2");
  InterlaceReport report;
  report.property = "weak";
  Spectrum s = spectrum(a);
  report.eigenvalues = s.real_roots;

  auto fail = [&](RootViolation v) {
    report.holds = false;
    report.equality = v.equality;
    report.counterexample = std::move(v);
    return report;
  };

  if (report.eigenvalues.empty()) return fail(violation(0, 0, "real eigenvalues", {}, "A has no real eigenvalue"));
  const IndexSet full = IndexSet::full(n);
  for (int k = 1; k <= n; ++k) {
    Spectrum sk = spectrum(principal_submatrix(a, full.without(k - 1)));
    const std::string mu = "mu^(" + std::to_string(k) + ")";
    if (sk.real_roots.empty()) {
      return fail(violation(k, 0, mu + " real", {}, "A_" + std::to_string(k) + " has no real eigenvalue"));
    }
    IsolatedRoot& l1 = report.eigenvalues.front();
    IsolatedRoot& ln = report.eigenvalues.back();
    IsolatedRoot& m1 = sk.real_roots.front();
    IsolatedRoot& mlast = sk.real_roots.back();
    ++report.checked_pairs;
    const int upper = compare(l1, m1);
    if (upper <= 0) {
      return fail(violation(k, 1, "lambda_1 > " + mu + "_1", {{"lambda_1", l1}, {sub(mu, 1), m1}},
                            upper == 0 ? "equal" : "lambda_1 < mu_1", upper == 0));
    }
    ++report.checked_pairs;
    const int lower = compare(mlast, ln);
    if (lower <= 0) {
      return fail(violation(k, n - 1, mu + "_{n-1} > lambda_n", {{sub(mu, n - 1), mlast}, {sub("lambda", n), ln}},
                            lower == 0 ? "equal" : "mu_{n-1} < lambda_n", lower == 0));
    }
  }
  return report;
}

InterlaceReport verify_theorem10(const RationalMatrix& a, std::optional<int> only_r) {
  require_square(a, "verify_theorem10");
  const int n = static_cast<int>(a.rows());
  if (n < 1) throw DomainError("theorem10 needs n >= 1");
  if (only_r && (*only_r < 1 || *only_r > n)) {
    throw DomainError("r must lie in [1, " + std::to_string(n) + "], got " + std::to_string(*only_r));
  }
  if (!is_sk(a).member) throw DomainError("theorem10 requires an SK matrix");

  InterlaceReport report;
  report.property = "theorem10";
  Spectrum s = spectrum(a);
  report.eigenvalues = s.real_roots;
  if (!s.all_real_simple() || compare(report.eigenvalues.back(), Rational(0)) <= 0) {
    report.holds = false;
    report.counterexample = violation(0, 0, "n positive simple eigenvalues", {}, "eigenvalues are not all positive, real and simple");
    return report;
  }
  for (int r = 1; r <= n && n > 1; ++r) {
    if (only_r && r != *only_r) continue;
    ChainResult chain = evaluate_chain(a, report.eigenvalues, r);
    chain.asserted = only_r.has_value() || r == 1 || r == n;
    report.checked_pairs += 2 * (n - 1);
    if (chain.asserted && !chain.holds && report.holds) {
      report.holds = false;
      report.equality = chain.violation->equality;
      report.counterexample = *chain.violation;
    }
    report.chains.push_back(std::move(chain));
  }
  return report;
}

Poly lambda_minor(const RationalMatrix& a, const IndexSet& rows, const IndexSet& cols) {
  require_square(a, "lambda_minor");
  return minor(lambda_matrix(a), rows, cols);
}

std::vector<Poly> enclosed_minors(const RationalMatrix& a) {
  require_square(a, "enclosed_minors");
  const int n = static_cast<int>(a.rows());
  const PolyMatrix l = lambda_matrix(a);
  std::vector<Poly> out;
  for (int k = 0; k < n; ++k) {
    const IndexSet s = IndexSet::range(k, n);
    out.push_back(minor(l, s, s));
  }
  return out;
}

bool bracket_valid(const RationalMatrix& a, const Rational& alpha, const Rational& beta) {
  if (alpha >= beta) return false;
  for (const Poly& m : enclosed_minors(a)) {
    if (m.sign_at(alpha) <= 0) return false;
    if (m.sign_at(beta) * (m.degree() % 2 == 0 ? 1 : -1) <= 0) return false;
  }
  return true;
}

std::pair<Rational, Rational> choose_alpha_beta(const RationalMatrix& a) {
  require_square(a, "choose_alpha_beta");
  Rational b = 0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Rational row = 0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) row += abs_value(a(i, j));
    if (row > b) b = row;
  }
  b += 1;
  Rational alpha = -b, beta = b;
  while (!bracket_valid(a, alpha, beta)) {
    alpha *= 2;
    beta *= 2;
  }
  return {alpha, beta};
}

std::pair<Rational, Rational> tight_alpha_beta(const RationalMatrix& a) {
  require_square(a, "tight_alpha_beta");
  std::vector<IsolatedRoot> roots;
  for (const Poly& m : enclosed_minors(a)) {
    for (IsolatedRoot& r : isolate_real_roots(m)) roots.push_back(std::move(r));
  }
  if (roots.empty()) return choose_alpha_beta(a);
  std::size_t lo = 0, hi = 0;
  for (std::size_t i = 1; i < roots.size(); ++i) {
    if (compare(roots[i], roots[lo]) < 0) lo = i;
    if (compare(roots[i], roots[hi]) > 0) hi = i;
  }
  IsolatedRoot& smallest = roots[lo];
  const bool positive = compare(smallest, Rational(0)) > 0;
  Rational delta = 1, alpha;
  for (;;) {
    smallest.refine_to(delta);
    alpha = smallest.lo() - delta;
    if (!positive || alpha > 0) break;
    delta /= 2;
  }
  IsolatedRoot& largest = roots[hi];
  largest.refine_to(Rational(1));
  const Rational beta = largest.hi() + 1;
  if (!bracket_valid(a, alpha, beta)) throw Error("internal: tightened bracket failed its sign check");
  return {alpha, beta};
}

std::vector<Poly> kotelyansky_products(const RationalMatrix& a) {
  require_square(a, "kotelyansky_products");
  const int n = static_cast<int>(a.rows());
  const PolyMatrix l = lambda_matrix(a);
  std::vector<Poly> out;
  for (int k = 0; k + 1 < n; ++k) {
    const IndexSet tail = IndexSet::range(k + 2, n);
    const IndexSet with_k = tail.with(k);
    const IndexSet shifted = IndexSet::range(k + 1, n);
    out.push_back(minor(l, with_k, shifted) * minor(l, shifted, with_k));
  }
  return out;
}

HypothesisResult check_kotelyansky_hypothesis(const RationalMatrix& a, const Rational& alpha, const Rational& beta) {
  require_square(a, "check_kotelyansky_hypothesis");
  if (!bracket_valid(a, alpha, beta)) {
    throw DomainError("[" + to_string(alpha) + ", " + to_string(beta) + "] is not a valid bracket for this matrix");
  }
  HypothesisResult out;
  out.products = kotelyansky_products(a);
  const Rational mid = (alpha + beta) / 2;
  for (std::size_t i = 0; i < out.products.size(); ++i) {
    const Poly& p = out.products[i];
    std::string reason;
    if (p.is_zero()) {
      reason = "the product is identically zero";
    } else if (p.sign_at(alpha) == 0 || p.sign_at(beta) == 0) {
      reason = "the product vanishes at a bracket endpoint";
    } else if (sturm_count(p, alpha, beta) > 0) {
      reason = "the product has a root inside the bracket";
    } else if (p.sign_at(mid) < 0) {
      reason = "the paired minors have opposite signs on the bracket";
    }
    if (!reason.empty()) {
      out.holds = false;
      out.failing_k = static_cast<int>(i) + 1;
      out.reason = reason;
      return out;
    }
  }
  return out;
}

ConclusionResult verify_theorem9_conclusion(const RationalMatrix& a, const Rational& alpha, const Rational& beta) {
  if (!check_kotelyansky_hypothesis(a, alpha, beta).holds) {
    throw DomainError("the sign hypothesis does not hold on the bracket");
  }
  ConclusionResult out;
  auto fail = [&](int k, std::string reason) {
    out.holds = false;
    out.failing_k = k;
    out.reason = std::move(reason);
    return out;
  };
  const std::vector<Poly> minors = enclosed_minors(a);
  for (std::size_t k = 0; k < minors.size(); ++k) {
    std::vector<IsolatedRoot> roots = isolate_real_roots(minors[k]);
    out.roots.push_back(roots);
    const int id = static_cast<int>(k) + 1;
    if (static_cast<int>(roots.size()) != minors[k].degree()) return fail(id, "roots are not all real and simple");
    for (IsolatedRoot& r : out.roots.back()) {
      if (compare(r, alpha) <= 0 || compare(r, beta) >= 0) return fail(id, "a root lies outside the bracket");
    }
  }
  for (std::size_t k = 0; k + 1 < out.roots.size(); ++k) {
    std::vector<IsolatedRoot>& r = out.roots[k];
    std::vector<IsolatedRoot>& s = out.roots[k + 1];
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (compare(r[i], s[i]) >= 0 || compare(s[i], r[i + 1]) >= 0) {
        return fail(static_cast<int>(k) + 1, "roots of consecutive minors do not strictly interlace");
      }
    }
  }
  return out;
}

std::vector<int> zigzag(int n) {
  std::vector<int> out;
  for (int lo = 0, hi = n - 1; lo <= hi;) {
    out.push_back(lo++);
    if (lo <= hi) out.push_back(hi--);
  }
  return out;
}

DescartesResult descartes_border_check(const RationalMatrix& a) {
  require_square(a, "descartes_border_check");
  const int n = static_cast<int>(a.rows());
  const PolyMatrix l = lambda_matrix(a);
  DescartesResult out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const IndexSet head = IndexSet::range(i, j);
      const IndexSet tail = IndexSet::range(i + 1, j + 1);
      for (const auto& [rows, cols] : {std::pair{head, tail}, std::pair{tail, head}}) {
        DescartesEntry e{rows, cols, minor(l, rows, cols), 0};
        e.variations = e.minor.is_zero() ? -1 : descartes_sign_variations(e.minor);
        if (e.variations != 0) out.holds = false;
        out.entries.push_back(std::move(e));
      }
    }
  }
  return out;
}

KotelyanskyPipeline run_kotelyansky_pipeline(const RationalMatrix& a, bool apply_zigzag,
                                             std::optional<std::pair<Rational, Rational>> bracket) {
  require_square(a, "kotelyansky pipeline");
  KotelyanskyPipeline out;
  out.matrix = apply_zigzag ? permute_symmetric(a, zigzag(static_cast<int>(a.rows()))) : a;
  out.zigzag_applied = apply_zigzag;
  const auto [alpha, beta] = bracket ? *bracket : tight_alpha_beta(out.matrix);
  out.alpha = alpha;
  out.beta = beta;
  out.hypothesis = check_kotelyansky_hypothesis(out.matrix, alpha, beta);
  if (out.hypothesis.holds) out.conclusion = verify_theorem9_conclusion(out.matrix, alpha, beta);
  return out;
}

}  // namespace ikit
