#include <doctest.h>

#include "oracle.hpp"
#include "support.hpp"

#include "interlace_kit/classify.hpp"
#include "interlace_kit/gen.hpp"

#include <numeric>

using ikit::IndexSet;
using ikit::MatrixClass;
using ikit::Rational;
using ikit::RationalMatrix;
using support::mat;
using support::q;

namespace {

IndexSet one(std::vector<int> v) { return IndexSet::from_one_based(v); }

const ikit::MinorWitness& minor_witness(const ikit::Membership& m) { return std::get<ikit::MinorWitness>(*m.witness); }

// A mixed corpus of small matrices that lands in every class and outside each.
std::vector<RationalMatrix> small_corpus() {
  std::vector<RationalMatrix> out{ikit::example1(), ikit::example2(), ikit::example3(), ikit::identity_matrix(3),
                                  mat("1 -1\n1 1"), mat("1 2\n3 1"), mat("2 1\n1 2"), mat("0 0\n0 0"),
                                  mat("1 -2 0\n-1 3 -1\n0 -1 2")};
  ikit::Rng rng(77);
  for (int t = 0; t < 120; ++t) {
    ikit::GenConfig cfg;
    cfg.seed = ikit::derive_seed(500, static_cast<std::uint64_t>(t));
    cfg.n = support::random_int(rng, 1, 4);
    cfg.entry_bound = 3;
    cfg.max_denominator = 2;
    switch (t % 5) {
      case 0: cfg.target = ikit::GenTarget::Arbitrary; break;
      case 1: cfg.target = ikit::GenTarget::Positive; break;
      case 2: cfg.target = ikit::GenTarget::STP; break;
      case 3: cfg.target = ikit::GenTarget::SJSKConjugated; break;
      default: cfg.target = ikit::GenTarget::SKNotSTP; break;
    }
    RationalMatrix a = ikit::generate(cfg);
    if (t % 7 == 0) {
      // Sparse sign patterns exercise the zero-entry freedom of JS.
      a(0, a.cols() - 1) = 0;
      a(a.rows() - 1, 0) = 0;
    }
    out.push_back(a);
  }
  return out;
}

}  // namespace

TEST_CASE("J-sign-symmetry") {
  const auto pos = ikit::is_js(mat("1 2\n3 4"), true);
  REQUIRE(pos.member);
  CHECK(pos.pattern->J == IndexSet::full(2));

  const RationalMatrix c3 = ikit::compound(ikit::example3(), 3);
  const auto sjs = ikit::is_js(c3, true);
  REQUIRE(sjs.member);
  CHECK(sjs.pattern->J == one({1, 2}));

  const auto bad = ikit::is_js(mat("1 -1\n1 1"), false);
  REQUIRE_FALSE(bad.member);
  CHECK(ikit::witness_reproduces(mat("1 -1\n1 1"), MatrixClass::JS, *bad.witness));
  CHECK_FALSE(oracle::js(oracle::to_dense(mat("1 -1\n1 1")), false));

  const auto zero = ikit::is_js(ikit::identity_matrix(2), true);
  REQUIRE_FALSE(zero.member);
  CHECK(std::get<ikit::JsWitness>(*zero.witness).zero_entry);
  CHECK(ikit::is_js(ikit::identity_matrix(2), false).member);

  CHECK_FALSE(ikit::is_js(mat("-1"), false).member);
  CHECK_THROWS_AS(ikit::is_js(mat("1 2"), false), ikit::DomainError);
}

TEST_CASE("JS verdicts match brute force over sign vectors") {
  ikit::Rng rng(12);
  for (int t = 0; t < 300; ++t) {
    const int n = support::random_int(rng, 1, 7);
    RationalMatrix a(n, n);
    // Start from a JS pattern, then maybe break it, with plenty of zeros.
    std::vector<int> eps;
    for (int i = 0; i < n; ++i) eps.push_back(support::random_int(rng, 0, 1) ? 1 : -1);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const int mag = support::random_int(rng, 0, 3);
        a(i, j) = Rational(mag * eps[static_cast<std::size_t>(i)] * eps[static_cast<std::size_t>(j)]);
      }
    }
    if (t % 2 == 1) a(support::random_int(rng, 0, n - 1), support::random_int(rng, 0, n - 1)) *= -1;
    for (bool strict : {false, true}) {
      const auto m = ikit::is_js(a, strict);
      CHECK(m.member == oracle::js(oracle::to_dense(a), strict));
      if (m.member) {
        const IndexSet& J = m.pattern->J;
        CHECK(J.contains(0));
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            const int s = (J.contains(i) == J.contains(j)) ? 1 : -1;
            CHECK(a(i, j).sign() * s >= 0);
          }
        }
      } else {
        CHECK(ikit::witness_reproduces(a, strict ? MatrixClass::SJS : MatrixClass::JS, *m.witness));
      }
    }
  }
}

TEST_CASE("K and SK") {
  CHECK(ikit::is_sk(ikit::example1()).member);

  const auto id = ikit::is_sk(ikit::identity_matrix(3));
  CHECK(ikit::is_k(ikit::identity_matrix(3)).member);
  REQUIRE_FALSE(id.member);
  CHECK(minor_witness(id).rows == one({1}));
  CHECK(minor_witness(id).cols == one({2}));
  CHECK(minor_witness(id).value == 0);

  const auto bad = ikit::is_k(mat("1 2\n3 1"));
  REQUIRE_FALSE(bad.member);
  CHECK(minor_witness(bad).value == -5);
  CHECK(ikit::is_almost_principal(one({1, 2}), one({1, 3})));
  CHECK_FALSE(ikit::is_almost_principal(one({1, 2}), one({3, 4})));
}

TEST_CASE("TP and STP") {
  const auto e1 = ikit::is_stp(ikit::example1());
  REQUIRE_FALSE(e1.member);
  CHECK(minor_witness(e1).rows == one({1, 2}));
  CHECK(minor_witness(e1).cols == one({3, 4}));
  CHECK(minor_witness(e1).value == q("-0.2"));
  CHECK(ikit::is_stp(mat("2 1\n1 2")).member);
  CHECK(ikit::is_tp(ikit::identity_matrix(3)).member);
  CHECK_FALSE(ikit::is_stp(ikit::identity_matrix(3)).member);
  CHECK(ikit::is_stp(mat("1 1 1\n1 2 4")).member);  // rectangular
}

TEST_CASE("TJS and STJS") {
  CHECK(ikit::is_stjs(ikit::example2()).member);
  CHECK(ikit::is_tjs(ikit::identity_matrix(3)).member);
  CHECK_FALSE(ikit::is_stjs(ikit::identity_matrix(3)).member);
  ikit::GenConfig cfg;
  cfg.n = 4;
  cfg.seed = 3;
  CHECK(ikit::is_stjs(ikit::gen_stp(cfg)).member);
}

TEST_CASE("JSK and SJSK") {
  CHECK(ikit::is_sjsk(ikit::example3()).member);
  CHECK(ikit::is_jsk(ikit::example3()).member);
  CHECK(ikit::is_sjsk(ikit::example1()).member);
  ikit::Rng rng(21);
  for (int t = 0; t < 10; ++t) {
    const RationalMatrix c = ikit::conjugate(ikit::example1(), ikit::random_permutation(rng, 4), ikit::random_sign_diagonal(rng, 4));
    CHECK(ikit::is_sjsk(c).member);
  }
  CHECK_FALSE(ikit::is_sjsk(ikit::identity_matrix(2)).member);
  CHECK(ikit::is_jsk(ikit::identity_matrix(2)).member);
}

TEST_CASE("classify reports every class") {
  const ikit::ClassReport r = ikit::classify(ikit::example1());
  CHECK(r.results.size() == std::size(ikit::kAllClasses));
  CHECK(r.is(MatrixClass::SK));
  CHECK_FALSE(r.is(MatrixClass::STP));
  CHECK(r.findings.empty());
  const ikit::ClassReport rect = ikit::classify(mat("1 1 1\n1 2 4"));
  CHECK(rect.at(MatrixClass::SK).verdict == ikit::Verdict::NotApplicable);
  CHECK(rect.at(MatrixClass::STP).verdict == ikit::Verdict::Member);
}

TEST_CASE("verdicts agree with the brute-force oracle and witnesses reproduce") {
  int members = 0, non_members = 0;
  for (const RationalMatrix& a : small_corpus()) {
    const ikit::ClassReport report = ikit::classify(a);
    for (const ikit::ClassResult& r : report.results) {
      const bool member = r.verdict == ikit::Verdict::Member;
      CHECK_MESSAGE(member == oracle::member(a, r.cls), ikit::class_name(r.cls), "\n", ikit::format_matrix_text(a));
      if (member) {
        ++members;
      } else {
        ++non_members;
        REQUIRE(r.witness.has_value());
        CHECK_MESSAGE(ikit::witness_reproduces(a, r.cls, *r.witness), ikit::class_name(r.cls), " ",
                      ikit::describe(*r.witness));
      }
    }
    CHECK(report.findings.empty());
  }
  CHECK(members > 100);
  CHECK(non_members > 100);
}

TEST_CASE("tampered witnesses do not reproduce") {
  const RationalMatrix a = ikit::example1();
  const auto stp = ikit::is_stp(a);
  ikit::MinorWitness w = minor_witness(stp);
  w.value = 1;
  CHECK_FALSE(ikit::witness_reproduces(a, MatrixClass::STP, w));
  CHECK_FALSE(ikit::witness_reproduces(a, MatrixClass::STP, ikit::MinorWitness{one({1}), one({1}), 3}));
  CHECK_FALSE(ikit::witness_reproduces(a, MatrixClass::JS, ikit::JsWitness{false, {{0, 1}, {1, 0}}}));
}

TEST_CASE("hierarchy: STP => SK => SJSK and STP => STJS") {
  for (int seed = 0; seed < 30; ++seed) {
    ikit::GenConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(seed);
    cfg.n = 2 + seed % 4;
    const RationalMatrix stp = ikit::gen_stp(cfg);
    CHECK(ikit::is_sk(stp).member);
    CHECK(ikit::is_sjsk(stp).member);
    CHECK(ikit::is_stjs(stp).member);
    cfg.n = 4 + seed % 3;
    const RationalMatrix sk = ikit::gen_sk_not_stp(cfg).matrix;
    CHECK(ikit::is_sjsk(sk).member);
  }
}

TEST_CASE("conjugation by permutations and sign diagonals preserves JSK and SJSK") {
  ikit::Rng rng(31);
  const std::vector<RationalMatrix> bases{ikit::example1(), ikit::example2(), ikit::example3(), mat("1 2 0\n0 1 2\n3 0 1")};
  for (const RationalMatrix& a : bases) {
    for (int t = 0; t < 8; ++t) {
      const RationalMatrix c = ikit::conjugate(a, ikit::random_permutation(rng, static_cast<int>(a.rows())),
                                               ikit::random_sign_diagonal(rng, static_cast<int>(a.rows())));
      CHECK(ikit::is_sjsk(c).member == ikit::is_sjsk(a).member);
      CHECK(ikit::is_jsk(c).member == ikit::is_jsk(a).member);
    }
  }
}

TEST_CASE("strict J-sign-symmetric Kotelyansky matrices have positive principal minors") {
  for (const RationalMatrix& a : small_corpus()) {
    if (ikit::is_sjsk(a).member) CHECK(ikit::is_p_matrix(a).member);
  }
}

TEST_CASE("observation characterizations agree with the minor definitions") {
  const auto e1 = ikit::verify_observation_characterizations(ikit::example1());
  CHECK(e1.sk_direct);
  CHECK(e1.sk_via_compounds);
  const auto id = ikit::verify_observation_characterizations(ikit::identity_matrix(3));
  CHECK(id.k_direct);
  CHECK(id.k_via_compounds);
  CHECK_FALSE(id.sk_direct);
  CHECK_FALSE(id.sk_via_compounds);
  for (const RationalMatrix& a : small_corpus()) {
    if (a.rows() != a.cols()) continue;
    CHECK(ikit::verify_observation_characterizations(a).agree());
  }
}

TEST_CASE("lowering one corner entry breaks SK at a single almost-principal minor") {
  RationalMatrix a = ikit::example1();
  Rational corner = q("0.6");
  while (ikit::is_sk(a).member) {
    corner -= q("0.05");
    a(0, 3) = corner;
  }
  CHECK(ikit::is_positive(a).member);
  const auto obs = ikit::verify_observation_characterizations(a);
  CHECK_FALSE(obs.sk_direct);
  CHECK_FALSE(obs.sk_via_compounds);
  REQUIRE(obs.sk_direct_witness.has_value());
  REQUIRE(obs.sk_compound_witness.has_value());
  CHECK(obs.sk_direct_witness->rows == one({1, 2, 3}));
  CHECK(obs.sk_direct_witness->cols == one({2, 3, 4}));
  CHECK(obs.sk_compound_witness->rows == obs.sk_direct_witness->rows);
  CHECK(obs.sk_compound_witness->cols == obs.sk_direct_witness->cols);
  CHECK(obs.sk_compound_witness->value == obs.sk_direct_witness->value);
}

TEST_CASE("closure under the listed transforms") {
  const auto e1 = ikit::proposition1_closure_suite(ikit::example1(), 5);
  CHECK(e1.size() == 4 + 15 + 14);
  for (const auto& r : e1) CHECK_MESSAGE(r.holds, r.transform);
  for (const auto& r : ikit::proposition1_closure_suite(ikit::identity_matrix(3))) CHECK_MESSAGE(r.holds, r.transform);
  CHECK_THROWS_AS(ikit::proposition1_closure_suite(mat("1 2\n3 1")), ikit::DomainError);

  const RationalMatrix d = support::diagonal({1, 2, 3, 4});
  CHECK(ikit::is_sk(RationalMatrix(d * ikit::example1() * ikit::inverse(d))).member);

  for (int seed = 0; seed < 10; ++seed) {
    ikit::GenConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(seed);
    cfg.n = 4 + seed % 2;
    for (const auto& r : ikit::proposition1_closure_suite(ikit::gen_sk_not_stp(cfg).matrix, static_cast<std::uint64_t>(seed))) {
      CHECK_MESSAGE(r.holds, r.transform);
    }
  }
}

TEST_CASE("supplied permutation and sign witnesses are verified") {
  ikit::GenConfig cfg;
  cfg.n = 4;
  cfg.seed = 9;
  const RationalMatrix base = ikit::gen_stp(cfg);
  ikit::Rng rng(4);
  const std::vector<int> perm = ikit::random_permutation(rng, 4);
  const std::vector<Rational> d = ikit::random_sign_diagonal(rng, 4);
  const RationalMatrix a = ikit::conjugate(base, perm, d);

  std::vector<int> inv(4), signs(4);
  for (int i = 0; i < 4; ++i) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
  for (int i = 0; i < 4; ++i) signs[static_cast<std::size_t>(i)] = d[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])].sign();
  CHECK(ikit::verify_sign_permutation_witness(a, signs, inv));
  signs[0] = -signs[0];
  CHECK_FALSE(ikit::verify_sign_permutation_witness(a, signs, inv));
  CHECK_FALSE(ikit::verify_sign_permutation_witness(a, {1, 1, 1}, inv));
}
