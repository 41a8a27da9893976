#include <doctest.h>

#include "support.hpp"

#include "interlace_kit/classify.hpp"
#include "interlace_kit/gen.hpp"

using ikit::GenConfig;
using ikit::GenTarget;
using ikit::Rational;
using ikit::RationalMatrix;
using support::mat;
using support::q;

TEST_CASE("target names round-trip") {
  for (GenTarget t : {GenTarget::Positive, GenTarget::STP, GenTarget::SKNotSTP, GenTarget::SJSKConjugated,
                      GenTarget::Arbitrary}) {
    CHECK(ikit::parse_target(ikit::target_name(t)) == t);
  }
  CHECK_THROWS_AS(ikit::parse_target("nope"), ikit::ParseError);
}

TEST_CASE("derived seeds are distinct and stable") {
  CHECK(ikit::derive_seed(1, 0) == ikit::derive_seed(1, 0));
  CHECK(ikit::derive_seed(1, 0) != ikit::derive_seed(1, 1));
  CHECK(ikit::derive_seed(1, 0) != ikit::derive_seed(2, 0));
}

TEST_CASE("bidiagonal parameters") {
  ikit::BidiagonalParameters ones{{1}, {1, 1}, {1}};
  CHECK(ikit::stp_from_parameters(2, ones) == mat("1 1\n1 2"));
  ikit::BidiagonalParameters three{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}};
  // All-ones factors give the Pascal matrix.
  CHECK(ikit::stp_from_parameters(3, three) == mat("1 1 1\n1 2 3\n1 3 6"));
  CHECK_THROWS_AS(ikit::stp_from_parameters(2, ikit::BidiagonalParameters{{0}, {1, 1}, {1}}), ikit::DomainError);
  CHECK_THROWS_AS(ikit::stp_from_parameters(2, ikit::BidiagonalParameters{{1}, {1}, {1}}), ikit::DomainError);
}

TEST_CASE("corner scan on a Toeplitz profile recovers Example 1") {
  const auto a = ikit::scan_corner({3, 2, 1, 0}, 10);
  REQUIRE(a.has_value());
  CHECK(*a == ikit::example1());
  CHECK(ikit::sk_from_profile({3, 2, 1, 0}, q("0.6")) == ikit::example1());
}

TEST_CASE("generators produce their targets and are reproducible") {
  for (int seed = 0; seed < 12; ++seed) {
    GenConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(seed);
    cfg.n = 4 + seed % 3;
    for (GenTarget t : {GenTarget::Positive, GenTarget::STP, GenTarget::SKNotSTP, GenTarget::SJSKConjugated,
                        GenTarget::Arbitrary}) {
      cfg.target = t;
      const RationalMatrix a = ikit::generate(cfg);
      CHECK(a == ikit::generate(cfg));
      CHECK(a.rows() == cfg.n);
      switch (t) {
        case GenTarget::Positive: CHECK(ikit::is_positive(a).member); break;
        case GenTarget::STP: CHECK(ikit::is_stp(a).member); break;
        case GenTarget::SKNotSTP:
          CHECK(ikit::is_sk(a).member);
          CHECK_FALSE(ikit::is_stp(a).member);
          break;
        case GenTarget::SJSKConjugated: CHECK(ikit::is_sjsk(a).member); break;
        case GenTarget::Arbitrary: break;
      }
    }
  }
  GenConfig a, b;
  a.seed = 1;
  b.seed = 2;
  CHECK(ikit::gen_arbitrary(a) != ikit::gen_arbitrary(b));
}

TEST_CASE("SK-not-STP witness is a negative minor") {
  GenConfig cfg;
  cfg.n = 5;
  cfg.seed = 8;
  const ikit::SkNotStp r = ikit::gen_sk_not_stp(cfg);
  REQUIRE(r.negative_minor.has_value());
  CHECK(r.negative_minor->value.sign() <= 0);
  CHECK(ikit::minor(r.matrix, r.negative_minor->rows, r.negative_minor->cols) == r.negative_minor->value);
  cfg.n = 3;
  CHECK_FALSE(ikit::gen_sk_not_stp(cfg).negative_minor.has_value());
}

TEST_CASE("conjugation") {
  const RationalMatrix a = mat("1 2\n3 4");
  CHECK(ikit::conjugate(a, {1, 0}, {1, 1}) == mat("4 3\n2 1"));
  CHECK(ikit::conjugate(a, {0, 1}, {1, -1}) == mat("1 -2\n-3 4"));
  CHECK_THROWS_AS(ikit::conjugate(a, {0, 0}, {1, 1}), ikit::DomainError);
  CHECK_THROWS_AS(ikit::conjugate(a, {0, 1}, {1, 0}), ikit::DomainError);
}
