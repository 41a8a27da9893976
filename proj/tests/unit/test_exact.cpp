#include <doctest.h>

#include "interlace_kit/errors.hpp"
#include "interlace_kit/poly.hpp"
#include "interlace_kit/rational.hpp"
#include "interlace_kit/roots.hpp"

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/uniform_int_distribution.hpp>

#include <algorithm>
#include <set>
#include <vector>

using ikit::IsolatedRoot;
using ikit::Poly;
using ikit::Rational;

namespace {

Rational q(const char* s) { return ikit::parse_rational(s); }

Poly poly(std::vector<Rational> c) { return Poly(std::move(c)); }

// Sign changes of p along lo + (hi - lo) * (i + 1/7919) / steps. The odd offset keeps
// grid points away from the small-denominator roots used in these tests.
int grid_sign_changes(const Poly& p, const Rational& lo, const Rational& hi, int steps) {
  int changes = 0;
  int last = p.sign_at(lo);
  for (int i = 0; i <= steps; ++i) {
    const Rational x = lo + (hi - lo) * (Rational(i) + Rational(1, 7919)) / steps;
    if (x >= hi) break;
    const int s = p.sign_at(x);
    if (s != 0 && last != 0 && s != last) ++changes;
    if (s != 0) last = s;
  }
  const int s = p.sign_at(hi);
  if (s != 0 && last != 0 && s != last) ++changes;
  return changes;
}

Rational random_rational(boost::random::mt19937_64& rng, int num_bound, int den_bound) {
  boost::random::uniform_int_distribution<int> num(-num_bound, num_bound);
  boost::random::uniform_int_distribution<int> den(1, den_bound);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rational literals parse exactly and round-trip") {
  CHECK(q("0.6") == Rational(3, 5));
  CHECK(q("3.3928") == Rational(4241, 1250));
  CHECK(q("-7/4") == Rational(-7, 4));
  CHECK(q("+14/8") == Rational(7, 4));
  CHECK(q("1.5e-3") == Rational(3, 2000));
  CHECK(q("2E2") == Rational(200));
  CHECK(q(".5") == Rational(1, 2));
  CHECK(q("  12  ") == Rational(12));
  for (const char* s : {"0.6", "3.3928", "-35.408", "8.64", "42.75", "-0.2"}) {
    const Rational v = q(s);
    CHECK(q(ikit::to_string(v).c_str()) == v);
    CHECK(q(ikit::to_decimal(v, 6).c_str()) == v);
  }
  CHECK(ikit::to_string(q("-0.2")) == "-1/5");
  CHECK(ikit::to_string(q("12.6")) == "63/5");
  CHECK(ikit::to_string(Rational(4)) == "4");
}

TEST_CASE("leading zeros are decimal, not octal") {
  CHECK(q("0.10") == Rational(1, 10));
  CHECK(q("0.08") == Rational(2, 25));
  CHECK(q("0.479") == Rational(479, 1000));
  CHECK(q("007") == 7);
  CHECK(q("010/3") == Rational(10, 3));
  CHECK(q("-0.09") == Rational(-9, 100));
  CHECK(q("0") == 0);
  CHECK(q("000.000") == 0);
}

TEST_CASE("rational parsing rejects malformed input") {
  for (const char* s : {"", "abc", "1/0", "1/", "/2", "1.2.3", "--1", "1e", "0x10", "1/-2", "."}) {
    CHECK_THROWS_AS(q(s), ikit::ParseError);
  }
}

TEST_CASE("decimal display rounds half up") {
  CHECK(ikit::to_decimal(Rational(2, 3), 4) == "0.6667");
  CHECK(ikit::to_decimal(Rational(-1, 8), 2) == "-0.13");
  CHECK(ikit::to_decimal(Rational(5), 3) == "5");
  CHECK(ikit::to_decimal(Rational(-1, 1000), 2) == "0");
}

TEST_CASE("rational field axioms on random triples stay canonical") {
  boost::random::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    const Rational a = random_rational(rng, 50, 30);
    const Rational b = random_rational(rng, 50, 30);
    const Rational c = random_rational(rng, 50, 30);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    const Rational s = a * b + c;
    CHECK(boost::multiprecision::denominator(s) > 0);
    CHECK(boost::multiprecision::gcd(boost::multiprecision::numerator(s), boost::multiprecision::denominator(s)) == 1);
  }
}

TEST_CASE("polynomial arithmetic") {
  const Poly p = poly({2, -3, 1});  // (x-1)(x-2)
  CHECK(p.degree() == 2);
  CHECK(p(Rational(1)) == 0);
  CHECK(p(Rational(3)) == 2);
  CHECK(p.derivative() == poly({-3, 2}));
  CHECK(Poly::from_roots({1, 2}) == p);
  CHECK(Poly().degree() == -1);
  CHECK((p - p).is_zero());
  CHECK(p.to_string() == "x^2 - 3*x + 2");
  CHECK(Poly(Rational(-1, 2)).to_string() == "-1/2");

  const auto qr = ikit::divmod(poly({1, 0, 0, 1}), poly({1, 1}));  // x^3 + 1 = (x+1)(x^2 - x + 1)
  CHECK(qr.quotient == poly({1, -1, 1}));
  CHECK(qr.remainder.is_zero());
  CHECK_THROWS_AS(ikit::divmod(p, Poly()), ikit::DomainError);
  CHECK_THROWS_AS(p / poly({0, 1}), ikit::DomainError);

  CHECK(ikit::gcd(Poly::from_roots({1, 2, 3}), Poly::from_roots({2, 3, 5})) == Poly::from_roots({2, 3}));
}

TEST_CASE("degree is additive under multiplication") {
  boost::random::mt19937_64 rng(11);
  boost::random::uniform_int_distribution<int> deg(0, 6);
  for (int t = 0; t < 100; ++t) {
    std::vector<Rational> a(static_cast<std::size_t>(deg(rng) + 1)), b(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& c : a) c = random_rational(rng, 9, 5);
    for (auto& c : b) c = random_rational(rng, 9, 5);
    a.back() = 1;
    b.back() = -2;
    const Poly pa(a), pb(b);
    CHECK((pa * pb).degree() == pa.degree() + pb.degree());
    const Rational x = random_rational(rng, 9, 7);
    CHECK((pa * pb)(x) == pa(x) * pb(x));
  }
}

TEST_CASE("square-free decomposition") {
  const Poly p = Poly::from_roots({1, 2, 2, 3, 3, 3}) * Rational(5);
  const auto f = ikit::square_free_decomposition(p);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == Poly::from_roots({1}));
  CHECK(f[1] == Poly::from_roots({2}));
  CHECK(f[2] == Poly::from_roots({3}));
  CHECK(ikit::square_free_part(p) == Poly::from_roots({1, 2, 3}));
  CHECK(ikit::square_free_decomposition(poly({1, 0, 1})).size() == 1);
}

TEST_CASE("sturm_count") {
  CHECK(ikit::sturm_count(poly({-2, 0, 1}), 1, 2) == 1);
  CHECK(ikit::sturm_count(poly({1, 0, 1}), -10, 10) == 0);
  CHECK(ikit::sturm_count(Poly::from_roots({1, 2, 2, 3}), 0, 4) == 3);
  CHECK_THROWS_AS(ikit::sturm_count(poly({-1, 1}), 1, 2), ikit::EndpointRootError);
  CHECK_THROWS_AS(ikit::sturm_count(poly({-1, 1}), 2, 0), ikit::DomainError);
  CHECK_THROWS_AS(ikit::sturm_count(Poly(), 0, 1), ikit::DomainError);
  CHECK(ikit::count_real_roots(poly({-2, 0, 1})) == 2);
  CHECK(ikit::count_real_roots(poly({1, 0, 1})) == 0);
}

TEST_CASE("sturm_count agrees with grid sign changes on square-free polynomials") {
  boost::random::mt19937_64 rng(2024);
  boost::random::uniform_int_distribution<int> count(1, 6);
  for (int t = 0; t < 60; ++t) {
    std::set<Rational> roots;
    const int k = count(rng);
    while (static_cast<int>(roots.size()) < k) roots.insert(random_rational(rng, 20, 4));
    Poly p = Poly::from_roots({roots.begin(), roots.end()});
    p *= poly({1, 0, 1});  // a complex pair that must not be counted
    const Rational lo = Rational(-11) + Rational(1, 3331), hi = Rational(9) + Rational(1, 4447);
    CHECK(ikit::sturm_count(p, lo, hi) == grid_sign_changes(p, lo, hi, 4000));
  }
}

TEST_CASE("descartes sign variations") {
  CHECK(ikit::descartes_sign_variations(poly({2, -3, 1})) == 2);
  CHECK(ikit::descartes_sign_variations(poly({5, 2, 0, 1})) == 0);
  CHECK(ikit::descartes_sign_variations(poly({-1, 0, 0, 1})) == 1);
  CHECK_THROWS_AS(ikit::descartes_sign_variations(Poly()), ikit::DomainError);
}

TEST_CASE("descartes bound dominates positive roots with equal parity") {
  boost::random::mt19937_64 rng(99);
  boost::random::uniform_int_distribution<int> count(1, 5);
  for (int t = 0; t < 80; ++t) {
    std::vector<Rational> roots;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) roots.push_back(random_rational(rng, 10, 3));
    const Poly p = Poly::from_roots(roots) * poly({random_rational(rng, 5, 2) + 6, random_rational(rng, 5, 3), 1});
    int positive = 0;
    for (const IsolatedRoot& r : ikit::isolate_real_roots(p)) {
      IsolatedRoot copy = r;
      if (ikit::compare(copy, Rational(0)) > 0) positive += r.multiplicity();
    }
    const int v = ikit::descartes_sign_variations(p);
    CHECK(v >= positive);
    CHECK((v - positive) % 2 == 0);
  }
}

TEST_CASE("isolate_real_roots on small examples") {
  auto r = ikit::isolate_real_roots(poly({2, -3, 1}));
  REQUIRE(r.size() == 2);
  CHECK(r[0].multiplicity() == 1);
  CHECK(r[0].lo() <= 1);
  CHECK(1 <= r[0].hi());
  CHECK(r[1].lo() <= 2);
  CHECK(2 <= r[1].hi());
  CHECK(r[0].hi() < r[1].lo());

  r = ikit::isolate_real_roots(poly({1, -2, 1}));
  REQUIRE(r.size() == 1);
  CHECK(r[0].multiplicity() == 2);
  CHECK(ikit::compare(r[0], Rational(1)) == 0);

  CHECK(ikit::isolate_real_roots(poly({1, 0, 1})).empty());
  CHECK(ikit::isolate_real_roots(Poly(3)).empty());
  CHECK_THROWS_AS(ikit::isolate_real_roots(Poly()), ikit::DomainError);
}

TEST_CASE("isolate_real_roots recovers constructed rational roots") {
  boost::random::mt19937_64 rng(5);
  boost::random::uniform_int_distribution<int> count(1, 7);
  boost::random::uniform_int_distribution<int> mult(1, 3);
  for (int t = 0; t < 80; ++t) {
    std::set<Rational> distinct;
    const int k = count(rng);
    while (static_cast<int>(distinct.size()) < k) distinct.insert(random_rational(rng, 30, 6));
    std::vector<Rational> with_mult;
    std::vector<int> expected_mult;
    for (const Rational& x : distinct) {
      const int m = mult(rng);
      expected_mult.push_back(m);
      for (int i = 0; i < m; ++i) with_mult.push_back(x);
    }
    const Poly p = Poly::from_roots(with_mult) * Rational(3, 7);
    const auto roots = ikit::isolate_real_roots(p);
    REQUIRE(roots.size() == distinct.size());
    int total = 0;
    std::size_t i = 0;
    for (const Rational& x : distinct) {
      CHECK(roots[i].lo() <= x);
      CHECK(x <= roots[i].hi());
      CHECK(roots[i].multiplicity() == expected_mult[i]);
      total += roots[i].multiplicity();
      if (i > 0) CHECK(roots[i - 1].hi() < roots[i].lo());
      ++i;
    }
    CHECK(total <= p.degree());
  }
}

TEST_CASE("refinement halves width and keeps the root") {
  auto roots = ikit::isolate_real_roots(poly({-2, 0, 1}));
  REQUIRE(roots.size() == 2);
  IsolatedRoot r = roots[1];
  for (int i = 0; i < 20; ++i) {
    const Rational before = r.width();
    r.refine();
    CHECK(r.width() * 2 == before);
    CHECK(r.lo() * r.lo() < 2);
    CHECK(r.hi() * r.hi() > 2);
  }
  r.refine_to(Rational(1, 1000000));
  CHECK(r.width() <= Rational(1, 1000000));
  CHECK(r.approx() == doctest::Approx(1.41421356).epsilon(1e-6));
}

TEST_CASE("refine_until_disjoint and exact comparison") {
  auto s2 = ikit::isolate_real_roots(poly({-2, 0, 1}));
  auto s3 = ikit::isolate_real_roots(poly({-3, 0, 1}));
  auto both = ikit::refine_until_disjoint({s2[1], s3[1]});
  CHECK(both[0].hi() < both[1].lo());
  CHECK(ikit::compare(s2[1], s3[1]) == -1);
  CHECK(ikit::compare(s3[1], s2[1]) == 1);

  auto one = ikit::isolate_real_roots(poly({-1, 1}));
  try {
    ikit::refine_until_disjoint({one[0], one[0]});
    FAIL("expected equal roots");
  } catch (const ikit::EqualRootsError& e) {
    CHECK(e.first() == 0);
    CHECK(e.second() == 1);
  }

  // Same number, different defining polynomials.
  auto a = ikit::isolate_real_roots(poly({-2, 0, 1}))[1];
  auto b = ikit::isolate_real_roots(Poly::from_roots({5}) * poly({-2, 0, 1}))[1];
  CHECK(ikit::compare(a, b) == 0);
  CHECK(ikit::compare(a, Rational(141, 100)) == 1);
  CHECK(ikit::compare(a, Rational(142, 100)) == -1);
}
