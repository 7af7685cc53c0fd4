#include <random>

#include "doctest.h"
#include "hytw/error.hpp"
#include "hytw/ordinal.hpp"

using namespace hytw::ord;

namespace {

Ordinal o(const std::string& s) { return parse_ordinal(s); }

// small random CNF values, built by summing random monomials (add keeps the
// result canonical)
Ordinal random_ordinal(std::mt19937_64& rng, int exp_depth = 2) {
  std::uniform_int_distribution<int> nterms(0, 3);
  std::uniform_int_distribution<std::uint64_t> coeff(1, 5);
  Ordinal acc;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Ordinal e = exp_depth > 0 ? random_ordinal(rng, exp_depth - 1) : Ordinal::natural(coeff(rng) % 3);
    acc = add(acc, Ordinal::omega_pow(e, coeff(rng)));
  }
  if (n == 0) acc = Ordinal::natural(coeff(rng) % 4);
  return acc;
}

}  // namespace

TEST_CASE("cmp on hand cases") {
  CHECK(cmp(o("w"), o("3")) == Cmp::Greater);
  CHECK(cmp(o("w^2+w"), o("w^2+1")) == Cmp::Greater);
  CHECK(cmp(o("0"), o("0")) == Cmp::Equal);
  CHECK(cmp(o("w^2"), o("w^3")) == Cmp::Less);
  CHECK(cmp(o("w*2+1"), o("w*2+1")) == Cmp::Equal);
  CHECK(cmp(o("w^w"), o("w^5*9+w*3")) == Cmp::Greater);
}

TEST_CASE("tag order, including inf > inf") {
  CHECK(tag_gt(Tag::inf(), Tag::inf()));
  CHECK_FALSE(tag_gt(Tag::fin(o("w")), Tag::fin(o("w"))));
  CHECK(tag_gt(Tag::inf(), Tag::fin(o("w^4"))));
  CHECK_FALSE(tag_gt(Tag::fin(o("w^4")), Tag::inf()));
  CHECK(tag_below(Tag::fin(o("3")), o("w")));
  CHECK_FALSE(tag_below(Tag::inf(), o("w")));
  CHECK(tag_eq(min_tag(Tag::inf(), Tag::fin(o("2"))), Tag::fin(o("2"))));
  CHECK(min_tag(Tag::inf(), Tag::inf()).is_inf());
}

TEST_CASE("addition and strict upper bounds") {
  CHECK(eq(add(o("1"), o("w")), o("w")));
  CHECK(eq(add(o("w"), o("1")), o("w+1")));
  CHECK(eq(add(o("w+3"), o("w^2")), o("w^2")));
  CHECK(eq(succ(o("w*2")), o("w*2+1")));
  CHECK(eq(max_plus_one({o("w"), o("3"), o("w*2")}), o("w*2+1")));
  CHECK(eq(max_plus_one({}), o("0")));
}

TEST_CASE("parse/print round trip and canonical form") {
  Ordinal a = o("w^2*3+w+4");
  REQUIRE(a.terms().size() == 3);
  CHECK(eq(*a.terms()[0].exp, o("2")));
  CHECK(a.terms()[0].coeff == 3);
  CHECK(eq(*a.terms()[1].exp, o("1")));
  CHECK(a.terms()[1].coeff == 1);
  CHECK(a.terms()[2].exp->is_zero());
  CHECK(a.terms()[2].coeff == 4);

  CHECK(o("0").is_zero());
  CHECK(print_ordinal(o("w*2+w")) == "w*3");
  CHECK(print_ordinal(o("w+w^2")) == "w^2");
  CHECK(print_ordinal(o("w^(w+1)*2+5")) == "w^(w+1)*2+5");
  CHECK(print_ordinal(o("w^w")) == "w^w");

  CHECK_THROWS_AS(o("w^"), hytw::error);
  CHECK_THROWS_AS(o("3+"), hytw::error);
  CHECK_THROWS_AS(o("q"), hytw::error);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    Ordinal x = random_ordinal(rng);
    CHECK(eq(parse_ordinal(print_ordinal(x)), x));
  }
}

TEST_CASE("strict total order on finite tags: trichotomy and transitivity") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10000; ++i) {
    Ordinal a = random_ordinal(rng), b = random_ordinal(rng), c = random_ordinal(rng);
    int rel = (cmp(a, b) == Cmp::Less) + (cmp(a, b) == Cmp::Equal) + (cmp(a, b) == Cmp::Greater);
    CHECK(rel == 1);
    CHECK((cmp(a, b) == Cmp::Less) == (cmp(b, a) == Cmp::Greater));
    if (lt(a, b) && lt(b, c)) CHECK(lt(a, c));
  }
}

TEST_CASE("addition laws") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 1000; ++i) {
    Ordinal a = random_ordinal(rng), b = random_ordinal(rng), c = random_ordinal(rng);
    CHECK(eq(add(add(a, b), c), add(a, add(b, c))));
    // left absorption: anything strictly below w^e is absorbed by w^e*c
    if (!b.is_zero()) {
      Ordinal big = Ordinal::omega_pow(*b.terms()[0].exp, b.terms()[0].coeff);
      if (lt(a, Ordinal::omega_pow(*b.terms()[0].exp, 1))) CHECK(eq(add(a, big), big));
    }
  }
}

TEST_CASE("no infinite descent from random starting points") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    Ordinal x = random_ordinal(rng, 2);
    std::uint64_t steps = 0;
    while (!x.is_zero()) {
      REQUIRE(steps++ < 100000);
      // descend: drop the last CNF term or shrink its coefficient
      auto ts = x.terms();
      std::uniform_int_distribution<int> choice(0, 2);
      int c = choice(rng);
      if (c == 0 || ts.back().exp->is_zero()) {
        Ordinal pred;
        if (x.successor_pred(pred)) {
          x = pred;
          continue;
        }
      }
      if (c == 1) {
        ts.pop_back();
        x = Ordinal::from_terms(ts);
        continue;
      }
      // replace the last term by something strictly smaller
      Ordinal head = Ordinal::from_terms({ts.begin(), ts.end() - 1});
      Ordinal smaller = random_ordinal(rng, 1);
      Ordinal last = Ordinal::omega_pow(*ts.back().exp, ts.back().coeff);
      while (!lt(smaller, last)) {
        Ordinal pred;
        if (last.successor_pred(pred)) {
          smaller = pred;
          break;
        }
        smaller = random_ordinal(rng, 1);
      }
      x = add(head, smaller);
    }
    CHECK(x.is_zero());
  }
}
