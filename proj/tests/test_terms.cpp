#include "doctest.h"
#include "hytw/error.hpp"
#include "hytw/parse.hpp"
#include "hytw/term.hpp"

using namespace hytw::terms;

namespace {

TypedSignature standard_sig() {
  TypedSignature sig;
  sig["F"] = FiniteType::standard(2);
  sig["r"] = FiniteType::standard(1);
  sig["n"] = FiniteType::zero();
  return sig;
}

}  // namespace

TEST_CASE("standard types") {
  CHECK(is_standard(FiniteType::zero()));
  CHECK(is_standard(FiniteType::standard(2)));
  CHECK(standard_index(FiniteType::standard(2)) == 2U);
  // (0->0)->0 is the standard type 2
  FiniteType t2 = FiniteType::arrow(FiniteType::arrow(FiniteType::zero(), FiniteType::zero()),
                                    FiniteType::zero());
  CHECK(t2 == FiniteType::standard(2));
  CHECK(is_standard(t2));
  // 0 -> (0->0) is not standard: the codomain is not 0
  FiniteType bad = FiniteType::arrow(FiniteType::zero(),
                                     FiniteType::arrow(FiniteType::zero(), FiniteType::zero()));
  CHECK_FALSE(is_standard(bad));
  CHECK_FALSE(standard_index(bad).has_value());
  // brute-force recursion agreement on all types of height <= 5
  std::vector<FiniteType> pool = {FiniteType::zero()};
  for (int h = 0; h < 5; ++h) {
    std::vector<FiniteType> next = pool;
    for (const auto& a : pool)
      for (const auto& b : pool) next.push_back(FiniteType::arrow(a, b));
    pool = next;
    if (pool.size() > 500) pool.resize(500);
  }
  for (const auto& t : pool) {
    std::function<bool(const FiniteType&)> brute = [&](const FiniteType& x) {
      if (x.is_zero()) return true;
      return x.codomain().is_zero() && brute(x.domain());
    };
    CHECK(is_standard(t) == brute(t));
  }
}

TEST_CASE("type_of on hand cases") {
  TypedSignature sig = standard_sig();
  TermPtr id = lam("x", FiniteType::zero(), var("x", FiniteType::zero()));
  CHECK(type_of(id, sig) == FiniteType::standard(1));
  CHECK_THROWS_WITH_AS(type_of(app(nat(3), nat(4)), sig), doctest::Contains("TypeMismatch"),
                       hytw::error);
  CHECK_THROWS_WITH_AS(type_of(var("z", FiniteType::zero()), sig),
                       doctest::Contains("UnboundVariable"), hytw::error);
  CHECK(type_of(star_term(param("F", FiniteType::standard(2)), param("r", FiniteType::standard(1))),
                sig) == FiniteType::standard(1));
  CHECK_THROWS_AS(type_of(param("missing", FiniteType::zero()), sig), hytw::error);
}

TEST_CASE("parser on hand cases") {
  TypedSignature sig = standard_sig();
  TermPtr t = parse_term("(lam (x 0) (+ x 1))", sig);
  REQUIRE(t->kind == TermKind::Lam);
  CHECK(t->ty == FiniteType::zero());
  CHECK(t->a->kind == TermKind::Plus);
  CHECK(t->a->a->kind == TermKind::Var);
  CHECK(t->a->b->kind == TermKind::Nat);

  TermPtr s = parse_term("(star F r)", sig);
  REQUIRE(s->kind == TermKind::Star);
  CHECK(s->a->kind == TermKind::Param);
  CHECK(s->b->kind == TermKind::Param);

  CHECK_THROWS_WITH_AS(parse_term("(lam (x 0) (lam (x 0) x))", sig),
                       doctest::Contains("SyntaxError"), hytw::error);
  CHECK_THROWS_AS(parse_term("(lam (x 0) y)", sig), hytw::error);
  CHECK_THROWS_AS(parse_term("(+ 1", sig), hytw::error);

  // sibling binders may reuse a name; only rebinding along a path is barred
  CHECK_NOTHROW(parse_term("(cat ((lam (x 0) x) 0) (lam (x 0) x))", sig));
}

TEST_CASE("printer conventions") {
  TypedSignature sig = standard_sig();
  CHECK(print_term(nat(0)) == "0");
  CHECK(print_term(parse_term("(star F r)", sig)) == "(star F r)");
  TermPtr t = app(app(param("F", FiniteType::standard(2)), var("x", FiniteType::zero())),
                  var("y", FiniteType::zero()));
  CHECK(print_term(t) == "((F x) y)");
}

TEST_CASE("term file with signature header") {
  std::string text =
      "param F (-> (-> 0 0) 0)\n"
      "param r (-> 0 0)\n"
      "# a comment\n"
      "(star F r)\n"
      "(+ 1 2)\n";
  TermFile f = parse_term_file(text);
  CHECK(f.sig.size() == 2);
  REQUIRE(f.terms.size() == 2);
  CHECK(f.terms[0]->kind == TermKind::Star);
  TermFile g = parse_term_file(print_term_file(f));
  REQUIRE(g.terms.size() == 2);
  CHECK(equal(g.terms[0], f.terms[0]));
  CHECK(equal(g.terms[1], f.terms[1]));
}
