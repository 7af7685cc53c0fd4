#include "doctest.h"
#include "hytw/error.hpp"
#include "hytw/normalize.hpp"
#include "hytw/parse.hpp"

using namespace hytw::terms;

namespace {

const FiniteType T0 = FiniteType::zero();
const FiniteType T1 = FiniteType::standard(1);

TermPtr norm(const TermPtr& t) { return normalize(t).term; }

}  // namespace

TEST_CASE("substitution") {
  TermPtr body = plus(var("x", T0), nat(1));
  CHECK(equal(substitute(body, "x", nat(2)), plus(nat(2), nat(1))));
  // substitution passes under unrelated binders
  TermPtr t = lam("y", T0, var("x", T0));
  CHECK(equal(substitute(t, "x", var("z", T0)), lam("y", T0, var("z", T0))));
  // not free: unchanged
  CHECK(equal(substitute(var("y", T0), "x", nat(5)), var("y", T0)));
  // capture is avoided by renaming the colliding binder
  TermPtr cap = lam("y", T0, plus(var("x", T0), var("y", T0)));
  TermPtr r = substitute(cap, "x", var("y", T0));
  REQUIRE(r->kind == TermKind::Lam);
  CHECK(r->name != "y");
  CHECK(equal(r->a, plus(var("y", T0), var(r->name, T0))));
}

TEST_CASE("is_normal") {
  TypedSignature sig;
  sig["F"] = FiniteType::standard(2);
  sig["r"] = T1;
  CHECK(is_normal(lam("x", T0, var("x", T0))));
  CHECK_FALSE(is_normal(app(lam("x", T0, var("x", T0)), nat(0))));
  CHECK(is_normal(parse_term("(star F r)", sig)));
}

TEST_CASE("beta reduction with literal folding") {
  TermPtr t = app(lam("x", T0, plus(var("x", T0), nat(1))), nat(2));
  NormalizeResult r = normalize(t, 100, Strategy::LeftmostOutermost, true);
  CHECK(equal(r.term, nat(3)));
  CHECK(r.trace.step_count == 1);
  REQUIRE(r.trace.steps.size() == 1);
  CHECK(r.trace.steps[0].path == ".");
}

TEST_CASE("step budget") {
  // chain enough redexes to exceed a tiny budget
  TermPtr t = nat(0);
  for (int i = 0; i < 5; ++i) t = app(lam("x", T0, plus(var("x", T0), nat(1))), t);
  CHECK_THROWS_WITH_AS(normalize(t, 2), doctest::Contains("StepBudgetExceeded"), hytw::error);
  CHECK(equal(norm(t), nat(5)));
}

TEST_CASE("projection and composition combinator laws") {
  // Pi X Y = Y at a few types
  for (unsigned sx = 0; sx <= 2; ++sx) {
    FiniteType tx = FiniteType::standard(sx);
    TermPtr X = sx == 0 ? nat(7) : lam("a", FiniteType::standard(sx - 1), nat(1));
    TermPtr Y = plus(nat(2), nat(3));
    TermPtr Pi = lam("p", tx, lam("q", T0, var("q", T0)));
    CHECK(equal(norm(app(app(Pi, X), Y)), norm(Y)));
  }

  // ((Sigma X) Y) Z = (X Z)(Y Z) for sampled closed X, Y, Z
  // at types X : 0 -> (0 -> 0), Y : 0 -> 0, Z : 0
  FiniteType t00 = FiniteType::arrow(T0, T0);
  FiniteType t000 = FiniteType::arrow(T0, t00);
  TermPtr Sigma =
      lam("x", t000,
          lam("y", t00,
              lam("z", T0,
                  app(app(var("x", t000), var("z", T0)), app(var("y", t00), var("z", T0))))));
  std::vector<TermPtr> Xs = {
      lam("a", T0, lam("b", T0, plus(var("a", T0), var("b", T0)))),
      lam("a", T0, lam("b", T0, times(var("a", T0), succ_term(var("b", T0))))),
      lam("a", T0, lam("b", T0, less(var("a", T0), var("b", T0)))),
  };
  std::vector<TermPtr> Ys = {
      lam("c", T0, succ_term(var("c", T0))),
      lam("c", T0, times(var("c", T0), var("c", T0))),
  };
  for (const auto& X : Xs)
    for (const auto& Y : Ys)
      for (std::uint64_t z = 0; z < 4; ++z) {
        TermPtr Z = nat(z);
        TermPtr lhs = app(app(app(Sigma, X), Y), Z);
        TermPtr rhs = app(app(X, Z), app(Y, Z));
        CHECK(equal(norm(lhs), norm(rhs)));
      }
}

TEST_CASE("strategies agree") {
  TypedSignature sig;
  std::vector<std::string> cases = {
      "((lam (x 0) (+ x x)) ((lam (y 0) (* y 2)) 3))",
      "((lam (f (-> 0 0)) (f (f 1))) (lam (x 0) (succ x)))",
      "(lam (g (-> 0 0)) ((lam (x 0) (g x)) 5))",
  };
  for (const auto& s : cases) {
    TermPtr t = parse_term(s, sig);
    TermPtr a = normalize(t, 100000, Strategy::LeftmostOutermost).term;
    TermPtr b = normalize(t, 100000, Strategy::RightmostInnermost).term;
    CHECK(equal(a, b));
  }
}

TEST_CASE("structure report flags") {
  TypedSignature sig;
  sig["F"] = FiniteType::standard(2);

  // lam y:1. (F y) has type 2 and exactly one type-1 binder
  TermPtr t = lam("y", T1, app(param("F", FiniteType::standard(2)), var("y", T1)));
  StructureReport rep = check_normal_structure(t, sig);
  CHECK(rep.subterms_normal);
  CHECK(rep.subterms_standard_type);
  CHECK(rep.at_most_one_type1_binder);
  CHECK(rep.subterm_types_le_2);
  CHECK_FALSE(rep.bound_vars_type0);

  TermPtr id = lam("x", T0, var("x", T0));
  rep = check_normal_structure(id, sig);
  CHECK(rep.bound_vars_type0);
  CHECK(rep.subterms_standard_type);

  CHECK_THROWS_WITH_AS(check_normal_structure(app(id, nat(0)), sig),
                       doctest::Contains("NotNormal"), hytw::error);

  // a nonstandard-type subterm flips the standardness flags
  FiniteType t01 = FiniteType::arrow(T0, T1);
  TermPtr odd = lam("g", t01, nat(0));
  rep = check_normal_structure(odd, sig);
  CHECK_FALSE(rep.subterms_standard_type);
  CHECK_FALSE(rep.bound_vars_type0);
  CHECK_FALSE(rep.at_most_one_type1_binder);
}

TEST_CASE("normalized binder names stay parseable") {
  TypedSignature sig;
  // duplication puts two copies of the same binder side by side; the result
  // still round-trips through the parser
  TermPtr t = parse_term("((lam (f (-> 0 0)) (cat (f 0) (lam (w 0) (f w)))) (lam (x 0) (succ x)))",
                         sig);
  TermPtr n = norm(t);
  CHECK(is_normal(n));
  TermPtr reparsed = parse_term(print_term(n), sig);
  CHECK(equal(reparsed, n));
}
