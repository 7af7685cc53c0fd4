#include <random>

#include "doctest.h"
#include "hytw/error.hpp"
#include "hytw/lower.hpp"
#include "hytw/parse.hpp"

using namespace hytw::lower;
using namespace hytw::model;
using namespace hytw::terms;

namespace {

const FiniteType T0 = FiniteType::zero();
const FiniteType T1 = FiniteType::standard(1);

Oracle1 random_oracle(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> v(0, 9);
  std::vector<std::uint64_t> prefix;
  for (int i = 0; i < 10; ++i) prefix.push_back(v(rng));
  return Oracle1::from_prefix(prefix, v(rng));
}

Oracle1 pack(const std::vector<std::uint64_t>& as, const Oracle1& b) {
  Oracle1 out = b;
  for (auto it = as.rbegin(); it != as.rend(); ++it) out = concat(*it, out);
  return out;
}

}  // namespace

TEST_CASE("helper functional laws") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    Oracle1 r = random_oracle(rng);
    for (std::uint64_t n = 0; n <= 6; ++n) {
      Oracle1 shifted = star(shift_functional(n), r);
      for (std::uint64_t i = 0; i < 30; ++i) CHECK(shifted.at(i) == r.at(n + i));
    }
    std::vector<std::uint64_t> pi = {3, 0, 2, 1};
    Oracle1 re = star(rearrange_functional(pi), r);
    for (std::uint64_t i = 0; i < 30; ++i)
      CHECK(re.at(i) == (i < pi.size() ? r.at(pi[i]) : r.at(i)));
  }
}

TEST_CASE("code_term: arithmetic over the variable list") {
  TypedSignature sig;
  // t = x0 + y(0), vars = (x0)
  TermPtr t = plus(var("x0", T0), app(var("y", T1), nat(0)));
  Type2Code code = code_term(t, {"x0"}, "y", sig);
  REQUIRE(code.code);
  CHECK(code_is_pure(code.code, sig));
  Env env;
  Functional2 f = code.functional(env);
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<std::uint64_t> v(0, 50);
  for (int trial = 0; trial < 50; ++trial) {
    std::uint64_t a = v(rng);
    Oracle1 b = random_oracle(rng);
    CHECK(f.apply(pack({a}, b)) == a + b.at(0));
  }
}

TEST_CASE("code_term: identity coding of the stream variable") {
  TypedSignature sig;
  TermPtr t = var("y", T1);
  Type2Code code = code_term(t, {}, "y", sig);
  Env env;
  Functional2 f = code.functional(env);
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    Oracle1 b = random_oracle(rng);
    Oracle1 s = star(f, b);
    for (std::uint64_t i = 0; i < 15; ++i) CHECK(s.at(i) == b.at(i));
  }
}

TEST_CASE("code_term: application of a type-2 parameter") {
  TypedSignature sig;
  sig["G"] = FiniteType::standard(2);
  TermPtr t = app(param("G", FiniteType::standard(2)), var("y", T1));
  Type2Code code = code_term(t, {}, "y", sig);
  CHECK(code_is_pure(code.code, sig));
  Functional2 g =
      Functional2::from_fn("g", [](const Oracle1& s) { return s.at(2) * 10 + s.at(0); });
  Env env = Env().bind("G", Value(g));
  Functional2 f = code.functional(env);
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    Oracle1 b = random_oracle(rng);
    // the code must evaluate G on (a pointwise copy of) b itself
    CHECK(f.apply(b) == g.apply(b));
  }
}

TEST_CASE("code_term rejects bad inputs") {
  TypedSignature sig;
  TermPtr redex = app(lam("x", T0, var("x", T0)), nat(0));
  CHECK_THROWS_WITH_AS(code_term(redex, {}, "y", sig), doctest::Contains("NotNormal"),
                       hytw::error);
  // a type-1 binder inside a type-1 term is outside the codable fragment
  TermPtr odd = star_term(lam("w", T1, nat(0)), var("y", T1));
  CHECK_THROWS_WITH_AS(code_term(odd, {}, "y", sig), doctest::Contains("NonStandardSubterm"),
                       hytw::error);
  TermPtr stray = plus(var("q", T0), nat(1));
  CHECK_THROWS_AS(code_term(stray, {}, "y", sig), hytw::error);
}

TEST_CASE("lower_closed at each type") {
  TypedSignature sig;
  Env env;

  // type 2: lam y:1. y(2)+1
  TermPtr t2 = lam("y", T1, plus(app(var("y", T1), nat(2)), nat(1)));
  Lowered l2 = lower_closed(t2, sig, env);
  REQUIRE(std::holds_alternative<Type2Code>(l2));
  Type2Code code = std::get<Type2Code>(l2);
  CHECK(code_is_pure(code.code, sig));
  Functional2 direct = eval_functional(t2, env);
  Functional2 low = code.functional(env);
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    Oracle1 f = random_oracle(rng);
    CHECK(direct.apply(f) == low.apply(f));
  }

  // type 1: lam x:0. x collapses to the identity stream
  TermPtr t1 = lam("x", T0, var("x", T0));
  Lowered l1 = lower_closed(t1, sig, env);
  REQUIRE(std::holds_alternative<Oracle1>(l1));
  Oracle1 s = std::get<Oracle1>(l1);
  for (std::uint64_t n = 0; n < 10; ++n) CHECK(s.at(n) == n);

  // type 0
  TermPtr t0 = app(lam("x", T0, var("x", T0)), nat(7));
  Lowered l0 = lower_closed(t0, sig, env);
  REQUIRE(std::holds_alternative<std::uint64_t>(l0));
  CHECK(std::get<std::uint64_t>(l0) == 7);
}

TEST_CASE("lower_closed on a bare type-2 parameter") {
  TypedSignature sig;
  sig["F"] = FiniteType::standard(2);
  Functional2 fv = Functional2::from_fn("f", [](const Oracle1& s) { return s.at(1) + 2; });
  Env env = Env().bind("F", Value(fv));
  Lowered l = lower_closed(param("F", FiniteType::standard(2)), sig, env);
  REQUIRE(std::holds_alternative<Type2Code>(l));
  Functional2 low = std::get<Type2Code>(l).functional(env);
  std::mt19937_64 rng(67);
  Oracle1 f = random_oracle(rng);
  CHECK(low.apply(f) == fv.apply(f));
}

TEST_CASE("qf_ac_witness") {
  TypedSignature sig;
  Env env;
  std::mt19937_64 rng(71);

  // x = y(0): the witness is b(0)
  FormulaPtr phi = feq(var("x", T0), app(var("y", T1), nat(0)));
  Type2Code g = qf_ac_witness(phi, "x", "y", sig, env);
  Functional2 gf = g.functional(env);
  for (int trial = 0; trial < 50; ++trial) {
    Oracle1 b = random_oracle(rng);
    CHECK(gf.apply(b) == b.at(0));
  }

  // integer square root: x*x <= y(0) < (x+1)*(x+1)
  FormulaPtr isq = fand(
      fnot(flt(app(var("y", T1), nat(0)), times(var("x", T0), var("x", T0)))),
      flt(app(var("y", T1), nat(0)),
          times(succ_term(var("x", T0)), succ_term(var("x", T0)))));
  Type2Code gi = qf_ac_witness(isq, "x", "y", sig, env);
  Functional2 gif = gi.functional(env);
  for (std::uint64_t n = 0; n < 60; ++n) {
    Oracle1 b = Oracle1::constant(n);
    std::uint64_t root = 0;
    while ((root + 1) * (root + 1) <= n) ++root;  // brute-force oracle
    CHECK(gif.apply(b) == root);
  }

  // trivially true formula: least witness 0
  FormulaPtr triv = feq(nat(0), nat(0));
  CHECK(qf_ac_witness(triv, "x", "y", sig, env).functional(env).apply(Oracle1::constant(5)) == 0);

  // no witness in range
  FormulaPtr never = flt(var("x", T0), nat(0));
  Type2Code gn = qf_ac_witness(never, "x", "y", sig, env, 100);
  CHECK_THROWS_WITH_AS(gn.functional(env).apply(Oracle1::constant(0)),
                       doctest::Contains("WitnessSearchExhausted"), hytw::error);

  // quantifiers are rejected
  FormulaPtr q = fexists_lt("z", nat(3), feq(var("z", T0), var("x", T0)));
  CHECK_THROWS_WITH_AS(qf_ac_witness(q, "x", "y", sig, env),
                       doctest::Contains("IllFormedFormula"), hytw::error);
}
