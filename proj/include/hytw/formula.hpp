#pragma once

#include "hytw/model.hpp"
#include "hytw/term.hpp"

namespace hytw::model {

enum class F0Kind { Eq, Lt, Not, And, Or, ExistsLt, ForallLt };

struct Formula0;
using FormulaPtr = std::shared_ptr<const Formula0>;

// Sigma^0_0 formulas: atomic (in)equalities between type-0 terms, boolean
// connectives, and bounded quantifiers over type 0. No type-1/2 equality by
// construction: atoms are between type-0 terms only.
struct Formula0 {
  F0Kind kind;
  terms::TermPtr lhs, rhs;  // atoms
  FormulaPtr f, g;          // connectives
  std::string var;          // bound variable of a quantifier
  terms::TermPtr bound;     // type-0 bound term
};

FormulaPtr feq(terms::TermPtr a, terms::TermPtr b);
FormulaPtr flt(terms::TermPtr a, terms::TermPtr b);
FormulaPtr fnot(FormulaPtr a);
FormulaPtr fand(FormulaPtr a, FormulaPtr b);
FormulaPtr for_(FormulaPtr a, FormulaPtr b);
FormulaPtr fexists_lt(std::string var, terms::TermPtr bound, FormulaPtr body);
FormulaPtr fforall_lt(std::string var, terms::TermPtr bound, FormulaPtr body);

// Declared free variables of a formula, in encoding order: type-0 variables
// first, then at most one type-1 variable last.
struct FormulaVars {
  std::vector<std::string> nat_vars;
  std::string stream_var;  // empty when absent
};

// Compile phi into a 0/1-valued functional F on packed arguments
// a_0 ^ a_1 ^ ... ^ a_{n-1} ^ b: F(args) = 1 iff phi holds. Bounded
// quantifiers run through prim_rec as a counting pass: the count of
// witnesses below the bound is folded up and compared with 0.
//
// Convention: atom terms refer to formula variables (declared and
// quantified) as free Var nodes carrying their type; they are bound
// positionally from the packed argument. Parameters resolve through env/sig
// as usual.
Functional2 represent_formula(const FormulaPtr& phi, const FormulaVars& vars,
                              const terms::TypedSignature& sig, const Env& env);

}  // namespace hytw::model
