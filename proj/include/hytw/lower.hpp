#pragma once

#include <variant>

#include "hytw/formula.hpp"
#include "hytw/model.hpp"
#include "hytw/normalize.hpp"

namespace hytw::lower {

// A type-2 code: a closed term built from parameters, ^, star, arithmetic
// and type-0 binders, with at most one type-1 binder at the root. It codes a
// source term over the variable list (a_0, ..., a_{n-1}) plus a distinguished
// type-1 variable, against packed arguments a_0 ^ ... ^ a_{n-1} ^ b.
//
// The choice functional returned by qf_ac_witness has no term body (the term
// language has no search former); it carries a native payload that evaluates
// term-coded pieces.
struct Type2Code {
  terms::TermPtr code;  // null when the payload is native
  std::function<std::uint64_t(const model::Oracle1&)> native;
  terms::TermPtr source;
  std::vector<std::string> vars;
  std::string stream_var;

  model::Functional2 functional(const model::Env& env) const;
};

// Code a normal term of type 0 or 1 whose free variables lie in
// vars + {stream_var}. The recursion cases: direct wrapping for lambda-free
// bases, pointwise combination for arithmetic, variable-list extension for
// type-0 binders, stream composition for applications of type-1 terms and
// type-2 parameters. The coding equation (checked in the tests):
//   type 0:  F(a_0^...^a_{n-1}^b) = t[a_i/x_i, b/y]
//   type 1:  (F*(a_0^...^a_{n-1}^b))(k) = t[a_i/x_i, b/y](k)
// Throws NotNormal, NonStandardSubterm.
Type2Code code_term(const terms::TermPtr& t, std::vector<std::string> vars,
                    const std::string& stream_var, const terms::TypedSignature& sig);

using Lowered = std::variant<std::uint64_t, model::Oracle1, Type2Code>;

// Normalize a closed term of type <= 2 and collapse it: type 2 becomes a
// Type2Code, type 1 the stream k -> F(k^0bar), type 0 the number F(0bar).
// env supplies parameter values (needed for the type-<=1 collapses).
Lowered lower_closed(const terms::TermPtr& t, const terms::TypedSignature& sig,
                     const model::Env& env);

inline constexpr std::uint64_t kDefaultWitnessBound = 10'000;

// Choice functional for a quantifier-free formula over free variables
// x (type 0) and y (type 1): codes each maximal type-0 term of phi, rebuilds
// the formula over the codes, and searches for the least witness x below
// search_bound. Throws WitnessSearchExhausted when some tested oracle has no
// witness in range.
Type2Code qf_ac_witness(const model::FormulaPtr& phi, const std::string& x, const std::string& y,
                        const terms::TypedSignature& sig, const model::Env& env,
                        std::uint64_t search_bound = kDefaultWitnessBound);

// Structural purity: no nonstandard-type subterm, no type-1 binder except
// possibly one at the root, all other binders of type 0.
bool code_is_pure(const terms::TermPtr& code, const terms::TypedSignature& sig);

}  // namespace hytw::lower
