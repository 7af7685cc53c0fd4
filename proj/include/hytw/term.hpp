#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "hytw/type.hpp"

namespace hytw::terms {

enum class TermKind {
  Nat,     // literal
  Var,     // lambda-bindable variable (carries its declared type)
  Param,   // model parameter, resolved through an environment
  App,     // a = fun, b = arg
  Lam,     // name : ty bound in a
  Plus,    // a + b          (type 0)
  Times,   // a * b          (type 0)
  Succ,    // a + 1          (type 0)
  Less,    // 0/1-valued a<b (type 0)
  Concat,  // a ^ b : head of type 0, tail of type 1, result type 1
  Star,    // a * b : fun of type 2, arg of type 1, result type 1
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  TermKind kind;
  std::uint64_t nat = 0;  // Nat
  std::string name;       // Var / Param / Lam binder
  FiniteType ty;          // Var / Param type, Lam binder type
  TermPtr a, b;           // children
};

// Constructors perform no type checking; type_of validates.
TermPtr nat(std::uint64_t n);
TermPtr var(std::string name, FiniteType ty);
TermPtr param(std::string name, FiniteType ty);
TermPtr app(TermPtr fun, TermPtr arg);
TermPtr lam(std::string name, FiniteType ty, TermPtr body);
TermPtr plus(TermPtr a, TermPtr b);
TermPtr times(TermPtr a, TermPtr b);
TermPtr succ_term(TermPtr a);
TermPtr less(TermPtr a, TermPtr b);
TermPtr concat_term(TermPtr head, TermPtr tail);
TermPtr star_term(TermPtr fun, TermPtr arg);

bool equal(const TermPtr& a, const TermPtr& b);
std::size_t term_size(const TermPtr& t);

// Unique type of a well-typed term. Throws TypeMismatch on ill-typed
// applications/operands, UnboundVariable on variables that are not
// lambda-bound and on parameters missing from the signature.
FiniteType type_of(const TermPtr& t, const TypedSignature& sig);

// Like type_of, but free variables are typed by the type recorded on the
// Var node instead of raising UnboundVariable.
FiniteType type_of_open(const TermPtr& t, const TypedSignature& sig);

std::set<std::string> free_vars(const TermPtr& t);
std::set<std::string> param_names(const TermPtr& t);
std::set<std::string> binder_names(const TermPtr& t);
bool contains_lam(const TermPtr& t);

// visit every subterm (preorder)
void for_each_subterm(const TermPtr& t, const std::function<void(const TermPtr&)>& f);

std::string print_term(const TermPtr& t);

}  // namespace hytw::terms
