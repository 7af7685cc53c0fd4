#pragma once

#include <string>
#include <vector>

#include "hytw/term.hpp"

namespace hytw::terms {

// Concrete syntax: parenthesized prefix S-expressions.
//
//   term  := NUMBER | IDENT
//          | (lam (IDENT type) term)
//          | (+ term term) | (* term term) | (succ term) | (< term term)
//          | (cat term term) | (star term term)
//          | (term term)                      -- application
//   type  := 0 | (-> type type) | NUMBER      -- digits n>0 are the standard
//                                                shorthand for 0->0->...->0
//
// Identifiers resolve to bound variables inside lam scopes and to declared
// parameters otherwise. Rebinding a name that is already lambda-bound on the
// same path is a SyntaxError, as is an identifier that is neither bound nor
// declared.
FiniteType parse_type(const std::string& text);
TermPtr parse_term(const std::string& text, const TypedSignature& sig);

// A term file is a sequence of "param NAME TYPE" header lines followed by one
// S-expression per term. '#' starts a comment line.
struct TermFile {
  TypedSignature sig;
  std::vector<TermPtr> terms;
};

TermFile parse_term_file(const std::string& contents);
std::string print_term_file(const TermFile& f);

}  // namespace hytw::terms
