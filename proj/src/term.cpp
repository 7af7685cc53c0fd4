#include "hytw/term.hpp"

#include <map>

#include "hytw/error.hpp"

namespace hytw::terms {

namespace {

TermPtr make(Term t) { return std::make_shared<const Term>(std::move(t)); }

}  // namespace

TermPtr nat(std::uint64_t n) { return make({TermKind::Nat, n, {}, {}, nullptr, nullptr}); }

TermPtr var(std::string name, FiniteType ty) {
  return make({TermKind::Var, 0, std::move(name), std::move(ty), nullptr, nullptr});
}

TermPtr param(std::string name, FiniteType ty) {
  return make({TermKind::Param, 0, std::move(name), std::move(ty), nullptr, nullptr});
}

TermPtr app(TermPtr fun, TermPtr arg) {
  return make({TermKind::App, 0, {}, {}, std::move(fun), std::move(arg)});
}

TermPtr lam(std::string name, FiniteType ty, TermPtr body) {
  return make({TermKind::Lam, 0, std::move(name), std::move(ty), std::move(body), nullptr});
}

TermPtr plus(TermPtr a, TermPtr b) { return make({TermKind::Plus, 0, {}, {}, std::move(a), std::move(b)}); }
TermPtr times(TermPtr a, TermPtr b) { return make({TermKind::Times, 0, {}, {}, std::move(a), std::move(b)}); }
TermPtr succ_term(TermPtr a) { return make({TermKind::Succ, 0, {}, {}, std::move(a), nullptr}); }
TermPtr less(TermPtr a, TermPtr b) { return make({TermKind::Less, 0, {}, {}, std::move(a), std::move(b)}); }
TermPtr concat_term(TermPtr head, TermPtr tail) {
  return make({TermKind::Concat, 0, {}, {}, std::move(head), std::move(tail)});
}
TermPtr star_term(TermPtr fun, TermPtr arg) {
  return make({TermKind::Star, 0, {}, {}, std::move(fun), std::move(arg)});
}

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TermKind::Nat:
      return a->nat == b->nat;
    case TermKind::Var:
    case TermKind::Param:
      return a->name == b->name && a->ty == b->ty;
    case TermKind::Lam:
      return a->name == b->name && a->ty == b->ty && equal(a->a, b->a);
    default:
      return equal(a->a, b->a) && equal(a->b, b->b);
  }
}

std::size_t term_size(const TermPtr& t) {
  if (!t) return 0;
  return 1 + term_size(t->a) + term_size(t->b);
}

namespace {

FiniteType type_of_rec(const TermPtr& t, const TypedSignature& sig,
                       std::map<std::string, FiniteType>& bound, bool open) {
  switch (t->kind) {
    case TermKind::Nat:
      return FiniteType::zero();
    case TermKind::Var: {
      auto it = bound.find(t->name);
      if (it == bound.end()) {
        if (open) return t->ty;
        raise("UnboundVariable", "variable '" + t->name + "' is not bound");
      }
      return it->second;
    }
    case TermKind::Param: {
      auto it = sig.find(t->name);
      if (it == sig.end())
        raise("UnboundVariable", "parameter '" + t->name + "' is not declared");
      if (!(it->second == t->ty))
        raise("TypeMismatch", "parameter '" + t->name + "' declared at a different type");
      return t->ty;
    }
    case TermKind::App: {
      FiniteType f = type_of_rec(t->a, sig, bound, open);
      FiniteType x = type_of_rec(t->b, sig, bound, open);
      if (!f.is_arrow())
        raise("TypeMismatch", "applied term of base type");
      if (!(f.domain() == x))
        raise("TypeMismatch", "argument type " + print_type(x) + " does not match domain " +
                                  print_type(f.domain()));
      return f.codomain();
    }
    case TermKind::Lam: {
      auto it = bound.find(t->name);
      std::optional<FiniteType> shadowed;
      if (it != bound.end()) shadowed = it->second;
      bound[t->name] = t->ty;
      FiniteType body = type_of_rec(t->a, sig, bound, open);
      if (shadowed)
        bound[t->name] = *shadowed;
      else
        bound.erase(t->name);
      return FiniteType::arrow(t->ty, body);
    }
    case TermKind::Plus:
    case TermKind::Times:
    case TermKind::Less: {
      FiniteType a = type_of_rec(t->a, sig, bound, open);
      FiniteType b = type_of_rec(t->b, sig, bound, open);
      if (!a.is_zero() || !b.is_zero())
        raise("TypeMismatch", "arithmetic on non-base type");
      return FiniteType::zero();
    }
    case TermKind::Succ: {
      if (!type_of_rec(t->a, sig, bound, open).is_zero())
        raise("TypeMismatch", "succ of non-base type");
      return FiniteType::zero();
    }
    case TermKind::Concat: {
      FiniteType h = type_of_rec(t->a, sig, bound, open);
      FiniteType tail = type_of_rec(t->b, sig, bound, open);
      if (!h.is_zero() || !(tail == FiniteType::standard(1)))
        raise("TypeMismatch", "cat expects a head of type 0 and a tail of type 1");
      return FiniteType::standard(1);
    }
    case TermKind::Star: {
      FiniteType f = type_of_rec(t->a, sig, bound, open);
      FiniteType r = type_of_rec(t->b, sig, bound, open);
      if (!(f == FiniteType::standard(2)) || !(r == FiniteType::standard(1)))
        raise("TypeMismatch", "star expects a type-2 functional and a type-1 argument");
      return FiniteType::standard(1);
    }
  }
  raise("TypeMismatch", "unreachable term kind");
}

}  // namespace

FiniteType type_of(const TermPtr& t, const TypedSignature& sig) {
  std::map<std::string, FiniteType> bound;
  return type_of_rec(t, sig, bound, false);
}

FiniteType type_of_open(const TermPtr& t, const TypedSignature& sig) {
  std::map<std::string, FiniteType> bound;
  return type_of_rec(t, sig, bound, true);
}

void for_each_subterm(const TermPtr& t, const std::function<void(const TermPtr&)>& f) {
  if (!t) return;
  f(t);
  for_each_subterm(t->a, f);
  for_each_subterm(t->b, f);
}

namespace {

void free_vars_rec(const TermPtr& t, std::set<std::string>& bound, std::set<std::string>& out) {
  if (!t) return;
  if (t->kind == TermKind::Var) {
    if (!bound.count(t->name)) out.insert(t->name);
    return;
  }
  if (t->kind == TermKind::Lam) {
    bool fresh = bound.insert(t->name).second;
    free_vars_rec(t->a, bound, out);
    if (fresh) bound.erase(t->name);
    return;
  }
  free_vars_rec(t->a, bound, out);
  free_vars_rec(t->b, bound, out);
}

}  // namespace

std::set<std::string> free_vars(const TermPtr& t) {
  std::set<std::string> bound, out;
  free_vars_rec(t, bound, out);
  return out;
}

std::set<std::string> param_names(const TermPtr& t) {
  std::set<std::string> out;
  for_each_subterm(t, [&](const TermPtr& s) {
    if (s->kind == TermKind::Param) out.insert(s->name);
  });
  return out;
}

std::set<std::string> binder_names(const TermPtr& t) {
  std::set<std::string> out;
  for_each_subterm(t, [&](const TermPtr& s) {
    if (s->kind == TermKind::Lam) out.insert(s->name);
  });
  return out;
}

bool contains_lam(const TermPtr& t) {
  if (!t) return false;
  if (t->kind == TermKind::Lam) return true;
  return contains_lam(t->a) || contains_lam(t->b);
}

std::string print_term(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Nat:
      return std::to_string(t->nat);
    case TermKind::Var:
    case TermKind::Param:
      return t->name;
    case TermKind::App:
      return "(" + print_term(t->a) + " " + print_term(t->b) + ")";
    case TermKind::Lam:
      return "(lam (" + t->name + " " + print_type(t->ty) + ") " + print_term(t->a) + ")";
    case TermKind::Plus:
      return "(+ " + print_term(t->a) + " " + print_term(t->b) + ")";
    case TermKind::Times:
      return "(* " + print_term(t->a) + " " + print_term(t->b) + ")";
    case TermKind::Succ:
      return "(succ " + print_term(t->a) + ")";
    case TermKind::Less:
      return "(< " + print_term(t->a) + " " + print_term(t->b) + ")";
    case TermKind::Concat:
      return "(cat " + print_term(t->a) + " " + print_term(t->b) + ")";
    case TermKind::Star:
      return "(star " + print_term(t->a) + " " + print_term(t->b) + ")";
  }
  return "?";
}

}  // namespace hytw::terms
