#include "hytw/normalize.hpp"

#include <map>
#include <optional>

#include "hytw/error.hpp"

namespace hytw::terms {

namespace {

std::string strip_suffix(const std::string& name) {
  auto i = name.find('$');
  return i == std::string::npos ? name : name.substr(0, i);
}

TermPtr rebuild(const TermPtr& t, TermPtr a, TermPtr b) {
  if (a == t->a && b == t->b) return t;
  auto n = std::make_shared<Term>(*t);
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

TermPtr subst_rec(const TermPtr& t, const std::string& x, const TermPtr& s,
                  const std::set<std::string>& s_free) {
  if (!t) return t;
  switch (t->kind) {
    case TermKind::Var:
      return t->name == x ? s : t;
    case TermKind::Nat:
    case TermKind::Param:
      return t;
    case TermKind::Lam: {
      if (t->name == x) return t;  // x shadowed below here
      if (s_free.count(t->name)) {
        // binder would capture a free variable of s; rename it first
        std::set<std::string> avoid = s_free;
        for (const auto& v : free_vars(t->a)) avoid.insert(v);
        for (const auto& v : binder_names(t->a)) avoid.insert(v);
        std::string base = strip_suffix(t->name);
        std::string fresh;
        for (std::uint64_t k = 1;; ++k) {
          fresh = base + "$" + std::to_string(k);
          if (!avoid.count(fresh)) break;
        }
        std::set<std::string> rn_free = {fresh};
        TermPtr body = subst_rec(t->a, t->name, var(fresh, t->ty), rn_free);
        return lam(fresh, t->ty, subst_rec(body, x, s, s_free));
      }
      return rebuild(t, subst_rec(t->a, x, s, s_free), nullptr);
    }
    default:
      return rebuild(t, subst_rec(t->a, x, s, s_free), subst_rec(t->b, x, s, s_free));
  }
}

bool is_redex(const TermPtr& t) {
  return t->kind == TermKind::App && t->a->kind == TermKind::Lam;
}

std::string join_path(const std::vector<int>& path) {
  if (path.empty()) return ".";
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += ".";
    out += std::to_string(path[i]);
  }
  return out;
}

struct StepResult {
  TermPtr term;
  std::string path;
};

TermPtr contract(const TermPtr& t) {
  return substitute(t->a->a, t->a->name, t->b);
}

std::optional<StepResult> step_lo(const TermPtr& t, std::vector<int>& path) {
  if (!t) return std::nullopt;
  if (is_redex(t)) return StepResult{contract(t), join_path(path)};
  const TermPtr* kids[2] = {&t->a, &t->b};
  for (int i = 0; i < 2; ++i) {
    if (!*kids[i]) continue;
    path.push_back(i);
    auto r = step_lo(*kids[i], path);
    path.pop_back();
    if (r) {
      r->term = rebuild(t, i == 0 ? r->term : t->a, i == 1 ? r->term : t->b);
      return r;
    }
  }
  return std::nullopt;
}

std::optional<StepResult> step_ri(const TermPtr& t, std::vector<int>& path) {
  if (!t) return std::nullopt;
  const TermPtr* kids[2] = {&t->b, &t->a};
  const int idx[2] = {1, 0};
  for (int i = 0; i < 2; ++i) {
    if (!*kids[i]) continue;
    path.push_back(idx[i]);
    auto r = step_ri(*kids[i], path);
    path.pop_back();
    if (r) {
      r->term = rebuild(t, idx[i] == 0 ? r->term : t->a, idx[i] == 1 ? r->term : t->b);
      return r;
    }
  }
  if (is_redex(t)) return StepResult{contract(t), join_path(path)};
  return std::nullopt;
}

// Deterministic binder renaming: keep the original base name when it is not
// already taken on the current path (and collides with no free/parameter
// name), otherwise append $k. Reduction-strategy independent because bases
// survive capture-avoidance renames.
struct Canonicalizer {
  std::set<std::string> reserved;
  std::set<std::string> in_scope;
  std::map<std::string, std::vector<std::string>> rename;  // old -> stack of new

  TermPtr walk(const TermPtr& t) {
    if (!t) return t;
    switch (t->kind) {
      case TermKind::Var: {
        auto it = rename.find(t->name);
        if (it != rename.end() && !it->second.empty() && it->second.back() != t->name)
          return var(it->second.back(), t->ty);
        return t;
      }
      case TermKind::Nat:
      case TermKind::Param:
        return t;
      case TermKind::Lam: {
        std::string base = strip_suffix(t->name);
        std::string chosen = base;
        for (std::uint64_t k = 1; in_scope.count(chosen) || reserved.count(chosen); ++k)
          chosen = base + "$" + std::to_string(k);
        rename[t->name].push_back(chosen);
        in_scope.insert(chosen);
        TermPtr body = walk(t->a);
        in_scope.erase(chosen);
        rename[t->name].pop_back();
        if (chosen == t->name && body == t->a) return t;
        return lam(chosen, t->ty, body);
      }
      default:
        return rebuild(t, walk(t->a), walk(t->b));
    }
  }
};

TermPtr canonicalize_binders(const TermPtr& t) {
  Canonicalizer c;
  c.reserved = param_names(t);
  for (const auto& v : free_vars(t)) c.reserved.insert(v);
  return c.walk(t);
}

// Arithmetic on literal operands is computed out after beta-reduction is
// done; these folds are not beta steps and are not traced.
TermPtr fold_literals(const TermPtr& t) {
  if (!t) return t;
  TermPtr a = fold_literals(t->a);
  TermPtr b = fold_literals(t->b);
  auto lit = [](const TermPtr& x, std::uint64_t& v) {
    if (x && x->kind == TermKind::Nat) {
      v = x->nat;
      return true;
    }
    return false;
  };
  std::uint64_t x = 0, y = 0;
  switch (t->kind) {
    case TermKind::Plus:
      if (lit(a, x) && lit(b, y)) return nat(x + y);
      break;
    case TermKind::Times:
      if (lit(a, x) && lit(b, y)) return nat(x * y);
      break;
    case TermKind::Succ:
      if (lit(a, x)) return nat(x + 1);
      break;
    case TermKind::Less:
      if (lit(a, x) && lit(b, y)) return nat(x < y ? 1 : 0);
      break;
    default:
      break;
  }
  return rebuild(t, a, b);
}

}  // namespace

TermPtr substitute(const TermPtr& t, const std::string& x, const TermPtr& s) {
  return subst_rec(t, x, s, free_vars(s));
}

bool is_normal(const TermPtr& t) {
  if (!t) return true;
  if (is_redex(t)) return false;
  return is_normal(t->a) && is_normal(t->b);
}

NormalizeResult normalize(const TermPtr& t, std::uint64_t budget, Strategy strategy,
                          bool record_trace) {
  NormalizeResult out;
  TermPtr cur = t;
  std::vector<int> path;
  for (;;) {
    auto r = strategy == Strategy::LeftmostOutermost ? step_lo(cur, path) : step_ri(cur, path);
    if (!r) break;
    if (++out.trace.step_count > budget)
      raise("StepBudgetExceeded",
            "no normal form within " + std::to_string(budget) + " steps");
    cur = r->term;
    if (record_trace) out.trace.steps.push_back({r->path, cur});
  }
  out.term = canonicalize_binders(fold_literals(cur));
  return out;
}

namespace {

struct StructureAcc {
  bool has_redex = false;
  bool all_standard = true;
  bool all_le_2 = true;
  bool binders_type0 = true;
  bool binders_le_type1 = true;
  unsigned type1_binders = 0;
};

FiniteType structure_walk(const TermPtr& t, const TypedSignature& sig,
                          std::map<std::string, FiniteType>& bound, StructureAcc& acc) {
  if (is_redex(t)) acc.has_redex = true;
  FiniteType ty;
  switch (t->kind) {
    case TermKind::Nat:
      ty = FiniteType::zero();
      break;
    case TermKind::Var: {
      auto it = bound.find(t->name);
      ty = it != bound.end() ? it->second : t->ty;  // free variables keep their recorded type
      break;
    }
    case TermKind::Param: {
      auto it = sig.find(t->name);
      ty = it != sig.end() ? it->second : t->ty;
      break;
    }
    case TermKind::App: {
      FiniteType f = structure_walk(t->a, sig, bound, acc);
      structure_walk(t->b, sig, bound, acc);
      if (!f.is_arrow()) raise("TypeMismatch", "applied term of base type");
      ty = f.codomain();
      break;
    }
    case TermKind::Lam: {
      if (!t->ty.is_zero()) {
        if (t->ty == FiniteType::standard(1))
          ++acc.type1_binders;
        else
          acc.binders_le_type1 = false;
        acc.binders_type0 = false;
      }
      auto it = bound.find(t->name);
      std::optional<FiniteType> shadowed;
      if (it != bound.end()) shadowed = it->second;
      bound[t->name] = t->ty;
      FiniteType body = structure_walk(t->a, sig, bound, acc);
      if (shadowed)
        bound[t->name] = *shadowed;
      else
        bound.erase(t->name);
      ty = FiniteType::arrow(t->ty, body);
      break;
    }
    case TermKind::Concat:
      structure_walk(t->a, sig, bound, acc);
      structure_walk(t->b, sig, bound, acc);
      ty = FiniteType::standard(1);
      break;
    case TermKind::Star:
      structure_walk(t->a, sig, bound, acc);
      structure_walk(t->b, sig, bound, acc);
      ty = FiniteType::standard(1);
      break;
    default:  // arithmetic
      structure_walk(t->a, sig, bound, acc);
      if (t->b) structure_walk(t->b, sig, bound, acc);
      ty = FiniteType::zero();
      break;
  }
  if (!is_standard(ty)) acc.all_standard = false;
  auto idx = standard_index(ty);
  if (!idx || *idx > 2) acc.all_le_2 = false;
  return ty;
}

}  // namespace

StructureReport check_normal_structure(const TermPtr& t, const TypedSignature& sig) {
  if (!is_normal(t)) raise("NotNormal", "term has a beta redex");
  StructureAcc acc;
  std::map<std::string, FiniteType> bound;
  structure_walk(t, sig, bound, acc);
  StructureReport r;
  r.subterms_normal = !acc.has_redex;
  r.subterms_standard_type = acc.all_standard;
  r.bound_vars_type0 = acc.binders_type0;
  r.at_most_one_type1_binder = acc.binders_le_type1 && acc.type1_binders <= 1;
  r.subterm_types_le_2 = acc.all_le_2;
  return r;
}

}  // namespace hytw::terms
