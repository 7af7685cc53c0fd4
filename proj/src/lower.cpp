#include "hytw/lower.hpp"

#include <algorithm>

#include "hytw/error.hpp"

namespace hytw::lower {

using model::Env;
using model::Functional2;
using model::Oracle1;
using terms::FiniteType;
using terms::TermKind;
using terms::TermPtr;
using terms::TypedSignature;

namespace {

std::string fresh_name(const std::string& base, const std::set<std::string>& used) {
  if (!used.count(base)) return base;
  for (std::uint64_t k = 1;; ++k) {
    std::string c = base + std::to_string(k);
    if (!used.count(c)) return c;
  }
}

struct Coder {
  TypedSignature sig;  // extended with the variable list and the stream var
  std::string y;       // distinguished type-1 variable
  std::string u;       // packed-argument binder of the emitted code
  std::string z;       // scratch type-0 binder

  TermPtr u_var() const { return terms::var(u, FiniteType::standard(1)); }

  TermPtr u_at(std::uint64_t i) const { return terms::app(u_var(), terms::nat(i)); }

  // lambda z. u(n + z): the tail of the packed argument after n positions
  TermPtr tail(std::uint64_t n) const {
    return terms::lam(z, FiniteType::zero(),
                      terms::app(u_var(), terms::plus(terms::nat(n), terms::var(z, FiniteType::zero()))));
  }

  // x_i -> u(i + shift), y -> tail(n + shift)
  TermPtr subst_pack(const TermPtr& t, const std::vector<std::string>& vars,
                     std::uint64_t shift) const {
    TermPtr out = t;
    for (std::size_t i = 0; i < vars.size(); ++i)
      out = terms::substitute(out, vars[i], u_at(i + shift));
    if (terms::free_vars(out).count(y))
      out = terms::substitute(out, y, tail(vars.size() + shift));
    return out;
  }

  FiniteType ty_of(const TermPtr& t) const { return terms::type_of_open(t, sig); }

  // body with the semantics F(u) = t[x_i := u(i), y := u-tail], t of type 0
  TermPtr code0(const TermPtr& t, const std::vector<std::string>& vars) const {
    switch (t->kind) {
      case TermKind::Plus:
      case TermKind::Times:
      case TermKind::Less: {
        TermPtr a = code0(t->a, vars);
        TermPtr b = code0(t->b, vars);
        if (t->kind == TermKind::Plus) return terms::plus(a, b);
        if (t->kind == TermKind::Times) return terms::times(a, b);
        return terms::less(a, b);
      }
      case TermKind::Succ:
        return terms::succ_term(code0(t->a, vars));
      case TermKind::App: {
        FiniteType ft = ty_of(t->a);
        if (ft == FiniteType::standard(1)) {
          // t = s0(s1): F(u) = F0(F1(u) ^ u)
          TermPtr b0 = code1(t->a, vars);
          TermPtr b1 = code0(t->b, vars);
          return terms::substitute(b0, u, terms::concat_term(b1, u_var()));
        }
        if (ft == FiniteType::standard(2)) {
          // only a bare parameter can sit at type 2 inside a normal term
          if (t->a->kind != TermKind::Param)
            raise("NonStandardSubterm", "type-2 position held by a non-parameter");
          // t = G(s1): F(u) = G(lambda k. F1(k ^ u))
          TermPtr b1 = code1(t->b, vars);
          TermPtr kv = terms::var(z, FiniteType::zero());
          TermPtr stream = terms::lam(
              z, FiniteType::zero(),
              terms::substitute(b1, u, terms::concat_term(kv, u_var())));
          return terms::app(t->a, stream);
        }
        raise("NonStandardSubterm", "application head of type " + terms::print_type(ft));
      }
      default:
        // atomic: literal, variable from the list, or a type-0 parameter
        return subst_pack(t, vars, 0);
    }
  }

  // body with the semantics F(u) = t[x_i := u(i+1), y := u-tail](u(0)), t of type 1
  TermPtr code1(const TermPtr& t, const std::vector<std::string>& vars) const {
    if (t->kind == TermKind::Lam) {
      if (!t->ty.is_zero())
        raise("NonStandardSubterm", "type-1 subterm binds a variable of type != 0");
      // variable-list extension: the binder becomes the first list entry
      std::vector<std::string> extended;
      extended.push_back(t->name);
      extended.insert(extended.end(), vars.begin(), vars.end());
      return code0(t->a, extended);
    }
    // direct wrapping, applied at u(0) with every argument shifted one slot
    return terms::app(subst_pack(t, vars, 1), u_at(0));
  }
};

void validate_codable(const TermPtr& t, const TypedSignature& sig) {
  if (!terms::is_normal(t)) raise("NotNormal", "code_term requires a normal term");
  terms::StructureReport rep = terms::check_normal_structure(t, sig);
  if (!rep.subterms_standard_type || !rep.subterm_types_le_2)
    raise("NonStandardSubterm", "term has a subterm outside the standard types 0, 1, 2");
  if (!rep.bound_vars_type0)
    raise("NonStandardSubterm", "term binds a variable of type != 0");
}

}  // namespace

Functional2 Type2Code::functional(const Env& env) const {
  if (!code) return Functional2::from_fn("witness", native);
  return model::eval_functional(code, env);
}

Type2Code code_term(const TermPtr& t, std::vector<std::string> vars,
                    const std::string& stream_var, const TypedSignature& sig) {
  TypedSignature extended = sig;
  for (const auto& v : vars) extended[v] = FiniteType::zero();
  extended[stream_var] = FiniteType::standard(1);

  validate_codable(t, extended);
  FiniteType ty = terms::type_of_open(t, extended);
  auto idx = terms::standard_index(ty);
  if (!idx || *idx > 1) raise("NonStandardSubterm", "code_term requires type 0 or 1");

  for (const auto& v : terms::free_vars(t)) {
    if (v != stream_var && std::find(vars.begin(), vars.end(), v) == vars.end())
      raise("NonStandardSubterm", "free variable '" + v + "' outside the variable list");
  }

  std::set<std::string> used = terms::binder_names(t);
  for (const auto& v : terms::free_vars(t)) used.insert(v);
  for (const auto& v : terms::param_names(t)) used.insert(v);
  for (const auto& v : vars) used.insert(v);
  used.insert(stream_var);

  Coder c;
  c.sig = extended;
  c.y = stream_var;
  c.u = fresh_name("u", used);
  used.insert(c.u);
  c.z = fresh_name("k", used);

  TermPtr body = *idx == 0 ? c.code0(t, vars) : c.code1(t, vars);
  TermPtr code = terms::normalize(terms::lam(c.u, FiniteType::standard(1), body)).term;

  Type2Code out;
  out.code = code;
  out.source = t;
  out.vars = std::move(vars);
  out.stream_var = stream_var;
  return out;
}

Lowered lower_closed(const TermPtr& t, const TypedSignature& sig, const Env& env) {
  FiniteType ty = terms::type_of(t, sig);
  auto idx = terms::standard_index(ty);
  if (!idx || *idx > 2) raise("TypeMismatch", "lower_closed requires a closed term of type <= 2");
  if (!terms::free_vars(t).empty()) raise("TypeMismatch", "lower_closed requires a closed term");

  TermPtr nf = terms::normalize(t).term;
  if (*idx == 2) {
    if (nf->kind == TermKind::Lam) {
      Type2Code code = code_term(nf->a, {}, nf->name, sig);
      code.source = t;
      return code;
    }
    // lambda-free closed type-2 term (a parameter): already its own code
    Type2Code out;
    out.code = nf;
    out.source = t;
    return out;
  }

  std::set<std::string> used = terms::binder_names(nf);
  for (const auto& p : terms::param_names(nf)) used.insert(p);
  std::string y = fresh_name("y", used);

  if (*idx == 1) {
    // two-step collapse: wrap as lambda y. t(y(0)), lower at type 2, then
    // read the stream off as k -> F(k ^ 0bar)
    TermPtr wrapped = terms::lam(
        y, FiniteType::standard(1),
        terms::app(nf, terms::app(terms::var(y, FiniteType::standard(1)), terms::nat(0))));
    Type2Code code = std::get<Type2Code>(lower_closed(wrapped, sig, env));
    Functional2 f = code.functional(env);
    return Oracle1::from_rule([f](std::uint64_t k) {
      return f.apply(model::concat(k, Oracle1::constant(0)));
    });
  }

  TermPtr wrapped = terms::lam(y, FiniteType::standard(1), nf);
  Type2Code code = std::get<Type2Code>(lower_closed(wrapped, sig, env));
  return code.functional(env).apply(Oracle1::constant(0));
}

Type2Code qf_ac_witness(const model::FormulaPtr& phi, const std::string& x, const std::string& y,
                        const TypedSignature& sig, const Env& env, std::uint64_t search_bound) {
  // collect the maximal type-0 terms (the atom sides), coding each one once
  std::vector<TermPtr> atoms;
  std::function<void(const model::FormulaPtr&)> collect = [&](const model::FormulaPtr& p) {
    if (!p) raise("IllFormedFormula", "null formula node");
    switch (p->kind) {
      case model::F0Kind::Eq:
      case model::F0Kind::Lt:
        for (const TermPtr& side : {p->lhs, p->rhs}) {
          bool seen = false;
          for (const auto& a : atoms) seen = seen || terms::equal(a, side);
          if (!seen) atoms.push_back(side);
        }
        break;
      case model::F0Kind::Not:
        collect(p->f);
        break;
      case model::F0Kind::And:
      case model::F0Kind::Or:
        collect(p->f);
        collect(p->g);
        break;
      default:
        raise("IllFormedFormula", "witness extraction requires a quantifier-free formula");
    }
  };
  collect(phi);

  std::vector<Functional2> coded;
  for (const auto& a : atoms) {
    TermPtr nf = terms::normalize(a).term;
    coded.push_back(code_term(nf, {x}, y, sig).functional(env));
  }
  auto holds_shared =
      std::make_shared<std::function<bool(const model::FormulaPtr&, const Oracle1&)>>();
  *holds_shared = [atoms, coded](const model::FormulaPtr& p, const Oracle1& packed) -> bool {
    std::function<std::uint64_t(const TermPtr&)> av = [&](const TermPtr& side) -> std::uint64_t {
      for (std::size_t i = 0; i < atoms.size(); ++i)
        if (terms::equal(atoms[i], side)) return coded[i].apply(packed);
      raise("IllFormedFormula", "atom term vanished during coding");
    };
    std::function<bool(const model::FormulaPtr&)> go = [&](const model::FormulaPtr& q) -> bool {
      switch (q->kind) {
        case model::F0Kind::Eq:
          return av(q->lhs) == av(q->rhs);
        case model::F0Kind::Lt:
          return av(q->lhs) < av(q->rhs);
        case model::F0Kind::Not:
          return !go(q->f);
        case model::F0Kind::And:
          return go(q->f) && go(q->g);
        case model::F0Kind::Or:
          return go(q->f) || go(q->g);
        default:
          raise("IllFormedFormula", "witness extraction requires a quantifier-free formula");
      }
    };
    return go(p);
  };

  Type2Code out;
  out.source = nullptr;
  out.vars = {x};
  out.stream_var = y;
  out.native = [phi, holds_shared, search_bound](const Oracle1& b) -> std::uint64_t {
    for (std::uint64_t a = 0; a < search_bound; ++a) {
      if ((*holds_shared)(phi, model::concat(a, b))) return a;
    }
    raise("WitnessSearchExhausted",
          "no witness below " + std::to_string(search_bound));
  };
  return out;
}

bool code_is_pure(const TermPtr& code, const TypedSignature& sig) {
  TermPtr body = code;
  if (code->kind == TermKind::Lam && code->ty == FiniteType::standard(1)) body = code->a;
  try {
    terms::StructureReport rep = terms::check_normal_structure(body, sig);
    return rep.subterms_standard_type && rep.subterm_types_le_2 && rep.bound_vars_type0;
  } catch (const error&) {
    return false;
  }
}

}  // namespace hytw::lower
