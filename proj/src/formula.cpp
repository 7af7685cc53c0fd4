#include "hytw/formula.hpp"

#include <algorithm>

#include "hytw/error.hpp"

namespace hytw::model {

using terms::FiniteType;
using terms::TermPtr;

namespace {

FormulaPtr mk(Formula0 f) { return std::make_shared<const Formula0>(std::move(f)); }

}  // namespace

FormulaPtr feq(TermPtr a, TermPtr b) {
  return mk({F0Kind::Eq, std::move(a), std::move(b), nullptr, nullptr, {}, nullptr});
}
FormulaPtr flt(TermPtr a, TermPtr b) {
  return mk({F0Kind::Lt, std::move(a), std::move(b), nullptr, nullptr, {}, nullptr});
}
FormulaPtr fnot(FormulaPtr a) {
  return mk({F0Kind::Not, nullptr, nullptr, std::move(a), nullptr, {}, nullptr});
}
FormulaPtr fand(FormulaPtr a, FormulaPtr b) {
  return mk({F0Kind::And, nullptr, nullptr, std::move(a), std::move(b), {}, nullptr});
}
FormulaPtr for_(FormulaPtr a, FormulaPtr b) {
  return mk({F0Kind::Or, nullptr, nullptr, std::move(a), std::move(b), {}, nullptr});
}
FormulaPtr fexists_lt(std::string var, TermPtr bound, FormulaPtr body) {
  return mk({F0Kind::ExistsLt, nullptr, nullptr, std::move(body), nullptr, std::move(var),
             std::move(bound)});
}
FormulaPtr fforall_lt(std::string var, TermPtr bound, FormulaPtr body) {
  return mk({F0Kind::ForallLt, nullptr, nullptr, std::move(body), nullptr, std::move(var),
             std::move(bound)});
}

namespace {

void check_atom_types(const FormulaPtr& phi, const FormulaVars& vars,
                      const terms::TypedSignature& sig,
                      std::vector<std::string>& quantified) {
  if (!phi) raise("IllFormedFormula", "null formula node");
  switch (phi->kind) {
    case F0Kind::Eq:
    case F0Kind::Lt: {
      terms::TypedSignature extended = sig;
      for (const auto& v : vars.nat_vars) extended[v] = FiniteType::zero();
      if (!vars.stream_var.empty()) extended[vars.stream_var] = FiniteType::standard(1);
      for (const auto& v : quantified) extended[v] = FiniteType::zero();
      for (const TermPtr& side : {phi->lhs, phi->rhs}) {
        FiniteType ty = terms::type_of_open(side, extended);
        if (!ty.is_zero()) raise("IllFormedFormula", "atom term of type != 0");
      }
      break;
    }
    case F0Kind::Not:
      check_atom_types(phi->f, vars, sig, quantified);
      break;
    case F0Kind::And:
    case F0Kind::Or:
      check_atom_types(phi->f, vars, sig, quantified);
      check_atom_types(phi->g, vars, sig, quantified);
      break;
    case F0Kind::ExistsLt:
    case F0Kind::ForallLt: {
      quantified.push_back(phi->var);
      check_atom_types(phi->f, vars, sig, quantified);
      quantified.pop_back();
      break;
    }
  }
}

std::uint64_t truth(const FormulaPtr& phi, const Env& env) {
  switch (phi->kind) {
    case F0Kind::Eq:
      return eval_nat(phi->lhs, env) == eval_nat(phi->rhs, env) ? 1 : 0;
    case F0Kind::Lt:
      return eval_nat(phi->lhs, env) < eval_nat(phi->rhs, env) ? 1 : 0;
    case F0Kind::Not:
      return 1 - truth(phi->f, env);
    case F0Kind::And:
      return truth(phi->f, env) & truth(phi->g, env);
    case F0Kind::Or:
      return truth(phi->f, env) | truth(phi->g, env);
    case F0Kind::ExistsLt:
    case F0Kind::ForallLt: {
      std::uint64_t bound = eval_nat(phi->bound, env);
      // counting pass: witnesses (failures for the universal case) below the
      // bound are accumulated through prim_rec and compared with 0
      bool universal = phi->kind == F0Kind::ForallLt;
      Oracle1 counts = prim_rec(0, [phi, env, universal](std::uint64_t acc, std::uint64_t k) {
        std::uint64_t v = truth(phi->f, env.bind(phi->var, Value(k)));
        return acc + (universal ? 1 - v : v);
      });
      std::uint64_t c = counts.at(bound);
      return universal ? (c == 0 ? 1 : 0) : (c > 0 ? 1 : 0);
    }
  }
  raise("IllFormedFormula", "unreachable formula kind");
}

}  // namespace

Functional2 represent_formula(const FormulaPtr& phi, const FormulaVars& vars,
                              const terms::TypedSignature& sig, const Env& env) {
  std::vector<std::string> quantified;
  check_atom_types(phi, vars, sig, quantified);
  FormulaVars v = vars;
  Env base = env;
  return Functional2::from_fn("formula", [phi, v, base](const Oracle1& u) {
    Env e = base;
    for (std::size_t i = 0; i < v.nat_vars.size(); ++i) e = e.bind(v.nat_vars[i], Value(u.at(i)));
    if (!v.stream_var.empty()) {
      std::uint64_t n = v.nat_vars.size();
      e = e.bind(v.stream_var,
                 Value(Oracle1::from_rule([u, n](std::uint64_t j) { return u.at(n + j); })));
    }
    return truth(phi, e);
  });
}

}  // namespace hytw::model
