#include "hytw/model.hpp"

#include <cmath>

#include "hytw/error.hpp"

namespace hytw::model {

using terms::TermKind;
using terms::TermPtr;

std::uint64_t cantor_pair(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s * (s + 1) / 2 + b;
}

std::uint64_t cantor_fst(std::uint64_t p) {
  std::uint64_t w = static_cast<std::uint64_t>((std::sqrt(8.0 * static_cast<double>(p) + 1) - 1) / 2);
  while (w * (w + 1) / 2 > p) --w;
  while ((w + 1) * (w + 2) / 2 <= p) ++w;
  std::uint64_t b = p - w * (w + 1) / 2;
  return w - b;
}

std::uint64_t cantor_snd(std::uint64_t p) {
  std::uint64_t w = static_cast<std::uint64_t>((std::sqrt(8.0 * static_cast<double>(p) + 1) - 1) / 2);
  while (w * (w + 1) / 2 > p) --w;
  while ((w + 1) * (w + 2) / 2 <= p) ++w;
  return p - w * (w + 1) / 2;
}

Oracle1 concat(std::uint64_t k, const Oracle1& r) {
  return Oracle1::from_rule([k, r](std::uint64_t n) { return n == 0 ? k : r.at(n - 1); });
}

Oracle1 star(const Functional2& f, const Oracle1& r) {
  return Oracle1::from_rule([f, r](std::uint64_t k) { return f.apply(concat(k, r)); });
}

Oracle1 prim_rec(std::uint64_t x, std::function<std::uint64_t(std::uint64_t, std::uint64_t)> g) {
  return Oracle1::from_rule([x, g = std::move(g)](std::uint64_t n) {
    std::uint64_t acc = x;
    for (std::uint64_t k = 0; k < n; ++k) acc = g(acc, k);
    return acc;
  });
}

Oracle1 diag_real(const Functional2& f) {
  Functional2 i = Functional2::from_fn("I", [](const Oracle1& s) { return s.at(1); });
  return Oracle1::from_rule([f, i](std::uint64_t n) {
    return f.apply(star(i, concat(n, Oracle1::constant(0))));
  });
}

Oracle1 row_extract(const Oracle1& r, std::uint64_t k) {
  return Oracle1::from_rule([r, k](std::uint64_t i) { return r.at(2 + cantor_pair(k, i)); });
}

Functional2 shift_functional(std::uint64_t n) {
  return Functional2::from_fn("P_" + std::to_string(n), [n](const Oracle1& s) {
    return s.at(n + s.at(0) + 1);
  });
}

Functional2 rearrange_functional(const std::vector<std::uint64_t>& pi) {
  return Functional2::from_fn("R_pi", [pi](const Oracle1& s) {
    std::uint64_t i = s.at(0);
    std::uint64_t j = i < pi.size() ? pi[i] : i;
    return s.at(j + 1);
  });
}

namespace {

struct Fuel {
  std::shared_ptr<std::uint64_t> left;
  std::uint64_t initial;

  explicit Fuel(std::uint64_t n) : left(std::make_shared<std::uint64_t>(n)), initial(n) {}

  void tick() const {
    if (*left == 0)
      raise("NonterminationBudget",
            "evaluation exceeded " + std::to_string(initial) + " steps");
    --*left;
  }
};

Value eval_rec(const TermPtr& t, const Env& env, const Fuel& fuel);

// Lambdas evaluate to closures; a closure becomes a model value (stream or
// functional) at the point one is demanded.
Oracle1 as_oracle(const Value& v, const Fuel& fuel) {
  if (v.is_oracle()) return v.oracle();
  if (auto cl = std::get_if<std::shared_ptr<const Closure>>(&v)) {
    auto c = *cl;
    std::uint64_t per_query = fuel.initial;
    return Oracle1::from_rule([c, per_query](std::uint64_t n) {
      Fuel f(per_query);
      return eval_rec(c->term->a, c->env.bind(c->term->name, Value(n)), f).nat();
    });
  }
  raise("TypeMismatch", "expected a type-1 value");
}

Functional2 as_functional(const Value& v, const Fuel& fuel) {
  if (v.is_functional()) return v.functional();
  if (auto cl = std::get_if<std::shared_ptr<const Closure>>(&v)) {
    auto c = *cl;
    std::uint64_t per_query = fuel.initial;
    return Functional2::from_fn("closure", [c, per_query](const Oracle1& r) {
      Fuel f(per_query);
      return eval_rec(c->term->a, c->env.bind(c->term->name, Value(r)), f).nat();
    });
  }
  raise("TypeMismatch", "expected a type-2 value");
}

Value eval_rec(const TermPtr& t, const Env& env, const Fuel& fuel) {
  fuel.tick();
  switch (t->kind) {
    case TermKind::Nat:
      return Value(t->nat);
    case TermKind::Var: {
      const Value* v = env.find(t->name);
      if (!v) raise("UnboundParameter", "variable '" + t->name + "' has no value");
      return *v;
    }
    case TermKind::Param: {
      const Value* v = env.find(t->name);
      if (!v) raise("UnboundParameter", "parameter '" + t->name + "' has no value");
      return *v;
    }
    case TermKind::Plus:
      return Value(eval_rec(t->a, env, fuel).nat() + eval_rec(t->b, env, fuel).nat());
    case TermKind::Times:
      return Value(eval_rec(t->a, env, fuel).nat() * eval_rec(t->b, env, fuel).nat());
    case TermKind::Succ:
      return Value(eval_rec(t->a, env, fuel).nat() + 1);
    case TermKind::Less:
      return Value(static_cast<std::uint64_t>(eval_rec(t->a, env, fuel).nat() <
                                              eval_rec(t->b, env, fuel).nat()));
    case TermKind::Concat: {
      std::uint64_t k = eval_rec(t->a, env, fuel).nat();
      Oracle1 r = as_oracle(eval_rec(t->b, env, fuel), fuel);
      return Value(concat(k, r));
    }
    case TermKind::Star: {
      Functional2 f = as_functional(eval_rec(t->a, env, fuel), fuel);
      Oracle1 r = as_oracle(eval_rec(t->b, env, fuel), fuel);
      return Value(star(f, r));
    }
    case TermKind::Lam:
      return Value(std::make_shared<const Closure>(Closure{t, env}));
    case TermKind::App: {
      Value f = eval_rec(t->a, env, fuel);
      if (auto cl = std::get_if<std::shared_ptr<const Closure>>(&f)) {
        Value arg = eval_rec(t->b, env, fuel);
        return eval_rec((*cl)->term->a, (*cl)->env.bind((*cl)->term->name, std::move(arg)), fuel);
      }
      if (f.is_oracle()) return Value(f.oracle().at(eval_rec(t->b, env, fuel).nat()));
      if (f.is_functional())
        return Value(f.functional().apply(as_oracle(eval_rec(t->b, env, fuel), fuel)));
      raise("TypeMismatch", "applied a type-0 value");
    }
  }
  raise("TypeMismatch", "unreachable term kind");
}

}  // namespace

Value eval(const TermPtr& t, const Env& env, std::uint64_t fuel) {
  Fuel f(fuel);
  Value v = eval_rec(t, env, f);
  // surface lambdas as model values
  if (std::holds_alternative<std::shared_ptr<const Closure>>(v)) {
    auto c = std::get<std::shared_ptr<const Closure>>(v);
    if (c->term->ty.is_zero()) return Value(as_oracle(v, f));
    if (c->term->ty == terms::FiniteType::standard(1)) return Value(as_functional(v, f));
    raise("TypeMismatch", "evaluated term is not of type 0, 1, or 2");
  }
  return v;
}

std::uint64_t eval_nat(const TermPtr& t, const Env& env, std::uint64_t fuel) {
  return eval(t, env, fuel).nat();
}

Oracle1 eval_oracle(const TermPtr& t, const Env& env, std::uint64_t fuel) {
  return eval(t, env, fuel).oracle();
}

Functional2 eval_functional(const TermPtr& t, const Env& env, std::uint64_t fuel) {
  return eval(t, env, fuel).functional();
}

bool values_agree(const Value& a, const Value& b, std::uint64_t check_positions,
                  const std::vector<Oracle1>& probe_oracles) {
  if (a.index() != b.index()) return false;
  if (a.is_nat()) return a.nat() == b.nat();
  if (a.is_oracle()) {
    for (std::uint64_t i = 0; i < check_positions; ++i)
      if (a.oracle().at(i) != b.oracle().at(i)) return false;
    return true;
  }
  if (a.is_functional()) {
    for (const auto& f : probe_oracles)
      if (a.functional().apply(f) != b.functional().apply(f)) return false;
    return true;
  }
  return false;
}

}  // namespace hytw::model
