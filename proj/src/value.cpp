#include "hytw/value.hpp"

#include "hytw/error.hpp"

namespace hytw::model {

struct Oracle1::Impl {
  std::function<std::uint64_t(std::uint64_t)> rule;
  std::map<std::uint64_t, std::uint64_t> memo;
  std::set<std::uint64_t> queried;
};

Oracle1::Oracle1() : impl_(std::make_shared<Impl>()) {
  impl_->rule = [](std::uint64_t) { return 0; };
}

Oracle1 Oracle1::constant(std::uint64_t v) {
  Oracle1 o;
  o.impl_->rule = [v](std::uint64_t) { return v; };
  return o;
}

Oracle1 Oracle1::from_prefix(std::vector<std::uint64_t> prefix, std::uint64_t dflt) {
  Oracle1 o;
  o.impl_->rule = [prefix = std::move(prefix), dflt](std::uint64_t n) {
    return n < prefix.size() ? prefix[n] : dflt;
  };
  return o;
}

Oracle1 Oracle1::from_rule(std::function<std::uint64_t(std::uint64_t)> rule) {
  Oracle1 o;
  o.impl_->rule = std::move(rule);
  return o;
}

std::uint64_t Oracle1::at(std::uint64_t n) const {
  impl_->queried.insert(n);
  auto it = impl_->memo.find(n);
  if (it != impl_->memo.end()) return it->second;
  std::uint64_t v = impl_->rule(n);
  impl_->memo.emplace(n, v);
  return v;
}

const std::set<std::uint64_t>& Oracle1::queried() const { return impl_->queried; }

const void* Oracle1::id() const { return impl_.get(); }

struct Functional2::Impl {
  std::string label;
  std::function<std::uint64_t(const Oracle1&)> fn;
  std::map<const void*, std::vector<std::uint64_t>> modulus;
};

Functional2::Functional2() : impl_(std::make_shared<Impl>()) {
  impl_->label = "const0";
  impl_->fn = [](const Oracle1&) { return 0; };
}

Functional2 Functional2::from_fn(std::string label,
                                 std::function<std::uint64_t(const Oracle1&)> fn) {
  Functional2 f;
  f.impl_->label = std::move(label);
  f.impl_->fn = std::move(fn);
  return f;
}

Functional2::Application Functional2::apply_traced(const Oracle1& r) const {
  auto seen = std::make_shared<std::set<std::uint64_t>>();
  Oracle1 view = Oracle1::from_rule([r, seen](std::uint64_t n) {
    seen->insert(n);
    return r.at(n);
  });
  std::uint64_t v = impl_->fn(view);
  Application out{v, std::vector<std::uint64_t>(seen->begin(), seen->end())};
  impl_->modulus[r.id()] = out.positions;
  return out;
}

std::uint64_t Functional2::apply(const Oracle1& r) const { return apply_traced(r).value; }

const std::string& Functional2::label() const { return impl_->label; }

const std::map<const void*, std::vector<std::uint64_t>>& Functional2::modulus_cache() const {
  return impl_->modulus;
}

std::uint64_t Value::nat() const {
  if (!is_nat()) raise("TypeMismatch", "expected a type-0 value");
  return std::get<std::uint64_t>(*this);
}

const Oracle1& Value::oracle() const {
  if (!is_oracle()) raise("TypeMismatch", "expected a type-1 value");
  return std::get<Oracle1>(*this);
}

const Functional2& Value::functional() const {
  if (!is_functional()) raise("TypeMismatch", "expected a type-2 value");
  return std::get<Functional2>(*this);
}

struct Env::Node {
  std::string name;
  Value value;
  std::shared_ptr<const Node> next;
};

Env Env::bind(const std::string& name, Value v) const {
  Env e;
  e.head_ = std::make_shared<const Node>(Node{name, std::move(v), head_});
  return e;
}

const Value* Env::find(const std::string& name) const {
  for (const Node* n = head_.get(); n; n = n->next.get())
    if (n->name == name) return &n->value;
  return nullptr;
}

}  // namespace hytw::model
