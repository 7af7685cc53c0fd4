#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "hytw/term.hpp"

namespace hytw::model {

// Evaluation fuel. Rule-backed streams get a fresh budget per query; running
// out raises NonterminationBudget rather than silently defaulting.
inline constexpr std::uint64_t kDefaultFuel = 100'000;

// A total map Nat -> Nat: the type-1 objects of the model. Positions are
// computed on demand and memoized, and every query is recorded (the record
// is what continuity tests inspect). Deterministic by construction: repeated
// queries hit the memo.
//
// Caches are per-value and unsynchronized; share across threads only after
// the positions you need have been forced, or clone per worker.
class Oracle1 {
 public:
  Oracle1();  // constant 0
  static Oracle1 constant(std::uint64_t v);
  static Oracle1 from_prefix(std::vector<std::uint64_t> prefix, std::uint64_t dflt);
  static Oracle1 from_rule(std::function<std::uint64_t(std::uint64_t)> rule);

  std::uint64_t at(std::uint64_t n) const;
  const std::set<std::uint64_t>& queried() const;

  // identity of the underlying memo cell (used as a modulus-cache key)
  const void* id() const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

// A type-2 functional: total map Oracle1 -> Nat. Applications run against a
// recording view of the argument, so each call yields the finite set of
// positions inspected — the continuity witness. The last witness per
// argument value is kept in the modulus cache.
class Functional2 {
 public:
  struct Application {
    std::uint64_t value;
    std::vector<std::uint64_t> positions;
  };

  Functional2();  // constant 0
  static Functional2 from_fn(std::string label, std::function<std::uint64_t(const Oracle1&)> fn);

  std::uint64_t apply(const Oracle1& r) const;
  Application apply_traced(const Oracle1& r) const;

  const std::string& label() const;
  // positions recorded by the most recent application to this oracle value
  const std::map<const void*, std::vector<std::uint64_t>>& modulus_cache() const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

struct Closure;

struct Value : std::variant<std::uint64_t, Oracle1, Functional2, std::shared_ptr<const Closure>> {
  using variant::variant;
  bool is_nat() const { return index() == 0; }
  bool is_oracle() const { return index() == 1; }
  bool is_functional() const { return index() == 2; }
  std::uint64_t nat() const;
  const Oracle1& oracle() const;
  const Functional2& functional() const;
};

// Immutable binding environment (parameters and lambda-bound names).
class Env {
 public:
  Env() = default;
  Env bind(const std::string& name, Value v) const;
  const Value* find(const std::string& name) const;

 private:
  struct Node;
  std::shared_ptr<const Node> head_;
};

// A lambda whose type is neither 1 nor 2 evaluates to a closure and is
// consumed by an enclosing application before a model value emerges.
struct Closure {
  terms::TermPtr term;  // a Lam
  Env env;
};

}  // namespace hytw::model
