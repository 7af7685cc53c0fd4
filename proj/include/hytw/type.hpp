#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

namespace hytw::terms {

// Finite type: 0 or sigma -> tau. Value-semantic; arrows share nodes.
class FiniteType {
 public:
  FiniteType() = default;  // the base type 0
  static FiniteType zero() { return FiniteType(); }
  static FiniteType arrow(const FiniteType& dom, const FiniteType& cod);
  // the standard type n: 0, 0->0, (0->0)->0, ...
  static FiniteType standard(unsigned n);

  bool is_zero() const { return !node_; }
  bool is_arrow() const { return static_cast<bool>(node_); }
  const FiniteType& domain() const;
  const FiniteType& codomain() const;

  bool operator==(const FiniteType& o) const;
  bool operator!=(const FiniteType& o) const { return !(*this == o); }

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

// tau in ST: tau = 0, or tau = sigma -> 0 with sigma standard
bool is_standard(const FiniteType& t);
// index of a standard type (0, 1, 2, ...), or nullopt
std::optional<unsigned> standard_index(const FiniteType& t);

std::string print_type(const FiniteType& t);

// Declared evaluation parameters: name -> type. Every Param occurring in a
// term must be declared here.
using TypedSignature = std::map<std::string, FiniteType>;

}  // namespace hytw::terms
