#include "hytw/type.hpp"

namespace hytw::terms {

struct FiniteType::Node {
  FiniteType dom, cod;
};

FiniteType FiniteType::arrow(const FiniteType& dom, const FiniteType& cod) {
  FiniteType t;
  t.node_ = std::make_shared<const Node>(Node{dom, cod});
  return t;
}

const FiniteType& FiniteType::domain() const { return node_->dom; }
const FiniteType& FiniteType::codomain() const { return node_->cod; }

FiniteType FiniteType::standard(unsigned n) {
  FiniteType t;
  for (unsigned i = 0; i < n; ++i) t = arrow(t, zero());
  return t;
}

bool FiniteType::operator==(const FiniteType& o) const {
  if (node_ == o.node_) return true;
  if (!node_ || !o.node_) return false;
  return node_->dom == o.node_->dom && node_->cod == o.node_->cod;
}

bool is_standard(const FiniteType& t) {
  if (t.is_zero()) return true;
  return t.codomain().is_zero() && is_standard(t.domain());
}

std::optional<unsigned> standard_index(const FiniteType& t) {
  if (t.is_zero()) return 0;
  if (!t.codomain().is_zero()) return std::nullopt;
  auto d = standard_index(t.domain());
  if (!d) return std::nullopt;
  return *d + 1;
}

std::string print_type(const FiniteType& t) {
  if (t.is_zero()) return "0";
  return "(-> " + print_type(t.domain()) + " " + print_type(t.codomain()) + ")";
}

}  // namespace hytw::terms
