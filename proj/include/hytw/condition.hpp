#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hytw/ordinal.hpp"

namespace hytw::cond {

using ord::Ordinal;
using ord::Tag;

using NodePath = std::vector<std::uint64_t>;  // moves are plain naturals

// A finite prefix-closed tree of natural-number sequences, each node
// carrying a pair of tags. The three conditionhood clauses:
//   - the root is labeled (inf, inf);
//   - alternation: an odd-depth node keeps its parent's second tag, an
//     even-depth node keeps its parent's first tag (exactly one coordinate
//     changes per move);
//   - descent: for an even-depth node s with an even-depth grandchild c,
//     if inf != s.first > c.first then s.second > c.second, in the tag
//     order with inf > inf.
class Condition {
 public:
  struct Node {
    std::size_t parent = 0;
    std::uint64_t move = 0;
    std::size_t depth = 0;
    Tag first, second;
    std::vector<std::pair<std::uint64_t, std::size_t>> kids;  // sorted by move
  };

  Condition();  // root only, labeled (inf, inf)

  std::size_t size() const { return nodes_.size(); }
  const Node& node(std::size_t id) const { return nodes_[id]; }
  const std::vector<Node>& nodes() const { return nodes_; }

  std::optional<std::size_t> find(const NodePath& p) const;
  NodePath path_of(std::size_t id) const;

  // appends a child; no legality check beyond move uniqueness
  std::size_t add_child(std::size_t parent, std::uint64_t move, Tag first, Tag second);
  void set_tags(std::size_t id, Tag first, Tag second);

 private:
  std::vector<Node> nodes_;
};

// Empty when p satisfies all three clauses; otherwise one line per breach.
std::vector<std::string> condition_violations(const Condition& p);
bool is_condition(const Condition& p);

// dom(p) subset of dom(q) with equal tags on dom(p) (q refines p downward in
// the reverse-inclusion order)
bool extends(const Condition& q, const Condition& p);

// Same domain; tags below alpha agree; tags >= alpha (including inf) stay
// >= alpha on the other side.
bool retag_equiv(const Condition& p, const Condition& q, const Ordinal& alpha);

// Tags below alpha survive; everything else becomes inf.
Condition project(const Condition& p, const Ordinal& alpha);

struct RetagInstance {
  Condition p, q, r;
  Ordinal alpha, gamma;
};

struct RetagResult {
  Condition rhat;
  Ordinal gamma_tilde;
};

// The explicit retagging construction. New nodes that follow no new restart
// by the first player are retagged to min(gamma_tilde + rk(T_s), old tag);
// nodes of dom(p) take p's tags; everything after a new restart keeps r's
// tags. Throws InvalidInstance when the inputs do not fit together and
// InsufficientHeadroom when gamma_tilde (or gamma_tilde plus some local
// rank) reaches alpha.
RetagResult retag(const RetagInstance& inst);

std::string print_condition(const Condition& p);   // "PATH TAG0 TAG1" lines
Condition parse_condition(const std::string& text);

}  // namespace hytw::cond
