#include "hytw/condition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "hytw/error.hpp"

namespace hytw::cond {

using ord::tag_below;
using ord::tag_eq;
using ord::tag_gt;

Condition::Condition() {
  Node root;
  root.first = Tag::inf();
  root.second = Tag::inf();
  nodes_.push_back(std::move(root));
}

std::optional<std::size_t> Condition::find(const NodePath& p) const {
  std::size_t cur = 0;
  for (auto m : p) {
    const auto& kids = nodes_[cur].kids;
    auto it = std::find_if(kids.begin(), kids.end(), [&](const auto& k) { return k.first == m; });
    if (it == kids.end()) return std::nullopt;
    cur = it->second;
  }
  return cur;
}

NodePath Condition::path_of(std::size_t id) const {
  NodePath p;
  while (id != 0) {
    p.push_back(nodes_[id].move);
    id = nodes_[id].parent;
  }
  std::reverse(p.begin(), p.end());
  return p;
}

std::size_t Condition::add_child(std::size_t parent, std::uint64_t move, Tag first, Tag second) {
  const auto& kids = nodes_[parent].kids;
  if (std::any_of(kids.begin(), kids.end(), [&](const auto& k) { return k.first == move; }))
    raise("InvalidInstance", "duplicate move under one node");
  Node n;
  n.parent = parent;
  n.move = move;
  n.depth = nodes_[parent].depth + 1;
  n.first = std::move(first);
  n.second = std::move(second);
  nodes_.push_back(std::move(n));
  std::size_t id = nodes_.size() - 1;
  auto& ks = nodes_[parent].kids;
  auto pos = std::find_if(ks.begin(), ks.end(), [&](const auto& k) { return k.first > move; });
  ks.insert(pos, {move, id});
  return id;
}

void Condition::set_tags(std::size_t id, Tag first, Tag second) {
  nodes_[id].first = std::move(first);
  nodes_[id].second = std::move(second);
}

namespace {

std::string print_node_path(const NodePath& p) {
  if (p.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(p[i]);
  }
  return out;
}

}  // namespace

std::vector<std::string> condition_violations(const Condition& p) {
  std::vector<std::string> out;
  const auto& ns = p.nodes();
  if (!ns[0].first.is_inf() || !ns[0].second.is_inf())
    out.push_back("root is not labeled (inf, inf)");
  for (std::size_t i = 1; i < ns.size(); ++i) {
    const auto& n = ns[i];
    const auto& par = ns[n.parent];
    if (n.depth % 2 == 1) {
      if (!tag_eq(n.second, par.second))
        out.push_back("alternation: second tag changed entering odd node " +
                      print_node_path(p.path_of(i)));
    } else {
      if (!tag_eq(n.first, par.first))
        out.push_back("alternation: first tag changed entering even node " +
                      print_node_path(p.path_of(i)));
    }
  }
  for (std::size_t i = 1; i < ns.size(); ++i) {
    const auto& c = ns[i];
    if (c.depth % 2 != 0 || c.depth < 2) continue;
    const auto& s = ns[ns[c.parent].parent];  // even grandparent
    if (!s.first.is_inf() && tag_gt(s.first, c.first) && !tag_gt(s.second, c.second))
      out.push_back("descent: second tags fail to descend at " + print_node_path(p.path_of(i)));
  }
  return out;
}

bool is_condition(const Condition& p) { return condition_violations(p).empty(); }

namespace {

bool domain_subset(const Condition& a, const Condition& b, bool check_tags) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto id = b.find(a.path_of(i));
    if (!id) return false;
    if (check_tags && (!tag_eq(b.node(*id).first, a.node(i).first) ||
                       !tag_eq(b.node(*id).second, a.node(i).second)))
      return false;
  }
  return true;
}

}  // namespace

bool extends(const Condition& q, const Condition& p) { return domain_subset(p, q, true); }

bool retag_equiv(const Condition& p, const Condition& q, const Ordinal& alpha) {
  if (p.size() != q.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto id = q.find(p.path_of(i));
    if (!id) return false;
    const Tag pt[2] = {p.node(i).first, p.node(i).second};
    const Tag qt[2] = {q.node(*id).first, q.node(*id).second};
    for (int c = 0; c < 2; ++c) {
      if (tag_below(pt[c], alpha)) {
        if (!tag_eq(qt[c], pt[c])) return false;
      } else {
        if (tag_below(qt[c], alpha)) return false;
      }
    }
  }
  return true;
}

Condition project(const Condition& p, const Ordinal& alpha) {
  Condition out = p;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Tag f = p.node(i).first, s = p.node(i).second;
    out.set_tags(i, tag_below(f, alpha) ? f : Tag::inf(), tag_below(s, alpha) ? s : Tag::inf());
  }
  return out;
}

namespace {

// extensions of sigma inside dom(r) along which the first player keeps
// strictly descending from non-inf tags; empty when sigma itself fails its
// odd-depth entry check
struct LocalTree {
  const Condition& r;

  bool step_ok(std::size_t id) const {
    const auto& n = r.node(id);
    if (n.depth % 2 != 1) return true;
    const Tag& parent_first = r.node(n.parent).first;
    return !parent_first.is_inf() && tag_gt(parent_first, n.first);
  }

  bool rooted(std::size_t sigma) const { return step_ok(sigma); }

  std::uint64_t rank_below(std::size_t id) const {
    std::uint64_t best = 0;
    for (const auto& k : r.node(id).kids)
      if (step_ok(k.second)) best = std::max(best, rank_below(k.second) + 1);
    return best;
  }

  std::uint64_t rank(std::size_t sigma) const { return rooted(sigma) ? rank_below(sigma) : 0; }
};

}  // namespace

RetagResult retag(const RetagInstance& inst) {
  const Condition &p = inst.p, &q = inst.q, &r = inst.r;
  if (!is_condition(p) || !is_condition(q) || !is_condition(r))
    raise("InvalidInstance", "p, q, r must all be conditions");
  if (p.size() != q.size() || !domain_subset(p, q, false) || !domain_subset(q, p, false))
    raise("InvalidInstance", "p and q must share a domain");
  if (!retag_equiv(p, q, inst.alpha)) raise("InvalidInstance", "p and q must be alpha-retaggings");
  if (!extends(r, q)) raise("InvalidInstance", "r must extend q");
  if (!ord::lt(inst.gamma, inst.alpha)) raise("InvalidInstance", "gamma must be below alpha");

  // gamma_tilde strictly bounds gamma and every tag below alpha in r and p
  std::vector<Ordinal> low = {inst.gamma};
  for (const Condition* c : {&r, &p})
    for (const auto& n : c->nodes())
      for (const Tag& t : {n.first, n.second})
        if (tag_below(t, inst.alpha)) low.push_back(t.ordinal());
  Ordinal gamma_tilde = ord::max_plus_one(low);
  if (!ord::lt(gamma_tilde, inst.alpha))
    raise("InsufficientHeadroom", "gamma_tilde " + ord::print_ordinal(gamma_tilde) +
                                      " reaches alpha " + ord::print_ordinal(inst.alpha));

  std::size_t n = r.size();
  std::vector<bool> in_p(n, false), follows_restart(n, false), in_N(n, false);
  for (std::size_t i = 0; i < n; ++i) in_p[i] = p.find(r.path_of(i)).has_value();
  for (std::size_t i = 1; i < n; ++i) {
    const auto& nd = r.node(i);
    bool restart_here = false;
    if (!in_p[i] && nd.depth % 2 == 1) {
      // a new odd node is a restart unless the first player strictly
      // descended to a non-inf tag
      restart_here = !(tag_gt(r.node(nd.parent).first, nd.first) && !nd.first.is_inf());
    }
    follows_restart[i] = follows_restart[nd.parent] || restart_here;
    in_N[i] = !in_p[i] && !follows_restart[i];
  }

  LocalTree lt{r};
  std::vector<std::uint64_t> local_rank(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!in_N[i]) continue;
    local_rank[i] = lt.rank(i);
    if (!ord::lt(ord::add(gamma_tilde, Ordinal::natural(local_rank[i])), inst.alpha))
      raise("InsufficientHeadroom",
            "gamma_tilde + rk(T) reaches alpha at " + print_node_path(r.path_of(i)));
  }

  Condition rhat = r;  // node ids and order are shared with r
  for (std::size_t i = 0; i < n; ++i) {
    const auto& nd = r.node(i);
    if (in_p[i]) {
      auto pid = p.find(r.path_of(i));
      rhat.set_tags(i, p.node(*pid).first, p.node(*pid).second);
      continue;
    }
    if (!in_N[i]) continue;  // keeps r's tags
    Tag capped = Tag::fin(ord::add(gamma_tilde, Ordinal::natural(local_rank[i])));
    if (nd.depth % 2 == 1)
      rhat.set_tags(i, ord::min_tag(capped, nd.first), rhat.node(nd.parent).second);
    else
      rhat.set_tags(i, rhat.node(nd.parent).first, ord::min_tag(capped, nd.second));
  }
  return RetagResult{std::move(rhat), std::move(gamma_tilde)};
}

std::string print_condition(const Condition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i)
    out += print_node_path(p.path_of(i)) + " " + ord::print_tag(p.node(i).first) + " " +
           ord::print_tag(p.node(i).second) + "\n";
  return out;
}

Condition parse_condition(const std::string& text) {
  struct Entry {
    NodePath path;
    Tag first, second;
  };
  std::vector<Entry> entries;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) {
      if (t[0] == '#') break;
      toks.push_back(t);
    }
    if (toks.empty()) continue;
    if (toks.size() < 2)
      raise("SyntaxError", "condition line " + std::to_string(lineno) + " needs two tags");
    Entry e;
    e.second = ord::parse_tag(toks.back());
    e.first = ord::parse_tag(toks[toks.size() - 2]);
    for (std::size_t i = 0; i + 2 < toks.size(); ++i) {
      if (toks[i] == "()") continue;
      e.path.push_back(std::stoull(toks[i]));
    }
    entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.path.size() < b.path.size(); });
  Condition out;
  for (const auto& e : entries) {
    if (e.path.empty()) {
      out.set_tags(0, e.first, e.second);
      continue;
    }
    NodePath parent(e.path.begin(), e.path.end() - 1);
    auto pid = out.find(parent);
    if (!pid)
      raise("SyntaxError",
            "node " + print_node_path(e.path) + " appears before its parent");
    if (out.find(e.path))
      raise("SyntaxError", "duplicate node " + print_node_path(e.path));
    out.add_child(*pid, e.path.back(), e.first, e.second);
  }
  return out;
}

}  // namespace hytw::cond
