#include "hytw/game.hpp"

#include <algorithm>
#include <sstream>

#include "hytw/error.hpp"

namespace hytw::games {

using ord::Cmp;
using ord::Ordinal;

bool path_less(const Path& a, const Path& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    Cmp c = ord::cmp(a[i], b[i]);
    if (c != Cmp::Equal) return c == Cmp::Less;
  }
  return a.size() < b.size();
}

bool path_eq(const Path& a, const Path& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!ord::eq(a[i], b[i])) return false;
  return true;
}

std::string print_path(const Path& p) {
  if (p.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += " ";
    out += ord::print_ordinal(p[i]);
  }
  return out;
}

std::string player_name(Player p) { return p == Player::I ? "I" : "II"; }

ExplicitTree::ExplicitTree() : nodes_(1) {}

ExplicitTree ExplicitTree::from_paths(const std::vector<Path>& paths) {
  ExplicitTree t;
  for (const auto& p : paths) t.insert(p);
  return t;
}

void ExplicitTree::insert(const Path& p) {
  std::size_t cur = 0;
  for (const auto& m : p) {
    auto& kids = nodes_[cur].kids;
    auto it = std::find_if(kids.begin(), kids.end(),
                           [&](const auto& k) { return ord::eq(k.first, m); });
    if (it == kids.end()) {
      nodes_.push_back(Node{});
      std::size_t id = nodes_.size() - 1;
      auto& ks = nodes_[cur].kids;  // nodes_ may have reallocated
      auto pos = std::find_if(ks.begin(), ks.end(),
                              [&](const auto& k) { return ord::gt(k.first, m); });
      ks.insert(pos, {m, id});
      cur = id;
    } else {
      cur = it->second;
    }
  }
}

const ExplicitTree::Node* ExplicitTree::walk(const Path& p) const {
  std::size_t cur = 0;
  for (const auto& m : p) {
    const auto& kids = nodes_[cur].kids;
    auto it = std::find_if(kids.begin(), kids.end(),
                           [&](const auto& k) { return ord::eq(k.first, m); });
    if (it == kids.end()) return nullptr;
    cur = it->second;
  }
  return &nodes_[cur];
}

bool ExplicitTree::contains(const Path& p) const { return walk(p) != nullptr; }

std::vector<Move> ExplicitTree::moves(const Path& p) const {
  const Node* n = walk(p);
  std::vector<Move> out;
  if (!n) return out;
  for (const auto& k : n->kids) out.push_back(k.first);
  return out;
}

std::vector<Path> ExplicitTree::nodes() const {
  std::vector<Path> out;
  std::function<void(std::size_t, Path&)> rec = [&](std::size_t id, Path& prefix) {
    out.push_back(prefix);
    for (const auto& k : nodes_[id].kids) {
      prefix.push_back(k.first);
      rec(k.second, prefix);
      prefix.pop_back();
    }
  };
  Path p;
  rec(0, p);
  return out;
}

std::size_t ExplicitTree::size() const { return nodes_.size(); }

GameTree::GameTree(ExplicitTree t, WinCondition c)
    : explicit_(true), tree_(std::move(t)), condition_(c), name_("explicit") {}

GameTree::GameTree(RuleGame g)
    : explicit_(false), rule_(std::move(g)), condition_(rule_.condition), name_(rule_.name) {}

std::vector<Move> GameTree::moves(const Path& p) const {
  return explicit_ ? tree_.moves(p) : rule_.legal(p);
}

bool GameTree::move_allowed(const Path& p, const Move& m) const {
  for (const auto& x : moves(p))
    if (ord::eq(x, m)) return true;
  return false;
}

std::uint64_t GameTree::budget() const { return explicit_ ? 0 : rule_.budget; }

GameTree load_explicit_game(const std::string& contents) {
  ExplicitTree t;
  std::istringstream in(contents);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    Path p;
    std::string tok;
    while (ls >> tok) {
      if (tok[0] == '#') break;
      if (tok == "()") continue;
      p.push_back(ord::parse_ordinal(tok));
    }
    t.insert(p);
  }
  return GameTree(std::move(t));
}

std::string print_explicit_game(const ExplicitTree& t) {
  std::string out;
  for (const auto& p : t.nodes()) out += print_path(p) + "\n";
  return out;
}

Strategy strategy_from_script(std::vector<Move> own_moves) {
  Strategy s;
  s.next = [own = std::move(own_moves)](const Path& p) {
    std::size_t k = p.size() / 2;
    return k < own.size() ? own[k] : Ordinal();
  };
  return s;
}

Strategy constant_strategy(Move m) {
  Strategy s;
  s.next = [m = std::move(m)](const Path&) { return m; };
  return s;
}

namespace {

// materialized tree for the solvers; children ids are larger than parents
struct Arena {
  struct Node {
    std::size_t parent;
    Move move;
    std::size_t depth;
    std::vector<std::size_t> kids;
  };
  std::vector<Node> nodes;

  Path path_of(std::size_t id) const {
    Path p;
    while (id != 0) {
      p.push_back(nodes[id].move);
      id = nodes[id].parent;
    }
    std::reverse(p.begin(), p.end());
    return p;
  }
};

Arena expand(const GameTree& t) {
  std::uint64_t budget = t.budget() ? t.budget() : 1'000'000;
  Arena a;
  a.nodes.push_back({0, Ordinal(), 0, {}});
  std::vector<std::pair<std::size_t, Path>> frontier = {{0, Path{}}};
  while (!frontier.empty()) {
    auto [id, path] = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& m : t.moves(path)) {
      if (a.nodes.size() >= budget)
        raise("BudgetExceeded", "game tree exceeds " + std::to_string(budget) +
                                    " nodes; it may be ill-founded");
      a.nodes.push_back({id, m, a.nodes[id].depth + 1, {}});
      std::size_t kid = a.nodes.size() - 1;
      a.nodes[id].kids.push_back(kid);
      Path next = path;
      next.push_back(m);
      frontier.emplace_back(kid, std::move(next));
    }
  }
  return a;
}

// h(s) = 0 iff every child has h(child) = 1; leaves vacuously get 0
std::vector<int> h_labels(const Arena& a) {
  std::vector<int> h(a.nodes.size());
  for (std::size_t i = a.nodes.size(); i-- > 0;) {
    bool all_one = true;
    for (auto k : a.nodes[i].kids) all_one = all_one && h[k] == 1;
    h[i] = all_one ? 0 : 1;
  }
  return h;
}

std::vector<std::uint64_t> rank_vec(const Arena& a) {
  std::vector<std::uint64_t> r(a.nodes.size(), 0);
  for (std::size_t i = a.nodes.size(); i-- > 0;) {
    std::uint64_t best = 0;
    for (auto k : a.nodes[i].kids) best = std::max(best, r[k] + 1);
    r[i] = best;
  }
  return r;
}

std::size_t locate(const Arena& a, const Path& node) {
  std::size_t cur = 0;
  for (const auto& m : node) {
    bool found = false;
    for (auto k : a.nodes[cur].kids)
      if (ord::eq(a.nodes[k].move, m)) {
        cur = k;
        found = true;
        break;
      }
    if (!found) raise("InvalidNode", "node " + print_path(node) + " is not on the tree");
  }
  return cur;
}

}  // namespace

ord::Ordinal rank(const GameTree& t, const Path& node) {
  Arena a = expand(t);
  std::size_t id = locate(a, node);
  return Ordinal::natural(rank_vec(a)[id]);
}

PathMap<int> bar_recursion(const GameTree& t) {
  Arena a = expand(t);
  std::vector<int> h = h_labels(a);
  PathMap<int> out;
  for (std::size_t i = 0; i < a.nodes.size(); ++i) out[a.path_of(i)] = h[i];
  return out;
}

Labeling safety_table(const GameTree& t) {
  Arena a = expand(t);
  std::vector<int> h = h_labels(a);
  std::vector<std::uint64_t> r = rank_vec(a);
  Labeling out;
  for (std::size_t i = 0; i < a.nodes.size(); ++i) {
    Path p = a.path_of(i);
    out.h[p] = h[i];
    out.rank[p] = Ordinal::natural(r[i]);
    // player I wins the residual game iff the player to move there wins
    // (even depth) or loses (odd depth: the padding move hands the first
    // effective choice to player II)
    out.safe[p] = a.nodes[i].depth % 2 == 0 ? h[i] : 1 - h[i];
  }
  return out;
}

namespace {

Strategy table_strategy(PathMap<Move> table) {
  Strategy s;
  auto shared = std::make_shared<PathMap<Move>>(std::move(table));
  s.table = *shared;
  s.next = [shared](const Path& p) {
    auto it = shared->find(p);
    return it != shared->end() ? it->second : Ordinal();
  };
  return s;
}

Strategy build_least_strategy(const GameTree& t, Player who) {
  Arena a = expand(t);
  std::vector<int> h = h_labels(a);
  PathMap<Move> table;
  for (std::size_t i = 0; i < a.nodes.size(); ++i) {
    if (a.nodes[i].kids.empty()) continue;
    Path p = a.path_of(i);
    if (mover_at(p) != who) continue;
    // least move to a child the opponent loses from; 0 when none exists
    std::optional<Move> best;
    for (auto k : a.nodes[i].kids) {
      if (h[k] != 0) continue;
      if (!best || ord::lt(a.nodes[k].move, *best)) best = a.nodes[k].move;
    }
    table[p] = best ? *best : Ordinal();
  }
  return table_strategy(std::move(table));
}

}  // namespace

Strategy least_strategy(const GameTree& t, Player who) { return build_least_strategy(t, who); }

Synthesis synthesize_strategy(const GameTree& t) {
  Arena a = expand(t);
  std::vector<int> h = h_labels(a);
  Player winner = h[0] == 1 ? Player::I : Player::II;
  return Synthesis{winner, build_least_strategy(t, winner)};
}

Strategy strategy_from_labels(const GameTree& t, const PathMap<int>& h) {
  auto hs = std::make_shared<PathMap<int>>(h);
  auto ts = std::make_shared<GameTree>(t);
  Strategy s;
  s.next = [hs, ts](const Path& p) {
    std::optional<Move> best;
    for (const auto& m : ts->moves(p)) {
      Path q = p;
      q.push_back(m);
      auto it = hs->find(q);
      if (it == hs->end() || it->second != 0) continue;
      if (!best || ord::lt(m, *best)) best = m;
    }
    return best ? *best : Ordinal();
  };
  return s;
}

Play play(const Strategy& sigma, const Strategy& pi, const GameTree& t, std::size_t horizon) {
  if (horizon < 1) raise("InvalidInstance", "horizon must be at least 1");
  Play out;
  Path p;
  for (std::size_t step = 0; step < horizon; ++step) {
    Player mover = mover_at(p);
    Move m = mover == Player::I ? sigma(p) : pi(p);
    bool ok = t.move_allowed(p, m);
    p.push_back(m);
    out.moves = p;
    if (!ok) {
      out.exit_index = p.size();
      if (t.condition() == WinCondition::Open)
        out.winner = Player::I;  // any exit is a win for Open
      else
        out.winner = opponent(mover);  // moving off the tree loses
      return out;
    }
  }
  out.horizon_limited = true;
  out.winner = Player::II;  // Closed has survived so far
  return out;
}

bool strategy_beats_all(const GameTree& t, const Strategy& s, Player who, std::size_t horizon) {
  std::function<bool(Path&, std::size_t)> wins = [&](Path& p, std::size_t depth) -> bool {
    if (depth >= horizon)
      return t.condition() == WinCondition::Open ? who == Player::II : false;
    Player mover = mover_at(p);
    if (mover == who) {
      Move m = s(p);
      if (!t.move_allowed(p, m))
        return t.condition() == WinCondition::Open ? who == Player::I : false;
      p.push_back(m);
      bool r = wins(p, depth + 1);
      p.pop_back();
      return r;
    }
    std::vector<Move> ms = t.moves(p);
    if (ms.empty()) {
      // the opponent's every move leaves the tree
      return t.condition() == WinCondition::Open ? who == Player::I : true;
    }
    for (const auto& m : ms) {
      p.push_back(m);
      bool r = wins(p, depth + 1);
      p.pop_back();
      if (!r) return false;
    }
    return true;
  };
  Path p;
  return wins(p, 0);
}

bool kb_less(const Path& a, const Path& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    Cmp c = ord::cmp(a[i], b[i]);
    if (c != Cmp::Equal) return c == Cmp::Less;
  }
  return a.size() > b.size();  // proper descendants precede their ancestors
}

std::vector<Path> kleene_brouwer(const GameTree& t) {
  std::vector<Path> nodes;
  if (const ExplicitTree* e = t.as_explicit()) {
    nodes = e->nodes();
  } else {
    Arena a = expand(t);
    for (std::size_t i = 0; i < a.nodes.size(); ++i) nodes.push_back(a.path_of(i));
  }
  std::sort(nodes.begin(), nodes.end(), kb_less);
  return nodes;
}

namespace {

// finite move slice: probes plus predecessor-style candidates, filtered by a
// strict bound
std::vector<Move> slice(const std::vector<Ordinal>& probes, const Ordinal& bound,
                        const std::optional<Ordinal>& extra) {
  std::vector<Move> out;
  auto push = [&](const Ordinal& m) {
    if (!ord::lt(m, bound)) return;
    for (const auto& x : out)
      if (ord::eq(x, m)) return;
    out.push_back(m);
  };
  push(Ordinal());
  Ordinal pred;
  if (bound.successor_pred(pred)) push(pred);
  for (const auto& p : probes) push(p);
  if (extra) push(*extra);
  std::sort(out.begin(), out.end(), [](const Move& a, const Move& b) { return ord::lt(a, b); });
  return out;
}

}  // namespace

GameTree make_G(const Ordinal& alpha, std::vector<Ordinal> probes) {
  if (alpha.is_zero()) raise("InvalidInstance", "G requires alpha > 0");
  RuleGame g;
  g.condition = WinCondition::Clopen;
  g.name = "G[" + ord::print_ordinal(alpha) + "]";
  g.legal = [alpha, probes = std::move(probes)](const Path& p) {
    // the mover descends below their own previous ordinal; first moves are
    // bounded by alpha
    Ordinal bound = p.size() >= 2 ? p[p.size() - 2] : alpha;
    std::optional<Ordinal> last;
    if (!p.empty()) last = p.back();
    return slice(probes, bound, last);
  };
  return GameTree(std::move(g));
}

GameTree make_O(const Ordinal& alpha, std::vector<Ordinal> probes) {
  if (alpha.is_zero()) raise("InvalidInstance", "O requires alpha > 0");
  RuleGame g;
  g.condition = WinCondition::Open;
  g.name = "O[" + ord::print_ordinal(alpha) + "]";
  g.legal = [alpha, probes = std::move(probes)](const Path& p) {
    std::optional<Ordinal> last;
    if (!p.empty()) last = p.back();
    if (p.size() % 2 == 0) {
      // player I may always play an arbitrary ordinal below alpha (playing
      // something not below her previous value restarts the subgame)
      return slice(probes, alpha, last);
    }
    // player II must descend exactly when player I's value descended
    bool descended = p.size() >= 3 && ord::lt(p[p.size() - 1], p[p.size() - 3]);
    Ordinal bound = descended ? p[p.size() - 2] : alpha;
    return slice(probes, bound, last);
  };
  return GameTree(std::move(g));
}

Strategy copy_strategy() {
  Strategy s;
  s.next = [](const Path& p) { return p.empty() ? Ordinal() : p.back(); };
  return s;
}

}  // namespace hytw::games
