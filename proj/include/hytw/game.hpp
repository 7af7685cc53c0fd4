#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hytw/ordinal.hpp"

namespace hytw::games {

using Move = ord::Ordinal;
using Path = std::vector<Move>;

bool path_less(const Path& a, const Path& b);  // lexicographic in the ordinal order
bool path_eq(const Path& a, const Path& b);
std::string print_path(const Path& p);  // moves joined by spaces, "()" for the root

struct PathLess {
  bool operator()(const Path& a, const Path& b) const { return path_less(a, b); }
};
template <class T>
using PathMap = std::map<Path, T, PathLess>;

enum class Player { I, II };
enum class WinCondition { Clopen, Open };

// Player I moves from even-length positions, II from odd-length ones.
inline Player mover_at(const Path& p) { return p.size() % 2 == 0 ? Player::I : Player::II; }
inline Player opponent(Player p) { return p == Player::I ? Player::II : Player::I; }
std::string player_name(Player p);

// Finite prefix-closed set of move sequences. Loading inserts all prefixes,
// so any list of sequences denotes a tree.
class ExplicitTree {
 public:
  ExplicitTree();  // just the root
  static ExplicitTree from_paths(const std::vector<Path>& paths);

  bool contains(const Path& p) const;
  std::vector<Move> moves(const Path& p) const;  // child moves, ascending
  std::vector<Path> nodes() const;               // every node, preorder
  std::size_t size() const;
  void insert(const Path& p);

 private:
  struct Node {
    std::vector<std::pair<Move, std::size_t>> kids;  // sorted by move
  };
  const Node* walk(const Path& p) const;
  std::vector<Node> nodes_;
};

// A game given by a legal-move enumerator. The enumerator must be
// deterministic; the budget caps how many nodes a solver may materialize
// before concluding the tree is too large (or ill-founded).
struct RuleGame {
  WinCondition condition = WinCondition::Clopen;
  std::function<std::vector<Move>(const Path&)> legal;
  std::uint64_t budget = 200'000;
  std::string name;
};

class GameTree {
 public:
  GameTree(ExplicitTree t, WinCondition c = WinCondition::Clopen);
  explicit GameTree(RuleGame g);

  WinCondition condition() const { return condition_; }
  std::vector<Move> moves(const Path& p) const;
  bool move_allowed(const Path& p, const Move& m) const;
  const ExplicitTree* as_explicit() const { return explicit_ ? &tree_ : nullptr; }
  std::uint64_t budget() const;
  const std::string& name() const { return name_; }

 private:
  bool explicit_;
  ExplicitTree tree_;
  RuleGame rule_;
  WinCondition condition_;
  std::string name_;
};

// One line per node: moves as ordinal literals separated by spaces; "()" or
// an empty line denotes the root. Prefixes are inserted automatically.
GameTree load_explicit_game(const std::string& contents);
std::string print_explicit_game(const ExplicitTree& t);

struct Strategy {
  std::function<Move(const Path&)> next;
  PathMap<Move> table;  // filled by the synthesizer, for printing

  Move operator()(const Path& p) const { return next(p); }
};

Strategy strategy_from_script(std::vector<Move> own_moves);  // k-th own move, then 0
Strategy constant_strategy(Move m);

// h labels plus the rank/safety table of every node.
//   h(s) = 0  iff every child has h = 1 (the player to move loses);
//   rank     = well-founded rank of the residual tree;
//   safe(s)  = 1 iff the residual game from s is a win for player I, with the
//              padding convention at odd depths.
struct Labeling {
  PathMap<int> h;
  PathMap<ord::Ordinal> rank;
  PathMap<int> safe;
};

// Rank of the node's residual subtree. Throws BudgetExceeded when the tree
// cannot be materialized within the node budget (possible ill-foundedness),
// InvalidNode when the node is not on the tree.
ord::Ordinal rank(const GameTree& t, const Path& node);
PathMap<int> bar_recursion(const GameTree& t);
Labeling safety_table(const GameTree& t);

// Winner at the root plus their least-winning-move strategy: at each of the
// winner's turns, the least move to a child with h = 0, default 0 elsewhere.
struct Synthesis {
  Player winner;
  Strategy strategy;
};
Synthesis synthesize_strategy(const GameTree& t);
// The same least-unsafe-move construction from a fixed player's viewpoint.
Strategy least_strategy(const GameTree& t, Player who);
// Strategy from h labels alone: move to the least h=0 child.
Strategy strategy_from_labels(const GameTree& t, const PathMap<int>& h);

struct Play {
  Path moves;
  std::optional<std::size_t> exit_index;  // length of the first prefix off the tree
  Player winner = Player::II;
  bool horizon_limited = false;
};

// Interleave sigma (player I) and pi (player II) for at most horizon moves.
// Clopen: whoever moves off the tree loses. Open: any exit is a win for
// Open (player I); a full-horizon play that never exits is reported for
// Closed with horizon_limited set.
Play play(const Strategy& sigma, const Strategy& pi, const GameTree& t, std::size_t horizon);

// who wins from the root against every opposing line of play inside the
// tree alphabet. Used to certify synthesized strategies.
bool strategy_beats_all(const GameTree& t, const Strategy& s, Player who, std::size_t horizon);

// Kleene-Brouwer: descendants precede ancestors, siblings order by first
// differing move. Total on the nodes of a finite tree.
bool kb_less(const Path& a, const Path& b);
std::vector<Path> kleene_brouwer(const GameTree& t);

// Ordinal games. Every move alphabet is a finite slice: the probe set plus
// predecessor-style candidates (0, the predecessor of the binding ordinal,
// and the opponent's previous ordinal, so replies like exact copying stay
// available). Moves in G descend below the mover's previous ordinal; in O
// player I may play any ordinal below alpha at any time, and II is
// constrained only when I's value strictly descended.
GameTree make_G(const ord::Ordinal& alpha, std::vector<ord::Ordinal> probes);
GameTree make_O(const ord::Ordinal& alpha, std::vector<ord::Ordinal> probes);

// Player II echoes player I's last ordinal.
Strategy copy_strategy();

}  // namespace hytw::games
