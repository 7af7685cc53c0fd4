#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace hytw::ord {

enum class Cmp { Less, Equal, Greater };

// Ordinal below epsilon_0 in Cantor normal form: a strictly descending sum
// w^e0*c0 + w^e1*c1 + ... with exponents again ordinals and coefficients >= 1.
// The empty sum is 0. Values are immutable; copies share exponent nodes.
class Ordinal {
 public:
  struct Term {
    std::shared_ptr<const Ordinal> exp;
    std::uint64_t coeff;
  };

  Ordinal() = default;  // zero
  static Ordinal natural(std::uint64_t n);
  static Ordinal omega();
  // w^exp * coeff (coeff >= 1)
  static Ordinal omega_pow(const Ordinal& exp, std::uint64_t coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  // n if the ordinal is the finite ordinal n
  bool as_natural(std::uint64_t& out) const;
  // true iff the ordinal is a successor; then pred is the predecessor
  bool successor_pred(Ordinal& pred) const;

  const std::vector<Term>& terms() const { return terms_; }

  // raw constructor; callers must supply a valid CNF (descending exponents)
  static Ordinal from_terms(std::vector<Term> terms);

 private:
  std::vector<Term> terms_;
};

Cmp cmp(const Ordinal& a, const Ordinal& b);
inline bool lt(const Ordinal& a, const Ordinal& b) { return cmp(a, b) == Cmp::Less; }
inline bool eq(const Ordinal& a, const Ordinal& b) { return cmp(a, b) == Cmp::Equal; }
inline bool gt(const Ordinal& a, const Ordinal& b) { return cmp(a, b) == Cmp::Greater; }

// Non-commutative ordinal addition: 1 + w = w, but w + 1 = w+1.
Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal succ(const Ordinal& a);
// Strict upper bound of a finite set: max + 1; the empty set is bounded by 0.
Ordinal max_plus_one(const std::vector<Ordinal>& xs);

// Literal grammar: sums of atoms "N", "w", "w^E", "w*C", "w^E*C" where E is
// a number, "w", or a parenthesized ordinal expression. Sums are combined
// with ordinal addition, so parsing canonicalizes: "w*2+w" parses to w*3.
Ordinal parse_ordinal(const std::string& text);
std::string print_ordinal(const Ordinal& a);

// Tag alphabet for conditions and game labels: an ordinal or the top element
// "inf". The order is the one every checker in this project uses verbatim:
// inf > x for every tag x, *including* inf > inf. That last clause makes
// tag_gt deliberately non-irreflexive at inf; do not "fix" it.
class Tag {
 public:
  Tag() : inf_(false) {}  // Fin(0)
  static Tag inf() { Tag t; t.inf_ = true; return t; }
  static Tag fin(Ordinal o) { Tag t; t.fin_ = std::move(o); return t; }

  bool is_inf() const { return inf_; }
  const Ordinal& ordinal() const { return fin_; }  // only for finite tags

 private:
  bool inf_ = false;
  Ordinal fin_;
};

bool tag_gt(const Tag& a, const Tag& b);
bool tag_eq(const Tag& a, const Tag& b);
// t finite and t < alpha (inf always fails)
bool tag_below(const Tag& t, const Ordinal& alpha);
// min w.r.t. the tag order; min(x, inf) = x, min(inf, inf) = inf
Tag min_tag(const Tag& a, const Tag& b);

Tag parse_tag(const std::string& text);
std::string print_tag(const Tag& t);

}  // namespace hytw::ord
