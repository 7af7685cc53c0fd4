#include "hytw/ordinal.hpp"

#include <algorithm>
#include <cctype>

#include "hytw/error.hpp"

namespace hytw::ord {

namespace {

std::shared_ptr<const Ordinal> box(const Ordinal& o) {
  return std::make_shared<const Ordinal>(o);
}

}  // namespace

Ordinal Ordinal::natural(std::uint64_t n) {
  Ordinal o;
  if (n > 0) o.terms_.push_back({box(Ordinal()), n});
  return o;
}

Ordinal Ordinal::omega() { return omega_pow(natural(1), 1); }

Ordinal Ordinal::omega_pow(const Ordinal& exp, std::uint64_t coeff) {
  if (coeff == 0) raise("InvalidOrdinal", "zero coefficient in CNF term");
  Ordinal o;
  o.terms_.push_back({box(exp), coeff});
  return o;
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    if (cmp(*terms[i].exp, *terms[i + 1].exp) != Cmp::Greater)
      raise("InvalidOrdinal", "CNF exponents not strictly decreasing");
  }
  for (const auto& t : terms)
    if (t.coeff == 0) raise("InvalidOrdinal", "zero coefficient in CNF term");
  Ordinal o;
  o.terms_ = std::move(terms);
  return o;
}

bool Ordinal::as_natural(std::uint64_t& out) const {
  if (terms_.empty()) {
    out = 0;
    return true;
  }
  if (terms_.size() == 1 && terms_[0].exp->is_zero()) {
    out = terms_[0].coeff;
    return true;
  }
  return false;
}

bool Ordinal::successor_pred(Ordinal& pred) const {
  if (terms_.empty() || !terms_.back().exp->is_zero()) return false;
  Ordinal p;
  p.terms_ = terms_;
  if (p.terms_.back().coeff == 1)
    p.terms_.pop_back();
  else
    p.terms_.back().coeff -= 1;
  pred = std::move(p);
  return true;
}

Cmp cmp(const Ordinal& a, const Ordinal& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
    Cmp e = cmp(*ta[i].exp, *tb[i].exp);
    if (e != Cmp::Equal) return e;
    if (ta[i].coeff != tb[i].coeff)
      return ta[i].coeff < tb[i].coeff ? Cmp::Less : Cmp::Greater;
  }
  if (ta.size() == tb.size()) return Cmp::Equal;
  return ta.size() < tb.size() ? Cmp::Less : Cmp::Greater;
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const Ordinal& lead = *b.terms()[0].exp;
  std::vector<Ordinal::Term> out;
  for (const auto& t : a.terms()) {
    Cmp c = cmp(*t.exp, lead);
    if (c == Cmp::Greater) {
      out.push_back(t);
    } else if (c == Cmp::Equal) {
      out.push_back({t.exp, t.coeff + b.terms()[0].coeff});
      out.insert(out.end(), b.terms().begin() + 1, b.terms().end());
      return Ordinal::from_terms(std::move(out));
    } else {
      break;  // absorbed
    }
  }
  out.insert(out.end(), b.terms().begin(), b.terms().end());
  return Ordinal::from_terms(std::move(out));
}

Ordinal succ(const Ordinal& a) { return add(a, Ordinal::natural(1)); }

Ordinal max_plus_one(const std::vector<Ordinal>& xs) {
  if (xs.empty()) return Ordinal();
  const Ordinal* best = &xs[0];
  for (const auto& x : xs)
    if (gt(x, *best)) best = &x;
  return succ(*best);
}

namespace {

struct OrdParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit OrdParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) {
    raise("SyntaxError", msg + " at position " + std::to_string(pos) + " in ordinal \"" + s + "\"");
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::uint64_t number() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected number");
    std::uint64_t n = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      n = n * 10 + static_cast<std::uint64_t>(s[pos] - '0');
      ++pos;
    }
    return n;
  }

  // exponent position: number | w | w^<exp> | ( sum )
  Ordinal exponent() {
    skip_ws();
    if (pos < s.size() && s[pos] == '(') {
      ++pos;
      Ordinal inner = sum();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (pos < s.size() && s[pos] == 'w') {
      ++pos;
      Ordinal e = Ordinal::natural(1);
      if (eat('^')) e = exponent();
      return Ordinal::omega_pow(e, 1);
    }
    return Ordinal::natural(number());
  }

  Ordinal atom() {
    skip_ws();
    if (pos < s.size() && s[pos] == 'w') {
      ++pos;
      Ordinal e = Ordinal::natural(1);
      if (eat('^')) e = exponent();
      std::uint64_t c = 1;
      if (eat('*')) c = number();
      if (c == 0) fail("zero coefficient");
      return Ordinal::omega_pow(e, c);
    }
    return Ordinal::natural(number());
  }

  Ordinal sum() {
    Ordinal acc = atom();
    while (eat('+')) acc = add(acc, atom());
    return acc;
  }

  Ordinal run() {
    Ordinal r = sum();
    skip_ws();
    if (pos != s.size()) fail("trailing characters");
    return r;
  }
};

std::string print_exponent(const Ordinal& e) {
  std::uint64_t n;
  if (e.as_natural(n)) return std::to_string(n);
  if (e.terms().size() == 1 && e.terms()[0].coeff == 1) {
    const Ordinal& ee = *e.terms()[0].exp;
    std::uint64_t m;
    if (ee.as_natural(m) && m == 1) return "w";  // w^w
  }
  return "(" + print_ordinal(e) + ")";
}

}  // namespace

Ordinal parse_ordinal(const std::string& text) { return OrdParser(text).run(); }

std::string print_ordinal(const Ordinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : a.terms()) {
    if (!first) out += "+";
    first = false;
    std::uint64_t n;
    if (t.exp->is_zero()) {
      out += std::to_string(t.coeff);
    } else if (t.exp->as_natural(n) && n == 1) {
      out += "w";
      if (t.coeff > 1) out += "*" + std::to_string(t.coeff);
    } else {
      out += "w^" + print_exponent(*t.exp);
      if (t.coeff > 1) out += "*" + std::to_string(t.coeff);
    }
  }
  return out;
}

bool tag_gt(const Tag& a, const Tag& b) {
  if (a.is_inf()) return true;  // inf > everything, including inf
  if (b.is_inf()) return false;
  return gt(a.ordinal(), b.ordinal());
}

bool tag_eq(const Tag& a, const Tag& b) {
  if (a.is_inf() || b.is_inf()) return a.is_inf() == b.is_inf();
  return eq(a.ordinal(), b.ordinal());
}

bool tag_below(const Tag& t, const Ordinal& alpha) {
  return !t.is_inf() && lt(t.ordinal(), alpha);
}

Tag min_tag(const Tag& a, const Tag& b) {
  if (a.is_inf()) return b;
  if (b.is_inf()) return a;
  return lt(a.ordinal(), b.ordinal()) ? a : b;
}

Tag parse_tag(const std::string& text) {
  std::size_t i = 0, j = text.size();
  while (i < j && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  while (j > i && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
  if (text.substr(i, j - i) == "inf") return Tag::inf();
  return Tag::fin(parse_ordinal(text));
}

std::string print_tag(const Tag& t) {
  return t.is_inf() ? "inf" : print_ordinal(t.ordinal());
}

}  // namespace hytw::ord
