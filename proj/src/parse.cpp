#include "hytw/parse.hpp"

#include <cctype>
#include <sstream>

#include "hytw/error.hpp"

namespace hytw::terms {

namespace {

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '$' ||
         c == '-' || c == '>' || c == '+' || c == '*' || c == '<';
}

struct SExprParser {
  const std::string& s;
  std::size_t pos = 0;
  const TypedSignature& sig;
  std::vector<std::pair<std::string, FiniteType>> scope;

  SExprParser(const std::string& text, const TypedSignature& signature)
      : s(text), sig(signature) {}

  [[noreturn]] void fail(const std::string& msg) {
    raise("SyntaxError", msg + " at position " + std::to_string(pos));
  }

  void skip_ws() {
    while (pos < s.size()) {
      if (std::isspace(static_cast<unsigned char>(s[pos]))) {
        ++pos;
      } else if (s[pos] == '#') {
        while (pos < s.size() && s[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }

  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  std::string token() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    std::size_t start = pos;
    while (pos < s.size() && ident_char(s[pos])) ++pos;
    if (pos == start) fail("expected token");
    return s.substr(start, pos - start);
  }

  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }

  FiniteType type() {
    skip_ws();
    if (peek('(')) {
      ++pos;
      std::string head = token();
      if (head != "->") fail("expected '->' in type");
      FiniteType d = type();
      FiniteType c = type();
      expect(')');
      return FiniteType::arrow(d, c);
    }
    std::string t = token();
    bool digits = !t.empty();
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) digits = false;
    if (!digits) fail("expected a type");
    unsigned n = static_cast<unsigned>(std::stoul(t));
    return FiniteType::standard(n);
  }

  const FiniteType* lookup_scope(const std::string& name) {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      if (it->first == name) return &it->second;
    return nullptr;
  }

  TermPtr atom(const std::string& tok) {
    bool digits = !tok.empty();
    for (char c : tok)
      if (!std::isdigit(static_cast<unsigned char>(c))) digits = false;
    if (digits) return nat(std::stoull(tok));
    if (const FiniteType* ty = lookup_scope(tok)) return var(tok, *ty);
    auto it = sig.find(tok);
    if (it != sig.end()) return param(tok, it->second);
    fail("identifier '" + tok + "' is neither bound nor declared");
  }

  TermPtr term() {
    skip_ws();
    if (!peek('(')) return atom(token());
    ++pos;
    skip_ws();
    if (peek('(')) {
      // head is itself a compound term: application
      TermPtr f = term();
      TermPtr x = term();
      expect(')');
      return app(f, x);
    }
    std::string head = token();
    TermPtr result;
    if (head == "lam") {
      expect('(');
      std::string name = token();
      FiniteType ty = type();
      expect(')');
      if (lookup_scope(name))
        fail("rebinding of '" + name + "' inside the scope of an enclosing lam");
      scope.emplace_back(name, ty);
      TermPtr body = term();
      scope.pop_back();
      result = lam(name, ty, body);
    } else if (head == "+") {
      TermPtr x = term(), y = term();
      result = plus(x, y);
    } else if (head == "*") {
      TermPtr x = term(), y = term();
      result = times(x, y);
    } else if (head == "succ") {
      result = succ_term(term());
    } else if (head == "<") {
      TermPtr x = term(), y = term();
      result = less(x, y);
    } else if (head == "cat") {
      TermPtr x = term(), y = term();
      result = concat_term(x, y);
    } else if (head == "star") {
      TermPtr x = term(), y = term();
      result = star_term(x, y);
    } else {
      // application with an atomic head
      TermPtr f = atom(head);
      TermPtr x = term();
      result = app(f, x);
    }
    expect(')');
    return result;
  }
};

}  // namespace

FiniteType parse_type(const std::string& text) {
  TypedSignature empty;
  SExprParser p(text, empty);
  FiniteType t = p.type();
  if (!p.at_end()) p.fail("trailing characters after type");
  return t;
}

TermPtr parse_term(const std::string& text, const TypedSignature& sig) {
  SExprParser p(text, sig);
  TermPtr t = p.term();
  if (!p.at_end()) p.fail("trailing characters after term");
  return t;
}

TermFile parse_term_file(const std::string& contents) {
  TermFile out;
  std::istringstream in(contents);
  std::string line;
  std::string rest;
  bool in_header = true;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    ls >> first;
    if (in_header && first == "param") {
      std::string name;
      ls >> name;
      std::string tytext;
      std::getline(ls, tytext);
      if (name.empty() || tytext.empty())
        raise("SyntaxError", "malformed param line " + std::to_string(lineno));
      out.sig[name] = parse_type(tytext);
      continue;
    }
    if (!first.empty()) in_header = false;
    rest += line;
    rest += "\n";
  }
  SExprParser p(rest, out.sig);
  while (!p.at_end()) out.terms.push_back(p.term());
  return out;
}

std::string print_term_file(const TermFile& f) {
  std::string out;
  for (const auto& [name, ty] : f.sig) out += "param " + name + " " + print_type(ty) + "\n";
  for (const auto& t : f.terms) out += print_term(t) + "\n";
  return out;
}

}  // namespace hytw::terms
