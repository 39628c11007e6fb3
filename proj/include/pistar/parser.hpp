#pragma once

// Text syntax for *-polynomials.
//
//   poly    := ['+'|'-'] term (('+'|'-') term)*
//   term    := rational | [rational] jordan
//   jordan  := product ('o' product)*
//   product := postfix (['*'] postfix)*
//   postfix := atom ['^*']
//   atom    := var | '[' poly ',' poly ']' | '(' poly ')'
//   var     := 'x' INDEX ':' ('0'|'1') ('+'|'-')
//
// Juxtaposition binds tighter than 'o'; '[a,b]' is the commutator ab - ba and
// 'a o b' the Jordan product ab + ba.

#include <cctype>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pistar/free_star.hpp"

namespace pistar {

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error("parse error at position " + std::to_string(position) + ": " + what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Polynomial parse_all() {
    Polynomial p = poly();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool peek_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }
  // 'o' as an operator: not followed by an identifier character.
  bool peek_jordan() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != 'o') return false;
    return pos_ + 1 >= text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1]));
  }
  bool starts_atom() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == 'x' || c == '[' || c == '(';
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational rational() {
    Integer num(digits());
    Integer den = 1;
    if (accept('/')) {
      den = Integer(digits());
      if (den == 0) fail("zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  Polynomial poly() {
    Polynomial acc;
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial t = term();
    acc += negate ? t * Rational(-1) : t;
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  Polynomial term() {
    if (peek_digit()) {
      Rational c = rational();
      accept('*');
      if (!starts_atom()) return Polynomial::constant(c);
      return jordan_chain() * c;
    }
    if (!starts_atom()) fail("expected a term");
    return jordan_chain();
  }

  Polynomial jordan_chain() {
    Polynomial p = product();
    while (peek_jordan()) {
      ++pos_;
      p = jordan(p, product());
    }
    return p;
  }

  Polynomial product() {
    Polynomial p = postfix();
    while (true) {
      if (accept('*')) {
        if (!starts_atom()) fail("expected a factor after '*'");
        p = p * postfix();
      } else if (starts_atom()) {
        p = p * postfix();
      } else {
        break;
      }
    }
    return p;
  }

  Polynomial postfix() {
    Polynomial p = atom();
    skip_ws();
    if (text_.substr(pos_, 2) == "^*") {
      pos_ += 2;
      p = star_free(p);
    }
    return p;
  }

  Polynomial atom() {
    skip_ws();
    if (accept('[')) {
      Polynomial a = poly();
      expect(',');
      Polynomial b = poly();
      expect(']');
      return commutator(a, b);
    }
    if (accept('(')) {
      Polynomial a = poly();
      expect(')');
      return a;
    }
    return var();
  }

  Polynomial var() {
    skip_ws();
    const std::size_t start = pos_;
    if (!accept('x')) fail("expected a variable");
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected variable index after 'x'");
    const std::string idx = digits();
    if (idx.size() > 6) fail("variable index too large");
    const int index = std::stoi(idx);
    if (index < 1) fail("variable index must be positive");
    if (pos_ >= text_.size() || text_[pos_] != ':') fail("expected ':' after variable index");
    ++pos_;
    if (pos_ >= text_.size() || (text_[pos_] != '0' && text_[pos_] != '1'))
      fail("expected parity 0 or 1");
    const int parity = text_[pos_] - '0';
    ++pos_;
    if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-'))
      fail("expected sign '+' or '-' in variable type");
    const bool skew = text_[pos_] == '-';
    ++pos_;
    const VarType t{parity, skew};
    auto [it, inserted] = seen_.emplace(index, t);
    if (!inserted && !(it->second == t)) {
      pos_ = start;
      fail("inconsistent type for x" + std::to_string(index));
    }
    return Polynomial::variable(index, t);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::map<int, VarType> seen_;
};

}  // namespace detail

/// Parses a polynomial, expanding commutators, Jordan products and stars into monomials.
/// Monomials with a repeated variable index are rejected.
inline Polynomial parse(std::string_view text) {
  Polynomial p = detail::PolyParser(text).parse_all();
  for (const auto& [w, c] : p.terms()) {
    std::set<int> s(w.begin(), w.end());
    if (s.size() != w.size())
      throw ParseError("repeated variable index in a monomial", 0);
  }
  return p.pruned();
}

/// Canonical text form; parse(print(p)) == p.
inline std::string print(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    Rational mag = c;
    if (c < 0) {
      out += first ? "-" : " - ";
      mag = -c;
    } else if (!first) {
      out += " + ";
    }
    first = false;
    if (w.empty()) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + " ";
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k) out += " ";
      out += "x" + std::to_string(w[k]) + ":" + p.type_of(w[k]).str();
    }
  }
  return out;
}

/// Expands wildcard variables into concrete texts. Accepted wildcards:
///   "xN:p?"  parity p, either sign;
///   "xN:??"  any of the four types;
///   "x?"     a fresh index (above every explicit index), any type.
/// Each wildcard occurrence with the same index is expanded consistently.
struct WildcardExpansion {
  std::vector<std::string> texts;
  std::vector<std::string> notes;  // one per wildcard, describing the expansion
};

inline WildcardExpansion expand_wildcards(std::string_view text) {
  // Collect explicit indices to allocate fresh ones for "x?".
  int max_index = 0;
  for (std::size_t i = 0; i + 1 < text.size(); ++i)
    if (text[i] == 'x' && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      max_index = std::max(max_index, std::stoi(std::string(text.substr(i + 1, j - i - 1))));
    }
  struct Slot {
    std::size_t begin, end;  // replaced span
    int index;
    std::vector<VarType> options;
  };
  std::vector<Slot> slots;
  std::map<int, std::size_t> choice_of_index;  // index -> choice group
  std::vector<std::vector<VarType>> groups;
  std::vector<int> group_index;
  std::string rest(text);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x') continue;
    if (i + 1 < text.size() && text[i + 1] == '?') {
      const int idx = ++max_index;
      groups.push_back({kVarTypes.begin(), kVarTypes.end()});
      group_index.push_back(idx);
      choice_of_index[idx] = groups.size() - 1;
      slots.push_back({i, i + 2, idx, groups.back()});
      continue;
    }
    std::size_t j = i + 1;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i + 1 || j + 2 >= text.size() + 0 || text[j] != ':') continue;
    if (j + 2 >= text.size() + 1) continue;
    const char p = text[j + 1];
    const char s = j + 2 < text.size() ? text[j + 2] : '\0';
    if (p != '?' && s != '?') continue;
    const int idx = std::stoi(std::string(text.substr(i + 1, j - i - 1)));
    std::vector<VarType> opts;
    for (auto t : kVarTypes) {
      if (p != '?' && t.parity != p - '0') continue;
      opts.push_back(t);
    }
    if (p == '?' && s != '?') throw ParseError("wildcard parity requires a wildcard sign as well", i);
    auto it = choice_of_index.find(idx);
    if (it == choice_of_index.end()) {
      groups.push_back(opts);
      group_index.push_back(idx);
      choice_of_index[idx] = groups.size() - 1;
    } else if (groups[it->second].size() != opts.size()) {
      throw ParseError("conflicting wildcards for x" + std::to_string(idx), i);
    }
    slots.push_back({i, j + 3, idx, opts});
  }
  WildcardExpansion out;
  if (groups.empty()) {
    out.texts.emplace_back(text);
    return out;
  }
  for (std::size_t g = 0; g < groups.size(); ++g) {
    std::string note = "x" + std::to_string(group_index[g]) + " expanded over {";
    for (std::size_t k = 0; k < groups[g].size(); ++k) note += (k ? "," : "") + groups[g][k].str();
    out.notes.push_back(note + "}");
  }
  std::vector<std::size_t> pick(groups.size(), 0);
  while (true) {
    std::string s;
    std::size_t cursor = 0;
    for (const auto& slot : slots) {
      s.append(text.substr(cursor, slot.begin - cursor));
      const VarType t = groups[choice_of_index[slot.index]][pick[choice_of_index[slot.index]]];
      s += "x" + std::to_string(slot.index) + ":" + t.str();
      cursor = slot.end;
    }
    s.append(text.substr(cursor));
    out.texts.push_back(std::move(s));
    std::size_t g = 0;
    while (g < groups.size() && ++pick[g] == groups[g].size()) pick[g++] = 0;
    if (g == groups.size()) break;
  }
  return out;
}

}  // namespace pistar
