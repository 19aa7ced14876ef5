#ifndef MONODEC_REGEX_HPP_
#define MONODEC_REGEX_HPP_

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "monodec/alphabet.hpp"
#include "monodec/errors.hpp"

namespace monodec {

// Regular expression AST. Grammar:
//
//   expr   := term ("|" term)*
//   term   := factor+
//   factor := base ("*" | "+" | "?")*
//   base   := letter | "(" expr ")" | "~" | "#"
//   letter := [a-z]
//
// "~" denotes {epsilon}, "#" denotes the empty language, juxtaposition is
// concatenation.
struct RegexNode {
  enum class Kind { Empty, Epsilon, Letter, Concat, Union, Star, Plus, Opt };

  Kind kind;
  char letter = 0;                    // Kind::Letter only
  std::unique_ptr<RegexNode> left;    // unary/binary operand
  std::unique_ptr<RegexNode> right;   // binary operand

  explicit RegexNode(Kind k) : kind(k) {}
};

using RegexPtr = std::unique_ptr<RegexNode>;

namespace detail {

class RegexParser {
 public:
  RegexParser(const std::string& text, const std::optional<Alphabet>& declared)
      : text_(text), declared_(declared) {}

  RegexPtr parse() {
    if (text_.empty()) {
      throw ParseError("empty expression", 0);
    }
    RegexPtr e = parse_expr();
    if (pos_ != text_.size()) {
      throw ParseError(std::string("unexpected character '") + text_[pos_] +
                           "'",
                       pos_);
    }
    return e;
  }

  const std::set<char>& seen_letters() const { return seen_; }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  RegexPtr parse_expr() {
    RegexPtr e = parse_term();
    while (!eof() && peek() == '|') {
      ++pos_;
      RegexPtr rhs = parse_term();
      auto u = std::make_unique<RegexNode>(RegexNode::Kind::Union);
      u->left = std::move(e);
      u->right = std::move(rhs);
      e = std::move(u);
    }
    return e;
  }

  RegexPtr parse_term() {
    RegexPtr e = parse_factor();
    while (!eof() && (is_base_start(peek()))) {
      RegexPtr rhs = parse_factor();
      auto c = std::make_unique<RegexNode>(RegexNode::Kind::Concat);
      c->left = std::move(e);
      c->right = std::move(rhs);
      e = std::move(c);
    }
    return e;
  }

  RegexPtr parse_factor() {
    RegexPtr e = parse_base();
    while (!eof() && (peek() == '*' || peek() == '+' || peek() == '?')) {
      RegexNode::Kind k = peek() == '*'   ? RegexNode::Kind::Star
                          : peek() == '+' ? RegexNode::Kind::Plus
                                          : RegexNode::Kind::Opt;
      ++pos_;
      auto q = std::make_unique<RegexNode>(k);
      q->left = std::move(e);
      e = std::move(q);
    }
    return e;
  }

  RegexPtr parse_base() {
    if (eof()) {
      throw ParseError("expected a letter, '(', '~' or '#'", pos_);
    }
    char c = peek();
    if (c >= 'a' && c <= 'z') {
      ++pos_;
      if (declared_ && !declared_->contains(c)) {
        throw ParseError(std::string("letter '") + c +
                             "' is outside the declared alphabet",
                         pos_ - 1);
      }
      seen_.insert(c);
      auto n = std::make_unique<RegexNode>(RegexNode::Kind::Letter);
      n->letter = c;
      return n;
    }
    if (c == '~') {
      ++pos_;
      return std::make_unique<RegexNode>(RegexNode::Kind::Epsilon);
    }
    if (c == '#') {
      ++pos_;
      return std::make_unique<RegexNode>(RegexNode::Kind::Empty);
    }
    if (c == '(') {
      std::size_t open = pos_;
      ++pos_;
      RegexPtr e = parse_expr();
      if (eof() || peek() != ')') {
        throw ParseError("unbalanced parenthesis", open);
      }
      ++pos_;
      return e;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  static bool is_base_start(char c) {
    return (c >= 'a' && c <= 'z') || c == '(' || c == '~' || c == '#';
  }

  const std::string& text_;
  const std::optional<Alphabet>& declared_;
  std::size_t pos_ = 0;
  std::set<char> seen_;
};

inline bool regex_nullable(const RegexNode& n) {
  switch (n.kind) {
    case RegexNode::Kind::Empty:
      return false;
    case RegexNode::Kind::Epsilon:
      return true;
    case RegexNode::Kind::Letter:
      return false;
    case RegexNode::Kind::Concat:
      return regex_nullable(*n.left) && regex_nullable(*n.right);
    case RegexNode::Kind::Union:
      return regex_nullable(*n.left) || regex_nullable(*n.right);
    case RegexNode::Kind::Star:
    case RegexNode::Kind::Opt:
      return true;
    case RegexNode::Kind::Plus:
      return regex_nullable(*n.left);
  }
  return false;
}

// Whether the denoted language is nonempty.
inline bool regex_nonempty(const RegexNode& n) {
  switch (n.kind) {
    case RegexNode::Kind::Empty:
      return false;
    case RegexNode::Kind::Epsilon:
    case RegexNode::Kind::Letter:
      return true;
    case RegexNode::Kind::Concat:
      return regex_nonempty(*n.left) && regex_nonempty(*n.right);
    case RegexNode::Kind::Union:
      return regex_nonempty(*n.left) || regex_nonempty(*n.right);
    case RegexNode::Kind::Star:
    case RegexNode::Kind::Opt:
      return true;  // epsilon at least
    case RegexNode::Kind::Plus:
      return regex_nonempty(*n.left);
  }
  return false;
}

}  // namespace detail

struct ParsedRegex {
  RegexPtr root;
  Alphabet alphabet;  // effective alphabet: declared, else letters occurring
};

// Parses `text` per the grammar above. If `declared` is given, every letter
// of the expression must belong to it and it becomes the effective alphabet;
// otherwise the effective alphabet is the set of letters occurring in text.
inline ParsedRegex parse_regex_ast(const std::string& text,
                                   const std::optional<Alphabet>& declared =
                                       std::nullopt) {
  detail::RegexParser parser(text, declared);
  RegexPtr root = parser.parse();
  Alphabet effective;
  if (declared) {
    effective = *declared;
  } else {
    std::vector<char> seen(parser.seen_letters().begin(),
                           parser.seen_letters().end());
    effective = Alphabet::from_letters(std::move(seen));
  }
  if (effective.empty() && detail::regex_nonempty(*root)) {
    throw AlphabetError(
        "empty effective alphabet for an expression denoting a nonempty "
        "language");
  }
  return ParsedRegex{std::move(root), std::move(effective)};
}

}  // namespace monodec

#endif  // MONODEC_REGEX_HPP_
