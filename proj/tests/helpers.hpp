#ifndef MONODEC_TESTS_HELPERS_HPP_
#define MONODEC_TESTS_HELPERS_HPP_

#include <map>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "monodec/dfa.hpp"
#include "monodec/regex.hpp"
#include "monodec/syntactic.hpp"

namespace monodec::test {

inline Dfa dfa_of(const std::string& regex,
                  const std::optional<std::string>& alphabet = std::nullopt) {
  std::optional<Alphabet> declared;
  if (alphabet) declared = Alphabet(*alphabet);
  return compile(parse_regex(regex, declared));
}

inline SyntacticMorphism sm_of(const std::string& regex,
                               const std::optional<std::string>& alphabet =
                                   std::nullopt) {
  return transition_monoid(dfa_of(regex, alphabet));
}

// Element id of the monoid element whose canonical witness is `word`.
inline ElementId elem(const SyntacticMorphism& sm, const std::string& word) {
  return sm.image_of_word(word);
}

// All words over `alphabet` of length at most `max_len`, in length-then-lex
// order.
inline std::vector<std::string> all_words(const Alphabet& alphabet,
                                          std::size_t max_len) {
  std::vector<std::string> words = {""};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t level_end = words.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (char c : alphabet.letters()) words.push_back(words[i] + c);
    }
    level_begin = level_end;
  }
  return words;
}

// Independent word-membership oracle: evaluates the expression tree on the
// word directly, memoizing "node matches w[i..j)". No automata involved.
class RegexMatchOracle {
 public:
  explicit RegexMatchOracle(const RegexNode& root) : root_(root) {
    index_nodes(&root);
  }

  bool matches(const std::string& w) {
    word_ = &w;
    span_ = w.size() + 1;
    memo_.assign(ids_.size() * span_ * span_, kUnknown);
    return eval(&root_, 0, w.size());
  }

 private:
  static constexpr int8_t kUnknown = -1;

  void index_nodes(const RegexNode* n) {
    ids_[n] = ids_.size();
    if (n->left) index_nodes(n->left.get());
    if (n->right) index_nodes(n->right.get());
  }

  bool eval(const RegexNode* n, std::size_t i, std::size_t j) {
    std::size_t slot = (ids_.at(n) * span_ + i) * span_ + j;
    if (memo_[slot] != kUnknown) return memo_[slot] == 1;
    bool r = compute(n, i, j);
    memo_[slot] = r ? 1 : 0;
    return r;
  }

  bool compute(const RegexNode* n, std::size_t i, std::size_t j) {
    const std::string& w = *word_;
    switch (n->kind) {
      case RegexNode::Kind::Empty:
        return false;
      case RegexNode::Kind::Epsilon:
        return i == j;
      case RegexNode::Kind::Letter:
        return j == i + 1 && w[i] == n->letter;
      case RegexNode::Kind::Union:
        return eval(n->left.get(), i, j) || eval(n->right.get(), i, j);
      case RegexNode::Kind::Concat:
        for (std::size_t k = i; k <= j; ++k) {
          if (eval(n->left.get(), i, k) && eval(n->right.get(), k, j)) {
            return true;
          }
        }
        return false;
      case RegexNode::Kind::Star:
        if (i == j) return true;
        for (std::size_t k = i + 1; k <= j; ++k) {
          if (eval(n->left.get(), i, k) && eval(n, k, j)) return true;
        }
        return false;
      case RegexNode::Kind::Plus:
        // X+ = X X*
        for (std::size_t k = i; k <= j; ++k) {
          if (eval(n->left.get(), i, k) && star_eval(n->left.get(), k, j)) {
            return true;
          }
        }
        return false;
      case RegexNode::Kind::Opt:
        return i == j || eval(n->left.get(), i, j);
    }
    return false;
  }

  bool star_eval(const RegexNode* child, std::size_t i, std::size_t j) {
    if (i == j) return true;
    for (std::size_t k = i + 1; k <= j; ++k) {
      if (eval(child, i, k) && star_eval(child, k, j)) return true;
    }
    return false;
  }

  const RegexNode& root_;
  const std::string* word_ = nullptr;
  std::size_t span_ = 0;
  std::map<const RegexNode*, std::size_t> ids_;
  std::vector<int8_t> memo_;
};

// Seeded random expression source for property runs. Rendered length is
// bounded by `max_len`.
class RandomRegexGen {
 public:
  explicit RandomRegexGen(uint64_t seed) : rng_(seed) {}

  // Returns (expression text, alphabet letters used for generation).
  std::pair<std::string, std::string> next(std::size_t max_len = 12,
                                           uint32_t max_alphabet = 3) {
    uint32_t k = 1 + static_cast<uint32_t>(rng_() % max_alphabet);
    std::string letters = std::string("abc").substr(0, k);
    for (int attempt = 0; attempt < 1000; ++attempt) {
      std::string text = gen(letters, 3);
      if (!text.empty() && text.size() <= max_len) return {text, letters};
    }
    return {std::string(1, letters[0]), letters};
  }

 private:
  std::string gen(const std::string& letters, int depth) {
    uint64_t pick = rng_() % 10;
    if (depth == 0 || pick < 4) {
      return std::string(1, letters[rng_() % letters.size()]);
    }
    if (pick == 4) {
      std::string inner = gen(letters, depth - 1);
      const char* quant = (rng_() % 3 == 0) ? "+" : (rng_() % 2 ? "*" : "?");
      return wrap(inner) + quant;
    }
    if (pick < 8) {
      return gen(letters, depth - 1) + gen(letters, depth - 1);
    }
    if (pick == 8) {
      return "(" + gen(letters, depth - 1) + "|" + gen(letters, depth - 1) +
             ")";
    }
    return rng_() % 4 == 0 ? "~" : gen(letters, depth - 1);
  }

  static std::string wrap(const std::string& e) {
    if (e.size() == 1) return e;
    return "(" + e + ")";
  }

  std::mt19937_64 rng_;
};

}  // namespace monodec::test

#endif  // MONODEC_TESTS_HELPERS_HPP_
