#ifndef MONODEC_ALPHABET_HPP_
#define MONODEC_ALPHABET_HPP_

#include <algorithm>
#include <string>
#include <vector>

#include "monodec/errors.hpp"

namespace monodec {

// A declared finite alphabet of lowercase letters, kept sorted. Letters are
// addressed by their index in the sorted order; all automata and morphisms
// below use these indices as symbol ids.
class Alphabet {
 public:
  Alphabet() = default;

  explicit Alphabet(const std::string& letters) {
    for (char c : letters) {
      if (c < 'a' || c > 'z') {
        throw AlphabetError(std::string("alphabet letter '") + c +
                            "' is not a lowercase letter");
      }
      letters_.push_back(c);
    }
    std::sort(letters_.begin(), letters_.end());
    letters_.erase(std::unique(letters_.begin(), letters_.end()),
                   letters_.end());
  }

  static Alphabet from_letters(std::vector<char> letters) {
    Alphabet a;
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    a.letters_ = std::move(letters);
    return a;
  }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  char letter(std::size_t i) const { return letters_[i]; }
  const std::vector<char>& letters() const noexcept { return letters_; }

  bool contains(char c) const {
    return std::binary_search(letters_.begin(), letters_.end(), c);
  }

  // Index of c in sorted order; throws if absent.
  std::size_t index_of(char c) const {
    auto it = std::lower_bound(letters_.begin(), letters_.end(), c);
    if (it == letters_.end() || *it != c) {
      throw AlphabetError(std::string("letter '") + c +
                          "' is outside the declared alphabet");
    }
    return static_cast<std::size_t>(it - letters_.begin());
  }

  std::string to_string() const {
    return std::string(letters_.begin(), letters_.end());
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.letters_ == b.letters_;
  }
  friend bool operator!=(const Alphabet& a, const Alphabet& b) {
    return !(a == b);
  }

 private:
  std::vector<char> letters_;
};

}  // namespace monodec

#endif  // MONODEC_ALPHABET_HPP_
