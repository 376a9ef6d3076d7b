#pragma once

#include <array>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace osr {

// Words are stored with their surface letters; the alphabet supplies the order.
using Word = std::string;

class Alphabet {
 public:
  Alphabet() { rank_.fill(-1); }
  explicit Alphabet(std::string_view letters, std::optional<char> identity = std::nullopt);

  // Parses "a,b,c" or "abc".
  static Alphabet parse(std::string_view text);

  size_t size() const { return letters_.size(); }
  char letter(size_t i) const { return letters_[i]; }
  const std::vector<char>& letters() const { return letters_; }
  std::optional<char> identity() const { return identity_; }

  bool contains(char c) const { return rank_[static_cast<unsigned char>(c)] >= 0; }
  // Position in declaration order; throws invalid_input for foreign letters.
  int index(char c) const;

  // Copy with `c` appended as the identity marker.
  Alphabet with_identity(char c, bool first = true) const;
  Alphabet without(char c) const;

  std::string str() const;

  bool operator==(const Alphabet& o) const {
    return letters_ == o.letters_ && identity_ == o.identity_;
  }

 private:
  std::vector<char> letters_;
  std::optional<char> identity_;
  std::array<int, 256> rank_{};
};

// Throws invalid_input if a letter of w is not in the alphabet.
void check_word(const Word& w, const Alphabet& ord);

std::strong_ordering deglex_compare(const Word& x, const Word& y, const Alphabet& ord);
inline bool deglex_less(const Word& x, const Word& y, const Alphabet& ord) {
  return deglex_compare(x, y, ord) == std::strong_ordering::less;
}

// alpha(t) and alpha[t].
Word prefix_t(const Word& w, size_t t);
Word suffix_t(const Word& w, size_t t);

size_t occ(char a, const Word& w);
std::set<char> con(const Word& w);
Word reverse(const Word& w);

Word power(const Word& w, size_t n);
bool is_factor(const Word& f, const Word& w);

// "1" and "" denote the empty word.
Word parse_word(std::string_view text);
std::string show_word(const Word& w);

// All words over the alphabet of length exactly n, in lexicographic order.
std::vector<Word> words_of_length(const Alphabet& a, size_t n);
// All words of length lo..hi in deg-lex order.
std::vector<Word> words_up_to(const Alphabet& a, size_t hi, size_t lo = 0);

}  // namespace osr
