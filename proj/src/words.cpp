#include "osr/words.hpp"

#include <algorithm>

#include "osr/errors.hpp"

namespace osr {

Alphabet::Alphabet(std::string_view letters, std::optional<char> identity) {
  rank_.fill(-1);
  for (char c : letters) {
    if (c == '$' || c == '1' || c == '|' || c == ',' || c == '=' ||
        static_cast<unsigned char>(c) <= ' ')
      throw invalid_input(std::string("reserved character in alphabet: ") + c);
    if (rank_[static_cast<unsigned char>(c)] >= 0)
      throw invalid_input(std::string("duplicate letter in alphabet: ") + c);
    rank_[static_cast<unsigned char>(c)] = static_cast<int>(letters_.size());
    letters_.push_back(c);
  }
  if (identity) {
    if (!contains(*identity))
      throw invalid_input(std::string("identity marker not in alphabet: ") + *identity);
    identity_ = identity;
  }
}

Alphabet Alphabet::parse(std::string_view text) {
  std::string letters;
  for (char c : text)
    if (c != ',' && c != ' ') letters.push_back(c);
  return Alphabet(letters);
}

int Alphabet::index(char c) const {
  int r = rank_[static_cast<unsigned char>(c)];
  if (r < 0) throw invalid_input(std::string("letter not in alphabet: ") + c);
  return r;
}

Alphabet Alphabet::with_identity(char c, bool first) const {
  if (contains(c)) throw invalid_input(std::string("identity letter already present: ") + c);
  std::string s(letters_.begin(), letters_.end());
  if (first)
    s.insert(s.begin(), c);
  else
    s.push_back(c);
  return Alphabet(s, c);
}

Alphabet Alphabet::without(char c) const {
  std::string s;
  for (char x : letters_)
    if (x != c) s.push_back(x);
  std::optional<char> id = identity_ == c ? std::nullopt : identity_;
  return Alphabet(s, id);
}

std::string Alphabet::str() const {
  std::string s;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i) s.push_back(',');
    s.push_back(letters_[i]);
  }
  return s;
}

void check_word(const Word& w, const Alphabet& ord) {
  for (char c : w) ord.index(c);
}

std::strong_ordering deglex_compare(const Word& x, const Word& y, const Alphabet& ord) {
  if (x.size() != y.size()) return x.size() <=> y.size();
  for (size_t i = 0; i < x.size(); ++i) {
    int a = ord.index(x[i]), b = ord.index(y[i]);
    if (a != b) return a <=> b;
  }
  return std::strong_ordering::equal;
}

Word prefix_t(const Word& w, size_t t) { return w.substr(0, std::min(t, w.size())); }

Word suffix_t(const Word& w, size_t t) {
  size_t k = std::min(t, w.size());
  return w.substr(w.size() - k);
}

size_t occ(char a, const Word& w) { return static_cast<size_t>(std::count(w.begin(), w.end(), a)); }

std::set<char> con(const Word& w) { return {w.begin(), w.end()}; }

Word reverse(const Word& w) { return {w.rbegin(), w.rend()}; }

Word power(const Word& w, size_t n) {
  Word r;
  r.reserve(w.size() * n);
  for (size_t i = 0; i < n; ++i) r += w;
  return r;
}

bool is_factor(const Word& f, const Word& w) { return w.find(f) != Word::npos; }

Word parse_word(std::string_view text) {
  if (text == "1" || text == "ε") return {};
  Word w;
  for (char c : text) {
    if (c == ' ') continue;
    if (c == '1' || c == '$' || c == '=' || c == '|')
      throw invalid_input("unexpected character in word: " + std::string(text));
    w.push_back(c);
  }
  return w;
}

std::string show_word(const Word& w) { return w.empty() ? "1" : w; }

std::vector<Word> words_of_length(const Alphabet& a, size_t n) {
  std::vector<Word> out{Word{}};
  for (size_t i = 0; i < n; ++i) {
    std::vector<Word> next;
    next.reserve(out.size() * a.size());
    for (const auto& w : out)
      for (char c : a.letters()) next.push_back(w + c);
    out.swap(next);
  }
  return out;
}

std::vector<Word> words_up_to(const Alphabet& a, size_t hi, size_t lo) {
  std::vector<Word> out;
  for (size_t n = lo; n <= hi; ++n) {
    auto ws = words_of_length(a, n);
    out.insert(out.end(), ws.begin(), ws.end());
  }
  return out;
}

}  // namespace osr
