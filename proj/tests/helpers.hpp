#pragma once

#include <random>
#include <string>
#include <vector>

#include "osr/fsa.hpp"
#include "osr/padded.hpp"
#include "osr/words.hpp"

namespace osr::testing {

inline Fsa lit(const Alphabet& a, const Word& w) {
  return word_language(static_cast<int>(a.size()), letters_of(w, a));
}

inline Fsa finite(const Alphabet& a, const std::vector<Word>& ws) {
  Fsa r = empty_language(static_cast<int>(a.size()));
  for (const auto& w : ws) r = union_of(r, lit(a, w));
  return r;
}

inline Fsa any(const Alphabet& a) { return universal(static_cast<int>(a.size())); }

inline Fsa any_plus(const Alphabet& a) { return plus(symbol_set(static_cast<int>(a.size()), [&] {
  std::vector<int> s;
  for (size_t i = 0; i < a.size(); ++i) s.push_back(static_cast<int>(i));
  return s;
}())); }

// A* f A*
inline Fsa containing(const Alphabet& a, const Word& f) { return concat(concat(any(a), lit(a, f)), any(a)); }

inline bool acc(const Fsa& m, const Alphabet& a, const Word& w) { return accepts(m, letters_of(w, a)); }

inline bool acc_pair(const Fsa& m, const Alphabet& a, const Word& u, const Word& v, Side side = Side::R) {
  return accepts(m, convolve(u, v, a, side));
}

inline Fsa pairs(const Alphabet& a, const std::vector<std::pair<Word, Word>>& ps, Side side = Side::R) {
  PairAlphabet p(static_cast<int>(a.size()));
  Fsa r = empty_language(p.nsym());
  for (const auto& [u, v] : ps) r = union_of(r, pair_const(u, v, a, side));
  return r;
}

// Random NFA with some EPS moves.
inline Fsa random_nfa(std::mt19937& rng, int nsym, int states) {
  Fsa m(nsym);
  std::uniform_int_distribution<int> st(0, states - 1), sy(-1, nsym - 1), coin(0, 3);
  for (int i = 0; i < states; ++i) m.add_state(coin(rng) == 0);
  m.initial.push_back(0);
  int edges = states * nsym;
  for (int i = 0; i < edges; ++i) {
    int s = sy(rng);
    if (s == EPS && coin(rng) != 0) s = 0;
    m.add_trans(st(rng), s, st(rng));
  }
  return m;
}

inline std::vector<Symbols> all_symbol_words(int nsym, size_t max_len) {
  std::vector<Symbols> out{{}};
  size_t lo = 0;
  for (size_t len = 1; len <= max_len; ++len) {
    size_t hi = out.size();
    for (size_t i = lo; i < hi; ++i)
      for (int s = 0; s < nsym; ++s) {
        Symbols w = out[i];
        w.push_back(s);
        out.push_back(w);
      }
    lo = hi;
  }
  return out;
}

}  // namespace osr::testing
