#include "osr/lang.hpp"

#include "osr/errors.hpp"
#include "osr/padded.hpp"

namespace osr::lang {

Fsa lit(const Alphabet& a, const Word& w) {
  return word_language(static_cast<int>(a.size()), letters_of(w, a));
}

Fsa finite(const Alphabet& a, const std::vector<Word>& ws) {
  Fsa r = empty_language(static_cast<int>(a.size()));
  for (const auto& w : ws) r = union_of(r, lit(a, w));
  return minimize(r);
}

Fsa any(const Alphabet& a) { return universal(static_cast<int>(a.size())); }

Fsa any_plus(const Alphabet& a) {
  std::vector<int> s(a.size());
  for (size_t i = 0; i < a.size(); ++i) s[i] = static_cast<int>(i);
  return minimize(plus(symbol_set(static_cast<int>(a.size()), s)));
}

Fsa ending_in(const Alphabet& a, const std::vector<Word>& ws) {
  return minimize(concat(any(a), finite(a, ws)));
}

Fsa starting_with(const Alphabet& a, const std::vector<Word>& ws) {
  return minimize(concat(finite(a, ws), any(a)));
}

Fsa containing(const Alphabet& a, const std::vector<Word>& ws) {
  return minimize(concat(concat(any(a), finite(a, ws)), any(a)));
}

Fsa prefixes(const Fsa& m) {
  Fsa t = trim(m);
  for (auto& f : t.accepting) f = 1;
  if (t.num_states() == 0) return epsilon_language(m.nsym);
  return minimize(t);
}

Fsa embed(const Fsa& m, const Alphabet& from, const Alphabet& to) {
  if (m.nsym != static_cast<int>(from.size())) throw invalid_input("embed: automaton is not over the source alphabet");
  std::vector<int> map(from.size());
  for (size_t i = 0; i < from.size(); ++i) map[i] = to.index(from.letter(i));
  return relabel(m, static_cast<int>(to.size()), map);
}

}  // namespace osr::lang
