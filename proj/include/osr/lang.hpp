#pragma once

#include <vector>

#include "osr/fsa.hpp"
#include "osr/words.hpp"

// Small language builders over an Alphabet.
namespace osr::lang {

Fsa lit(const Alphabet& a, const Word& w);
Fsa finite(const Alphabet& a, const std::vector<Word>& ws);
Fsa any(const Alphabet& a);       // A*
Fsa any_plus(const Alphabet& a);  // A+
Fsa ending_in(const Alphabet& a, const std::vector<Word>& ws);     // A* ws
Fsa starting_with(const Alphabet& a, const std::vector<Word>& ws); // ws A*
Fsa containing(const Alphabet& a, const std::vector<Word>& ws);    // A* ws A*
// All prefixes of accepted words, the empty word included.
Fsa prefixes(const Fsa& m);
// Words of L written over a larger alphabet that contains every letter of `from`.
Fsa embed(const Fsa& m, const Alphabet& from, const Alphabet& to);

}  // namespace osr::lang
