#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "osr/fsa.hpp"
#include "osr/words.hpp"

namespace osr {

enum class Side { R, L };

inline const char* side_name(Side s) { return s == Side::R ? "R" : "L"; }

// Symbols of A(2,$) for an alphabet of n letters. Letters are their indices,
// PAD is n, and the pair (l, r) is encoded as l*(n+1)+r; ($,$) is excluded and
// would be the last code, so the domain is contiguous.
struct PairAlphabet {
  int n = 0;
  explicit PairAlphabet(int n) : n(n) {}
  int pad() const { return n; }
  int nsym() const { return (n + 1) * (n + 1) - 1; }
  int sym(int l, int r) const;
  int left(int s) const { return s / (n + 1); }
  int right(int s) const { return s % (n + 1); }
};

Symbols letters_of(const Word& w, const Alphabet& a);
Word word_of(const Symbols& s, const Alphabet& a);
std::string pair_symbol_name(int sym, const Alphabet& a);
std::string show_pairs(const Symbols& p, const Alphabet& a);

// Padded convolutions; (eps, eps) is rejected.
Symbols convolve(const Word& u, const Word& v, const Alphabet& a, Side side);
inline Symbols convolve_right(const Word& u, const Word& v, const Alphabet& a) {
  return convolve(u, v, a, Side::R);
}
inline Symbols convolve_left(const Word& u, const Word& v, const Alphabet& a) {
  return convolve(u, v, a, Side::L);
}
std::pair<Word, Word> unconvolve(const Symbols& p, const Alphabet& a, Side side);
// Same as unconvolve but returns nullopt for malformed input.
std::optional<std::pair<Word, Word>> try_unconvolve(const Symbols& p, const Alphabet& a, Side side);

Fsa diagonal(const Fsa& l, int n);
Fsa pair_const(const Word& u, const Word& v, const Alphabet& a, Side side);
// (X x Y) convolved at the given side. When exact_diff is set only pairs with
// |x| - |y| == *exact_diff are kept.
Fsa pair_product(const Fsa& x, const Fsa& y, int n, Side side,
                 std::optional<int> exact_diff = std::nullopt);
// All well-formed convolutions at the given side.
Fsa all_convolutions(int n, Side side);

// Projection onto one track (0 = left, 1 = right) as a language over A.
Fsa project(const Fsa& m, int n, int track);
Fsa swap_tracks(const Fsa& m, int n);

// Largest ||w1|-|w2|| over accepted pairs of length <= depth, with a witness.
struct BoundAudit {
  int max_diff = 0;
  Symbols witness;
};
BoundAudit audit_bound(const Fsa& m, int n, int depth, int cap);

// Exact largest ||w1|-|w2|| over all accepted pairs (convolved at `side`),
// nullopt when unbounded.
std::optional<int> exact_bound(const Fsa& m, int n, Side side);

inline constexpr int kDefaultAuditDepth = 10;

Fsa odot_right(const Fsa& m, const Fsa& nn, int n, int bound,
               int audit_depth = kDefaultAuditDepth);
Fsa odot_left(const Fsa& m, const Fsa& nn, int n, int bound_m, int bound_n,
              int audit_depth = kDefaultAuditDepth);
Fsa swap_side(const Fsa& m, int n, int k, Side from, int audit_depth = kDefaultAuditDepth);

// Combinator trees for pair languages.
struct PaddedExpr;
using ExprPtr = std::shared_ptr<const PaddedExpr>;

struct PaddedExpr {
  struct DiagOf { Fsa language; };
  struct PairConst { Word u, v; Side side; };
  struct Concat { ExprPtr a, b; };
  struct Union { ExprPtr a, b; };
  struct Star { ExprPtr a; };
  struct Plus { ExprPtr a; };
  struct OdotR { ExprPtr m, n; int bound; };
  struct OdotL { ExprPtr m, n; int bound_m, bound_n; };
  struct IntersectPairs { ExprPtr a; Fsa l1, l2; Side side; };
  struct Raw { Fsa fsa; };
  std::variant<DiagOf, PairConst, Concat, Union, Star, Plus, OdotR, OdotL, IntersectPairs, Raw>
      node;
};

namespace expr {
ExprPtr diag(Fsa l);
ExprPtr pair(Word u, Word v, Side side = Side::R);
ExprPtr cat(ExprPtr a, ExprPtr b);
ExprPtr alt(ExprPtr a, ExprPtr b);
ExprPtr alt(std::vector<ExprPtr> xs);
ExprPtr star(ExprPtr a);
ExprPtr plus(ExprPtr a);
ExprPtr odot(ExprPtr m, ExprPtr n, int bound);
ExprPtr odot_l(ExprPtr m, ExprPtr n, int bound_m, int bound_n);
ExprPtr within(ExprPtr a, Fsa l1, Fsa l2, Side side = Side::R);
ExprPtr raw(Fsa m);
}  // namespace expr

Fsa eval_expr(const ExprPtr& e, const Alphabet& a);

}  // namespace osr
