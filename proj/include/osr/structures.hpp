#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "osr/fsa.hpp"
#include "osr/padded.hpp"
#include "osr/rewriting.hpp"
#include "osr/words.hpp"

namespace osr {

// First letter: convolution side. Second letter: side the generator multiplies on.
enum class Flavor { rr, rl, lr, ll };

inline constexpr Flavor kAllFlavors[] = {Flavor::rr, Flavor::rl, Flavor::lr, Flavor::ll};

const char* flavor_name(Flavor f);
std::optional<Flavor> parse_flavor(const std::string& s);
inline Side conv_side(Flavor f) { return f == Flavor::rr || f == Flavor::rl ? Side::R : Side::L; }
inline bool left_multiplication(Flavor f) { return f == Flavor::rl || f == Flavor::ll; }

// Letter key of the multiplier by the empty word.
inline constexpr char kEpsKey = '\0';

// Maps words over `alphabet` to their representatives. The rewriting system
// works over `rs.alphabet`; an identity letter absent from it is erased first,
// and an optional gsm re-encodes the reduced word over `alphabet`.
struct NormalForm {
  Alphabet alphabet;
  RewriteSystem rs;
  std::optional<Gsm> gsm;
  // Representatives of the reversed semigroup: rep(w) = rev(base(rev(w))).
  bool reversed = false;

  std::optional<char> identity() const { return alphabet.identity(); }
  // rep of the empty word is the identity letter when there is one, else "".
  Word rep(const Word& w) const;
  bool same(const Word& x, const Word& y) const { return rep(x) == rep(y); }
};

NormalForm plain_normal_form(const RewriteSystem& rs);
// Normal forms of S^1 where S is presented by rs; `e` is adjoined.
NormalForm identity_normal_form(const RewriteSystem& rs, char e);

struct AutomaticStructure {
  Alphabet alphabet;
  Fsa language;
  std::map<std::pair<char, Flavor>, Fsa> multipliers;
  std::optional<Fsa> prefix_equality;
  bool uniqueness = true;
  std::string case_id;
  std::string provenance;

  const Fsa* multiplier(char letter, Flavor f) const;
  std::vector<Flavor> flavors() const;
  bool has_flavor(Flavor f) const;
};

// Oracle samples. Negatives are implicit: every pair in domain x codomain
// that is not positive.
struct PairRelationSample {
  Alphabet alphabet;
  Side side = Side::R;
  size_t depth = 0;
  std::vector<std::pair<Word, Word>> positive;
  std::vector<Word> domain;
  std::vector<Word> codomain;
};

PairRelationSample multiplier_oracle(const Fsa& l, const NormalForm& nf, char letter, Flavor f,
                                     size_t depth);
PairRelationSample multiplier_oracle(const Fsa& l, const RewriteSystem& rs, char letter, Flavor f,
                                     size_t depth);

struct MultiplierCheck {
  std::string name;  // "<letter|eps>/<flavor>" or "prefix"
  bool pass = true;
  size_t checked = 0;
  std::vector<std::pair<Word, Word>> missing;
  std::vector<std::pair<Word, Word>> spurious;
  std::vector<std::string> notes;
};

enum class PrefixStatus { pass, fail, absent };

struct VerificationReport {
  size_t depth = 0;
  std::vector<MultiplierCheck> checks;
  PrefixStatus prefix_status = PrefixStatus::absent;
  std::vector<std::string> language_issues;

  bool passed() const;
  std::string str() const;
};

inline constexpr size_t kMaxReportedPairs = 5;

VerificationReport verify_structure(const AutomaticStructure& s, const NormalForm& nf, size_t depth);
VerificationReport verify_structure(const AutomaticStructure& s, const RewriteSystem& rs, size_t depth);

// Relation synthesis from sound clauses (sigma, tau): the multiplier is the
// union of Delta_{A*} (sigma, tau) over the clauses, cut down to dom x cod.
struct ClauseFamily {
  Word p, q, r;     // first track p q^i r
  Word p2, s, r2;   // second track p2 s^i r2
  size_t min_i = 0;
  bool bounded() const { return q.size() == s.size(); }
};

struct SynthesisLimits {
  size_t max_rounds = 80;
  size_t max_word = 28;
  size_t family_span = 12;
  size_t max_pump = 3;
};

struct Synthesis {
  Fsa automaton;
  std::vector<std::pair<Word, Word>> clauses;
  std::vector<ClauseFamily> families;
  std::optional<int> bound;  // largest length difference when bounded
  bool exact = false;
  std::string failure;
};

using WordMap = std::function<Word(const Word&)>;
using Soundness = std::function<bool(const Word&, const Word&)>;

// Pairs (alpha, f(alpha)) for alpha in dom, convolved at the right.
Synthesis synthesize_relation(const Alphabet& a, const Fsa& dom, const Fsa& cod, const WordMap& f,
                              const Soundness& sound, const SynthesisLimits& lim = {});

// Multiplier for one letter (kEpsKey for the empty word) and flavor.
Synthesis synthesize_multiplier(const NormalForm& nf, const Fsa& l, char letter, Flavor f,
                                const SynthesisLimits& lim = {});
Synthesis synthesize_prefix_equality(const NormalForm& nf, const Fsa& l,
                                     const SynthesisLimits& lim = {});

// Structure with synthesized multipliers for the requested flavors.
AutomaticStructure synthesize_structure(const NormalForm& nf, const Fsa& l,
                                        const std::vector<Flavor>& flavors, bool prefix,
                                        const SynthesisLimits& lim = {});

// Nonoverlapping bases: multipliers compiled from the displayed union formulas.
struct NonoverlapCheck {
  bool prefix_ok = true;
  bool bi_ok = true;
  std::string violation;  // first violating (i, j, t)
};
NonoverlapCheck nonoverlap_conditions(const RewriteSystem& rs);
AutomaticStructure construct_generic_nonoverlap(const RewriteSystem& rs);

// Counter gsm that pads every run-letter beyond the first m of a run with
// k-2 identity letters.
struct PaddingCase {
  char run = 0;
  size_t m = 0;
  size_t k = 0;
};
std::optional<PaddingCase> padding_case(const Word& u, const Word& v);
Gsm padding_gsm(const Fsa& l, const Alphabet& a, const Alphabet& b, const PaddingCase& pc);
NormalForm padded_normal_form(const RewriteSystem& rs, const PaddingCase& pc, char e);
Fsa padded_language(const NormalForm& nf);

// Witness catalog.
struct CatalogEntry {
  std::string case_id;
  std::string description;
};
std::vector<CatalogEntry> catalog_cases();
struct CatalogWitness {
  AutomaticStructure structure;
  NormalForm nf;
};
// Presentation must match the case pattern (letters may be renamed).
CatalogWitness construct_from_catalog(const std::string& case_id, const Presentation& p);

AutomaticStructure extend_with_identity(const AutomaticStructure& s, char e);
AutomaticStructure reverse_structure(const AutomaticStructure& s);
NormalForm reverse_normal_form(const NormalForm& nf);

struct NerodePoint {
  size_t depth;
  size_t bound;
};
// Lower bound on states of any automaton consistent with the sample,
// using samples truncated at depth d for each requested d.
std::vector<NerodePoint> nerode_lower_bound(const PairRelationSample& sample,
                                            const std::vector<size_t>& depths);
size_t nerode_bound_at(const PairRelationSample& sample, size_t d);

}  // namespace osr
