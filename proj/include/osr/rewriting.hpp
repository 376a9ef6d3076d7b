#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "osr/fsa.hpp"
#include "osr/words.hpp"

namespace osr {

using Relation = std::pair<Word, Word>;

struct Rule {
  Word lhs;
  Word rhs;
  bool operator==(const Rule&) const = default;
};

// lhs_pre lhs_pump^i lhs_suf -> rhs_pre rhs_pump^i rhs_suf for every i >= min_i.
struct RuleSchema {
  Word lhs_pre, lhs_pump, lhs_suf;
  Word rhs_pre, rhs_pump, rhs_suf;
  size_t min_i = 1;

  Rule instance(size_t i) const;
  bool operator==(const RuleSchema&) const = default;
};

enum class Completeness { complete, bounded_incomplete, unknown };
const char* completeness_name(Completeness c);

struct RewriteSystem {
  Alphabet alphabet;
  std::vector<Rule> rules;
  std::vector<RuleSchema> schemas;
  Completeness status = Completeness::unknown;

  Word reduce(const Word& w) const;
  bool irreducible(const Word& w) const;
  // One leftmost rewrite step, nullopt when w is irreducible.
  std::optional<Word> step(const Word& w) const;
  std::string str() const;
};

Rule orient(const Word& u, const Word& v, const Alphabet& ord);

struct Composition {
  Word ambiguity;
  Word left;
  Word right;
};
std::vector<Composition> compositions(const Rule& r1, const Rule& r2);

struct CompletionLimits {
  size_t max_rules = 200;
  size_t max_len = 20;
  bool detect_schemas = true;
  size_t audit_span = 8;
};

RewriteSystem shirshov_complete(const std::vector<Relation>& relations, const Alphabet& ord,
                                const CompletionLimits& limits = {});

// Nontrivial compositions among rules and schema instances min_i..min_i+span.
std::vector<Composition> audit_compositions(const RewriteSystem& rs, size_t span);

Fsa leading_language(const RewriteSystem& rs);
// A+ minus words with a leading factor, plus the identity letter when given.
Fsa irr_language(const RewriteSystem& rs, std::optional<char> identity = std::nullopt);

enum class CongruenceAnswer { equal, distinct_up_to_cap };
CongruenceAnswer congruence_equal(const Word& w1, const Word& w2, const std::vector<Relation>& rel,
                                  size_t cap);
// Class labels for every word of length <= max_len, joined through words of
// length <= cap. Words are listed in words_up_to order.
std::vector<int> congruence_classes(const Alphabet& a, const std::vector<Relation>& rel,
                                    size_t max_len, size_t cap);

// Adjoins `e` as the least letter, replaces empty sides by e and adds the
// absorption relations xe = x = ex.
struct MonoidEmbedding {
  Alphabet alphabet;
  std::vector<Relation> relations;
};
MonoidEmbedding monoid_embedding(const Alphabet& a, const std::vector<Relation>& rel, char e = 'e');

struct Presentation {
  Alphabet alphabet;
  std::vector<Relation> relations;
};
// `gens: a,b` followed by `rel: u = v` lines; 1 denotes the empty word.
Presentation parse_presentation(const std::string& text);
std::string format_presentation(const Presentation& p);

}  // namespace osr
