#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "osr/rewriting.hpp"
#include "osr/structures.hpp"

namespace osr {

enum class Verdict { yes, no, unknown };
const char* verdict_name(Verdict v);

// Relation over abstract letters x, y, z, ... named by first occurrence.
struct Pattern {
  Word u, v;
  std::map<char, char> renaming;  // surface letter -> abstract letter
  bool trivial = false;
  std::string str() const;
};

// Both orientations are renamed and the smaller (deg-lex on u, then v) is kept,
// which makes the result invariant under letter renaming.
Pattern canonicalize(const Word& u, const Word& v);

struct ClassificationResult {
  Verdict prefix_automatic = Verdict::unknown;
  Verdict automatic = Verdict::unknown;
  Verdict biautomatic = Verdict::unknown;
  std::string pattern;
  std::vector<std::string> basis;  // rules of the completed system used for the witness
  std::optional<std::string> witness_case;
  bool extension = false;

  std::string record() const;
};

// `lhs->rhs` for rules, `pre(pump)^isuf->pre(pump)^isuf:i>=k` for schemas.
std::vector<std::string> rule_strings(const RewriteSystem& rs);

ClassificationResult classify(const Presentation& p);
ClassificationResult classify(const Word& u, const Word& v, const Alphabet& a);

struct Witness {
  AutomaticStructure structure;
  NormalForm nf;
  std::vector<Flavor> flavors;
  std::vector<std::string> notes;
};

// Declared flavors: all four when biautomatic, otherwise rr, unless given
// explicitly; prefix equality is always present. Transcribed multipliers
// failing the check at `check_depth` are replaced and noted. Multipliers
// that are neither transcribed nor constructible raise not_applicable.
// `seed` drives the random probes of the automaton learner.
Witness build_witness(const Presentation& p, const ClassificationResult& r, size_t check_depth = 6,
                      const std::optional<std::vector<Flavor>>& flavors = std::nullopt, unsigned seed = 1);

// Completion under the declared letter order, with an adjoined identity when
// one side is empty; nullopt when completion does not finish within `lim`.
struct OrderedNormalForm {
  NormalForm nf;
  Fsa language;
};
std::optional<OrderedNormalForm> normal_form_for(const Presentation& p, const CompletionLimits& lim = {});

struct TableRow {
  Pattern pattern;
  ClassificationResult result;
};
// Every canonical pattern with |v| <= |u| <= 3 over at most `letters` letters,
// each classified over the generators {a, b, ...}.
std::vector<TableRow> full_table(size_t letters = 2);

// Presentation obtained by mapping abstract letters x, y, ... onto a, b, ...
Presentation instantiate(const Pattern& p, size_t letters);

// "<word>=<word>" with optional alphabet; sides normalised so |u| >= |v|.
Presentation parse_relation(const std::string& text, const std::optional<std::string>& alphabet = std::nullopt);

}  // namespace osr
