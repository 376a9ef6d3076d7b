#pragma once

#include <functional>
#include <optional>
#include <string>

#include "osr/fsa.hpp"
#include "osr/structures.hpp"

namespace osr {

// Active automaton learning (observation table with counterexample suffixes).
// Membership queries are exact; equivalence is decided against the caller's
// bounded check, so the result agrees with the target up to that bound.
using MembershipQuery = std::function<bool(const Symbols&)>;
using EquivalenceQuery = std::function<std::optional<Symbols>(const Fsa&)>;

struct LearnLimits {
  size_t max_sample = 30000;  // largest bounded sample used for equivalence
  size_t min_depth = 6;
  size_t max_depth = 14;
  int max_states = 150;
  size_t max_rounds = 200;
  size_t probes = 300;  // random long words checked after the bounded sample
  unsigned seed = 1;
  size_t pump_base = 8;  // short words whose loops are pumped
  size_t max_pump = 4;
};

struct Learned {
  Fsa automaton;
  bool converged = false;
  size_t depth = 0;  // bound of the equivalence check
  size_t rounds = 0;
  size_t queries = 0;
  std::string failure;
};

Learned learn_dfa(int nsym, const MembershipQuery& member, const EquivalenceQuery& equiv, const LearnLimits& lim = {});

// Multiplier for one letter (kEpsKey for the empty word) and flavor.
Learned learn_multiplier(const NormalForm& nf, const Fsa& l, char letter, Flavor f, const LearnLimits& lim = {});
// Pairs (rep(w), w) for nonempty prefixes w of L.
Learned learn_prefix_equality(const NormalForm& nf, const Fsa& l, const LearnLimits& lim = {});

}  // namespace osr
