#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace osr {

using Symbols = std::vector<int>;

inline constexpr int EPS = -1;

// Nondeterministic automaton over the symbols 0..nsym-1. Several initial
// states are allowed; a DFA is the restricted form with one initial state,
// no EPS moves and at most one successor per symbol.
struct Fsa {
  int nsym = 0;
  std::vector<std::vector<std::pair<int, int>>> out;  // (symbol or EPS, target)
  std::vector<char> accepting;
  std::vector<int> initial;

  Fsa() = default;
  explicit Fsa(int nsym) : nsym(nsym) {}

  int add_state(bool accept = false);
  void add_trans(int src, int sym, int dst);
  int num_states() const { return static_cast<int>(out.size()); }
  bool is_deterministic() const;
  // Target for sym in a deterministic automaton, -1 if none.
  int next(int state, int sym) const;
};

// Building blocks.
Fsa empty_language(int nsym);
Fsa epsilon_language(int nsym);
Fsa universal(int nsym);                 // domain*
Fsa word_language(int nsym, const Symbols& w);
Fsa symbol_set(int nsym, const std::vector<int>& syms);

bool accepts(const Fsa& m, const Symbols& w);

Fsa union_of(const Fsa& a, const Fsa& b);
Fsa intersect(const Fsa& a, const Fsa& b);
Fsa complement(const Fsa& m);
Fsa difference(const Fsa& a, const Fsa& b);
Fsa concat(const Fsa& a, const Fsa& b);
Fsa star(const Fsa& m);
Fsa plus(const Fsa& m);
Fsa reverse(const Fsa& m);

Fsa remove_epsilon(const Fsa& m);
// Removes states that are unreachable or cannot reach acceptance.
Fsa trim(const Fsa& m);
// Complete deterministic automaton; a sink is added only when needed.
Fsa determinize(const Fsa& m);
// Minimal complete DFA; the sink (if any) is kept and counted.
Fsa minimize(const Fsa& m);

bool is_empty(const Fsa& m);

struct Equivalence {
  bool equal = true;
  Symbols counterexample;  // shortest word in the symmetric difference
};
Equivalence equivalent(const Fsa& a, const Fsa& b);
// Shortest word in L(a) - L(b), if any.
std::optional<Symbols> shortest_difference(const Fsa& a, const Fsa& b);

// Accepted words of length <= max_len, ordered by length then symbol order.
std::vector<Symbols> enumerate(const Fsa& m, size_t max_len);
size_t count_accepted(const Fsa& m, size_t max_len);

// Image under a symbol relabelling; entries of -1 become EPS moves.
Fsa relabel(const Fsa& m, int new_nsym, const std::vector<int>& map);

// Generalized sequential machine with word outputs.
struct Gsm {
  struct Edge {
    int src;
    int in;
    int dst;
    Symbols out;
  };
  int nstates = 0;
  int nin = 0;
  int nout = 0;
  int initial = 0;
  std::vector<char> terminal;
  std::vector<Edge> edges;

  int add_state(bool term = false);
  void add_edge(int src, int in, int dst, Symbols out);
  // Output along the first path reading w (the machines built here are
  // deterministic on their input); nullopt if w is not read to a terminal.
  std::optional<Symbols> apply(const Symbols& w) const;
};

// Words over the output alphabet produced along successful paths whose input
// lies in L(x); the empty output is excluded.
Fsa gsm_image(const Gsm& g, const Fsa& x);

}  // namespace osr
