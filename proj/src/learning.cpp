#include "osr/learning.hpp"

#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "osr/lang.hpp"
#include "osr/padded.hpp"

namespace osr {

namespace {

class Table {
 public:
  Table(int nsym, const MembershipQuery& member) : nsym_(nsym), member_(member) { suffixes_.push_back({}); }

  bool query(const Symbols& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    bool r = member_(w);
    memo_.emplace(w, r);
    return r;
  }

  std::vector<char> row(const Symbols& s) {
    std::vector<char> r;
    r.reserve(suffixes_.size());
    Symbols w;
    for (const auto& e : suffixes_) {
      w = s;
      w.insert(w.end(), e.begin(), e.end());
      r.push_back(query(w));
    }
    return r;
  }

  // Adds every suffix of the counterexample; returns false when none is new.
  bool add_suffixes(const Symbols& ce) {
    bool added = false;
    for (size_t i = 0; i < ce.size(); ++i) {
      Symbols e(ce.begin() + static_cast<long>(i), ce.end());
      if (known_.insert(e).second) {
        suffixes_.push_back(e);
        added = true;
      }
    }
    return added;
  }

  // Closes the table and returns the hypothesis, or nullopt past max_states.
  std::optional<Fsa> hypothesis(int max_states) {
    std::vector<Symbols> access{{}};
    std::map<std::vector<char>, int> index{{row({}), 0}};
    Fsa h(nsym_);
    h.add_state(query({}));
    h.initial = {0};
    for (size_t i = 0; i < access.size(); ++i)
      for (int x = 0; x < nsym_; ++x) {
        Symbols t = access[i];
        t.push_back(x);
        auto r = row(t);
        auto [it, fresh] = index.emplace(r, static_cast<int>(access.size()));
        if (fresh) {
          if (static_cast<int>(access.size()) >= max_states) return std::nullopt;
          access.push_back(t);
          h.add_state(r[0] != 0);
        }
        h.add_trans(static_cast<int>(i), x, it->second);
      }
    return h;
  }

  size_t queries() const { return memo_.size(); }

 private:
  int nsym_;
  const MembershipQuery& member_;
  std::vector<Symbols> suffixes_;
  std::set<Symbols> known_;
  std::map<Symbols, bool> memo_;
};

// Finite trie automaton for a set of symbol words.
Fsa trie(int nsym, const std::vector<Symbols>& words) {
  Fsa m(nsym);
  m.add_state(false);
  m.initial = {0};
  std::vector<std::map<int, int>> kids(1);
  for (const auto& w : words) {
    int s = 0;
    for (int x : w) {
      auto it = kids[s].find(x);
      if (it == kids[s].end()) {
        int t = m.add_state(false);
        kids.emplace_back();
        m.add_trans(s, x, t);
        it = kids[s].emplace(x, t).first;
      }
      s = it->second;
    }
    m.accepting[s] = 1;
  }
  return minimize(m);
}

// Largest depth whose bounded domain stays within the sample budget.
size_t sample_depth(const Fsa& dom, const LearnLimits& lim) {
  size_t d = lim.min_depth;
  while (d < lim.max_depth && count_accepted(dom, d + 1) <= lim.max_sample) ++d;
  return d;
}

Fsa up_to(const Fsa& m, const Alphabet& a, size_t d) {
  int n = static_cast<int>(a.size());
  std::vector<int> all(a.size());
  for (int i = 0; i < n; ++i) all[i] = i;
  Fsa step = union_of(epsilon_language(n), symbol_set(n, all));
  Fsa bounded = epsilon_language(n);
  for (size_t i = 0; i < d; ++i) bounded = minimize(concat(bounded, step));
  return minimize(intersect(m, bounded));
}

// Accepted words longer than the bounded sample: every short word with one
// of its loops pumped past the bound, then random walks. Pumping exposes
// relations whose partners depend on unbounded counts.
std::vector<Word> probe_words(const Fsa& m, const Alphabet& a, size_t depth, const LearnLimits& lim) {
  Fsa d = trim(minimize(m));
  std::vector<Word> out;
  if (d.initial.empty()) return out;
  auto run = [&](const Symbols& w) {
    std::vector<int> states{d.initial[0]};
    for (int x : w) states.push_back(d.next(states.back(), x));
    return states;
  };
  for (const auto& w : enumerate(d, lim.pump_base)) {
    auto states = run(w);
    for (size_t i = 0; i < states.size(); ++i)
      for (size_t j = i + 1; j < states.size() && j - i <= lim.max_pump; ++j) {
        if (states[i] != states[j]) continue;
        Symbols loop(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(j));
        Symbols tail(w.begin() + static_cast<long>(j), w.end());
        for (size_t target : {depth + 3, 2 * depth}) {
          Symbols p(w.begin(), w.begin() + static_cast<long>(i));
          while (p.size() + tail.size() < target) p.insert(p.end(), loop.begin(), loop.end());
          p.insert(p.end(), tail.begin(), tail.end());
          out.push_back(word_of(p, a));
        }
      }
  }
  std::mt19937 rng(lim.seed);
  auto pick = [&](size_t lo, size_t hi) { return std::uniform_int_distribution<size_t>(lo, hi)(rng); };
  for (size_t tries = 0, found = 0; found < lim.probes && tries < 20 * lim.probes; ++tries) {
    size_t target = pick(depth + 1, 3 * depth);
    Symbols w;
    int s = d.initial[0];
    while (w.size() < 4 * target && !(w.size() >= target && d.accepting[s])) {
      const auto& moves = d.out[s];
      if (moves.empty()) break;
      auto [x, t] = moves[pick(0, moves.size() - 1)];
      w.push_back(x);
      s = t;
    }
    if (w.size() >= target && d.accepting[s]) {
      out.push_back(word_of(w, a));
      ++found;
    }
  }
  return out;
}

// Learns {conv(x, y) : (x, y) related} where `key` is the bounded track.
struct RelationProblem {
  Alphabet a;
  Side side;
  Fsa first, second;  // track languages
  bool bound_first;   // which track the bounded sample ranges over
  std::function<Word(const Word&)> partner;  // key track -> other track
};

Learned learn_relation(const RelationProblem& pr, const LearnLimits& lim) {
  const Alphabet& a = pr.a;
  int n = static_cast<int>(a.size());
  PairAlphabet pa(n);
  const Fsa& keys = pr.bound_first ? pr.first : pr.second;
  size_t depth = sample_depth(keys, lim);
  Fsa keys_d = up_to(keys, a, depth);
  std::vector<Symbols> sample;
  auto conv = [&](const Word& k, const Word& other) {
    return pr.bound_first ? convolve(k, other, a, pr.side) : convolve(other, k, a, pr.side);
  };
  for (const auto& ks : enumerate(keys_d, depth)) {
    Word k = word_of(ks, a);
    if (k.empty()) continue;
    sample.push_back(conv(k, pr.partner(k)));
  }
  Fsa target_d = trie(pa.nsym(), sample);
  Fsa frame = minimize(pair_product(pr.first, pr.second, n, pr.side));
  Fsa frame_d = minimize(pr.bound_first ? pair_product(keys_d, pr.second, n, pr.side)
                                        : pair_product(pr.first, keys_d, n, pr.side));
  MembershipQuery member = [&](const Symbols& p) {
    auto xy = try_unconvolve(p, a, pr.side);
    if (!xy) return false;
    const Word& k = pr.bound_first ? xy->first : xy->second;
    const Word& other = pr.bound_first ? xy->second : xy->first;
    if (!accepts(keys, letters_of(k, a))) return false;
    if (!accepts(pr.bound_first ? pr.second : pr.first, letters_of(other, a))) return false;
    return pr.partner(k) == other;
  };
  std::vector<Word> probes = probe_words(keys, a, depth, lim);
  EquivalenceQuery equiv = [&](const Fsa& h) -> std::optional<Symbols> {
    if (auto ce = shortest_difference(target_d, h)) return ce;
    if (auto ce = shortest_difference(intersect(h, frame_d), target_d)) return ce;
    // Every key word needs a partner.
    Fsa covered = project(intersect(h, frame), n, pr.bound_first ? 0 : 1);
    if (auto k = shortest_difference(keys, covered)) {
      Word kw = word_of(*k, a);
      return conv(kw, pr.partner(kw));
    }
    for (const auto& k : probes) {
      Symbols w = conv(k, pr.partner(k));
      if (!accepts(h, w)) return w;
    }
    return std::nullopt;
  };
  Learned out = learn_dfa(pa.nsym(), member, equiv, lim);
  out.depth = depth;
  if (out.converged) out.automaton = minimize(intersect(out.automaton, frame));
  return out;
}

}  // namespace

Learned learn_dfa(int nsym, const MembershipQuery& member, const EquivalenceQuery& equiv, const LearnLimits& lim) {
  Table t(nsym, member);
  Learned out;
  for (out.rounds = 1; out.rounds <= lim.max_rounds; ++out.rounds) {
    auto h = t.hypothesis(lim.max_states);
    if (!h) {
      out.failure = "state limit reached";
      break;
    }
    auto ce = equiv(*h);
    if (!ce) {
      out.automaton = minimize(*h);
      out.converged = true;
      break;
    }
    if (!t.add_suffixes(*ce)) {
      out.failure = "counterexample added no distinguishing suffix";
      break;
    }
  }
  if (!out.converged && out.failure.empty()) out.failure = "round limit reached";
  out.queries = t.queries();
  return out;
}

Learned learn_multiplier(const NormalForm& nf, const Fsa& l, char letter, Flavor f, const LearnLimits& lim) {
  Word c = letter == kEpsKey ? Word() : Word(1, letter);
  bool left = left_multiplication(f);
  auto image = [&nf, c, left](const Word& x) { return c.empty() ? x : nf.rep(left ? c + x : x + c); };
  if (conv_side(f) == Side::R) return learn_relation({nf.alphabet, Side::R, l, l, true, image}, lim);
  // Left padding is read from the right: learn the reversed pairs instead.
  Fsa rl = minimize(reverse(l));
  Learned out = learn_relation(
      {nf.alphabet, Side::R, rl, rl, true, [&image](const Word& x) { return reverse(image(reverse(x))); }}, lim);
  if (out.converged) out.automaton = minimize(reverse(out.automaton));
  return out;
}

Learned learn_prefix_equality(const NormalForm& nf, const Fsa& l, const LearnLimits& lim) {
  int n = static_cast<int>(nf.alphabet.size());
  Fsa pref = minimize(difference(lang::prefixes(l), epsilon_language(n)));
  RelationProblem pr{nf.alphabet, Side::R, l, pref, false, [&nf](const Word& w) { return nf.rep(w); }};
  return learn_relation(pr, lim);
}

}  // namespace osr
