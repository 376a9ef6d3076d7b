#include <algorithm>

#include "osr/errors.hpp"
#include "osr/lang.hpp"
#include "osr/structures.hpp"

namespace osr {

namespace {

struct Candidate {
  ClauseFamily fam;
  size_t cost = 0;
};

Word instance_first(const ClauseFamily& f, size_t i) { return f.p + power(f.q, i) + f.r; }
Word instance_second(const ClauseFamily& f, size_t i) { return f.p2 + power(f.s, i) + f.r2; }

// Smallest j0 <= i such that every instance j0..i+span is sound, or nullopt.
std::optional<size_t> sound_from(const ClauseFamily& f, size_t i, size_t span, const Soundness& sound) {
  for (size_t j = i; j <= i + span; ++j)
    if (!sound(instance_first(f, j), instance_second(f, j))) return std::nullopt;
  size_t j0 = i;
  while (j0 > 0) {
    Word x = instance_first(f, j0 - 1), y = instance_second(f, j0 - 1);
    if (x.empty() && y.empty()) break;
    if (!sound(x, y)) break;
    --j0;
  }
  return j0;
}

// Splits w = p q^i r with |q| = len and i >= 2 maximal at that position.
struct Split {
  Word p, q, r;
  size_t i;
};

std::vector<Split> pump_splits(const Word& w, size_t max_pump) {
  std::vector<Split> out;
  for (size_t len = 1; len <= max_pump; ++len)
    for (size_t start = 0; start + 2 * len <= w.size(); ++start) {
      Word q = w.substr(start, len);
      size_t i = 1;
      while (start + (i + 1) * len <= w.size() && w.compare(start + i * len, len, q) == 0) ++i;
      if (i < 2) continue;
      if (start >= len && w.compare(start - len, len, q) == 0) continue;  // not leftmost
      out.push_back({w.substr(0, start), q, w.substr(start + i * len), i});
    }
  return out;
}

std::optional<ClauseFamily> detect_family(const Word& sigma, const Word& tau, const Soundness& sound,
                                          const SynthesisLimits& lim) {
  std::optional<Candidate> best;
  auto consider = [&](ClauseFamily f, size_t i) {
    auto j0 = sound_from(f, i, lim.family_span, sound);
    if (!j0) return;
    f.min_i = *j0;
    size_t cost = (f.bounded() ? 0 : 1000) + f.min_i * 50 + f.p.size() + f.r.size() + f.p2.size() + f.r2.size();
    if (!best || cost < best->cost) best = Candidate{f, cost};
  };
  auto ssplits = pump_splits(sigma, lim.max_pump);
  auto tsplits = pump_splits(tau, lim.max_pump);
  for (const auto& a : ssplits) {
    for (const auto& b : tsplits) {
      if (b.q.size() != a.q.size()) continue;
      // Both tracks may carry the pump for any common exponent.
      for (size_t i = 2; i <= std::min(a.i, b.i); ++i) {
        ClauseFamily f{a.p, a.q, power(a.q, a.i - i) + a.r, b.p, b.q, power(b.q, b.i - i) + b.r, 0};
        consider(f, i);
        ClauseFamily g{a.p + power(a.q, a.i - i), a.q, a.r, b.p + power(b.q, b.i - i), b.q, b.r, 0};
        consider(g, i);
      }
    }
    ClauseFamily f{a.p, a.q, a.r, tau, "", "", 0};
    consider(f, a.i);
  }
  for (const auto& b : tsplits) {
    ClauseFamily f{sigma, "", "", b.p, b.q, b.r, 0};
    consider(f, b.i);
  }
  if (!best) return std::nullopt;
  return best->fam;
}

Fsa compile_family(const ClauseFamily& f, const Alphabet& a) {
  int n = static_cast<int>(a.size());
  auto track = [&](const Word& p, const Word& q, const Word& r) {
    if (q.empty()) return lang::lit(a, p + r);
    return minimize(concat(concat(lang::lit(a, p + power(q, f.min_i)), star(lang::lit(a, q))), lang::lit(a, r)));
  };
  Fsa x = track(f.p, f.q, f.r), y = track(f.p2, f.s, f.r2);
  std::optional<int> diff;
  if (f.bounded() && !f.q.empty())
    diff = static_cast<int>(f.p.size() + f.r.size()) - static_cast<int>(f.p2.size() + f.r2.size());
  Fsa body = pair_product(x, y, n, Side::R, diff);
  return minimize(concat(diagonal(lang::any(a), n), body));
}

Fsa compile_clause(const Word& sigma, const Word& tau, const Alphabet& a) {
  int n = static_cast<int>(a.size());
  Fsa d = diagonal(lang::any(a), n);
  if (sigma.empty() && tau.empty()) return minimize(d);
  return minimize(concat(d, pair_const(sigma, tau, a, Side::R)));
}

}  // namespace

Synthesis synthesize_relation(const Alphabet& a, const Fsa& dom, const Fsa& cod, const WordMap& f,
                              const Soundness& sound, const SynthesisLimits& lim) {
  int n = static_cast<int>(a.size());
  PairAlphabet pa(n);
  Synthesis out;
  Fsa frame = minimize(pair_product(dom, cod, n, Side::R));
  Fsa u = empty_language(pa.nsym());
  int bound = 0;
  bool bounded = true;
  for (size_t round = 0;; ++round) {
    Fsa m = minimize(intersect(u, frame));
    auto diff = shortest_difference(dom, project(m, n, 0));
    if (!diff) {
      out.automaton = m;
      out.exact = true;
      break;
    }
    if (round >= lim.max_rounds) {
      out.automaton = m;
      out.failure = "clause limit reached";
      break;
    }
    Word alpha = word_of(*diff, a);
    if (alpha.size() > lim.max_word) {
      out.automaton = m;
      out.failure = "uncovered word too long: " + alpha;
      break;
    }
    Word beta = f(alpha);
    Word sigma = alpha, tau = beta;
    for (size_t k = 0; k <= alpha.size(); ++k) {
      size_t g = alpha.size() - k;
      if (beta.compare(0, g, alpha, 0, g) != 0 || beta.size() < g) continue;
      Word s = alpha.substr(g), t = beta.substr(g);
      if (sound(s, t)) {
        sigma = s, tau = t;
        break;
      }
    }
    if (auto fam = detect_family(sigma, tau, sound, lim)) {
      u = minimize(union_of(u, compile_family(*fam, a)));
      if (fam->bounded())
        bound = std::max(bound, std::abs(static_cast<int>(fam->p.size() + fam->r.size()) -
                                         static_cast<int>(fam->p2.size() + fam->r2.size())));
      else
        bounded = false;
      out.families.push_back(*fam);
    } else {
      u = minimize(union_of(u, compile_clause(sigma, tau, a)));
      bound = std::max(bound, std::abs(static_cast<int>(sigma.size()) - static_cast<int>(tau.size())));
      out.clauses.emplace_back(sigma, tau);
    }
  }
  if (bounded) out.bound = bound;
  return out;
}

Synthesis synthesize_multiplier(const NormalForm& nf, const Fsa& l, char letter, Flavor fl,
                                const SynthesisLimits& lim) {
  const Alphabet& a = nf.alphabet;
  int n = static_cast<int>(a.size());
  if (letter == kEpsKey) {
    Synthesis s;
    s.automaton = minimize(diagonal(l, n));
    s.clauses.emplace_back("", "");
    s.bound = 0;
    s.exact = true;
    if (conv_side(fl) == Side::L) s.automaton = minimize(s.automaton);
    return s;
  }
  Word c(1, letter);
  auto right = [&] {
    WordMap f = [&](const Word& x) { return nf.rep(x + c); };
    Soundness snd = [&](const Word& x, const Word& y) { return nf.rep(x + c) == nf.rep(y); };
    return synthesize_relation(a, l, l, f, snd, lim);
  };
  auto left = [&] {
    Fsa rl = minimize(reverse(l));
    WordMap f = [&](const Word& x) { return reverse(nf.rep(c + reverse(x))); };
    Soundness snd = [&](const Word& x, const Word& y) { return nf.rep(c + reverse(x)) == nf.rep(reverse(y)); };
    Synthesis s = synthesize_relation(a, rl, rl, f, snd, lim);
    s.automaton = minimize(reverse(s.automaton));
    for (auto& [x, y] : s.clauses) x = reverse(x), y = reverse(y);
    return s;
  };
  switch (fl) {
    case Flavor::rr: return right();
    case Flavor::ll: return left();
    case Flavor::lr:
    case Flavor::rl: {
      Synthesis s = fl == Flavor::lr ? right() : left();
      if (!s.exact) return s;
      if (!s.bound) {
        s.exact = false;
        s.failure = "unbounded length difference; cannot change convolution side";
        return s;
      }
      Side from = fl == Flavor::lr ? Side::R : Side::L;
      s.automaton = swap_side(s.automaton, n, *s.bound + 1, from);
      return s;
    }
  }
  return {};
}

Synthesis synthesize_prefix_equality(const NormalForm& nf, const Fsa& l, const SynthesisLimits& lim) {
  const Alphabet& a = nf.alphabet;
  int n = static_cast<int>(a.size());
  Fsa pref = minimize(difference(lang::prefixes(l), epsilon_language(n)));
  WordMap f = [&](const Word& x) { return nf.rep(x); };
  Soundness snd = [&](const Word& x, const Word& y) { return nf.rep(x) == nf.rep(y); };
  Synthesis s = synthesize_relation(a, pref, l, f, snd, lim);
  s.automaton = minimize(swap_tracks(s.automaton, n));
  for (auto& [x, y] : s.clauses) std::swap(x, y);
  return s;
}

AutomaticStructure synthesize_structure(const NormalForm& nf, const Fsa& l, const std::vector<Flavor>& flavors,
                                        bool prefix, const SynthesisLimits& lim) {
  AutomaticStructure s;
  s.alphabet = nf.alphabet;
  s.language = minimize(l);
  s.case_id = "synthesized";
  s.provenance = "synthesized from sound clauses";
  std::vector<char> keys{kEpsKey};
  for (char c : nf.alphabet.letters()) keys.push_back(c);
  for (Flavor f : flavors)
    for (char c : keys) {
      Synthesis r = synthesize_multiplier(nf, s.language, c, f, lim);
      if (!r.exact)
        throw not_applicable("synthesis failed for " + std::string(c == kEpsKey ? "eps" : std::string(1, c)) +
                             "/" + flavor_name(f) + ": " + r.failure);
      s.multipliers[{c, f}] = r.automaton;
    }
  if (prefix) {
    Synthesis r = synthesize_prefix_equality(nf, s.language, lim);
    if (!r.exact) throw not_applicable("synthesis failed for prefix equality: " + r.failure);
    s.prefix_equality = r.automaton;
  }
  return s;
}

}  // namespace osr
