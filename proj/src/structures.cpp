#include "osr/structures.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "osr/errors.hpp"
#include "osr/lang.hpp"

namespace osr {

const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::rr: return "rr";
    case Flavor::rl: return "rl";
    case Flavor::lr: return "lr";
    case Flavor::ll: return "ll";
  }
  return "?";
}

std::optional<Flavor> parse_flavor(const std::string& s) {
  for (Flavor f : kAllFlavors)
    if (s == flavor_name(f)) return f;
  return std::nullopt;
}

Word NormalForm::rep(const Word& w0) const {
  Word w = reversed ? reverse(w0) : w0;
  auto e = identity();
  if (e && !rs.alphabet.contains(*e)) w.erase(std::remove(w.begin(), w.end(), *e), w.end());
  Word r;
  if (w.empty()) {
    r = e ? Word(1, *e) : Word{};
  } else {
    r = rs.reduce(w);
    if (gsm) {
      auto out = gsm->apply(letters_of(r, rs.alphabet));
      if (!out) throw contract_error("normal form: gsm rejects " + r);
      r = word_of(*out, alphabet);
    }
  }
  return reversed ? reverse(r) : r;
}

NormalForm plain_normal_form(const RewriteSystem& rs) { return NormalForm{rs.alphabet, rs, {}, false}; }

NormalForm identity_normal_form(const RewriteSystem& rs, char e) {
  if (rs.alphabet.contains(e)) throw invalid_input(std::string("identity letter already present: ") + e);
  return NormalForm{rs.alphabet.with_identity(e, true), rs, {}, false};
}

NormalForm reverse_normal_form(const NormalForm& nf) {
  NormalForm r = nf;
  r.reversed = !nf.reversed;
  return r;
}

const Fsa* AutomaticStructure::multiplier(char letter, Flavor f) const {
  auto it = multipliers.find({letter, f});
  return it == multipliers.end() ? nullptr : &it->second;
}

std::vector<Flavor> AutomaticStructure::flavors() const {
  std::vector<Flavor> out;
  for (Flavor f : kAllFlavors)
    if (has_flavor(f)) out.push_back(f);
  return out;
}

bool AutomaticStructure::has_flavor(Flavor f) const {
  for (const auto& [k, m] : multipliers)
    if (k.second == f) return true;
  return false;
}

namespace {

Word multiply(const NormalForm& nf, const Word& alpha, char letter, Flavor f) {
  if (letter == kEpsKey) return nf.rep(alpha);
  return left_multiplication(f) ? nf.rep(Word(1, letter) + alpha) : nf.rep(alpha + letter);
}

std::vector<Word> words_of(const Fsa& l, const Alphabet& a, size_t depth) {
  std::vector<Word> out;
  for (const auto& s : enumerate(l, depth)) out.push_back(word_of(s, a));
  return out;
}

void require_complete(const NormalForm& nf) {
  if (nf.rs.status != Completeness::complete)
    throw contract_error("oracle requires a complete rewriting system");
}

}  // namespace

PairRelationSample multiplier_oracle(const Fsa& l, const NormalForm& nf, char letter, Flavor f,
                                     size_t depth) {
  require_complete(nf);
  PairRelationSample s{nf.alphabet, conv_side(f), depth, {}, {}, {}};
  s.domain = words_of(l, nf.alphabet, depth);
  size_t cod = depth + 2;
  for (const auto& a : s.domain) {
    Word b = multiply(nf, a, letter, f);
    cod = std::max(cod, b.size());
    s.positive.emplace_back(a, b);
  }
  s.codomain = words_of(l, nf.alphabet, cod);
  return s;
}

PairRelationSample multiplier_oracle(const Fsa& l, const RewriteSystem& rs, char letter, Flavor f,
                                     size_t depth) {
  return multiplier_oracle(l, plain_normal_form(rs), letter, f, depth);
}

// ---------------------------------------------------------------- verifier

namespace {

struct Dfa {
  Fsa m;
  std::vector<char> live;
};

Dfa prepare(const Fsa& m0) {
  Dfa d{minimize(m0), {}};
  int n = d.m.num_states();
  std::vector<std::vector<int>> rev(n);
  for (int q = 0; q < n; ++q)
    for (auto [x, t] : d.m.out[q]) rev[t].push_back(q);
  d.live.assign(n, 0);
  std::vector<int> stack;
  for (int q = 0; q < n; ++q)
    if (d.m.accepting[q]) d.live[q] = 1, stack.push_back(q);
  while (!stack.empty()) {
    int q = stack.back();
    stack.pop_back();
    for (int p : rev[q])
      if (!d.live[p]) d.live[p] = 1, stack.push_back(p);
  }
  return d;
}

// Every beta with (alpha, beta) accepted and |beta| <= max_len.
std::vector<Symbols> partners(const Dfa& d, const Symbols& alpha, int n, Side side, size_t max_len) {
  PairAlphabet p(n);
  std::vector<Symbols> out;
  if (d.m.num_states() == 0 || d.m.initial.empty()) return out;
  const int start = d.m.initial[0];
  Symbols beta;
  auto step = [&](int q, int l, int r) { return q < 0 ? -1 : d.m.next(q, p.sym(l, r)); };
  auto ok = [&](int q) { return q >= 0 && d.live[q]; };
  if (side == Side::R) {
    std::function<void(int, size_t, bool)> rec = [&](int q, size_t i, bool ended) {
      if (!ok(q)) return;
      if (i >= alpha.size()) {
        if (d.m.accepting[q] && (!alpha.empty() || !beta.empty())) out.push_back(beta);
        if (ended || beta.size() >= max_len) return;
        for (int b = 0; b < n; ++b) {
          beta.push_back(b);
          rec(step(q, p.pad(), b), i + 1, false);
          beta.pop_back();
        }
        return;
      }
      if (!ended && beta.size() < max_len)
        for (int b = 0; b < n; ++b) {
          beta.push_back(b);
          rec(step(q, alpha[i], b), i + 1, false);
          beta.pop_back();
        }
      rec(step(q, alpha[i], p.pad()), i + 1, true);
    };
    rec(start, 0, false);
    return out;
  }
  for (size_t k = 0; k <= max_len; ++k) {
    if (k == 0 && alpha.empty()) continue;
    size_t len = std::max(k, alpha.size());
    size_t pad_a = len - alpha.size(), pad_b = len - k;
    std::function<void(int, size_t)> rec = [&](int q, size_t i) {
      if (!ok(q)) return;
      if (i == len) {
        if (d.m.accepting[q]) out.push_back(beta);
        return;
      }
      int l = i < pad_a ? p.pad() : alpha[i - pad_a];
      if (i < pad_b) {
        rec(step(q, l, p.pad()), i + 1);
        return;
      }
      for (int b = 0; b < n; ++b) {
        beta.push_back(b);
        rec(step(q, l, b), i + 1);
        beta.pop_back();
      }
    };
    rec(start, 0);
  }
  return out;
}

std::optional<std::pair<Word, Word>> shortest_pair(const Fsa& m, const Alphabet& a, Side side) {
  auto w = shortest_difference(m, empty_language(m.nsym));
  if (!w) return std::nullopt;
  auto uv = try_unconvolve(*w, a, side);
  if (!uv) return std::pair<Word, Word>{"<malformed>", show_pairs(*w, a)};
  return uv;
}

void add_pair(std::vector<std::pair<Word, Word>>& v, std::pair<Word, Word> p) {
  if (v.size() < kMaxReportedPairs) v.push_back(std::move(p));
}

struct Expectation {
  std::function<std::vector<Word>(const Word&)> expected;  // partners of alpha
  Fsa codomain;                                            // exact track-2 language
};

MultiplierCheck check_relation(const std::string& name, const Fsa& m, const Fsa& l, const NormalForm& nf,
                               Side side, size_t depth, const Expectation& ex) {
  const Alphabet& a = nf.alphabet;
  int n = static_cast<int>(a.size());
  MultiplierCheck c;
  c.name = name;
  if (m.nsym != PairAlphabet(n).nsym()) {
    c.pass = false;
    c.notes.push_back("automaton is not over the pair alphabet");
    return c;
  }
  Dfa d = prepare(m);
  std::vector<Word> dom = words_of(l, a, depth);
  for (const auto& alpha : dom) {
    auto want = ex.expected(alpha);
    size_t cod_depth = depth + 2;
    for (const auto& w : want) cod_depth = std::max(cod_depth, w.size());
    std::set<Word> got;
    for (const auto& s : partners(d, letters_of(alpha, a), n, side, cod_depth)) got.insert(word_of(s, a));
    for (const auto& w : want) {
      if (!got.count(w)) {
        c.pass = false;
        add_pair(c.missing, {alpha, w});
      }
    }
    for (const auto& g : got)
      if (std::find(want.begin(), want.end(), g) == want.end()) {
        c.pass = false;
        add_pair(c.spurious, {alpha, g});
      }
    ++c.checked;
  }
  // Exact projection checks beyond the sampled depth.
  Fsa p1 = project(d.m, n, 0), p2 = project(d.m, n, 1);
  if (auto w = shortest_difference(p1, l)) {
    c.pass = false;
    Fsa cut = intersect(d.m, pair_product(lang::lit(a, word_of(*w, a)), lang::any(a), n, side));
    if (auto pr = shortest_pair(cut, a, side)) add_pair(c.spurious, *pr);
    c.notes.push_back("first track leaves the language at " + show_word(word_of(*w, a)));
  }
  if (auto w = shortest_difference(p2, ex.codomain)) {
    c.pass = false;
    Fsa cut = intersect(d.m, pair_product(lang::any(a), lang::lit(a, word_of(*w, a)), n, side));
    if (auto pr = shortest_pair(cut, a, side)) add_pair(c.spurious, *pr);
    c.notes.push_back("second track leaves the codomain at " + show_word(word_of(*w, a)));
  }
  if (auto w = shortest_difference(l, p1)) {
    c.pass = false;
    Word alpha = word_of(*w, a);
    auto want = ex.expected(alpha);
    add_pair(c.missing, {alpha, want.empty() ? Word{} : want.front()});
    c.notes.push_back("no partner for " + show_word(alpha));
  }
  return c;
}

std::string key_name(char letter, Flavor f) {
  return (letter == kEpsKey ? std::string("eps") : std::string(1, letter)) + "/" + flavor_name(f);
}

}  // namespace

bool VerificationReport::passed() const {
  if (!language_issues.empty() || prefix_status == PrefixStatus::fail) return false;
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string VerificationReport::str() const {
  std::ostringstream os;
  auto pairs = [&](const std::vector<std::pair<Word, Word>>& v) {
    std::string s;
    for (const auto& [x, y] : v) s += (s.empty() ? "" : ",") + ("(" + show_word(x) + "," + show_word(y) + ")");
    return s;
  };
  for (const auto& c : checks) {
    os << "multiplier=" << c.name << " status=" << (c.pass ? "pass" : "fail") << " checked=" << c.checked;
    if (!c.missing.empty()) os << " missing=" << pairs(c.missing);
    if (!c.spurious.empty()) os << " spurious=" << pairs(c.spurious);
    for (const auto& n : c.notes) os << " note=\"" << n << "\"";
    os << "\n";
  }
  os << "prefix="
     << (prefix_status == PrefixStatus::pass ? "pass" : prefix_status == PrefixStatus::fail ? "fail" : "absent")
     << "\n";
  for (const auto& i : language_issues) os << "language_issue=\"" << i << "\"\n";
  os << "depth=" << depth << " result=" << (passed() ? "pass" : "fail") << "\n";
  return os.str();
}

VerificationReport verify_structure(const AutomaticStructure& s, const NormalForm& nf, size_t depth) {
  VerificationReport rep;
  rep.depth = depth;
  if (!(s.alphabet == nf.alphabet)) {
    rep.language_issues.push_back("structure alphabet " + s.alphabet.str() + " differs from " +
                                  nf.alphabet.str());
    return rep;
  }
  const Alphabet& a = s.alphabet;
  for (const auto& w : words_of(s.language, a, depth)) {
    if (nf.rep(w) != w) {
      rep.language_issues.push_back("not a normal form: " + show_word(w));
      if (rep.language_issues.size() >= kMaxReportedPairs) break;
    }
  }
  for (const auto& [key, m] : s.multipliers) {
    auto [letter, f] = key;
    Expectation ex{[&, letter = letter, f = f](const Word& alpha) {
                     return std::vector<Word>{multiply(nf, alpha, letter, f)};
                   },
                   s.language};
    rep.checks.push_back(check_relation(key_name(letter, f), m, s.language, nf, conv_side(f), depth, ex));
  }
  if (s.prefix_equality) {
    Fsa pref = difference(lang::prefixes(s.language), epsilon_language(static_cast<int>(a.size())));
    std::map<Word, std::vector<Word>> by_rep;
    size_t cod = depth + 2;
    for (const auto& w : words_of(pref, a, cod)) by_rep[nf.rep(w)].push_back(w);
    Expectation ex{[&](const Word& alpha) {
                     auto it = by_rep.find(nf.rep(alpha));
                     return it == by_rep.end() ? std::vector<Word>{} : it->second;
                   },
                   pref};
    MultiplierCheck c = check_relation("prefix", *s.prefix_equality, s.language, nf, Side::R, depth, ex);
    rep.prefix_status = c.pass ? PrefixStatus::pass : PrefixStatus::fail;
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

VerificationReport verify_structure(const AutomaticStructure& s, const RewriteSystem& rs, size_t depth) {
  return verify_structure(s, plain_normal_form(rs), depth);
}

// ---------------------------------------------------------------- identity, reversal

AutomaticStructure extend_with_identity(const AutomaticStructure& s, char e) {
  if (s.alphabet.contains(e) || s.alphabet.identity())
    throw invalid_input(std::string("identity letter already present: ") + e);
  const Alphabet& a = s.alphabet;
  Alphabet b = a.with_identity(e, true);
  int n = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
  PairAlphabet pa(n), pb(nb);
  std::vector<int> map(pa.nsym());
  auto idx = [&](int x, int pad_from, int pad_to) { return x == pad_from ? pad_to : b.index(a.letter(x)); };
  for (int x = 0; x < pa.nsym(); ++x)
    map[x] = pb.sym(idx(pa.left(x), pa.pad(), pb.pad()), idx(pa.right(x), pa.pad(), pb.pad()));
  auto lift = [&](const Fsa& m) { return relabel(m, pb.nsym(), map); };
  Word ew(1, e);
  Fsa ek = lang::lit(b, ew);
  AutomaticStructure out;
  out.alphabet = b;
  out.language = minimize(union_of(lang::embed(s.language, a, b), ek));
  out.uniqueness = s.uniqueness;
  out.case_id = s.case_id;
  out.provenance = s.provenance + "; identity adjoined";
  std::set<Flavor> fl;
  for (const auto& [key, m] : s.multipliers) {
    auto [letter, f] = key;
    fl.insert(f);
    Fsa lifted = lift(m);
    Word tgt = letter == kEpsKey ? ew : Word(1, letter);
    out.multipliers[key] = minimize(union_of(lifted, pair_const(ew, tgt, b, conv_side(f))));
  }
  Fsa dk = diagonal(out.language, nb);
  for (Flavor f : fl) out.multipliers[{e, f}] = minimize(dk);
  if (s.prefix_equality)
    out.prefix_equality = minimize(union_of(lift(*s.prefix_equality), pair_const(ew, ew, b, Side::R)));
  return out;
}

AutomaticStructure reverse_structure(const AutomaticStructure& s) {
  AutomaticStructure out;
  out.alphabet = s.alphabet;
  out.language = minimize(reverse(s.language));
  out.uniqueness = s.uniqueness;
  out.case_id = s.case_id;
  out.provenance = s.provenance + "; reversed";
  auto flip = [](Flavor f) {
    switch (f) {
      case Flavor::rr: return Flavor::ll;
      case Flavor::ll: return Flavor::rr;
      case Flavor::rl: return Flavor::lr;
      case Flavor::lr: return Flavor::rl;
    }
    return f;
  };
  for (const auto& [key, m] : s.multipliers) out.multipliers[{key.first, flip(key.second)}] = minimize(reverse(m));
  // Prefix equality does not survive reversal.
  return out;
}

// ---------------------------------------------------------------- Nerode

size_t nerode_bound_at(const PairRelationSample& sample, size_t d) {
  const Alphabet& a = sample.alphabet;
  std::unordered_set<Word> dom, cod;
  for (const auto& w : sample.domain)
    if (w.size() <= d) dom.insert(w);
  for (const auto& w : sample.codomain)
    if (w.size() <= d + 2) cod.insert(w);
  using Key = std::string;
  auto key = [](const Symbols& s) { return Key(s.begin(), s.end()); };
  std::unordered_set<Key> pos;
  std::vector<Symbols> pos_words;
  for (const auto& [x, y] : sample.positive) {
    if (!dom.count(x)) continue;
    Symbols c = convolve(x, y, a, sample.side);
    if (pos.insert(key(c)).second) pos_words.push_back(c);
  }
  if (pos_words.empty()) return 1;
  std::sort(pos_words.begin(), pos_words.end(), [](const Symbols& x, const Symbols& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  size_t ext = d / 2;
  // Candidate prefixes with their positive extensions of length <= ext.
  std::map<std::pair<size_t, Key>, std::vector<Key>> cand;
  for (const auto& w : pos_words)
    for (size_t i = 0; i <= w.size(); ++i) {
      Key p(w.begin(), w.begin() + static_cast<long>(i));
      auto& ex = cand[{i, p}];
      if (w.size() - i <= ext) ex.emplace_back(w.begin() + static_cast<long>(i), w.end());
    }
  auto negative = [&](const Key& w) {
    if (pos.count(w)) return false;
    Symbols s(w.begin(), w.end());
    auto uv = try_unconvolve(s, a, sample.side);
    return uv && dom.count(uv->first) && cod.count(uv->second);
  };
  auto distinct = [&](const Key& p, const std::vector<Key>& ep, const Key& q, const std::vector<Key>& eq) {
    for (const auto& e : ep)
      if (negative(q + e)) return true;
    for (const auto& e : eq)
      if (negative(p + e)) return true;
    return false;
  };
  std::vector<std::pair<const Key*, const std::vector<Key>*>> clique;
  for (const auto& [k, ex] : cand) {
    bool ok = true;
    for (const auto& [q, eq] : clique)
      if (!distinct(k.second, ex, *q, *eq)) {
        ok = false;
        break;
      }
    if (ok) clique.emplace_back(&k.second, &ex);
  }
  return std::max<size_t>(1, clique.size());
}

std::vector<NerodePoint> nerode_lower_bound(const PairRelationSample& sample, const std::vector<size_t>& depths) {
  std::vector<NerodePoint> out;
  for (size_t d : depths) out.push_back({d, nerode_bound_at(sample, std::min(d, sample.depth))});
  return out;
}

}  // namespace osr
