#include "osr/classifier.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <functional>
#include <set>
#include <sstream>

#include "osr/errors.hpp"
#include "osr/learning.hpp"
#include "osr/padded.hpp"

namespace osr {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "?";
}

std::string Pattern::str() const {
  if (trivial) return "TRIVIAL_RELATION";
  return show_word(u) + "=" + show_word(v);
}

namespace {

constexpr const char* kAbstract = "xyzwstpq";

std::pair<Pattern, std::pair<Word, Word>> rename(const Word& s, const Word& t) {
  Pattern p;
  for (char c : s + t)
    if (!p.renaming.count(c)) {
      size_t k = p.renaming.size();
      if (k >= 8) throw out_of_scope("too many letters in relation");
      p.renaming[c] = kAbstract[k];
    }
  for (char c : s) p.u += p.renaming[c];
  for (char c : t) p.v += p.renaming[c];
  return {p, {p.u, p.v}};
}

Alphabet abstract_alphabet(size_t n) { return Alphabet(std::string(kAbstract, kAbstract + n)); }

bool deglex_key_less(const Pattern& a, const Pattern& b) {
  Alphabet ab = abstract_alphabet(8);
  auto c = deglex_compare(a.u, b.u, ab);
  if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
  return deglex_less(a.v, b.v, ab);
}

}  // namespace

Pattern canonicalize(const Word& u0, const Word& v0) {
  if (u0 == v0) {
    Pattern p = rename(u0, v0).first;
    p.trivial = true;
    return p;
  }
  std::optional<Pattern> best;
  for (auto [s, t] : {std::pair{u0, v0}, std::pair{v0, u0}}) {
    if (s.size() < t.size()) continue;
    Pattern p = rename(s, t).first;
    if (!best || deglex_key_less(p, *best)) best = p;
  }
  return *best;
}

std::string ClassificationResult::record() const {
  std::ostringstream os;
  os << "pattern=" << pattern << " prefix=" << verdict_name(prefix_automatic)
     << " automatic=" << verdict_name(automatic) << " biautomatic=" << verdict_name(biautomatic) << " basis=[";
  for (size_t i = 0; i < basis.size(); ++i) os << (i ? ", " : "") << basis[i];
  os << "] witness=" << (witness_case ? *witness_case : std::string("none"))
     << " extension=" << (extension ? "true" : "false");
  return os.str();
}

namespace {

const std::set<std::string> kNotAutomatic = {"xyx=yx", "xxy=yx", "xyy=yy"};
const std::set<std::string> kNotBiautomatic2 = {"xy=x", "xy=y"};
const std::set<std::string> kNotBiautomaticExt = {"xxy=y", "xyy=x"};

std::string case_for(const Pattern& pt) {
  const Word &u = pt.u, &v = pt.v;
  if (pt.trivial || u.size() == 1) return "W-DEG";
  if (v.empty()) return u.size() == 3 && u[0] == u[2] && u[0] != u[1] ? "W-E3" : "W-E";
  if (u.size() == 2 && v.size() == 2) return u[0] == u[1] && v[0] == v[1] ? "W-HOM2" : "W-K3";
  if (v.size() == 1) {
    if (v[0] == u.back()) return "W-AKB";
    if (u.size() == 2 && u[0] == u[1]) return "W-21";
    if (u.size() == 3 && u[0] == u[2]) return "W-31";
    return "W-GEN";
  }
  if (u.size() == 3 && v.size() == 2) return padding_case(u, v) ? "W-32-gsm" : "W-32";
  return "W-HOM3";
}

}  // namespace

std::vector<std::string> rule_strings(const RewriteSystem& rs) {
  std::vector<std::string> out;
  for (const auto& r : rs.rules) out.push_back(show_word(r.lhs) + "->" + show_word(r.rhs));
  for (const auto& s : rs.schemas)
    out.push_back(s.lhs_pre + "(" + s.lhs_pump + ")^i" + s.lhs_suf + "->" + s.rhs_pre + "(" + s.rhs_pump + ")^i" +
                  s.rhs_suf + ":i>=" + std::to_string(s.min_i));
  return out;
}

namespace {

Relation oriented(const Word& u, const Word& v, const Alphabet& a) {
  if (u.size() > v.size()) return {u, v};
  if (v.size() > u.size()) return {v, u};
  return deglex_less(u, v, a) ? Relation{v, u} : Relation{u, v};
}

std::vector<std::string> orders(const Alphabet& a);

// Rules of the first completion that finishes over some letter order.
std::vector<std::string> basis_for(const Relation& rel, const Alphabet& a) {
  CompletionLimits lim;
  lim.max_rules = 40;
  lim.max_len = 12;
  for (const auto& order : orders(a)) {
    RewriteSystem rs = shirshov_complete({rel}, Alphabet(order), lim);
    if (rs.status == Completeness::complete) return rule_strings(rs);
  }
  return {show_word(rel.first) + "->" + show_word(rel.second)};
}

}  // namespace

ClassificationResult classify(const Word& u0, const Word& v0, const Alphabet& a) {
  check_word(u0, a);
  check_word(v0, a);
  auto [u, v] = oriented(u0, v0, a);
  if (u.empty()) throw invalid_input("both sides are empty");
  if (u.size() > 3) throw out_of_scope("relator longer than 3: " + u);
  ClassificationResult r;
  Pattern pt = canonicalize(u, v);
  r.pattern = pt.str();
  auto all_yes = [&] {
    r.prefix_automatic = r.automatic = r.biautomatic = Verdict::yes;
    r.extension = true;
  };
  if (pt.trivial || u.size() == 1 || a.size() == 1) {
    all_yes();
  } else if (kNotAutomatic.count(r.pattern)) {
    r.prefix_automatic = r.automatic = r.biautomatic = Verdict::no;
  } else {
    r.prefix_automatic = r.automatic = Verdict::yes;
    if (u.size() == 3 && (v.empty() || v.size() == 3)) r.biautomatic = Verdict::yes;
    else if (u.size() == 2) r.biautomatic = kNotBiautomatic2.count(r.pattern) ? Verdict::no : Verdict::yes;
    else if (kNotBiautomaticExt.count(r.pattern)) {
      r.biautomatic = Verdict::no;
      r.extension = true;
    } else r.biautomatic = Verdict::unknown;
  }
  if (r.automatic == Verdict::yes) r.witness_case = case_for(pt);
  r.basis = basis_for({u, v}, a);
  return r;
}

ClassificationResult classify(const Presentation& p) {
  if (p.relations.size() != 1) throw out_of_scope("exactly one relation is classified");
  return classify(p.relations[0].first, p.relations[0].second, p.alphabet);
}

// ------------------------------------------------------------------ witnesses

namespace {

std::vector<std::string> orders(const Alphabet& a) {
  std::string s(a.letters().begin(), a.letters().end());
  std::vector<std::string> out;
  std::vector<int> idx(s.size());
  for (size_t i = 0; i < s.size(); ++i) idx[i] = static_cast<int>(i);
  do {
    std::string o;
    for (int i : idx) o += s[i];
    out.push_back(o);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

char free_identity(const Alphabet& a) {
  for (char c : std::string("eE0"))
    if (!a.contains(c)) return c;
  throw invalid_input("no free letter for the identity");
}

struct Setup {
  NormalForm nf;
  Fsa language;
};

std::optional<Setup> setup_for_order(const Relation& rel, const Alphabet& a, const std::string& order,
                                     const CompletionLimits& lim = {}) {
  if (rel.second.empty()) {
    char e = free_identity(a);
    MonoidEmbedding emb = monoid_embedding(a, {rel}, e);
    Alphabet ord(std::string(1, e) + order, e);
    RewriteSystem rs = shirshov_complete(emb.relations, ord, lim);
    if (rs.status != Completeness::complete) return std::nullopt;
    return Setup{NormalForm{ord, rs, {}, false}, irr_language(rs)};
  }
  Alphabet ord(order);
  RewriteSystem rs = shirshov_complete({rel}, ord, lim);
  if (rs.status != Completeness::complete) return std::nullopt;
  return Setup{plain_normal_form(rs), irr_language(rs)};
}

bool relation_checks(const AutomaticStructure& s, const NormalForm& nf, const std::string& name, size_t depth) {
  AutomaticStructure one;
  one.alphabet = s.alphabet;
  one.language = s.language;
  if (name == "prefix") one.prefix_equality = s.prefix_equality;
  else
    for (const auto& [k, m] : s.multipliers)
      if (std::string(k.first == kEpsKey ? "eps" : std::string(1, k.first)) + "/" + flavor_name(k.second) == name)
        one.multipliers[k] = m;
  return verify_structure(one, nf, depth).passed();
}

// Clause synthesis first, then automaton learning against the oracle.
Fsa derive(Witness& w, const std::string& what, const std::function<Synthesis()>& synth,
           const std::function<Learned()>& learn) {
  Synthesis r = synth();
  if (r.exact) {
    w.notes.push_back("synthesized " + what);
    return r.automaton;
  }
  Learned l = learn();
  if (!l.converged)
    throw not_applicable(what + ": synthesis failed (" + r.failure + "), learning failed (" + l.failure + ")");
  w.notes.push_back("learned " + what + " (equivalence checked to depth " + std::to_string(l.depth) + ")");
  return l.automaton;
}

void complete_witness(Witness& w, bool prefix, size_t check_depth, unsigned seed) {
  LearnLimits lim;
  lim.seed = seed;
  AutomaticStructure& s = w.structure;
  std::vector<char> keys{kEpsKey};
  for (char c : s.alphabet.letters()) keys.push_back(c);
  auto name = [](char c, Flavor f) {
    return std::string(c == kEpsKey ? "eps" : std::string(1, c)) + "/" + flavor_name(f);
  };
  // Drop flavors that were not declared.
  for (auto it = s.multipliers.begin(); it != s.multipliers.end();)
    if (std::find(w.flavors.begin(), w.flavors.end(), it->first.second) == w.flavors.end()) it = s.multipliers.erase(it);
    else ++it;
  // rr and ll first so that lr and rl can be obtained by moving the padding.
  std::vector<Flavor> order;
  for (Flavor f : {Flavor::rr, Flavor::ll, Flavor::lr, Flavor::rl})
    if (std::find(w.flavors.begin(), w.flavors.end(), f) != w.flavors.end()) order.push_back(f);
  int n = static_cast<int>(s.alphabet.size());
  for (Flavor f : order)
    for (char c : keys) {
      bool have = s.multipliers.count({c, f}) > 0;
      if (have && check_depth > 0 && !relation_checks(s, w.nf, name(c, f), check_depth)) {
        w.notes.push_back("transcribed " + name(c, f) + " fails the bounded check; replaced");
        have = false;
      }
      if (have) continue;
      if (f == Flavor::lr || f == Flavor::rl) {
        Flavor twin = f == Flavor::lr ? Flavor::rr : Flavor::ll;
        auto it = s.multipliers.find({c, twin});
        if (it != s.multipliers.end()) {
          Side from = conv_side(twin);
          if (auto b = exact_bound(it->second, n, from)) {
            s.multipliers[{c, f}] = swap_side(it->second, n, std::max(*b, 1), from, 0);
            w.notes.push_back(name(c, f) + " from " + name(c, twin) + " with the padding moved");
            continue;
          }
        }
      }
      s.multipliers[{c, f}] = derive(
          w, name(c, f), [&] { return synthesize_multiplier(w.nf, s.language, c, f); },
          [&] { return learn_multiplier(w.nf, s.language, c, f, lim); });
    }
  if (prefix) {
    bool have = s.prefix_equality.has_value();
    if (have && check_depth > 0 && !relation_checks(s, w.nf, "prefix", check_depth)) {
      w.notes.push_back("transcribed prefix equality fails the bounded check; replaced");
      have = false;
    }
    if (!have)
      s.prefix_equality = derive(
          w, "prefix equality", [&] { return synthesize_prefix_equality(w.nf, s.language); },
          [&] { return learn_prefix_equality(w.nf, s.language, lim); });
  }
}

}  // namespace

Witness build_witness(const Presentation& p, const ClassificationResult& r, size_t check_depth,
                      const std::optional<std::vector<Flavor>>& requested, unsigned seed) {
  if (r.automatic != Verdict::yes) throw not_applicable("no witness: " + r.pattern + " is not automatic");
  if (p.relations.size() != 1) throw out_of_scope("exactly one relation is supported");
  Relation rel = oriented(p.relations[0].first, p.relations[0].second, p.alphabet);
  Presentation q{p.alphabet, {rel}};
  std::vector<Flavor> flavors{Flavor::rr};
  if (r.biautomatic == Verdict::yes) flavors.assign(std::begin(kAllFlavors), std::end(kAllFlavors));
  if (requested) flavors = *requested;
  std::string case_id = r.witness_case.value_or("W-DEG");
  std::vector<std::string> tried;
  bool catalogued = false;
  for (const auto& c : catalog_cases()) catalogued |= c.case_id == case_id;
  if (catalogued) {
    try {
      CatalogWitness cw = construct_from_catalog(case_id, q);
      Witness w{cw.structure, cw.nf, flavors, {}};
      complete_witness(w, true, check_depth, seed);
      return w;
    } catch (const not_applicable& e) {
      tried.push_back(e.what());
    }
  }
  for (const auto& order : orders(p.alphabet)) {
    auto su = setup_for_order(rel, p.alphabet, order);
    if (!su) {
      tried.push_back("order " + order + ": completion did not finish");
      continue;
    }
    AutomaticStructure s;
    s.alphabet = su->nf.alphabet;
    s.language = su->language;
    s.case_id = case_id;
    Witness w{s, su->nf, flavors, {}};
    try {
      complete_witness(w, true, 0, seed);
      bool learned = std::any_of(w.notes.begin(), w.notes.end(),
                                 [](const std::string& n) { return n.rfind("learned", 0) == 0; });
      w.structure.provenance = std::string(learned ? "clause synthesis and automaton learning"
                                                   : "synthesized from sound clauses") +
                               " under order " + su->nf.alphabet.str();
      w.notes.insert(w.notes.begin(), tried.begin(), tried.end());
      return w;
    } catch (const not_applicable& e) {
      tried.push_back("order " + order + ": " + e.what());
    }
  }
  std::string msg = "no witness found for " + r.pattern;
  for (const auto& t : tried) msg += "; " + t;
  throw not_applicable(msg);
}

std::optional<OrderedNormalForm> normal_form_for(const Presentation& p, const CompletionLimits& lim) {
  if (p.relations.size() != 1) throw out_of_scope("exactly one relation is supported");
  Relation rel = oriented(p.relations[0].first, p.relations[0].second, p.alphabet);
  std::string order(p.alphabet.letters().begin(), p.alphabet.letters().end());
  auto su = setup_for_order(rel, p.alphabet, order, lim);
  if (!su) return std::nullopt;
  return OrderedNormalForm{su->nf, su->language};
}

// ------------------------------------------------------------------ table

Presentation instantiate(const Pattern& p, size_t letters) {
  std::string gens;
  for (size_t i = 0; i < letters; ++i) gens += static_cast<char>('a' + i);
  auto map = [&](const Word& w) {
    Word out;
    for (char c : w) {
      const char* pos = std::strchr(kAbstract, c);
      out += static_cast<char>('a' + (pos - kAbstract));
    }
    return out;
  };
  return Presentation{Alphabet(gens), {{map(p.u), map(p.v)}}};
}

std::vector<TableRow> full_table(size_t letters) {
  Alphabet a = abstract_alphabet(letters);
  std::vector<Word> ws = words_up_to(a, 3);
  std::vector<Pattern> pats;
  std::set<std::string> seen;
  for (const auto& u : ws)
    for (const auto& v : ws) {
      if (u == v || u.size() < v.size()) continue;
      Pattern p = canonicalize(u, v);
      if (seen.insert(p.str()).second) pats.push_back(p);
    }
  Alphabet ab = abstract_alphabet(8);
  std::sort(pats.begin(), pats.end(), [&](const Pattern& x, const Pattern& y) { return deglex_key_less(x, y); });
  std::vector<TableRow> rows;
  for (const auto& p : pats) {
    Presentation inst = instantiate(p, std::max<size_t>(letters, 2));
    rows.push_back({p, classify(inst)});
  }
  return rows;
}

Presentation parse_relation(const std::string& text, const std::optional<std::string>& alphabet) {
  auto eq = text.find('=');
  if (eq == std::string::npos || text.find('=', eq + 1) != std::string::npos)
    throw invalid_input("expected <word>=<word>: " + text);
  auto strip = [](std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
    return s;
  };
  std::string ls = strip(text.substr(0, eq)), rs = strip(text.substr(eq + 1));
  Word u = parse_word(ls), v = parse_word(rs);
  if (u.empty() && v.empty()) throw invalid_input("both sides are empty");
  Alphabet a;
  if (alphabet) {
    a = Alphabet::parse(*alphabet);
  } else {
    std::string letters;
    for (char c : u + v)
      if (letters.find(c) == std::string::npos) letters += c;
    a = Alphabet(letters);
  }
  check_word(u, a);
  check_word(v, a);
  return Presentation{a, {oriented(u, v, a)}};
}

}  // namespace osr
