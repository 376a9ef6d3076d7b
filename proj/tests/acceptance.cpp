// Acceptance run: one pass/fail line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "osr/classifier.hpp"
#include "osr/errors.hpp"
#include "osr/padded.hpp"
#include "osr/rewriting.hpp"
#include "osr/structures.hpp"

using namespace osr;

namespace {

// Time limits in seconds.
constexpr double kTableLimit = 1.0;
constexpr double kBasesLimit = 10.0;
constexpr double kWitnessLimit = 300.0;
constexpr double kOracleLimit = 120.0;
constexpr double kNerodeLimit = 60.0;

constexpr size_t kWitnessDepth = 8;
constexpr size_t kOracleWords = 6;
constexpr size_t kOracleCap = 12;
constexpr int kPaddedCases = 1000;
constexpr size_t kPaddedLen = 8;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Failures {
 public:
  void add(const std::string& s) {
    if (count_++ < 8) items_.push_back(s);
  }
  size_t count() const { return count_; }
  std::string str() const {
    std::string out;
    for (const auto& s : items_) out += (out.empty() ? "" : "; ") + s;
    if (count_ > items_.size()) out += "; ... (" + std::to_string(count_) + " total)";
    return out;
  }

 private:
  size_t count_ = 0;
  std::vector<std::string> items_;
};

Fsa lit(const Alphabet& a, const Word& w) { return word_language(static_cast<int>(a.size()), letters_of(w, a)); }

// ---------------------------------------------------------------- 1

Outcome table_criterion() {
  const std::set<std::string> not_automatic{"xyx=yx", "xxy=yx", "xyy=yy"};
  const std::set<std::string> not_bi{"xy=x", "xy=y"};
  auto rows = full_table(2);
  Failures f;
  for (const auto& row : rows) {
    const auto& r = row.result;
    const std::string name = row.pattern.str();
    size_t lu = row.pattern.u.size(), lv = row.pattern.v.size();
    bool bad = not_automatic.count(name) > 0;
    if (bad != (r.automatic == Verdict::no)) f.add(name + " automatic=" + verdict_name(r.automatic));
    if (bad && r.prefix_automatic != Verdict::no) f.add(name + " prefix=" + verdict_name(r.prefix_automatic));
    if (!bad && r.prefix_automatic != Verdict::yes) f.add(name + " prefix=" + verdict_name(r.prefix_automatic));
    std::optional<Verdict> bi;
    if (lu == 3 && (lv == 0 || lv == 3)) bi = Verdict::yes;
    if (lu == 2) bi = not_bi.count(name) ? Verdict::no : Verdict::yes;
    if (bi && r.biautomatic != *bi) f.add(name + " biautomatic=" + verdict_name(r.biautomatic));
  }
  return {f.count() == 0, std::to_string(rows.size()) + " rows, " + std::to_string(f.count()) + " mismatches" +
                              (f.count() ? ": " + f.str() : "")};
}

// ---------------------------------------------------------------- 2

struct StatedBasis {
  std::string label;
  Relation relation;
  std::string order;
  std::vector<Rule> rules;
  // Families pre pump^i suf -> rpre rpump^i rsuf for i >= min_i.
  std::vector<RuleSchema> families;
};

Outcome bases_criterion() {
  const std::vector<StatedBasis> stated{
      {"a2=c2", {"aa", "cc"}, "ca", {{"aa", "cc"}, {"acc", "cca"}}, {}},
      {"a3=b3", {"aaa", "bbb"}, "ba", {{"aaa", "bbb"}, {"abbb", "bbba"}}, {}},
      {"aba=bb", {"aba", "bb"}, "ba", {{"aba", "bb"}, {"abbb", "bbba"}}, {}},
      {"aba=x", {"aba", "x"}, "xba", {{"aba", "x"}, {"abx", "xba"}}, {}},
      {"aaa=x", {"aaa", "x"}, "xa", {{"aaa", "x"}, {"ax", "xa"}}, {}},
      {"ab^ia=b^ia", {"aba", "ba"}, "ab", {}, {{"a", "b", "a", "", "b", "a", 1}}},
      {"ab^ia=ab^i", {"aba", "ab"}, "ab", {}, {{"a", "b", "a", "a", "b", "", 1}}},
      {"ay^iba=ay^(i+1)", {"aba", "ay"}, "aby", {{"aba", "ay"}}, {{"a", "y", "ba", "a", "y", "y", 1}}},
      {"a3=xa, ax^ia=x^ia2", {"aaa", "xa"}, "xa", {{"aaa", "xa"}}, {{"a", "x", "a", "", "x", "aa", 1}}},
      {"a3=ay, ay^ia=a2y^i", {"aaa", "ay"}, "ay", {{"aaa", "ay"}}, {{"a", "y", "a", "aa", "y", "", 1}}},
  };
  Failures f;
  for (const auto& s : stated) {
    Alphabet ord(s.order);
    RewriteSystem rs = shirshov_complete({s.relation}, ord);
    if (rs.status != Completeness::complete) {
      f.add(s.label + ": completion " + completeness_name(rs.status));
      continue;
    }
    std::set<std::pair<Word, Word>> got, want;
    for (const auto& r : rs.rules) got.emplace(r.lhs, r.rhs);
    for (const auto& r : s.rules) want.emplace(r.lhs, r.rhs);
    if (got != want) f.add(s.label + ": rules differ");
    // Leading language built directly from the stated families.
    int n = static_cast<int>(ord.size());
    Fsa expect = empty_language(n);
    for (const auto& r : s.rules) expect = union_of(expect, lit(ord, r.lhs));
    for (const auto& fam : s.families)
      expect = union_of(expect, concat(concat(lit(ord, fam.lhs_pre), plus(lit(ord, fam.lhs_pump))), lit(ord, fam.lhs_suf)));
    if (!equivalent(leading_language(rs), expect).equal) f.add(s.label + ": leading language differs");
    if (s.families.empty()) continue;
    // Instances i <= 8 against the completed schemas and against plain completion.
    CompletionLimits plain_lim;
    plain_lim.detect_schemas = false;
    plain_lim.max_len = 14;
    plain_lim.max_rules = 400;
    RewriteSystem plain = shirshov_complete({s.relation}, ord, plain_lim);
    for (const auto& fam : s.families)
      for (size_t i = 1; i <= 8; ++i) {
        Rule want_r{fam.lhs_pre + power(fam.lhs_pump, i) + fam.lhs_suf, fam.rhs_pre + power(fam.rhs_pump, i) + fam.rhs_suf};
        bool in_schema = std::any_of(rs.schemas.begin(), rs.schemas.end(), [&](const RuleSchema& x) {
          return i >= x.min_i && x.instance(i) == want_r;
        });
        if (!in_schema) f.add(s.label + ": instance " + want_r.lhs + "->" + want_r.rhs + " missing");
        if (want_r.lhs.size() <= plain_lim.max_len &&
            std::find(plain.rules.begin(), plain.rules.end(), want_r) == plain.rules.end())
          f.add(s.label + ": plain completion lacks " + want_r.lhs + "->" + want_r.rhs);
      }
  }
  return {f.count() == 0, std::to_string(stated.size()) + " bases" + (f.count() ? ": " + f.str() : " reproduced")};
}

// ---------------------------------------------------------------- 3

Outcome witness_criterion() {
  Failures f;
  size_t rows = 0, checks = 0;
  for (const auto& row : full_table(2)) {
    if (row.result.automatic != Verdict::yes) continue;
    ++rows;
    Presentation p = instantiate(row.pattern, 2);
    std::string name = row.pattern.str();
    std::vector<Flavor> declared{Flavor::rr};
    if (row.result.biautomatic == Verdict::yes) declared.assign(std::begin(kAllFlavors), std::end(kAllFlavors));
    try {
      Witness w = build_witness(p, row.result);
      for (Flavor fl : declared)
        if (!w.structure.has_flavor(fl)) f.add(name + ": flavor " + flavor_name(fl) + " missing");
      if (!w.structure.prefix_equality) f.add(name + ": prefix equality missing");
      VerificationReport rep = verify_structure(w.structure, w.nf, kWitnessDepth);
      checks += rep.checks.size();
      if (!rep.passed()) {
        std::string bad;
        for (const auto& c : rep.checks)
          if (!c.pass) bad += " " + c.name + "(missing " + std::to_string(c.missing.size()) + ", spurious " +
                              std::to_string(c.spurious.size()) + ")";
        for (const auto& i : rep.language_issues) bad += " " + i;
        f.add(name + ":" + bad);
      }
    } catch (const std::exception& e) {
      // Report which declared flavors can be built and verified on their own.
      std::string per;
      for (Flavor fl : declared) {
        bool ok = false;
        try {
          Witness w = build_witness(p, row.result, 6, std::vector<Flavor>{fl});
          ok = verify_structure(w.structure, w.nf, kWitnessDepth).passed();
        } catch (const not_applicable&) {
        }
        per += std::string(" ") + flavor_name(fl) + (ok ? "=pass" : "=none");
      }
      f.add(name + ":" + per + " (" + e.what() + ")");
    }
  }
  return {f.count() == 0, std::to_string(rows) + " automatic rows, " + std::to_string(checks) + " relations verified at depth " +
                              std::to_string(kWitnessDepth) + (f.count() ? "; failing: " + f.str() : "")};
}

// ---------------------------------------------------------------- 4

Outcome oracle_criterion() {
  Alphabet ab("ab");
  auto ws = words_up_to(ab, 3);
  Failures f;
  size_t systems = 0, pairs = 0, skipped = 0;
  for (const auto& u : ws)
    for (const auto& v : ws) {
      if (u.empty() || u == v || v.size() > u.size()) continue;
      Presentation p{ab, {{u, v}}};
      std::optional<OrderedNormalForm> on;
      for (const char* order : {"ab", "ba"}) {
        on = normal_form_for(Presentation{Alphabet(order), {{u, v}}});
        if (on) break;
      }
      if (!on) {
        ++skipped;
        continue;
      }
      ++systems;
      auto words = words_up_to(ab, kOracleWords, 1);
      auto classes = congruence_classes(ab, p.relations, kOracleWords, kOracleCap);
      // congruence_classes lists the empty word first.
      std::vector<Word> nfs;
      for (const auto& w : words) nfs.push_back(on->nf.rep(w));
      for (size_t i = 0; i < words.size(); ++i)
        for (size_t j = i + 1; j < words.size(); ++j) {
          ++pairs;
          bool cong = classes[i + 1] == classes[j + 1];
          if (cong != (nfs[i] == nfs[j]))
            f.add(u + "=" + show_word(v) + ": " + words[i] + " vs " + words[j] + (cong ? " congruent" : " not congruent"));
        }
    }
  return {f.count() == 0 && skipped == 0,
          std::to_string(systems) + " systems, " + std::to_string(pairs) + " word pairs, " + std::to_string(skipped) +
              " without a complete system" + (f.count() ? "; disagreements: " + f.str() : "")};
}

// ---------------------------------------------------------------- 5

// Random relation with length differences at most `bound`.
Fsa random_relation(std::mt19937& rng, const Alphabet& a, int bound, Side side) {
  auto rword = [&](size_t n) {
    Word w;
    for (size_t i = 0; i < n; ++i) w.push_back(a.letter(rng() % a.size()));
    return w;
  };
  PairAlphabet pa(static_cast<int>(a.size()));
  Fsa r = empty_language(pa.nsym());
  for (int k = 0; k < 3; ++k) {
    size_t lu = rng() % 3;
    int lv = static_cast<int>(lu) + static_cast<int>(rng() % (2 * bound + 1)) - bound;
    Word u = rword(lu), v = rword(static_cast<size_t>(std::clamp(lv, 0, 2)));
    if (u.empty() && v.empty()) u = rword(1);
    if (std::abs(static_cast<int>(u.size()) - static_cast<int>(v.size())) > bound) continue;
    Fsa piece = pair_const(u, v, a, side);
    if (rng() % 3 == 0) {
      Fsa loop = star(lit(a, rword(1 + rng() % 2)));
      Fsa d = diagonal(loop, static_cast<int>(a.size()));
      piece = side == Side::R ? concat(d, piece) : concat(piece, d);
    }
    r = union_of(r, piece);
  }
  return r;
}

std::set<std::pair<Word, Word>> pairs_of(const Fsa& m, const Alphabet& a, size_t len, Side side) {
  std::set<std::pair<Word, Word>> out;
  for (const auto& s : enumerate(m, len))
    if (auto uv = try_unconvolve(s, a, side)) out.insert(*uv);
  if (accepts(m, {})) out.emplace("", "");
  return out;
}

Outcome padded_criterion() {
  Alphabet ab("ab");
  std::mt19937 rng(2024);
  Failures f;
  size_t cases = 0;
  auto fail = [&](const std::string& suite, int trial) { f.add(suite + " case " + std::to_string(trial)); };
  // Convolution round trip and Delta_L exactness.
  for (const auto& u : words_up_to(ab, 5))
    for (const auto& v : words_up_to(ab, 5)) {
      if (u.empty() && v.empty()) continue;
      for (Side s : {Side::R, Side::L}) {
        ++cases;
        if (unconvolve(convolve(u, v, ab, s), ab, s) != std::pair{u, v}) f.add("round trip " + u + "," + v);
      }
    }
  for (int trial = 0; trial < 50; ++trial) {
    ++cases;
    Fsa l = union_of(star(lit(ab, "ab")), concat(lit(ab, trial % 2 ? "b" : "a"), star(lit(ab, "ba"))));
    auto got = pairs_of(diagonal(l, 2), ab, kPaddedLen, Side::R);
    got.erase({"", ""});
    std::set<std::pair<Word, Word>> want;
    for (const auto& s : enumerate(l, kPaddedLen))
      if (!s.empty()) want.emplace(word_of(s, ab), word_of(s, ab));
    if (got != want) fail("diagonal", trial);
  }
  // Odot against the brute-force split search: accepted pairs are composable,
  // and composed pairs are accepted.
  auto check_odot = [&](Side side, int trial) {
    int c = trial % 4;
    Fsa m = random_relation(rng, ab, c, side);
    Fsa n = random_relation(rng, ab, 3, side);
    Fsa r = side == Side::R ? odot_right(m, n, 2, c, 0) : odot_left(m, n, 2, c, 3, 0);
    auto pm = pairs_of(m, ab, kPaddedLen, side), pn = pairs_of(n, ab, kPaddedLen, side);
    std::set<std::pair<Word, Word>> composed;
    for (const auto& [x1, y1] : pm)
      for (const auto& [x2, y2] : pn) {
        Word x = x1 + x2, y = y1 + y2;
        if (std::max(x.size(), y.size()) <= kPaddedLen && !(x.empty() && y.empty())) composed.emplace(x, y);
      }
    auto got = pairs_of(r, ab, kPaddedLen, side);
    got.erase({"", ""});
    if (got != composed) fail(side == Side::R ? "odot" : "odot'", trial);
  };
  for (int trial = 0; trial < kPaddedCases; ++trial) {
    ++cases;
    check_odot(trial % 2 ? Side::L : Side::R, trial);
  }
  for (int trial = 0; trial < 100; ++trial) {
    ++cases;
    int k = trial % 4;
    Fsa m = random_relation(rng, ab, k, Side::R);
    Fsa l = swap_side(m, 2, k, Side::R, 0);
    Fsa valid = intersect(m, all_convolutions(2, Side::R));
    if (pairs_of(l, ab, kPaddedLen, Side::L) != pairs_of(m, ab, kPaddedLen, Side::R) ||
        !equivalent(swap_side(l, 2, k, Side::L, 0), valid).equal)
      fail("swap_side", trial);
  }
  return {f.count() == 0, std::to_string(cases) + " cases" + (f.count() ? "; failing: " + f.str() : ", all pass")};
}

// ---------------------------------------------------------------- 6

Outcome nerode_criterion() {
  struct Case {
    std::string pattern;
    Relation rel;
    std::string order;
    char letter;
  };
  // Right multipliers (rr) whose regularity fails for L = Irr of the basis.
  const std::vector<Case> cases{{"xyx=yx", {"aba", "ba"}, "ab", 'a'},
                                {"xxy=yx", {"aab", "ba"}, "ab", 'b'},
                                {"xyy=yy", {"abb", "bb"}, "ab", 'b'}};
  const std::vector<size_t> depths{4, 6, 8, 10};
  Failures f;
  std::string seq;
  for (const auto& c : cases) {
    auto on = normal_form_for(Presentation{Alphabet(c.order), {c.rel}});
    if (!on) {
      f.add(c.pattern + ": completion failed");
      continue;
    }
    auto sample = multiplier_oracle(on->language, on->nf, c.letter, Flavor::rr, depths.back());
    auto pts = nerode_lower_bound(sample, depths);
    std::string s;
    bool increasing = true;
    for (size_t i = 0; i < pts.size(); ++i) {
      s += (i ? "," : "") + std::to_string(pts[i].bound);
      if (i && pts[i].bound <= pts[i - 1].bound) increasing = false;
    }
    seq += " " + c.pattern + "[" + std::string(1, c.letter) + "/rr]=" + s;
    if (!increasing) f.add(c.pattern + " bounds " + s + " not strictly increasing");
  }
  // Catalog multipliers: the bound never exceeds the minimal automaton.
  size_t catalog = 0;
  for (const auto& row : full_table(2)) {
    if (row.result.automatic != Verdict::yes || !row.result.witness_case) continue;
    CatalogWitness cw;
    try {
      cw = construct_from_catalog(*row.result.witness_case, instantiate(row.pattern, 2));
    } catch (const not_applicable&) {
      continue;
    }
    for (const auto& [key, m] : cw.structure.multipliers) {
      AutomaticStructure one;
      one.alphabet = cw.structure.alphabet;
      one.language = cw.structure.language;
      one.multipliers[key] = m;
      if (!verify_structure(one, cw.nf, 6).passed()) continue;
      ++catalog;
      auto sample = multiplier_oracle(cw.structure.language, cw.nf, key.first, key.second, 8);
      size_t bound = nerode_bound_at(sample, 8);
      auto states = static_cast<size_t>(minimize(m).num_states());
      if (bound > states)
        f.add(row.pattern.str() + " " + flavor_name(key.second) + ": bound " + std::to_string(bound) + " > " +
              std::to_string(states) + " states");
    }
  }
  return {f.count() == 0, "bounds at depths 4,6,8,10:" + seq + "; " + std::to_string(catalog) +
                              " catalog multipliers within their state counts" + (f.count() ? "; failing: " + f.str() : "")};
}

// ---------------------------------------------------------------- 7

Outcome count_criterion() {
  // aa=c completes to {aa->c, ac->ca} with c<a; L = {c^i a^j : j in {0,1}, i+j >= 1}.
  auto on = normal_form_for(Presentation{Alphabet("ca"), {{"aa", "c"}}});
  if (!on) return {false, "completion failed"};
  Failures f;
  std::string counts;
  for (size_t n = 1; n <= 8; ++n) {
    std::set<Word> direct;
    for (size_t i = 0; i <= n; ++i)
      for (size_t j = 0; j <= 1; ++j)
        if (i + j >= 1 && i + j <= n) direct.insert(Word(i, 'c') + Word(j, 'a'));
    std::set<Word> got;
    for (const auto& s : enumerate(on->language, n)) got.insert(word_of(s, on->nf.alphabet));
    counts += (n > 1 ? "," : "") + std::to_string(got.size());
    if (got != direct)
      f.add("N=" + std::to_string(n) + ": " + std::to_string(got.size()) + " words, formula " + std::to_string(direct.size()));
  }
  return {f.count() == 0, "counts N=1..8: " + counts + (f.count() ? "; " + f.str() : "")};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all{
      {1, "classification table", kTableLimit, table_criterion},
      {2, "stated bases", kBasesLimit, bases_criterion},
      {3, "witness verification", kWitnessLimit, witness_criterion},
      {4, "normal form vs congruence oracle", kOracleLimit, oracle_criterion},
      {5, "padded combinators", 0, padded_criterion},
      {6, "non-regularity evidence", kNerodeLimit, nerode_criterion},
      {7, "normal form counts", 0, count_criterion},
  };
  bool ok = true;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit > 0 && secs > c.limit) {
      o.pass = false;
      o.detail += "; over the time limit";
    }
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << "criterion " << c.id << " " << (o.pass ? "PASS" : "FAIL") << " " << c.name << " ("
         << secs << "s): " << o.detail;
    std::cout << line.str() << std::endl;
    ok = ok && o.pass;
  }
  return ok ? 0 : 1;
}
