#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "osr/errors.hpp"
#include "osr/rewriting.hpp"

using namespace osr;
using namespace osr::testing;

namespace {

std::vector<Rule> rules_of(const RewriteSystem& rs) { return rs.rules; }

// Leftmost-free reduction choosing random redexes.
Word random_reduce(const RewriteSystem& rs, Word w, std::mt19937& rng) {
  for (;;) {
    std::vector<Word> next;
    for (const auto& r : rs.rules)
      for (size_t p = 0; p + r.lhs.size() <= w.size(); ++p)
        if (w.compare(p, r.lhs.size(), r.lhs) == 0) next.push_back(w.substr(0, p) + r.rhs + w.substr(p + r.lhs.size()));
    for (const auto& s : rs.schemas)
      for (size_t i = s.min_i; i <= w.size(); ++i) {
        Rule r = s.instance(i);
        if (r.lhs.size() > w.size()) break;
        for (size_t p = 0; p + r.lhs.size() <= w.size(); ++p)
          if (w.compare(p, r.lhs.size(), r.lhs) == 0)
            next.push_back(w.substr(0, p) + r.rhs + w.substr(p + r.lhs.size()));
      }
    if (next.empty()) return w;
    w = next[rng() % next.size()];
  }
}

}  // namespace

TEST_CASE("orient") {
  CHECK(orient("ba", "ab", Alphabet("ab")) == Rule{"ba", "ab"});
  CHECK(orient("cc", "aa", Alphabet("ca")) == Rule{"aa", "cc"});
  CHECK(orient("b", "aab", Alphabet("ab")) == Rule{"aab", "b"});
  CHECK_THROWS_AS(orient("ab", "ab", Alphabet("ab")), trivial_relation);
  CHECK_THROWS_AS(orient("", "", Alphabet("ab")), invalid_input);
}

TEST_CASE("compositions") {
  auto c = compositions({"aa", "cc"}, {"aa", "cc"});
  REQUIRE(c.size() == 1);
  CHECK(c[0].ambiguity == "aaa");
  CHECK(c[0].left == "cca");
  CHECK(c[0].right == "acc");
  CHECK(compositions({"ab", "cd"}, {"ab", "cd"}).empty());
  auto d = compositions({"aba", "ba"}, {"aba", "ba"});
  // sliding-window overlaps of aba with itself
  std::set<Word> amb;
  for (size_t k = 1; k < 3; ++k)
    if (Word("aba").substr(3 - k) == Word("aba").substr(0, k)) amb.insert("aba" + Word("aba").substr(k));
  REQUIRE(d.size() == amb.size());
  CHECK(d[0].ambiguity == "ababa");
  CHECK(d[0].left == "baba");
  CHECK(d[0].right == "abba");
  auto inc = compositions({"abc", "x"}, {"b", "y"});
  REQUIRE(inc.size() == 1);
  CHECK(inc[0].right == "ayc");
}

TEST_CASE("reduce") {
  const Alphabet ca("ca");
  RewriteSystem rs{ca, {{"aa", "cc"}, {"acc", "cca"}}, {}, Completeness::complete};
  CHECK(rs.reduce("aac") == "ccc");
  CHECK(congruence_equal("aac", "ccc", {{"aa", "cc"}}, 8) == CongruenceAnswer::equal);
  CHECK(rs.irreducible("ccc"));
  RewriteSystem r2{Alphabet("ab"), {{"aba", "ba"}}, {}, Completeness::unknown};
  CHECK(r2.reduce("abab") == "bab");
  CHECK(r2.reduce("bbaab") == "bbaab");
}

TEST_CASE("completion of stated bases") {
  auto r1 = shirshov_complete({{"aa", "cc"}}, Alphabet("ca"));
  CHECK(r1.status == Completeness::complete);
  CHECK(rules_of(r1) == std::vector<Rule>{{"aa", "cc"}, {"acc", "cca"}});

  auto r2 = shirshov_complete({{"aaa", "bbb"}}, Alphabet("ba"));
  CHECK(r2.status == Completeness::complete);
  CHECK(rules_of(r2) == std::vector<Rule>{{"aaa", "bbb"}, {"abbb", "bbba"}});

  auto r3 = shirshov_complete({{"aba", "ba"}}, Alphabet("ab"));
  CHECK(r3.status == Completeness::complete);
  REQUIRE(r3.schemas.size() == 1);
  CHECK(r3.rules.empty());
  CHECK(r3.schemas[0] == RuleSchema{"a", "b", "a", "", "b", "a", 1});

  auto r4 = shirshov_complete({{"aba", "bb"}}, Alphabet("ba"));
  CHECK(r4.status == Completeness::complete);
  CHECK(rules_of(r4) == std::vector<Rule>{{"aba", "bb"}, {"abbb", "bbba"}});

  auto r5 = shirshov_complete({{"aba", "ba"}}, Alphabet("ab"), {50, 12, false, 8});
  CHECK(r5.status == Completeness::bounded_incomplete);
}

TEST_CASE("leading and irreducible languages") {
  const Alphabet ab("ab");
  RewriteSystem rs{ab, {{"aba", "ba"}}, {}, Completeness::unknown};
  CHECK(equivalent(leading_language(rs), lit(ab, "aba")).equal);
  Fsa irr = irr_language(rs);
  CHECK(acc(irr, ab, "abba"));
  CHECK_FALSE(acc(irr, ab, "abab"));

  RewriteSystem sc{ab, {}, {{"a", "b", "a", "", "b", "a", 1}}, Completeness::complete};
  Fsa abpa = concat(concat(lit(ab, "a"), plus(lit(ab, "b"))), lit(ab, "a"));
  CHECK(equivalent(leading_language(sc), abpa).equal);
  Fsa irr2 = irr_language(sc);
  CHECK(acc(irr2, ab, "bab"));
  CHECK_FALSE(acc(irr2, ab, "abba"));

  RewriteSystem none{ab, {}, {}, Completeness::complete};
  CHECK(is_empty(leading_language(none)));
  CHECK(equivalent(irr_language(none), any_plus(ab)).equal);
}

TEST_CASE("congruence oracle") {
  CHECK(congruence_equal("a", "b", {{"aba", "ba"}}, 10) == CongruenceAnswer::distinct_up_to_cap);
  CHECK(congruence_equal("abab", "abab", {}, 1) == CongruenceAnswer::equal);
  CHECK(congruence_equal("abba", "bba", {{"aba", "ba"}}, 10) == CongruenceAnswer::equal);
  // monoid relation: insertion of the relator
  CHECK(congruence_equal("b", "abab", {{"aba", ""}}, 8) == CongruenceAnswer::equal);
}

TEST_CASE("presentation text") {
  auto p = parse_presentation("gens: a,b\nrel: aba = 1\n");
  CHECK(p.alphabet.str() == "a,b");
  REQUIRE(p.relations.size() == 1);
  CHECK(p.relations[0] == Relation{"aba", ""});
  CHECK(parse_presentation(format_presentation(p)).relations == p.relations);
  CHECK_THROWS_AS(parse_presentation("rel: a = b\n"), invalid_input);
  CHECK_THROWS_AS(parse_presentation("gens: a\nrel: a = c\n"), invalid_input);
  CHECK_THROWS_AS(parse_presentation("gens: a,b\nrel: a = b = a\n"), invalid_input);
}

TEST_CASE("monoid embedding") {
  auto m = monoid_embedding(Alphabet("ab"), {{"aba", ""}});
  CHECK(m.alphabet.str() == "e,a,b");
  CHECK(m.alphabet.identity() == 'e');
  auto rs = shirshov_complete(m.relations, m.alphabet);
  CHECK(rs.status == Completeness::complete);
  CHECK(rs.reduce("abae") == "e");
  CHECK(rs.reduce("eab") == "ab");
}

namespace {

struct Case {
  std::vector<Relation> rel;
  Alphabet ord;
};

std::vector<Case> complete_cases() {
  return {
      {{{"aa", "cc"}}, Alphabet("ca")},   {{{"aaa", "bbb"}}, Alphabet("ba")},
      {{{"aba", "ba"}}, Alphabet("ab")},  {{{"aba", "bb"}}, Alphabet("ba")},
      {{{"aab", "bb"}}, Alphabet("ab")},  {{{"abb", "a"}}, Alphabet("ab")},
      {{{"aba", "ab"}}, Alphabet("ab")},  {{{"ab", "b"}}, Alphabet("ab")},
  };
}

}  // namespace

TEST_CASE("property: rewriting is sound and decreasing") {
  for (const auto& c : complete_cases()) {
    auto rs = shirshov_complete(c.rel, c.ord);
    for (const auto& w : words_up_to(c.ord, 6, 1)) {
      auto s = rs.step(w);
      if (!s) continue;
      REQUIRE(deglex_less(*s, w, c.ord));
      REQUIRE(congruence_equal(w, *s, c.rel, 12) == CongruenceAnswer::equal);
      REQUIRE(rs.reduce(w).size() <= w.size());
    }
  }
}

TEST_CASE("property: complete systems are confluent") {
  std::mt19937 rng(1);
  for (const auto& c : complete_cases()) {
    auto rs = shirshov_complete(c.rel, c.ord);
    REQUIRE(rs.status == Completeness::complete);
    for (const auto& w : words_up_to(c.ord, 7, 1)) {
      Word nf = rs.reduce(w);
      for (int t = 0; t < 20; ++t) REQUIRE(random_reduce(rs, w, rng) == nf);
    }
  }
}

TEST_CASE("property: class count equals normal form count") {
  for (const auto& c : complete_cases()) {
    auto rs = shirshov_complete(c.rel, c.ord);
    auto labels = congruence_classes(c.ord, c.rel, 6, 12);
    auto words = words_up_to(c.ord, 6);
    std::set<int> classes;
    for (size_t i = 1; i < words.size(); ++i) classes.insert(labels[i]);
    Fsa irr = irr_language(rs);
    // normal forms of length <= 6 are exactly the class representatives when
    // every class contains a word of length <= 6 whose normal form is short
    std::set<Word> nfs;
    for (size_t i = 1; i < words.size(); ++i) nfs.insert(rs.reduce(words[i]));
    CHECK(classes.size() == nfs.size());
    CHECK(count_accepted(irr, 6) == nfs.size());
  }
}

TEST_CASE("property: schema instances are reproduced by plain completion") {
  auto with = shirshov_complete({{"aba", "ba"}}, Alphabet("ab"));
  REQUIRE(with.schemas.size() == 1);
  const auto& s = with.schemas[0];
  auto plain = shirshov_complete({{"aba", "ba"}}, Alphabet("ab"), {200, 14, false, 8});
  for (size_t i = s.min_i; i <= s.min_i + 8; ++i) {
    Rule r = s.instance(i);
    if (r.lhs.size() > 14) break;
    CHECK(std::find(plain.rules.begin(), plain.rules.end(), r) != plain.rules.end());
  }
}
