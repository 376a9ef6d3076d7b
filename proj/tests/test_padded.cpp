#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "osr/errors.hpp"
#include "osr/padded.hpp"

using namespace osr;
using namespace osr::testing;

namespace {

const Alphabet ab("ab");
const Alphabet abc("abc");

Symbols P(const Alphabet& a, std::initializer_list<const char*> syms) {
  PairAlphabet p(static_cast<int>(a.size()));
  Symbols s;
  for (const char* x : syms) {
    auto idx = [&](char c) { return c == '$' ? p.pad() : a.index(c); };
    s.push_back(p.sym(idx(x[0]), idx(x[1])));
  }
  return s;
}

std::vector<std::pair<Word, Word>> all_pairs(const Alphabet& a, size_t n) {
  std::vector<std::pair<Word, Word>> out;
  auto ws = words_up_to(a, n);
  for (const auto& u : ws)
    for (const auto& v : ws)
      if (!u.empty() || !v.empty()) out.emplace_back(u, v);
  return out;
}

// Accepted pairs of m with both components of length <= n.
std::set<std::pair<Word, Word>> relation(const Fsa& m, const Alphabet& a, size_t n, Side side) {
  std::set<std::pair<Word, Word>> r;
  for (const auto& [u, v] : all_pairs(a, n))
    if (accepts(m, convolve(u, v, a, side))) r.emplace(u, v);
  return r;
}

bool only_valid(const Fsa& m, const Alphabet& a, size_t n, Side side) {
  for (const auto& w : enumerate(m, n))
    if (!try_unconvolve(w, a, side)) return false;
  return true;
}

}  // namespace

TEST_CASE("convolutions") {
  CHECK(convolve_right("abb", "ba", abc) == P(abc, {"ab", "ba", "b$"}));
  CHECK(convolve_right("ab", "abc", abc) == P(abc, {"aa", "bb", "$c"}));
  CHECK(convolve_right("ab", "ab", abc) == P(abc, {"aa", "bb"}));
  CHECK(convolve_left("abb", "ba", abc) == P(abc, {"a$", "bb", "ba"}));
  CHECK(convolve_left("ab", "abc", abc) == P(abc, {"$a", "ab", "bc"}));
  CHECK(convolve_left("a", "a", abc) == P(abc, {"aa"}));
  CHECK_THROWS_AS(convolve_right("", "", abc), invalid_input);
  CHECK(pair_symbol_name(P(abc, {"$c"})[0], abc) == "$|c");
}

TEST_CASE("unconvolve") {
  CHECK(unconvolve(P(abc, {"ab", "ba", "b$"}), abc, Side::R) == std::pair<Word, Word>{"abb", "ba"});
  CHECK(unconvolve(P(abc, {"a$", "bb", "ba"}), abc, Side::L) == std::pair<Word, Word>{"abb", "ba"});
  CHECK_THROWS_AS(unconvolve({}, abc, Side::R), invalid_input);
  CHECK_THROWS_AS(unconvolve(P(abc, {"a$", "bb"}), abc, Side::R), invalid_input);
  CHECK_THROWS_AS(unconvolve(P(abc, {"ab", "b$"}), abc, Side::L), invalid_input);
}

TEST_CASE("property: convolution round trip and length") {
  for (const auto& [u, v] : all_pairs(ab, 5)) {
    for (Side s : {Side::R, Side::L}) {
      auto p = convolve(u, v, ab, s);
      REQUIRE(p.size() == std::max(u.size(), v.size()));
      REQUIRE(unconvolve(p, ab, s) == std::pair<Word, Word>{u, v});
    }
  }
}

TEST_CASE("diagonal") {
  Fsa d = diagonal(finite(abc, {"a", "ab"}), 3);
  CHECK(acc_pair(d, abc, "a", "a"));
  CHECK(acc_pair(d, abc, "ab", "ab"));
  CHECK_FALSE(acc_pair(d, abc, "a", "b"));
  CHECK(is_empty(diagonal(empty_language(3), 3)));
  CHECK(acc_pair(diagonal(any_plus(ab), 2), ab, "ba", "ba"));
  // exhaustive on short pair words
  Fsa l = difference(any_plus(ab), containing(ab, "bb"));
  Fsa dl = diagonal(l, 2);
  PairAlphabet p(2);
  for (const auto& w : all_symbol_words(p.nsym(), 5)) {
    auto uv = try_unconvolve(w, ab, Side::R);
    bool expect = uv && uv->first == uv->second && acc(l, ab, uv->first);
    REQUIRE(accepts(dl, w) == expect);
  }
}

TEST_CASE("pair products") {
  Fsa x = finite(ab, {"a", "ab", ""}), y = finite(ab, {"b", "bbb"});
  for (Side s : {Side::R, Side::L}) {
    Fsa m = pair_product(x, y, 2, s);
    CHECK(only_valid(m, ab, 6, s));
    auto r = relation(m, ab, 4, s);
    CHECK(r.size() == 6);
    CHECK(r.count({"", "bbb"}));
    Fsa e = pair_product(x, y, 2, s, -1);
    CHECK(relation(e, ab, 4, s) == std::set<std::pair<Word, Word>>{{"", "b"}, {"ab", "bbb"}});
  }
  Fsa all = all_convolutions(2, Side::L);
  CHECK(count_accepted(all, 2) == all_pairs(ab, 2).size());
}

TEST_CASE("odot_right examples") {
  Fsa m = pairs(abc, {{"ab", "a"}});
  Fsa n = pairs(abc, {{"c", "c"}});
  Fsa r = odot_right(m, n, 3, 1);
  CHECK(equivalent(r, word_language(15, P(abc, {"aa", "bc", "c$"}))).equal);

  Fsa m2 = concat(diagonal(lit(abc, "ab"), 3), pair_const("", "c", abc, Side::R));
  CHECK(acc_pair(m2, abc, "ab", "abc"));
  Fsa r2 = odot_right(m2, pairs(abc, {{"b", "b"}}), 3, 1);
  CHECK(relation(r2, abc, 4, Side::R) == std::set<std::pair<Word, Word>>{{"abb", "abcb"}});
  CHECK(is_empty(odot_right(empty_language(15), n, 3, 0)));
  CHECK_THROWS_AS(odot_right(pairs(abc, {{"aaa", "a"}}), n, 3, 1), contract_error);
}

TEST_CASE("odot_left examples") {
  Fsa m = pairs(ab, {{"ab", "b"}}, Side::L);
  CHECK(accepts(m, P(ab, {"a$", "bb"})));
  Fsa n = pairs(ab, {{"a", "a"}}, Side::L);
  Fsa r = odot_left(m, n, 2, 1, 0);
  CHECK(relation(r, ab, 4, Side::L) == std::set<std::pair<Word, Word>>{{"aba", "ba"}});
  Fsa la = difference(any_plus(ab), containing(ab, "aa"));
  Fsa lb = finite(ab, {"b", "ab"});
  Fsa d = odot_left(diagonal(la, 2), diagonal(lb, 2), 2, 0, 0);
  CHECK(equivalent(d, diagonal(concat(la, lb), 2)).equal);
  CHECK(is_empty(odot_left(empty_language(8), n, 2, 0, 0)));
}

TEST_CASE("swap_side") {
  Fsa r = pairs(ab, {{"ab", "b"}});
  CHECK(equivalent(swap_side(r, 2, 1, Side::R), word_language(8, P(ab, {"a$", "bb"}))).equal);
  Fsa d = diagonal(difference(any_plus(ab), containing(ab, "ab")), 2);
  CHECK(equivalent(swap_side(d, 2, 0, Side::R), d).equal);
  CHECK(equivalent(swap_side(d, 2, 0, Side::L), d).equal);
  // {(a^n b, a^n)}
  Fsa an = star(lit(ab, "a"));
  Fsa rel = concat(diagonal(an, 2), pair_const("b", "", ab, Side::R));
  Fsa left = swap_side(rel, 2, 1, Side::R);
  for (int n = 0; n <= 5; ++n) {
    Word x = power("a", n);
    CHECK(accepts(rel, convolve_right(x + "b", x, ab)));
    CHECK(accepts(left, convolve_left(x + "b", x, ab)));
  }
  CHECK(relation(left, ab, 6, Side::L) == relation(rel, ab, 6, Side::R));
  CHECK_THROWS_AS(swap_side(pairs(ab, {{"aaa", ""}}), 2, 2, Side::R), contract_error);
}

TEST_CASE("eval_expr") {
  using namespace expr;
  Fsa l = difference(any_plus(ab), containing(ab, "bb"));
  Fsa m = eval_expr(cat(diag(l), pair("", "a")), ab);
  for (const auto& al : words_up_to(ab, 6)) {
    if (!acc(l, ab, al)) continue;
    REQUIRE(acc_pair(m, ab, al, al + "a"));
  }
  CHECK(relation(m, ab, 5, Side::R).size() == count_accepted(l, 4));
  Fsa s = eval_expr(star(raw(word_language(15, P(abc, {"aa", "cc"})))), abc);
  CHECK(acc_pair(s, abc, "acac", "acac"));
  CHECK(is_empty(eval_expr(within(diag(any(ab)), empty_language(2), any(ab)), ab)));
}

namespace {

// Random bounded-difference relation as a union of finite pairs and Delta_L.(u,v) pieces.
Fsa random_relation(std::mt19937& rng, const Alphabet& a, int bound, Side side) {
  std::uniform_int_distribution<int> coin(0, 3), len(0, 2);
  auto rword = [&](int n) {
    Word w;
    for (int i = 0; i < n; ++i) w.push_back(a.letter(rng() % a.size()));
    return w;
  };
  PairAlphabet p(static_cast<int>(a.size()));
  Fsa r = empty_language(p.nsym());
  for (int k = 0; k < 3; ++k) {
    int lu = len(rng), lv = std::clamp(lu + static_cast<int>(rng() % (2 * bound + 1)) - bound, 0, 2);
    Word u = rword(lu), v = rword(lv);
    if (u.empty() && v.empty()) u = rword(1);
    if (static_cast<int>(std::abs(static_cast<int>(u.size()) - static_cast<int>(v.size()))) > bound) continue;
    Fsa piece = pair_const(u, v, a, side);
    if (coin(rng) == 0) {
      Fsa d = diagonal(random_nfa(rng, static_cast<int>(a.size()), 2), static_cast<int>(a.size()));
      piece = side == Side::R ? concat(d, piece) : concat(piece, d);
    }
    r = union_of(r, piece);
  }
  return r;
}

}  // namespace

TEST_CASE("property: odot_right equals brute-force split search") {
  std::mt19937 rng(5);
  auto cands = all_pairs(ab, 4);
  for (int trial = 0; trial < 25; ++trial) {
    int c = trial % 3;
    Fsa m = random_relation(rng, ab, c, Side::R);
    Fsa n = random_relation(rng, ab, 2, Side::R);
    Fsa r = odot_right(m, n, 2, c, 0);
    REQUIRE(only_valid(r, ab, 6, Side::R));
    auto in = [&](const Fsa& f, const Word& u, const Word& v) {
      if (u.empty() && v.empty()) return accepts(f, {});
      return accepts(f, convolve_right(u, v, ab));
    };
    for (const auto& [u, v] : cands) {
      bool expect = false;
      for (size_t i = 0; i <= u.size() && !expect; ++i)
        for (size_t j = 0; j <= v.size() && !expect; ++j)
          expect = in(m, u.substr(0, i), v.substr(0, j)) && in(n, u.substr(i), v.substr(j));
      REQUIRE(acc_pair(r, ab, u, v) == expect);
    }
  }
}

TEST_CASE("property: odot_left equals brute-force split search") {
  std::mt19937 rng(9);
  auto cands = all_pairs(ab, 4);
  for (int trial = 0; trial < 15; ++trial) {
    Fsa m = random_relation(rng, ab, 1, Side::L);
    Fsa n = random_relation(rng, ab, 1, Side::L);
    Fsa r = odot_left(m, n, 2, 1, 1, 0);
    auto in = [&](const Fsa& f, const Word& u, const Word& v) {
      if (u.empty() && v.empty()) return accepts(f, {});
      return accepts(f, convolve_left(u, v, ab));
    };
    for (const auto& [u, v] : cands) {
      bool expect = false;
      for (size_t i = 0; i <= u.size() && !expect; ++i)
        for (size_t j = 0; j <= v.size() && !expect; ++j)
          expect = in(m, u.substr(0, i), v.substr(0, j)) && in(n, u.substr(i), v.substr(j));
      REQUIRE(acc_pair(r, ab, u, v, Side::L) == expect);
    }
  }
}

TEST_CASE("property: swap_side round trip") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    int k = trial % 3;
    Fsa m = random_relation(rng, ab, k, Side::R);
    Fsa valid = intersect(m, all_convolutions(2, Side::R));
    Fsa l = swap_side(m, 2, k, Side::R, 0);
    REQUIRE(relation(l, ab, 4, Side::L) == relation(m, ab, 4, Side::R));
    REQUIRE(equivalent(swap_side(l, 2, k, Side::L, 0), valid).equal);
  }
}
