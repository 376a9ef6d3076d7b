#include <algorithm>
#include <sstream>

#include "osr/errors.hpp"
#include "osr/lang.hpp"
#include "osr/structures.hpp"

namespace osr {

namespace {

// Context words range over L and the empty word; every pair language built
// from them is cut down to L x L afterwards.
struct Kit {
  Alphabet a;
  Fsa l;
  int n;

  Kit(Alphabet a, Fsa l) : a(std::move(a)), l(std::move(l)), n(static_cast<int>(this->a.size())) {}

  Fsa lit(const Word& w) const { return lang::lit(a, w); }
  Fsa ctx() const { return minimize(union_of(l, epsilon_language(n))); }
  Fsa ctx_not_ending(const std::vector<Word>& ws) const { return minimize(difference(ctx(), lang::ending_in(a, ws))); }
  Fsa ctx_not_starting(const std::vector<Word>& ws) const {
    return minimize(difference(ctx(), lang::starting_with(a, ws)));
  }
  ExprPtr d(Fsa x) const { return expr::diag(std::move(x)); }
  ExprPtr p(const Word& u, const Word& v, Side s = Side::R) const { return expr::pair(u, v, s); }
  Fsa in_l(ExprPtr e, Side s = Side::R) const { return eval_expr(expr::within(std::move(e), l, l, s), a); }
};

int max_imbalance(const RewriteSystem& rs) {
  int n = 0;
  for (const auto& r : rs.rules) n = std::max(n, static_cast<int>(r.lhs.size()) - static_cast<int>(r.rhs.size()));
  return n;
}

void fill_swaps(AutomaticStructure& s, int k) {
  int n = static_cast<int>(s.alphabet.size());
  std::vector<std::pair<std::pair<char, Flavor>, Fsa>> add;
  for (const auto& [key, m] : s.multipliers) {
    if (key.second == Flavor::rr) add.push_back({{key.first, Flavor::lr}, swap_side(m, n, k, Side::R)});
    if (key.second == Flavor::ll) add.push_back({{key.first, Flavor::rl}, swap_side(m, n, k, Side::L)});
  }
  for (auto& [k2, m] : add) s.multipliers[k2] = std::move(m);
}

RewriteSystem complete_or_throw(const std::vector<Relation>& rel, const Alphabet& ord) {
  RewriteSystem rs = shirshov_complete(rel, ord);
  if (rs.status != Completeness::complete) throw not_applicable("completion did not finish under order " + ord.str());
  return rs;
}

Relation single_relation(const Presentation& p) {
  if (p.relations.size() != 1) throw not_applicable("catalog cases take one relation");
  auto [u, v] = p.relations[0];
  if (u.size() < v.size()) std::swap(u, v);
  return {u, v};
}

// Alphabet with the listed letters first, in order, then the rest.
Alphabet ordered(const Alphabet& a, const std::string& first) {
  std::string s = first;
  for (char c : a.letters())
    if (s.find(c) == std::string::npos) s += c;
  return Alphabet(s, a.identity());
}

void check_gs_single(const Relation& r, const Alphabet& ord, const std::string& what) {
  RewriteSystem rs = shirshov_complete({r}, ord);
  if (rs.status != Completeness::complete || rs.rules.size() != 1 || !rs.schemas.empty())
    throw not_applicable(what + ": the relation alone is not a complete basis");
}

// ------------------------------------------------------------------ cases

CatalogWitness nonoverlap_witness(const Presentation& p) {
  Relation r = single_relation(p);
  if (r.second.empty()) throw not_applicable("W-GEN: empty side");
  RewriteSystem rs = complete_or_throw({r}, p.alphabet);
  AutomaticStructure s = construct_generic_nonoverlap(rs);
  return {s, plain_normal_form(rs)};
}

CatalogWitness akb_witness(const Presentation& p) {
  auto [u, v] = single_relation(p);
  if (u.size() < 2 || v.size() != 1 || v[0] != u.back()) throw not_applicable("W-AKB: relation is not w x = x");
  const Alphabet& a = p.alphabet;
  check_gs_single({u, v}, a, "W-AKB");
  RewriteSystem rs = complete_or_throw({{u, v}}, a);
  Kit k(a, irr_language(rs));
  char x = v[0];
  Word w = u.substr(0, u.size() - 1);
  AutomaticStructure s;
  s.alphabet = a;
  s.language = k.l;
  s.case_id = "W-AKB";
  s.provenance = "transcribed: run of w before x collapses";
  s.multipliers[{kEpsKey, Flavor::rr}] = minimize(diagonal(k.l, k.n));
  for (char c : a.letters()) {
    Word cw(1, c);
    if (c != x) {
      s.multipliers[{c, Flavor::rr}] = k.in_l(expr::cat(k.d(k.l), k.p("", cw)));
      continue;
    }
    ExprPtr base = expr::cat(k.d(k.ctx_not_ending({w})), k.p("", cw));
    ExprPtr runs = expr::odot(base, expr::plus(k.p(w, "")), 1);
    s.multipliers[{c, Flavor::rr}] = minimize(union_of(k.in_l(runs), k.in_l(base)));
  }
  s.prefix_equality = minimize(diagonal(k.l, k.n));
  return {s, plain_normal_form(rs)};
}

CatalogWitness hom2_witness(const Presentation& p) {
  auto [u, v] = single_relation(p);
  if (u.size() != 2 || v.size() != 2 || u[0] != u[1] || v[0] != v[1] || u[0] == v[0])
    throw not_applicable("W-HOM2: relation is not a^2 = c^2");
  char a = u[0], c = v[0];
  // The basis {aa=cc, acc=cca} needs c < a.
  Alphabet ord = ordered(p.alphabet, std::string{c, a});
  RewriteSystem rs = complete_or_throw({{u, v}}, ord);
  Kit k(ord, irr_language(rs));
  Word A(1, a), C(1, c);
  AutomaticStructure s;
  s.alphabet = ord;
  s.language = k.l;
  s.case_id = "W-HOM2";
  s.provenance = "transcribed: squares a^2 = c^2";
  Fsa delta = minimize(diagonal(k.l, k.n));
  Fsa x1 = k.ctx_not_ending({A}), x2 = k.ctx_not_ending({A + C, A});
  ExprPtr la1 = expr::cat(k.d(x1), k.p("", A));
  ExprPtr la2 = expr::odot(expr::cat(k.d(x2), k.p("", C + C)),
                           expr::cat(expr::star(k.p(A + C, A + C)), k.p(A, "")), 2);
  ExprPtr lc1 = expr::cat(k.d(k.ctx_not_ending({A + C})), k.p("", C));
  ExprPtr lc2 = expr::odot(expr::cat(k.d(x2), k.p("", C)), expr::plus(k.p(A + C, C + A)), 1);
  Fsa y = k.ctx_not_starting({A, C + C});
  ExprPtr ma1 = expr::cat(k.p("", A, Side::L), k.d(y));
  ExprPtr ma2 = expr::cat(k.p(A, C + C, Side::L), k.d(y));
  ExprPtr ma3 = expr::cat(expr::cat(expr::cat(k.p(C, C + C, Side::L), expr::star(k.p(C + C, C + C, Side::L))),
                                    k.p(C, A, Side::L)),
                          k.d(y));
  ExprPtr ma4 = expr::cat(expr::cat(expr::cat(k.p("", C, Side::L), expr::plus(k.p(C + C, C + C, Side::L))),
                                    k.p(A, C, Side::L)),
                          k.d(y));
  ExprPtr mc = expr::cat(k.p("", C, Side::L), k.d(k.ctx()));
  for (char g : ord.letters()) {
    Word gw(1, g);
    if (g == a) {
      s.multipliers[{g, Flavor::rr}] = k.in_l(expr::alt(la1, la2));
      s.multipliers[{g, Flavor::ll}] = k.in_l(expr::alt({ma1, ma2, ma3, ma4}), Side::L);
    } else if (g == c) {
      s.multipliers[{g, Flavor::rr}] = k.in_l(expr::alt(lc1, lc2));
      s.multipliers[{g, Flavor::ll}] = k.in_l(mc, Side::L);
    } else {
      s.multipliers[{g, Flavor::rr}] = k.in_l(expr::cat(k.d(k.l), k.p("", gw)));
      s.multipliers[{g, Flavor::ll}] = k.in_l(expr::cat(k.p("", gw, Side::L), k.d(k.l)), Side::L);
    }
  }
  s.multipliers[{kEpsKey, Flavor::rr}] = delta;
  s.multipliers[{kEpsKey, Flavor::ll}] = delta;
  fill_swaps(s, 2);
  s.prefix_equality = delta;
  return {s, plain_normal_form(rs)};
}

CatalogWitness square_witness(const Presentation& p) {
  auto [u, v] = single_relation(p);
  if (u.size() != 2 || u[0] != u[1] || v.size() != 1 || v[0] == u[0])
    throw not_applicable("W-21: relation is not aa = c");
  char a = u[0], c = v[0];
  if (p.alphabet.size() != 2) throw not_applicable("W-21: the displayed structure covers the two letters a, c");
  Alphabet ord(std::string{c, a});
  RewriteSystem rs = complete_or_throw({{u, v}}, ord);
  Kit k(ord, irr_language(rs));
  Word A(1, a), C(1, c);
  AutomaticStructure s;
  s.alphabet = ord;
  s.language = k.l;
  s.case_id = "W-21";
  s.provenance = "transcribed: c^i a^j normal forms";
  Fsa delta = minimize(diagonal(k.l, k.n));
  ExprPtr cc = k.p(C, C);
  s.multipliers[{a, Flavor::rr}] =
      k.in_l(expr::alt(expr::cat(expr::plus(cc), k.p("", A)), expr::cat(expr::star(cc), k.p(A, C))));
  s.multipliers[{c, Flavor::rr}] = k.in_l(
      expr::alt(expr::cat(expr::plus(cc), k.p("", C)), expr::cat(expr::star(cc), k.p(A, C + A))));
  ExprPtr ccl = k.p(C, C, Side::L);
  s.multipliers[{a, Flavor::ll}] =
      k.in_l(expr::alt(expr::cat(expr::cat(k.p("", C, Side::L), expr::star(ccl)), k.p(C, A, Side::L)),
                       expr::cat(expr::star(ccl), k.p(A, C, Side::L))),
             Side::L);
  s.multipliers[{c, Flavor::ll}] = k.in_l(expr::cat(k.p("", C, Side::L), k.d(k.l)), Side::L);
  s.multipliers[{kEpsKey, Flavor::rr}] = delta;
  s.multipliers[{kEpsKey, Flavor::ll}] = delta;
  fill_swaps(s, 2);
  s.prefix_equality = delta;
  return {s, plain_normal_form(rs)};
}

// Monoid cases work over B = {e} + A with the absorption rules.
struct MonoidSetup {
  MonoidEmbedding emb;
  RewriteSystem rs;
  Kit kit;
};

MonoidSetup monoid_setup(const Presentation& p, const Relation& r, const std::string& order, char e) {
  MonoidEmbedding emb = monoid_embedding(p.alphabet, {r}, e);
  Alphabet ord = ordered(emb.alphabet, order);
  RewriteSystem rs = complete_or_throw(emb.relations, ord);
  Fsa l = irr_language(rs);
  return {emb, rs, Kit(ord, l)};
}

char free_identity(const Alphabet& a) {
  for (char c : std::string("e1E0"))
    if (!a.contains(c)) return c;
  throw invalid_input("no free letter for the identity");
}

CatalogWitness empty_rhs_witness(const Presentation& p) {
  auto [u, v] = single_relation(p);
  if (!v.empty() || u.size() < 2) throw not_applicable("W-E: relation is not u = 1 with |u| >= 2");
  char e = free_identity(p.alphabet);
  std::string order(1, e);
  for (char c : p.alphabet.letters()) order += c;
  MonoidSetup ms = monoid_setup(p, {u, v}, order, e);
  // {u = e} with the absorption rules must already be complete.
  for (const auto& rule : ms.rs.rules)
    if (rule.lhs.find(e) == Word::npos && rule.lhs != u)
      throw not_applicable("W-E: u = 1 is not a complete basis");
  Kit& k = ms.kit;
  Word E(1, e);
  size_t n = u.size();
  Word head = u.substr(0, n - 1), tail = u.substr(1);
  AutomaticStructure s;
  s.alphabet = k.a;
  s.language = k.l;
  s.case_id = "W-E";
  s.provenance = "transcribed: u = 1 over the monoid alphabet";
  Fsa delta = minimize(diagonal(k.l, k.n));
  Fsa nonid = minimize(difference(k.l, k.lit(E)));
  for (char g : p.alphabet.letters()) {
    Word G(1, g);
    ExprPtr r = expr::alt(k.p(E, G), expr::cat(k.d(nonid), k.p("", G)));
    if (g == u.back()) {
      Fsa ctx = minimize(difference(nonid, lang::ending_in(k.a, {head})));
      r = expr::alt({k.p(E, G), expr::cat(k.d(ctx), k.p("", G)), expr::cat(k.d(k.ctx()), k.p(head, "")),
                     k.p(head, E)});
    }
    s.multipliers[{g, Flavor::rr}] = k.in_l(r);
    ExprPtr q = expr::alt(k.p(E, G, Side::L), expr::cat(k.p("", G, Side::L), k.d(nonid)));
    if (g == u.front()) {
      Fsa ctx = minimize(difference(nonid, lang::starting_with(k.a, {tail})));
      q = expr::alt({k.p(E, G, Side::L), expr::cat(k.p("", G, Side::L), k.d(ctx)),
                     expr::cat(k.p(tail, "", Side::L), k.d(k.ctx())), k.p(tail, E, Side::L)});
    }
    s.multipliers[{g, Flavor::ll}] = k.in_l(q, Side::L);
  }
  for (Flavor f : {Flavor::rr, Flavor::ll}) {
    s.multipliers[{kEpsKey, f}] = delta;
    s.multipliers[{e, f}] = delta;
  }
  fill_swaps(s, static_cast<int>(n));
  s.prefix_equality = delta;
  return {s, NormalForm{k.a, ms.rs, {}, false}};
}

CatalogWitness aba_one_witness(const Presentation& p) {
  auto [u, v] = single_relation(p);
  if (!v.empty() || u.size() != 3 || u[0] != u[2] || u[0] == u[1]) throw not_applicable("W-E3: relation is not aba = 1");
  if (p.alphabet.size() != 2) throw not_applicable("W-E3: the displayed structure covers the two letters a, b");
  char a = u[0], b = u[1];
  char e = free_identity(p.alphabet);
  MonoidSetup ms = monoid_setup(p, {u, v}, std::string{e, a, b}, e);
  Kit& k = ms.kit;
  Word A(1, a), B(1, b), E(1, e);
  AutomaticStructure s;
  s.alphabet = k.a;
  s.language = k.l;
  s.case_id = "W-E3";
  s.provenance = "transcribed: aba = 1 over the monoid alphabet";
  Fsa delta = minimize(diagonal(k.l, k.n));
  auto cut = [&](ExprPtr x, Side sd = Side::R) { return k.in_l(std::move(x), sd); };
  s.multipliers[{a, Flavor::rr}] =
      cut(expr::alt({k.p(E, A), expr::cat(k.d(k.ctx_not_ending({B, E})), k.p("", A)),
                     expr::cat(k.d(k.ctx()), k.p(A + B, "")), k.p(A + B, E),
                     expr::cat(k.d(k.ctx_not_ending({A})), k.p(B, A + B))}));
  s.multipliers[{b, Flavor::rr}] =
      cut(expr::alt({k.p(E, B), expr::cat(k.d(k.ctx_not_ending({A + A, E})), k.p("", B)),
                     expr::cat(k.d(k.ctx()), k.p(A + A, "")), k.p(A + A, E)}));
  Side L = Side::L;
  s.multipliers[{a, Flavor::ll}] =
      cut(expr::alt({k.p(E, A, L), expr::cat(k.p("", A, L), k.d(k.ctx_not_starting({A + B, B + A, E}))),
                     expr::cat(k.p(A + B, "", L), k.d(k.ctx())), k.p(A + B, E, L),
                     expr::cat(k.p(B + A, "", L), k.d(k.ctx()))}),
          L);
  Fsa not_a = minimize(difference(lang::any(k.a), lang::starting_with(k.a, {A})));
  s.multipliers[{b, Flavor::ll}] =
      cut(expr::alt({k.p(E, B, L), expr::cat(k.p("", B, L), k.d(k.ctx_not_starting({A, E}))),
                     expr::cat(k.p(A, A + B, L), k.d(not_a)), expr::cat(k.p(A + A, "", L), k.d(k.ctx())),
                     k.p(A + A, E, L)}),
          L);
  for (Flavor f : {Flavor::rr, Flavor::ll}) {
    s.multipliers[{kEpsKey, f}] = delta;
    s.multipliers[{e, f}] = delta;
  }
  fill_swaps(s, 3);
  s.prefix_equality = delta;
  return {s, NormalForm{k.a, ms.rs, {}, false}};
}

CatalogWitness cube_letter_witness(const Presentation& p) {
  auto [u, v] = single_relation(p);
  if (u.size() != 3 || v.size() != 1 || u[0] != u[2] || v[0] == u[0])
    throw not_applicable("W-31: relation is not aba = x or aaa = x");
  char a = u[0], b = u[1], x = v[0];
  Word A(1, a), B(1, b), X(1, x);
  AutomaticStructure s;
  s.case_id = "W-31";
  Alphabet ord = ordered(p.alphabet, std::string{x, a});
  RewriteSystem rs = complete_or_throw({{u, v}}, ord);
  Kit k(ord, irr_language(rs));
  s.alphabet = ord;
  s.language = k.l;
  auto plain = [&](char g) { return k.in_l(expr::cat(k.d(k.l), k.p("", Word(1, g)))); };
  if (a != b) {
    s.provenance = "transcribed: aba = x with abx = xba";
    Fsa c = k.ctx_not_ending({A + B});
    s.multipliers[{a, Flavor::rr}] =
        k.in_l(expr::alt(expr::cat(k.d(c), k.p("", A)), expr::cat(k.d(c), k.p(A + B, X))));
    if (x != b) {
      s.multipliers[{x, Flavor::rr}] =
          k.in_l(expr::alt(expr::cat(k.d(c), k.p("", X)), expr::cat(k.d(c), k.p(A + B, X + B + A))));
    } else {
      Fsa lhs = concat(concat(k.lit(A), star(k.lit(A))), k.lit(B));
      Fsa rhs = concat(concat(k.lit(B + B + A), star(k.lit(A))), epsilon_language(k.n));
      ExprPtr run = expr::raw(pair_product(lhs, rhs, k.n, Side::R, -1));
      s.multipliers[{x, Flavor::rr}] =
          k.in_l(expr::alt(expr::cat(k.d(c), k.p("", X)), expr::cat(k.d(k.ctx_not_ending({A})), run)));
    }
    for (char g : ord.letters())
      if (g != a && g != x) s.multipliers[{g, Flavor::rr}] = plain(g);
  } else {
    s.provenance = "transcribed: aaa = x with ax = xa";
    Fsa c1 = k.ctx_not_ending({A + A}), c2 = k.ctx_not_ending({A});
    s.multipliers[{a, Flavor::rr}] =
        k.in_l(expr::alt(expr::cat(k.d(c1), k.p("", A)), expr::cat(k.d(c2), k.p(A + A, X))));
    s.multipliers[{x, Flavor::rr}] = k.in_l(expr::alt({expr::cat(k.d(c2), k.p("", X)),
                                                       expr::cat(k.d(c2), k.p(A, X + A)),
                                                       expr::cat(k.d(c2), k.p(A + A, X + A + A))}));
    for (char g : ord.letters())
      if (g != a && g != x) s.multipliers[{g, Flavor::rr}] = plain(g);
  }
  s.multipliers[{kEpsKey, Flavor::rr}] = minimize(diagonal(k.l, k.n));
  s.prefix_equality = minimize(diagonal(k.l, k.n));
  return {s, plain_normal_form(rs)};
}

CatalogWitness padded_witness(const Presentation& p) {
  auto [u, v] = single_relation(p);
  auto pc = padding_case(u, v);
  if (!pc) throw not_applicable("W-32-gsm: no padding case for " + u + "=" + v);
  const Alphabet& a = p.alphabet;
  check_gs_single({u, v}, a, "W-32-gsm");
  RewriteSystem rs = complete_or_throw({{u, v}}, a);
  char e = free_identity(a);
  NormalForm nf = padded_normal_form(rs, *pc, e);
  Fsa kl = padded_language(nf);
  Kit k(nf.alphabet, kl);
  Word E(1, e), R(1, pc->run), pad = R + power(E, pc->k - 2);
  char x = v[0];
  AutomaticStructure s;
  s.alphabet = nf.alphabet;
  s.language = kl;
  s.case_id = "W-32-gsm";
  s.provenance = "transcribed: padded normal forms over the monoid alphabet; the multiplier by the rule letter is synthesized";
  Fsa delta = minimize(diagonal(kl, k.n));
  Fsa nonid = minimize(difference(kl, k.lit(E)));
  for (char g : a.letters()) {
    Word G(1, g);
    if (g == x) continue;
    if (g == pc->run) {
      Fsa tail = lang::ending_in(k.a, {power(R, pc->m), E});
      Fsa c1 = minimize(difference(nonid, tail));
      Fsa c2 = minimize(intersect(nonid, tail));
      s.multipliers[{g, Flavor::rr}] = k.in_l(
          expr::alt({k.p(E, G), expr::cat(k.d(c1), k.p("", G)), expr::cat(k.d(c2), k.p("", pad))}));
    } else {
      s.multipliers[{g, Flavor::rr}] = k.in_l(expr::alt(k.p(E, G), expr::cat(k.d(nonid), k.p("", G))));
    }
  }
  Synthesis sx = synthesize_multiplier(nf, kl, x, Flavor::rr);
  if (!sx.exact) throw not_applicable("W-32-gsm: multiplier synthesis failed: " + sx.failure);
  s.multipliers[{x, Flavor::rr}] = sx.automaton;
  s.multipliers[{kEpsKey, Flavor::rr}] = delta;
  s.multipliers[{e, Flavor::rr}] = delta;
  // Prefix equality: padding letters may be dropped from the end of a prefix.
  // The context ranges over every word before the padded block.
  Fsa no_e_tail = minimize(difference(kl, lang::ending_in(k.a, {E})));
  std::vector<ExprPtr> shorten;
  for (size_t j = 0; j + 2 <= pc->k; ++j) shorten.push_back(k.p(pad, R + power(E, j)));
  ExprPtr body = expr::cat(k.d(k.ctx()), expr::alt(shorten));
  Fsa pref = minimize(difference(lang::prefixes(kl), epsilon_language(k.n)));
  Fsa cut = eval_expr(expr::within(body, kl, pref), k.a);
  s.prefix_equality = minimize(union_of(union_of(pair_const(E, E, k.a, Side::R), diagonal(no_e_tail, k.n)), cut));
  return {s, nf};
}

}  // namespace

// ------------------------------------------------------------------ nonoverlap

NonoverlapCheck nonoverlap_conditions(const RewriteSystem& rs) {
  NonoverlapCheck c;
  for (size_t i = 0; i < rs.rules.size(); ++i)
    for (size_t j = 0; j < rs.rules.size(); ++j) {
      const Word& v = rs.rules[i].rhs;
      const Word& u = rs.rules[j].lhs;
      for (size_t t = 1; t <= std::min(v.size(), u.size()); ++t) {
        std::ostringstream os;
        os << "(i=" << i + 1 << ",j=" << j + 1 << ",t=" << t << ")";
        if (prefix_t(v, t) == suffix_t(u, t)) {
          if (c.prefix_ok) c.violation = os.str() + " " + show_word(prefix_t(v, t)) + " is a prefix of the right side and a suffix of the left side";
          c.prefix_ok = false;
          c.bi_ok = false;
        }
        if (suffix_t(v, t) == prefix_t(u, t) && c.bi_ok) {
          c.bi_ok = false;
          if (c.prefix_ok) c.violation = os.str() + " " + show_word(suffix_t(v, t)) + " is a suffix of the right side and a prefix of the left side";
        }
      }
    }
  return c;
}

AutomaticStructure construct_generic_nonoverlap(const RewriteSystem& rs) {
  if (rs.status != Completeness::complete || !rs.schemas.empty())
    throw contract_error("nonoverlap construction needs a finite complete basis");
  for (const auto& r : rs.rules)
    if (r.rhs.empty()) throw not_applicable("nonoverlap construction needs nonempty right sides");
  NonoverlapCheck chk = nonoverlap_conditions(rs);
  if (!chk.prefix_ok) throw not_applicable("nonoverlap condition fails at " + chk.violation);
  const Alphabet& a = rs.alphabet;
  Kit k(a, irr_language(rs));
  AutomaticStructure s;
  s.alphabet = a;
  s.language = k.l;
  s.case_id = "W-GEN";
  s.provenance = "transcribed: union formulas for nonoverlapping bases";
  Fsa delta = minimize(diagonal(k.l, k.n));
  s.multipliers[{kEpsKey, Flavor::rr}] = delta;
  for (char g : a.letters()) {
    Word G(1, g);
    std::vector<Word> heads;
    std::vector<ExprPtr> parts;
    for (const auto& r : rs.rules)
      if (r.lhs.back() == g) {
        Word h = r.lhs.substr(0, r.lhs.size() - 1);
        heads.push_back(h);
        parts.push_back(expr::cat(k.d(k.ctx()), k.p(h, r.rhs)));
      }
    if (heads.empty()) {
      s.multipliers[{g, Flavor::rr}] = k.in_l(expr::cat(k.d(k.l), k.p("", G)));
    } else {
      Fsa c = minimize(difference(k.l, lang::ending_in(a, heads)));
      parts.push_back(expr::cat(k.d(c), k.p("", G)));
      s.multipliers[{g, Flavor::rr}] = k.in_l(expr::alt(parts));
    }
  }
  int bound = max_imbalance(rs) + 1;
  if (chk.bi_ok) {
    s.multipliers[{kEpsKey, Flavor::ll}] = delta;
    for (char g : a.letters()) {
      Word G(1, g);
      std::vector<Word> tails;
      std::vector<ExprPtr> parts;
      for (const auto& r : rs.rules)
        if (r.lhs.front() == g) {
          Word t = r.lhs.substr(1);
          tails.push_back(t);
          parts.push_back(expr::cat(k.p(t, r.rhs, Side::L), k.d(k.ctx())));
        }
      if (tails.empty()) {
        s.multipliers[{g, Flavor::ll}] = k.in_l(expr::cat(k.p("", G, Side::L), k.d(k.l)), Side::L);
      } else {
        Fsa c = minimize(difference(k.l, lang::starting_with(a, tails)));
        parts.push_back(expr::cat(k.p("", G, Side::L), k.d(c)));
        s.multipliers[{g, Flavor::ll}] = k.in_l(expr::alt(parts), Side::L);
      }
    }
    fill_swaps(s, bound);
  }
  s.prefix_equality = delta;
  return s;
}

// ------------------------------------------------------------------ padding gsm

std::optional<PaddingCase> padding_case(const Word& u, const Word& v) {
  if (v.size() != 2 || u.size() < 2) return std::nullopt;
  char x = v[0], y = v[1];
  size_t k = u.size();
  if (u.back() != x) return std::nullopt;
  if (u.substr(k - 2) == v) return std::nullopt;
  if (u == power(Word(1, y), k - 1) + x) return std::nullopt;
  Word w = u.substr(0, k - 1);
  auto max_run = [](const Word& s, char c) {
    size_t best = 0, cur = 0;
    for (char d : s) {
      cur = d == c ? cur + 1 : 0;
      best = std::max(best, cur);
    }
    return best;
  };
  if (x == y) {
    if (is_factor(u, w + w)) return std::nullopt;
    return PaddingCase{x, max_run(w, x), k};
  }
  if (u[0] != y) {
    if (is_factor(u, w + w)) return std::nullopt;
    return PaddingCase{y, max_run(w, y), k};
  }
  size_t t = 0;
  while (t < w.size() && w[t] == y) ++t;
  Word z = w;  // y^t u'
  if (is_factor(u, z + z)) return std::nullopt;
  return PaddingCase{y, max_run(z + z, y), k};
}

Gsm padding_gsm(const Fsa& l, const Alphabet& a, const Alphabet& b, const PaddingCase& pc) {
  Fsa d = minimize(l);
  int ns = d.num_states();
  int m = static_cast<int>(pc.m);
  Gsm g;
  g.nin = static_cast<int>(a.size());
  g.nout = static_cast<int>(b.size());
  auto id = [&](int s, int i) { return s * (m + 1) + i; };
  for (int s = 0; s < ns; ++s)
    for (int i = 0; i <= m; ++i) g.add_state(d.accepting[s]);
  g.initial = id(d.initial.at(0), 0);
  int run = a.index(pc.run);
  auto e = b.identity();
  if (!e) throw contract_error("padding gsm needs an identity letter in the output alphabet");
  Symbols padded{b.index(pc.run)};
  for (size_t j = 0; j + 2 < pc.k; ++j) padded.push_back(b.index(*e));
  for (int s = 0; s < ns; ++s)
    for (int i = 0; i <= m; ++i)
      for (int x = 0; x < g.nin; ++x) {
        int t = d.next(s, x);
        if (t < 0) continue;
        if (x != run) g.add_edge(id(s, i), x, id(t, 0), {b.index(a.letter(x))});
        else if (i < m) g.add_edge(id(s, i), x, id(t, i + 1), {b.index(pc.run)});
        else g.add_edge(id(s, i), x, id(t, m), padded);
      }
  return g;
}

NormalForm padded_normal_form(const RewriteSystem& rs, const PaddingCase& pc, char e) {
  NormalForm nf = identity_normal_form(rs, e);
  nf.gsm = padding_gsm(irr_language(rs), rs.alphabet, nf.alphabet, pc);
  return nf;
}

Fsa padded_language(const NormalForm& nf) {
  if (!nf.gsm || !nf.identity()) throw contract_error("padded language needs a gsm normal form");
  Fsa img = gsm_image(*nf.gsm, irr_language(nf.rs));
  return minimize(union_of(img, lang::lit(nf.alphabet, Word(1, *nf.identity()))));
}

// ------------------------------------------------------------------ dispatch

std::vector<CatalogEntry> catalog_cases() {
  return {
      {"W-GEN", "nonoverlapping bases: union formulas, all flavors when both overlap conditions hold"},
      {"W-AKB", "w x = x: runs of w before x collapse"},
      {"W-HOM2", "a^2 = c^2 with basis {aa=cc, acc=cca}"},
      {"W-21", "aa = c with normal forms c^i a^j"},
      {"W-E", "u = 1 where u = 1 alone is a complete basis"},
      {"W-E3", "aba = 1 with basis {aba=e, aab=e, ba=ab}"},
      {"W-31", "aba = x and aaa = x"},
      {"W-32-gsm", "u = xy handled through padded normal forms of the monoid"},
  };
}

CatalogWitness construct_from_catalog(const std::string& case_id, const Presentation& p) {
  if (case_id == "W-GEN") return nonoverlap_witness(p);
  if (case_id == "W-AKB") return akb_witness(p);
  if (case_id == "W-HOM2") return hom2_witness(p);
  if (case_id == "W-21") return square_witness(p);
  if (case_id == "W-E") return empty_rhs_witness(p);
  if (case_id == "W-E3") return aba_one_witness(p);
  if (case_id == "W-31") return cube_letter_witness(p);
  if (case_id == "W-32-gsm") return padded_witness(p);
  throw not_applicable("unknown catalog case " + case_id);
}

}  // namespace osr
