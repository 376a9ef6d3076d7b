#include "osr/rewriting.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "osr/errors.hpp"

namespace osr {

Rule RuleSchema::instance(size_t i) const {
  return {lhs_pre + power(lhs_pump, i) + lhs_suf, rhs_pre + power(rhs_pump, i) + rhs_suf};
}

const char* completeness_name(Completeness c) {
  switch (c) {
    case Completeness::complete: return "complete";
    case Completeness::bounded_incomplete: return "bounded_incomplete";
    default: return "unknown";
  }
}

Rule orient(const Word& u, const Word& v, const Alphabet& ord) {
  check_word(u, ord);
  check_word(v, ord);
  if (u.empty() && v.empty()) throw invalid_input("cannot orient 1 = 1");
  if (u == v) throw trivial_relation("trivial relation " + show_word(u) + " = " + show_word(v));
  return deglex_less(v, u, ord) ? Rule{u, v} : Rule{v, u};
}

namespace {

struct Match {
  size_t pos = 0;
  size_t len = 0;
  Word rhs;
};

// Longest schema instance starting at pos, if any.
std::optional<Match> match_schema(const RuleSchema& s, const Word& w, size_t pos) {
  if (w.compare(pos, s.lhs_pre.size(), s.lhs_pre) != 0 || pos + s.lhs_pre.size() > w.size())
    return std::nullopt;
  size_t at = pos + s.lhs_pre.size();
  size_t k = 0;
  const size_t q = s.lhs_pump.size();
  while (at + (k + 1) * q <= w.size() && w.compare(at + k * q, q, s.lhs_pump) == 0) ++k;
  for (size_t i = k + 1; i-- > s.min_i;) {
    size_t end = at + i * q;
    if (end + s.lhs_suf.size() <= w.size() && w.compare(end, s.lhs_suf.size(), s.lhs_suf) == 0) {
      Rule r = s.instance(i);
      return Match{pos, r.lhs.size(), r.rhs};
    }
  }
  return std::nullopt;
}

std::optional<Match> leftmost(const RewriteSystem& rs, const Word& w) {
  for (size_t pos = 0; pos < w.size(); ++pos) {
    std::optional<Match> best;
    for (const auto& r : rs.rules)
      if (r.lhs.size() <= w.size() - pos && (!best || r.lhs.size() > best->len) &&
          w.compare(pos, r.lhs.size(), r.lhs) == 0)
        best = Match{pos, r.lhs.size(), r.rhs};
    for (const auto& s : rs.schemas) {
      auto m = match_schema(s, w, pos);
      if (m && (!best || m->len > best->len)) best = m;
    }
    if (best) return best;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Word> RewriteSystem::step(const Word& w) const {
  auto m = leftmost(*this, w);
  if (!m) return std::nullopt;
  return w.substr(0, m->pos) + m->rhs + w.substr(m->pos + m->len);
}

Word RewriteSystem::reduce(const Word& w) const {
  Word cur = w;
  while (auto m = leftmost(*this, cur)) cur.replace(m->pos, m->len, m->rhs);
  return cur;
}

bool RewriteSystem::irreducible(const Word& w) const { return !leftmost(*this, w); }

std::string RewriteSystem::str() const {
  std::ostringstream os;
  for (const auto& r : rules) os << show_word(r.lhs) << " -> " << show_word(r.rhs) << "\n";
  for (const auto& s : schemas)
    os << show_word(s.lhs_pre) << "(" << s.lhs_pump << ")^i" << s.lhs_suf << " -> "
       << s.rhs_pre << "(" << s.rhs_pump << ")^i" << s.rhs_suf << "  i>=" << s.min_i << "\n";
  return os.str();
}

std::vector<Composition> compositions(const Rule& r1, const Rule& r2) {
  std::vector<Composition> out;
  const Word &l1 = r1.lhs, &l2 = r2.lhs;
  // l1 = a.x, l2 = x.b with x nonempty proper
  for (size_t k = 1; k < std::min(l1.size(), l2.size()) + 1; ++k) {
    if (k == l1.size() && k == l2.size()) continue;
    if (k >= l1.size() || k >= l2.size()) continue;
    if (l1.compare(l1.size() - k, k, l2, 0, k) != 0) continue;
    Word a = l1.substr(0, l1.size() - k), b = l2.substr(k);
    out.push_back({l1 + b, r1.rhs + b, a + r2.rhs});
  }
  // l1 = a.l2.b
  if (!(r1 == r2)) {
    for (size_t pos = 0; pos + l2.size() <= l1.size(); ++pos)
      if (l1.compare(pos, l2.size(), l2) == 0)
        out.push_back({l1, r1.rhs, l1.substr(0, pos) + r2.rhs + l1.substr(pos + l2.size())});
  }
  return out;
}

namespace {

// Rule sets can be large during completion; this is a plain leftmost reducer
// over the active rules.
class Completer {
 public:
  Completer(const Alphabet& ord, const CompletionLimits& lim) : ord_(ord), lim_(lim) {}

  void add_relation(const Word& u, const Word& v) { pending_.emplace_back(u, v); }

  void run() {
    drain_pending();
    while (!pairs_.empty() && !stop_) {
      auto [i, j] = pairs_.front();
      pairs_.pop_front();
      if (!active_[i] || !active_[j]) continue;
      for (const auto& c : compositions(rules_[i], rules_[j])) {
        add_relation(c.left, c.right);
        if (!drain_pending()) break;
      }
    }
  }

  bool hit_bound() const { return hit_bound_; }

  std::vector<Rule> rules() const {
    std::vector<Rule> r;
    for (size_t i = 0; i < rules_.size(); ++i)
      if (active_[i]) r.push_back(rules_[i]);
    return r;
  }

 private:
  Word reduce(const Word& w) const {
    Word cur = w;
    for (;;) {
      bool changed = false;
      for (size_t pos = 0; pos < cur.size() && !changed; ++pos) {
        size_t best = SIZE_MAX;
        for (size_t i = 0; i < rules_.size(); ++i) {
          if (!active_[i]) continue;
          const Word& l = rules_[i].lhs;
          if (l.size() <= cur.size() - pos && cur.compare(pos, l.size(), l) == 0 &&
              (best == SIZE_MAX || l.size() > rules_[best].lhs.size()))
            best = i;
        }
        if (best != SIZE_MAX) {
          cur.replace(pos, rules_[best].lhs.size(), rules_[best].rhs);
          changed = true;
        }
      }
      if (!changed) return cur;
    }
  }

  // Returns false once a limit stops the completion.
  bool drain_pending() {
    while (!pending_.empty()) {
      auto [u, v] = pending_.front();
      pending_.pop_front();
      Word x = reduce(u), y = reduce(v);
      if (x == y) continue;
      Rule r = orient(x, y, ord_);
      if (r.lhs.size() > lim_.max_len) {
        hit_bound_ = true;
        continue;
      }
      if (count_active() >= lim_.max_rules) {
        hit_bound_ = true;
        stop_ = true;
        return false;
      }
      size_t id = rules_.size();
      rules_.push_back(r);
      active_.push_back(true);
      for (size_t k = 0; k < id; ++k) {
        if (!active_[k]) continue;
        if (is_factor(r.lhs, rules_[k].lhs)) {
          active_[k] = false;
          pending_.emplace_back(rules_[k].lhs, rules_[k].rhs);
        } else {
          rules_[k].rhs = reduce(rules_[k].rhs);
        }
      }
      for (size_t k = 0; k <= id; ++k)
        if (active_[k]) {
          pairs_.emplace_back(id, k);
          if (k != id) pairs_.emplace_back(k, id);
        }
    }
    return true;
  }

  size_t count_active() const { return static_cast<size_t>(std::count(active_.begin(), active_.end(), true)); }

  Alphabet ord_;
  CompletionLimits lim_;
  std::vector<Rule> rules_;
  std::vector<bool> active_;
  std::deque<Relation> pending_;
  std::deque<std::pair<size_t, size_t>> pairs_;
  bool hit_bound_ = false;
  bool stop_ = false;
};

struct SchemaKey {
  Word p, q, r, p2, s, r2;
  auto operator<=>(const SchemaKey&) const = default;
};

// All ways to write w as p q^i r with i >= 1 and |q| <= 3.
std::vector<std::tuple<Word, Word, Word, size_t>> pump_splits(const Word& w, bool allow_empty_pump) {
  std::vector<std::tuple<Word, Word, Word, size_t>> out;
  for (size_t pre = 0; pre <= w.size(); ++pre)
    for (size_t q = 1; q <= 3; ++q)
      for (size_t i = 1; pre + i * q <= w.size(); ++i) {
        Word pump = w.substr(pre, q);
        if (w.compare(pre + (i - 1) * q, q, pump) != 0) break;
        out.emplace_back(w.substr(0, pre), pump, w.substr(pre + i * q), i);
      }
  if (allow_empty_pump) out.emplace_back(w, Word{}, Word{}, 0);
  return out;
}

std::optional<RuleSchema> detect_schema(const std::vector<Rule>& rules, const Alphabet& ord) {
  std::map<SchemaKey, std::set<size_t>> seen;
  for (const auto& r : rules) {
    std::set<SchemaKey> keys_here;
    auto ls = pump_splits(r.lhs, false);
    auto rs = pump_splits(r.rhs, true);
    for (const auto& [p, q, x, i] : ls)
      for (const auto& [p2, s, x2, j] : rs) {
        if (j != 0 && j != i) continue;
        SchemaKey k{p, q, x, p2, s, x2};
        if (j == 0) {
          // the rhs need not pump: s = eps
          k.p2 = r.rhs;
          k.s.clear();
          k.r2.clear();
        }
        if (keys_here.insert(k).second) seen[k].insert(i);
      }
  }
  std::optional<RuleSchema> best;
  size_t best_count = 0, best_size = 0;
  for (const auto& [k, is] : seen) {
    // longest run of consecutive exponents
    size_t run = 0, start = 0, best_run = 0, best_start = 0;
    size_t prev = 0;
    for (size_t i : is) {
      if (run > 0 && i == prev + 1) {
        ++run;
      } else {
        run = 1;
        start = i;
      }
      prev = i;
      if (run > best_run) {
        best_run = run;
        best_start = start;
      }
    }
    if (best_run < 3) continue;
    if (k.s.empty() && k.p2.size() + k.r2.size() == 0) continue;
    RuleSchema cand{k.p, k.q, k.r, k.p2, k.s, k.r2, best_start};
    bool ok = true;
    for (size_t i = best_start; i <= best_start + 5 && ok; ++i) {
      Rule inst = cand.instance(i);
      ok = deglex_less(inst.rhs, inst.lhs, ord);
    }
    if (!ok) continue;
    size_t size = k.p.size() + k.r.size() + k.p2.size() + k.r2.size();
    if (best_run > best_count || (best_run == best_count && size < best_size)) {
      best = cand;
      best_count = best_run;
      best_size = size;
    }
  }
  return best;
}

bool is_instance(const RuleSchema& s, const Rule& r) {
  auto m = match_schema(s, r.lhs, 0);
  return m && m->len == r.lhs.size() && m->rhs == r.rhs;
}

}  // namespace

std::vector<Composition> audit_compositions(const RewriteSystem& rs, size_t span) {
  std::vector<Rule> all = rs.rules;
  for (const auto& s : rs.schemas)
    for (size_t i = s.min_i; i <= s.min_i + span; ++i) all.push_back(s.instance(i));
  std::vector<Composition> bad;
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : compositions(a, b))
        if (rs.reduce(c.left) != rs.reduce(c.right)) bad.push_back(c);
  return bad;
}

RewriteSystem shirshov_complete(const std::vector<Relation>& relations, const Alphabet& ord,
                                const CompletionLimits& limits) {
  Completer c(ord, limits);
  for (const auto& [u, v] : relations) {
    orient(u, v, ord);
    c.add_relation(u, v);
  }
  c.run();
  RewriteSystem rs{ord, c.rules(), {}, Completeness::complete};
  if (!c.hit_bound()) return rs;
  rs.status = Completeness::bounded_incomplete;
  if (!limits.detect_schemas) return rs;
  auto schema = detect_schema(rs.rules, ord);
  if (!schema) return rs;
  RewriteSystem with{ord, {}, {*schema}, Completeness::bounded_incomplete};
  for (const auto& r : rs.rules)
    if (!is_instance(*schema, r)) with.rules.push_back(r);
  if (audit_compositions(with, limits.audit_span).empty()) with.status = Completeness::complete;
  return with;
}

Fsa leading_language(const RewriteSystem& rs) {
  const Alphabet& a = rs.alphabet;
  int n = static_cast<int>(a.size());
  auto lit = [&](const Word& w) {
    Symbols s;
    for (char c : w) s.push_back(a.index(c));
    return word_language(n, s);
  };
  Fsa out = empty_language(n);
  for (const auto& r : rs.rules) out = union_of(out, lit(r.lhs));
  for (const auto& s : rs.schemas) {
    Fsa pump = lit(power(s.lhs_pump, s.min_i));
    Fsa part = concat(concat(lit(s.lhs_pre), concat(pump, star(lit(s.lhs_pump)))), lit(s.lhs_suf));
    out = union_of(out, part);
  }
  return minimize(out);
}

Fsa irr_language(const RewriteSystem& rs, std::optional<char> identity) {
  int n = static_cast<int>(rs.alphabet.size());
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  Fsa any = universal(n);
  Fsa bad = concat(concat(any, leading_language(rs)), any);
  Fsa l = difference(plus(symbol_set(n, all)), bad);
  if (identity) l = union_of(l, word_language(n, {rs.alphabet.index(*identity)}));
  return minimize(l);
}

namespace {

void neighbours(const Word& w, const std::vector<Relation>& rel, size_t cap,
                const std::function<void(Word)>& emit) {
  for (const auto& [x0, y0] : rel)
    for (int dir = 0; dir < 2; ++dir) {
      const Word& x = dir ? y0 : x0;
      const Word& y = dir ? x0 : y0;
      if (w.size() - std::min(w.size(), x.size()) + y.size() > cap) continue;
      if (x.size() > w.size()) continue;
      for (size_t pos = 0; pos + x.size() <= w.size(); ++pos)
        if (w.compare(pos, x.size(), x) == 0) emit(w.substr(0, pos) + y + w.substr(pos + x.size()));
    }
}

}  // namespace

CongruenceAnswer congruence_equal(const Word& w1, const Word& w2, const std::vector<Relation>& rel,
                                  size_t cap) {
  if (w1 == w2) return CongruenceAnswer::equal;
  std::unordered_map<Word, int> side{{w1, 0}, {w2, 1}};
  std::deque<Word> q[2] = {{w1}, {w2}};
  while (!q[0].empty() || !q[1].empty()) {
    int s = q[0].empty() ? 1 : q[1].empty() ? 0 : (q[0].size() <= q[1].size() ? 0 : 1);
    size_t layer = q[s].size();
    bool met = false;
    for (size_t k = 0; k < layer && !met; ++k) {
      Word w = q[s].front();
      q[s].pop_front();
      neighbours(w, rel, cap, [&](Word x) {
        if (met) return;
        auto [it, fresh] = side.try_emplace(x, s);
        if (fresh) q[s].push_back(std::move(x));
        else if (it->second != s) met = true;
      });
    }
    if (met) return CongruenceAnswer::equal;
  }
  return CongruenceAnswer::distinct_up_to_cap;
}

std::vector<int> congruence_classes(const Alphabet& a, const std::vector<Relation>& rel,
                                    size_t max_len, size_t cap) {
  auto words = words_up_to(a, max_len);
  std::unordered_map<Word, int> label;
  std::vector<int> out;
  out.reserve(words.size());
  int next = 0;
  for (const auto& w : words) {
    auto it = label.find(w);
    if (it != label.end()) {
      out.push_back(it->second);
      continue;
    }
    int id = next++;
    label.emplace(w, id);
    std::deque<Word> q{w};
    while (!q.empty()) {
      Word x = q.front();
      q.pop_front();
      neighbours(x, rel, cap, [&](Word y) {
        if (label.try_emplace(y, id).second) q.push_back(std::move(y));
      });
    }
    out.push_back(id);
  }
  return out;
}

MonoidEmbedding monoid_embedding(const Alphabet& a, const std::vector<Relation>& rel, char e) {
  MonoidEmbedding m{a.with_identity(e, true), {}};
  for (const auto& [u, v] : rel)
    m.relations.emplace_back(u.empty() ? Word(1, e) : u, v.empty() ? Word(1, e) : v);
  for (char x : m.alphabet.letters()) {
    if (x == e) continue;
    m.relations.emplace_back(Word{x, e}, Word{x});
    m.relations.emplace_back(Word{e, x}, Word{x});
  }
  m.relations.emplace_back(Word{e, e}, Word{e});
  return m;
}

namespace {

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<Alphabet> gens;
  std::vector<Relation> rels;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto where = " (line " + std::to_string(lineno) + ")";
    if (line.rfind("gens:", 0) == 0) {
      if (gens) throw invalid_input("duplicate gens line" + where);
      gens = Alphabet::parse(trim(line.substr(5)));
      if (gens->size() == 0) throw invalid_input("empty generating set" + where);
    } else if (line.rfind("rel:", 0) == 0) {
      if (!gens) throw invalid_input("rel before gens" + where);
      std::string body = line.substr(4);
      auto eq = body.find('=');
      if (eq == std::string::npos || body.find('=', eq + 1) != std::string::npos)
        throw invalid_input("relation must have exactly one '='" + where);
      Word u = parse_word(trim(body.substr(0, eq))), v = parse_word(trim(body.substr(eq + 1)));
      check_word(u, *gens);
      check_word(v, *gens);
      rels.emplace_back(u, v);
    } else {
      throw invalid_input("unrecognised line" + where + ": " + line);
    }
  }
  if (!gens) throw invalid_input("missing gens line");
  return {*gens, rels};
}

std::string format_presentation(const Presentation& p) {
  std::string s = "gens: " + p.alphabet.str() + "\n";
  for (const auto& [u, v] : p.relations) s += "rel: " + show_word(u) + " = " + show_word(v) + "\n";
  return s;
}

}  // namespace osr
