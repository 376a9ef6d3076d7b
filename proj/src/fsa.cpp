#include "osr/fsa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "osr/errors.hpp"

namespace osr {

int Fsa::add_state(bool accept) {
  out.emplace_back();
  accepting.push_back(accept ? 1 : 0);
  return num_states() - 1;
}

void Fsa::add_trans(int src, int sym, int dst) {
  if (src < 0 || src >= num_states() || dst < 0 || dst >= num_states())
    throw invalid_input("transition endpoint is not a state");
  if (sym != EPS && (sym < 0 || sym >= nsym)) throw invalid_input("symbol outside domain");
  out[src].emplace_back(sym, dst);
}

bool Fsa::is_deterministic() const {
  if (initial.size() != 1) return false;
  std::vector<char> seen(nsym);
  for (const auto& edges : out) {
    std::fill(seen.begin(), seen.end(), 0);
    for (auto [s, d] : edges) {
      if (s == EPS || seen[s]) return false;
      seen[s] = 1;
    }
  }
  return true;
}

int Fsa::next(int state, int sym) const {
  for (auto [s, d] : out[state])
    if (s == sym) return d;
  return -1;
}

Fsa empty_language(int nsym) {
  Fsa m(nsym);
  m.initial.push_back(m.add_state(false));
  return m;
}

Fsa epsilon_language(int nsym) {
  Fsa m(nsym);
  m.initial.push_back(m.add_state(true));
  return m;
}

Fsa universal(int nsym) {
  Fsa m(nsym);
  int s = m.add_state(true);
  m.initial.push_back(s);
  for (int a = 0; a < nsym; ++a) m.add_trans(s, a, s);
  return m;
}

Fsa word_language(int nsym, const Symbols& w) {
  Fsa m(nsym);
  int s = m.add_state(w.empty());
  m.initial.push_back(s);
  for (size_t i = 0; i < w.size(); ++i) {
    int t = m.add_state(i + 1 == w.size());
    m.add_trans(s, w[i], t);
    s = t;
  }
  return m;
}

Fsa symbol_set(int nsym, const std::vector<int>& syms) {
  Fsa m(nsym);
  int s = m.add_state(false);
  int t = m.add_state(true);
  m.initial.push_back(s);
  for (int a : syms) m.add_trans(s, a, t);
  return m;
}

namespace {

void close(const Fsa& m, std::vector<int>& set) {
  std::vector<char> in(m.num_states());
  for (int s : set) in[s] = 1;
  for (size_t i = 0; i < set.size(); ++i)
    for (auto [sym, d] : m.out[set[i]])
      if (sym == EPS && !in[d]) {
        in[d] = 1;
        set.push_back(d);
      }
  std::sort(set.begin(), set.end());
}

void check_domain(const Fsa& a, const Fsa& b) {
  if (a.nsym != b.nsym) throw invalid_input("automata over different symbol domains");
}

// Complete DFA as a flat table.
struct Table {
  int nsym = 0;
  int start = 0;
  std::vector<int> delta;
  std::vector<char> acc;
  int size() const { return static_cast<int>(acc.size()); }
  int at(int s, int a) const { return delta[static_cast<size_t>(s) * nsym + a]; }
};

Table table_of(const Fsa& m) {
  Fsa d = m.is_deterministic() ? m : determinize(m);
  Table t;
  t.nsym = d.nsym;
  t.start = d.initial[0];
  int n = d.num_states();
  t.acc = d.accepting;
  t.delta.assign(static_cast<size_t>(n) * d.nsym, -1);
  for (int s = 0; s < n; ++s)
    for (auto [sym, dst] : d.out[s]) t.delta[static_cast<size_t>(s) * d.nsym + sym] = dst;
  bool complete = std::find(t.delta.begin(), t.delta.end(), -1) == t.delta.end();
  if (!complete) {
    int sink = n;
    t.acc.push_back(0);
    t.delta.resize(static_cast<size_t>(n + 1) * d.nsym, sink);
    for (auto& x : t.delta)
      if (x < 0) x = sink;
  }
  return t;
}

Fsa fsa_of(const Table& t) {
  Fsa m(t.nsym);
  for (int s = 0; s < t.size(); ++s) m.add_state(t.acc[s]);
  for (int s = 0; s < t.size(); ++s)
    for (int a = 0; a < t.nsym; ++a) m.out[s].emplace_back(a, t.at(s, a));
  m.initial.push_back(t.start);
  return m;
}

Symbols path_to(const std::vector<std::pair<int, int>>& parent, int node) {
  Symbols w;
  while (parent[node].first >= 0) {
    w.push_back(parent[node].second);
    node = parent[node].first;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

// BFS over the product of two complete tables for the first pair satisfying pred.
template <class Pred>
std::optional<Symbols> product_search(const Table& a, const Table& b, Pred pred) {
  int nb = b.size();
  auto id = [nb](int x, int y) { return x * nb + y; };
  std::vector<std::pair<int, int>> parent(static_cast<size_t>(a.size()) * nb, {-2, -1});
  std::deque<int> q;
  int s0 = id(a.start, b.start);
  parent[s0] = {-1, -1};
  q.push_back(s0);
  while (!q.empty()) {
    int cur = q.front();
    q.pop_front();
    int x = cur / nb, y = cur % nb;
    if (pred(a.acc[x], b.acc[y])) return path_to(parent, cur);
    for (int s = 0; s < a.nsym; ++s) {
      int nxt = id(a.at(x, s), b.at(y, s));
      if (parent[nxt].first == -2) {
        parent[nxt] = {cur, s};
        q.push_back(nxt);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool accepts(const Fsa& m, const Symbols& w) {
  std::vector<int> cur = m.initial;
  close(m, cur);
  for (int sym : w) {
    if (sym < 0 || sym >= m.nsym) throw invalid_input("symbol outside domain");
    std::vector<int> nxt;
    std::vector<char> in(m.num_states());
    for (int s : cur)
      for (auto [a, d] : m.out[s])
        if (a == sym && !in[d]) {
          in[d] = 1;
          nxt.push_back(d);
        }
    close(m, nxt);
    cur.swap(nxt);
    if (cur.empty()) return false;
  }
  for (int s : cur)
    if (m.accepting[s]) return true;
  return false;
}

Fsa union_of(const Fsa& a, const Fsa& b) {
  check_domain(a, b);
  Fsa m = a;
  int off = m.num_states();
  for (int s = 0; s < b.num_states(); ++s) m.add_state(b.accepting[s]);
  for (int s = 0; s < b.num_states(); ++s)
    for (auto [sym, d] : b.out[s]) m.out[s + off].emplace_back(sym, d + off);
  for (int s : b.initial) m.initial.push_back(s + off);
  return m;
}

Fsa intersect(const Fsa& a0, const Fsa& b0) {
  check_domain(a0, b0);
  Fsa a = remove_epsilon(a0), b = remove_epsilon(b0);
  Fsa m(a.nsym);
  std::map<std::pair<int, int>, int> ids;
  std::deque<std::pair<int, int>> q;
  auto get = [&](int x, int y) {
    auto [it, fresh] = ids.try_emplace({x, y}, 0);
    if (fresh) {
      it->second = m.add_state(a.accepting[x] && b.accepting[y]);
      q.emplace_back(x, y);
    }
    return it->second;
  };
  for (int x : a.initial)
    for (int y : b.initial) m.initial.push_back(get(x, y));
  std::vector<std::vector<int>> bsucc(static_cast<size_t>(b.num_states()) * b.nsym);
  for (int y = 0; y < b.num_states(); ++y)
    for (auto [sym, d] : b.out[y]) bsucc[static_cast<size_t>(y) * b.nsym + sym].push_back(d);
  while (!q.empty()) {
    auto [x, y] = q.front();
    q.pop_front();
    int src = ids[{x, y}];
    for (auto [sym, dx] : a.out[x])
      for (int dy : bsucc[static_cast<size_t>(y) * b.nsym + sym]) {
        int dst = get(dx, dy);
        m.out[src].emplace_back(sym, dst);
      }
  }
  if (m.initial.empty()) return empty_language(a.nsym);
  return m;
}

Fsa complement(const Fsa& m) {
  Table t = table_of(m);
  for (auto& x : t.acc) x = !x;
  return fsa_of(t);
}

Fsa difference(const Fsa& a, const Fsa& b) {
  check_domain(a, b);
  return intersect(a, complement(b));
}

Fsa concat(const Fsa& a, const Fsa& b) {
  check_domain(a, b);
  Fsa m = a;
  int off = m.num_states();
  for (int s = 0; s < b.num_states(); ++s) m.add_state(b.accepting[s]);
  for (int s = 0; s < b.num_states(); ++s)
    for (auto [sym, d] : b.out[s]) m.out[s + off].emplace_back(sym, d + off);
  for (int s = 0; s < off; ++s)
    if (m.accepting[s]) {
      m.accepting[s] = 0;
      for (int i : b.initial) m.out[s].emplace_back(EPS, i + off);
    }
  return m;
}

Fsa star(const Fsa& a) {
  Fsa m = a;
  int s0 = m.add_state(true);
  for (int i : a.initial) m.out[s0].emplace_back(EPS, i);
  for (int s = 0; s < a.num_states(); ++s)
    if (a.accepting[s]) m.out[s].emplace_back(EPS, s0);
  m.initial = {s0};
  return m;
}

Fsa plus(const Fsa& a) { return concat(a, star(a)); }

Fsa reverse(const Fsa& a) {
  Fsa m(a.nsym);
  for (int s = 0; s < a.num_states(); ++s) m.add_state(false);
  for (int s = 0; s < a.num_states(); ++s)
    for (auto [sym, d] : a.out[s]) m.out[d].emplace_back(sym, s);
  for (int s : a.initial) m.accepting[s] = 1;
  for (int s = 0; s < a.num_states(); ++s)
    if (a.accepting[s]) m.initial.push_back(s);
  if (m.initial.empty()) return empty_language(a.nsym);
  return m;
}

Fsa remove_epsilon(const Fsa& a) {
  bool any = false;
  for (const auto& e : a.out)
    for (auto [sym, d] : e)
      if (sym == EPS) any = true;
  if (!any) return a;
  Fsa m(a.nsym);
  for (int s = 0; s < a.num_states(); ++s) m.add_state(false);
  for (int s = 0; s < a.num_states(); ++s) {
    std::vector<int> cl{s};
    close(a, cl);
    for (int c : cl) {
      if (a.accepting[c]) m.accepting[s] = 1;
      for (auto [sym, d] : a.out[c])
        if (sym != EPS) m.out[s].emplace_back(sym, d);
    }
    auto& e = m.out[s];
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
  }
  m.initial = a.initial;
  return trim(m);
}

Fsa trim(const Fsa& a) {
  int n = a.num_states();
  std::vector<char> fwd(n), bwd(n);
  std::vector<int> stack;
  for (int s : a.initial)
    if (!fwd[s]) {
      fwd[s] = 1;
      stack.push_back(s);
    }
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    for (auto [sym, d] : a.out[s])
      if (!fwd[d]) {
        fwd[d] = 1;
        stack.push_back(d);
      }
  }
  std::vector<std::vector<int>> rev(n);
  for (int s = 0; s < n; ++s)
    for (auto [sym, d] : a.out[s]) rev[d].push_back(s);
  for (int s = 0; s < n; ++s)
    if (a.accepting[s]) {
      bwd[s] = 1;
      stack.push_back(s);
    }
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    for (int p : rev[s])
      if (!bwd[p]) {
        bwd[p] = 1;
        stack.push_back(p);
      }
  }
  std::vector<int> id(n, -1);
  Fsa m(a.nsym);
  for (int s = 0; s < n; ++s)
    if (fwd[s] && bwd[s]) id[s] = m.add_state(a.accepting[s]);
  for (int s = 0; s < n; ++s)
    if (id[s] >= 0)
      for (auto [sym, d] : a.out[s])
        if (id[d] >= 0) m.out[id[s]].emplace_back(sym, id[d]);
  for (int s : a.initial)
    if (id[s] >= 0) m.initial.push_back(id[s]);
  if (m.initial.empty()) return empty_language(a.nsym);
  return m;
}

Fsa determinize(const Fsa& a) {
  int n = a.num_states();
  std::vector<std::vector<int>> succ(static_cast<size_t>(n) * a.nsym);
  for (int s = 0; s < n; ++s)
    for (auto [sym, d] : a.out[s])
      if (sym != EPS) succ[static_cast<size_t>(s) * a.nsym + sym].push_back(d);
  Fsa m(a.nsym);
  std::map<std::vector<int>, int> ids;
  std::vector<std::vector<int>> sets;
  auto get = [&](std::vector<int> set) {
    close(a, set);
    auto it = ids.find(set);
    if (it != ids.end()) return it->second;
    bool acc = false;
    for (int s : set) acc = acc || a.accepting[s];
    int id = m.add_state(acc);
    ids.emplace(set, id);
    sets.push_back(std::move(set));
    return id;
  };
  m.initial.push_back(get(a.initial));
  std::vector<char> mark(n);
  for (size_t i = 0; i < sets.size(); ++i) {
    for (int sym = 0; sym < a.nsym; ++sym) {
      std::vector<int> nxt;
      for (int s : sets[i])
        for (int d : succ[static_cast<size_t>(s) * a.nsym + sym])
          if (!mark[d]) {
            mark[d] = 1;
            nxt.push_back(d);
          }
      for (int d : nxt) mark[d] = 0;
      int dst = get(std::move(nxt));
      m.out[i].emplace_back(sym, dst);
    }
  }
  return m;
}

Fsa minimize(const Fsa& a) {
  Table t = table_of(a);
  int n = t.size();
  std::vector<int> cls(n);
  for (int s = 0; s < n; ++s) cls[s] = t.acc[s] ? 1 : 0;
  int count = 0;
  while (true) {
    std::map<std::vector<int>, int> sig_id;
    std::vector<int> next(n);
    std::vector<int> sig(t.nsym + 1);
    for (int s = 0; s < n; ++s) {
      sig[0] = cls[s];
      for (int x = 0; x < t.nsym; ++x) sig[x + 1] = cls[t.at(s, x)];
      auto [it, fresh] = sig_id.try_emplace(sig, static_cast<int>(sig_id.size()));
      next[s] = it->second;
    }
    int c = static_cast<int>(sig_id.size());
    cls.swap(next);
    if (c == count) break;
    count = c;
  }
  // Renumber classes in BFS order from the start state so that equal
  // languages give identical tables.
  std::vector<int> order(count, -1), rep(count, -1);
  for (int s = 0; s < n; ++s)
    if (rep[cls[s]] < 0) rep[cls[s]] = s;
  Table r;
  r.nsym = t.nsym;
  std::deque<int> q;
  int next_id = 0;
  order[cls[t.start]] = next_id++;
  q.push_back(cls[t.start]);
  std::vector<int> seq;
  while (!q.empty()) {
    int c = q.front();
    q.pop_front();
    seq.push_back(c);
    for (int x = 0; x < t.nsym; ++x) {
      int d = cls[t.at(rep[c], x)];
      if (order[d] < 0) {
        order[d] = next_id++;
        q.push_back(d);
      }
    }
  }
  r.start = 0;
  r.acc.assign(next_id, 0);
  r.delta.assign(static_cast<size_t>(next_id) * t.nsym, 0);
  for (int c : seq) {
    int id = order[c];
    r.acc[id] = t.acc[rep[c]];
    for (int x = 0; x < t.nsym; ++x)
      r.delta[static_cast<size_t>(id) * t.nsym + x] = order[cls[t.at(rep[c], x)]];
  }
  return fsa_of(r);
}

bool is_empty(const Fsa& m) {
  std::vector<int> cur = m.initial;
  std::vector<char> seen(m.num_states());
  for (int s : cur) seen[s] = 1;
  while (!cur.empty()) {
    int s = cur.back();
    cur.pop_back();
    if (m.accepting[s]) return false;
    for (auto [sym, d] : m.out[s])
      if (!seen[d]) {
        seen[d] = 1;
        cur.push_back(d);
      }
  }
  return true;
}

Equivalence equivalent(const Fsa& a, const Fsa& b) {
  check_domain(a, b);
  auto cex = product_search(table_of(a), table_of(b), [](char x, char y) { return x != y; });
  if (!cex) return {true, {}};
  return {false, *cex};
}

std::optional<Symbols> shortest_difference(const Fsa& a, const Fsa& b) {
  check_domain(a, b);
  return product_search(table_of(a), table_of(b), [](char x, char y) { return x && !y; });
}

namespace {

// Live states of a complete table: those from which acceptance is reachable.
std::vector<char> live_states(const Table& t) {
  int n = t.size();
  std::vector<std::vector<int>> rev(n);
  for (int s = 0; s < n; ++s)
    for (int x = 0; x < t.nsym; ++x) rev[t.at(s, x)].push_back(s);
  std::vector<char> live(n);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s)
    if (t.acc[s]) {
      live[s] = 1;
      stack.push_back(s);
    }
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    for (int p : rev[s])
      if (!live[p]) {
        live[p] = 1;
        stack.push_back(p);
      }
  }
  return live;
}

}  // namespace

std::vector<Symbols> enumerate(const Fsa& m, size_t max_len) {
  Table t = table_of(m);
  auto live = live_states(t);
  std::vector<std::vector<Symbols>> by_len(max_len + 1);
  Symbols cur;
  auto rec = [&](auto&& self, int s) -> void {
    if (t.acc[s]) by_len[cur.size()].push_back(cur);
    if (cur.size() == max_len) return;
    for (int x = 0; x < t.nsym; ++x) {
      int d = t.at(s, x);
      if (!live[d]) continue;
      cur.push_back(x);
      self(self, d);
      cur.pop_back();
    }
  };
  if (live[t.start]) rec(rec, t.start);
  std::vector<Symbols> outw;
  for (auto& v : by_len) outw.insert(outw.end(), v.begin(), v.end());
  return outw;
}

size_t count_accepted(const Fsa& m, size_t max_len) {
  Table t = table_of(m);
  std::vector<size_t> ways(t.size()), nxt(t.size());
  ways[t.start] = 1;
  size_t total = 0;
  for (size_t len = 0;; ++len) {
    for (int s = 0; s < t.size(); ++s)
      if (t.acc[s]) total += ways[s];
    if (len == max_len) break;
    std::fill(nxt.begin(), nxt.end(), 0);
    for (int s = 0; s < t.size(); ++s)
      if (ways[s])
        for (int x = 0; x < t.nsym; ++x) nxt[t.at(s, x)] += ways[s];
    ways.swap(nxt);
  }
  return total;
}

Fsa relabel(const Fsa& a, int new_nsym, const std::vector<int>& map) {
  Fsa m(new_nsym);
  for (int s = 0; s < a.num_states(); ++s) m.add_state(a.accepting[s]);
  for (int s = 0; s < a.num_states(); ++s)
    for (auto [sym, d] : a.out[s]) {
      int t = sym == EPS ? EPS : map.at(sym);
      m.out[s].emplace_back(t < 0 ? EPS : t, d);
    }
  m.initial = a.initial;
  return m;
}

int Gsm::add_state(bool term) {
  terminal.push_back(term ? 1 : 0);
  return nstates++;
}

void Gsm::add_edge(int src, int in, int dst, Symbols o) {
  if (src < 0 || src >= nstates || dst < 0 || dst >= nstates)
    throw invalid_input("gsm edge endpoint is not a state");
  if (in < 0 || in >= nin) throw invalid_input("gsm input symbol outside alphabet");
  for (int x : o)
    if (x < 0 || x >= nout) throw invalid_input("gsm output symbol outside alphabet");
  edges.push_back({src, in, dst, std::move(o)});
}

std::optional<Symbols> Gsm::apply(const Symbols& w) const {
  int s = initial;
  Symbols res;
  for (int x : w) {
    const Edge* hit = nullptr;
    for (const auto& e : edges)
      if (e.src == s && e.in == x) {
        hit = &e;
        break;
      }
    if (!hit) return std::nullopt;
    res.insert(res.end(), hit->out.begin(), hit->out.end());
    s = hit->dst;
  }
  if (!terminal[s]) return std::nullopt;
  return res;
}

Fsa gsm_image(const Gsm& g, const Fsa& x0) {
  if (x0.nsym != g.nin) throw invalid_input("gsm input alphabet differs from language domain");
  Fsa x = remove_epsilon(x0);
  std::vector<std::vector<const Gsm::Edge*>> by_src(g.nstates);
  for (const auto& e : g.edges) by_src[e.src].push_back(&e);
  Fsa m(g.nout);
  std::map<std::pair<int, int>, int> ids;
  std::deque<std::pair<int, int>> q;
  auto get = [&](int a, int b) {
    auto [it, fresh] = ids.try_emplace({a, b}, 0);
    if (fresh) {
      it->second = m.add_state(x.accepting[a] && g.terminal[b]);
      q.emplace_back(a, b);
    }
    return it->second;
  };
  for (int a : x.initial) m.initial.push_back(get(a, g.initial));
  while (!q.empty()) {
    auto [a, b] = q.front();
    q.pop_front();
    int src = ids[{a, b}];
    for (auto [sym, da] : x.out[a])
      for (const auto* e : by_src[b]) {
        if (e->in != sym) continue;
        int dst = get(da, e->dst);
        if (e->out.empty()) {
          m.out[src].emplace_back(EPS, dst);
          continue;
        }
        int cur = src;
        for (size_t i = 0; i + 1 < e->out.size(); ++i) {
          int mid = m.add_state(false);
          m.out[cur].emplace_back(e->out[i], mid);
          cur = mid;
        }
        m.out[cur].emplace_back(e->out.back(), dst);
      }
  }
  if (m.initial.empty()) return empty_language(g.nout);
  std::vector<int> all(g.nout);
  std::iota(all.begin(), all.end(), 0);
  return intersect(m, plus(symbol_set(g.nout, all)));
}

}  // namespace osr
