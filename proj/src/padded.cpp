#include "osr/padded.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "osr/errors.hpp"

namespace osr {

int PairAlphabet::sym(int l, int r) const {
  if (l == n && r == n) throw invalid_input("($,$) is not a pair symbol");
  return l * (n + 1) + r;
}

Symbols letters_of(const Word& w, const Alphabet& a) {
  Symbols s;
  s.reserve(w.size());
  for (char c : w) s.push_back(a.index(c));
  return s;
}

Word word_of(const Symbols& s, const Alphabet& a) {
  Word w;
  w.reserve(s.size());
  for (int x : s) w.push_back(a.letter(static_cast<size_t>(x)));
  return w;
}

std::string pair_symbol_name(int sym, const Alphabet& a) {
  PairAlphabet p(static_cast<int>(a.size()));
  auto name = [&](int x) { return x == p.pad() ? '$' : a.letter(static_cast<size_t>(x)); };
  return std::string{name(p.left(sym)), '|', name(p.right(sym))};
}

std::string show_pairs(const Symbols& s, const Alphabet& a) {
  std::string out;
  for (int x : s) out += "(" + pair_symbol_name(x, a) + ")";
  return out.empty() ? "()" : out;
}

Symbols convolve(const Word& u, const Word& v, const Alphabet& a, Side side) {
  if (u.empty() && v.empty()) throw invalid_input("cannot convolve (eps, eps)");
  PairAlphabet p(static_cast<int>(a.size()));
  size_t len = std::max(u.size(), v.size());
  size_t du = len - u.size(), dv = len - v.size();
  Symbols out;
  out.reserve(len);
  for (size_t i = 0; i < len; ++i) {
    int l, r;
    if (side == Side::R) {
      l = i < u.size() ? a.index(u[i]) : p.pad();
      r = i < v.size() ? a.index(v[i]) : p.pad();
    } else {
      l = i < du ? p.pad() : a.index(u[i - du]);
      r = i < dv ? p.pad() : a.index(v[i - dv]);
    }
    out.push_back(p.sym(l, r));
  }
  return out;
}

std::optional<std::pair<Word, Word>> try_unconvolve(const Symbols& s, const Alphabet& a,
                                                    Side side) {
  if (s.empty()) return std::nullopt;
  PairAlphabet p(static_cast<int>(a.size()));
  Word u, v;
  // For R, once a track pads it must keep padding; for L, padding must come first.
  bool lpad = false, rpad = false, lstarted = false, rstarted = false;
  for (int x : s) {
    if (x < 0 || x >= p.nsym()) return std::nullopt;
    int l = p.left(x), r = p.right(x);
    if (side == Side::R) {
      if (l == p.pad()) lpad = true;
      else if (lpad) return std::nullopt;
      if (r == p.pad()) rpad = true;
      else if (rpad) return std::nullopt;
    } else {
      if (l != p.pad()) lstarted = true;
      else if (lstarted) return std::nullopt;
      if (r != p.pad()) rstarted = true;
      else if (rstarted) return std::nullopt;
    }
    if (l != p.pad()) u.push_back(a.letter(static_cast<size_t>(l)));
    if (r != p.pad()) v.push_back(a.letter(static_cast<size_t>(r)));
  }
  return std::make_pair(u, v);
}

std::pair<Word, Word> unconvolve(const Symbols& s, const Alphabet& a, Side side) {
  auto r = try_unconvolve(s, a, side);
  if (!r) throw invalid_input("malformed padded word " + show_pairs(s, a));
  return *r;
}

Fsa diagonal(const Fsa& l, int n) {
  if (l.nsym != n) throw invalid_input("diagonal: language is not over the base alphabet");
  PairAlphabet p(n);
  std::vector<int> map(n);
  for (int x = 0; x < n; ++x) map[x] = p.sym(x, x);
  return relabel(l, p.nsym(), map);
}

Fsa pair_const(const Word& u, const Word& v, const Alphabet& a, Side side) {
  PairAlphabet p(static_cast<int>(a.size()));
  return word_language(p.nsym(), convolve(u, v, a, side));
}

namespace {

std::vector<std::vector<int>> successors(const Fsa& m) {
  std::vector<std::vector<int>> s(static_cast<size_t>(m.num_states()) * m.nsym);
  for (int q = 0; q < m.num_states(); ++q)
    for (auto [x, d] : m.out[q])
      if (x != EPS) s[static_cast<size_t>(q) * m.nsym + x].push_back(d);
  return s;
}

bool any_initial_accepting(const Fsa& m) {
  for (int s : m.initial)
    if (m.accepting[s]) return true;
  return false;
}

}  // namespace

Fsa pair_product(const Fsa& x0, const Fsa& y0, int n, Side side, std::optional<int> exact_diff) {
  if (x0.nsym != n || y0.nsym != n) throw invalid_input("pair_product: domain mismatch");
  Fsa x = remove_epsilon(x0), y = remove_epsilon(y0);
  auto sx = successors(x), sy = successors(y);
  PairAlphabet p(n);
  constexpr int ENDED = -1, FRESH = -2;
  // key: track states (or ENDED/FRESH), signed padding balance, read-something bit
  using Key = std::tuple<int, int, int, int>;
  Fsa m(p.nsym());
  std::map<Key, int> ids;
  std::deque<Key> q;
  bool xeps = any_initial_accepting(x), yeps = any_initial_accepting(y);
  auto acc_track = [&](const Fsa& f, int s, bool eps) {
    if (s == ENDED) return true;
    if (s == FRESH) return eps;
    return static_cast<bool>(f.accepting[s]);
  };
  auto get = [&](const Key& k) {
    auto [it, fresh] = ids.try_emplace(k, 0);
    if (fresh) {
      auto [a, b, c, nonempty] = k;
      bool acc = nonempty && acc_track(x, a, xeps) && acc_track(y, b, yeps) &&
                 (!exact_diff || c == *exact_diff);
      it->second = m.add_state(acc);
      q.push_back(k);
    }
    return it->second;
  };
  if (side == Side::R) {
    for (int a : x.initial)
      for (int b : y.initial) m.initial.push_back(get({a, b, 0, 0}));
  } else {
    m.initial.push_back(get({FRESH, FRESH, 0, 0}));
  }
  if (m.initial.empty()) return empty_language(p.nsym());
  // Successor track states for one track reading letter-or-pad c.
  auto step = [&](const Fsa& f, const std::vector<std::vector<int>>& succ, int s, int c,
                  bool eps) -> std::vector<int> {
    if (side == Side::R) {
      if (s == ENDED) return c == p.pad() ? std::vector<int>{ENDED} : std::vector<int>{};
      if (c == p.pad()) return f.accepting[s] ? std::vector<int>{ENDED} : std::vector<int>{};
      return succ[static_cast<size_t>(s) * f.nsym + c];
    }
    if (s == FRESH) {
      if (c == p.pad()) return {FRESH};
      std::vector<int> r;
      for (int i : f.initial) {
        const auto& d = succ[static_cast<size_t>(i) * f.nsym + c];
        r.insert(r.end(), d.begin(), d.end());
      }
      return r;
    }
    (void)eps;
    if (c == p.pad()) return {};
    return succ[static_cast<size_t>(s) * f.nsym + c];
  };
  while (!q.empty()) {
    Key k = q.front();
    q.pop_front();
    auto [a, b, c, ne] = k;
    int src = ids[k];
    for (int sym = 0; sym < p.nsym(); ++sym) {
      int l = p.left(sym), r = p.right(sym);
      int c2 = exact_diff ? c + (r == p.pad()) - (l == p.pad()) : 0;
      if (exact_diff) {
        int d = *exact_diff;
        if ((d >= 0 && (c2 < 0 || c2 > d)) || (d < 0 && (c2 > 0 || c2 < d))) continue;
      }
      auto na = step(x, sx, a, l, xeps);
      if (na.empty()) continue;
      auto nb = step(y, sy, b, r, yeps);
      for (int a2 : na)
        for (int b2 : nb) m.add_trans(src, sym, get({a2, b2, c2, 1}));
    }
  }
  return m;
}

Fsa all_convolutions(int n, Side side) { return pair_product(universal(n), universal(n), n, side); }

Fsa project(const Fsa& m, int n, int track) {
  PairAlphabet p(n);
  std::vector<int> map(p.nsym());
  for (int s = 0; s < p.nsym(); ++s) {
    int c = track == 0 ? p.left(s) : p.right(s);
    map[s] = c == p.pad() ? -1 : c;
  }
  return relabel(m, n, map);
}

Fsa swap_tracks(const Fsa& m, int n) {
  PairAlphabet p(n);
  std::vector<int> map(p.nsym());
  for (int s = 0; s < p.nsym(); ++s) map[s] = p.sym(p.right(s), p.left(s));
  return relabel(m, p.nsym(), map);
}

BoundAudit audit_bound(const Fsa& m0, int n, int depth, int cap) {
  PairAlphabet p(n);
  Fsa m = remove_epsilon(m0);
  int lim = cap + 1;
  auto key = [&](int s, int pl, int pr) { return (s * (lim + 1) + pl) * (lim + 1) + pr; };
  size_t total = static_cast<size_t>(m.num_states()) * (lim + 1) * (lim + 1);
  std::vector<std::pair<int, int>> parent(total, {-2, -1});
  std::vector<int> frontier;
  for (int s : m.initial) {
    int k = key(s, 0, 0);
    if (parent[k].first == -2) {
      parent[k] = {-1, -1};
      frontier.push_back(k);
    }
  }
  BoundAudit res;
  int best = -1;
  auto decode = [&](int k, int& s, int& pl, int& pr) {
    pr = k % (lim + 1);
    pl = (k / (lim + 1)) % (lim + 1);
    s = k / ((lim + 1) * (lim + 1));
  };
  for (int d = 0; d <= depth && !frontier.empty(); ++d) {
    std::vector<int> next;
    for (int k : frontier) {
      int s, pl, pr;
      decode(k, s, pl, pr);
      if (d > 0 && m.accepting[s]) {
        int diff = std::abs(pl - pr);
        if (diff > res.max_diff || best < 0) {
          if (diff > res.max_diff) res.max_diff = diff;
          if (best < 0 || diff >= res.max_diff) best = k;
        }
      }
      if (d == depth) continue;
      for (auto [x, t] : m.out[s]) {
        int npl = std::min(lim, pl + (p.left(x) == p.pad()));
        int npr = std::min(lim, pr + (p.right(x) == p.pad()));
        int nk = key(t, npl, npr);
        if (parent[nk].first == -2) {
          parent[nk] = {k, x};
          next.push_back(nk);
        }
      }
    }
    frontier.swap(next);
  }
  if (best >= 0) {
    int k = best;
    while (parent[k].first >= 0) {
      res.witness.push_back(parent[k].second);
      k = parent[k].first;
    }
    std::reverse(res.witness.begin(), res.witness.end());
  }
  return res;
}

std::optional<int> exact_bound(const Fsa& m0, int n, Side side) {
  PairAlphabet p(n);
  // Padding sits at the end for R; reversal moves it there for L.
  Fsa m = trim(remove_epsilon(side == Side::R ? m0 : reverse(m0)));
  int ns = m.num_states();
  // Longest path of padded symbols from each state to acceptance.
  std::vector<int> best(ns, -2), mark(ns, 0);  // -2 unknown; mark 1 on stack, 2 done
  bool cyclic = false;
  auto padded = [&](int sym) { return sym >= 0 && (p.left(sym) == p.pad() || p.right(sym) == p.pad()); };
  auto dfs = [&](auto&& self, int s) -> int {
    if (mark[s] == 2) return best[s];
    if (mark[s] == 1) {
      cyclic = true;
      return -1;
    }
    mark[s] = 1;
    int b = m.accepting[s] ? 0 : -1;
    for (auto [sym, t] : m.out[s]) {
      if (!padded(sym)) continue;
      int r = self(self, t);
      if (r >= 0) b = std::max(b, r + 1);
    }
    mark[s] = 2;
    return best[s] = b;
  };
  int bound = 0;
  for (int s = 0; s < ns && !cyclic; ++s) bound = std::max(bound, dfs(dfs, s));
  if (cyclic) return std::nullopt;
  return bound;
}

namespace {

void enforce_bound(const Fsa& m, int n, int bound, int audit_depth, const char* what) {
  if (audit_depth <= 0) return;
  BoundAudit a = audit_bound(m, n, audit_depth, bound);
  if (a.max_diff > bound) {
    std::string letters;
    for (int i = 0; i < n; ++i) letters.push_back(static_cast<char>('0' + i));
    throw contract_error(std::string(what) + ": declared length-difference bound " +
                         std::to_string(bound) + " violated (difference " +
                         std::to_string(a.max_diff) + ", pair word of length " +
                         std::to_string(a.witness.size()) + ")");
  }
}

// Simulates M (over right convolutions) while reading left convolutions.
Fsa swap_r_to_l(const Fsa& m0, int n, int k) {
  PairAlphabet p(n);
  Fsa m = remove_epsilon(m0);
  auto sm = successors(m);
  // phase: 0 leading pads, 1 main, 2 flushing. side: 0 none, 1 top buffered, 2 bottom buffered
  using Key = std::tuple<int, int, int, std::string, int>;
  Fsa r(p.nsym());
  std::map<Key, int> ids;
  std::deque<Key> q;
  auto get = [&](const Key& key) {
    auto [it, fresh] = ids.try_emplace(key, 0);
    if (fresh) {
      const auto& [ms, phase, side, buf, ne] = key;
      it->second = r.add_state(ne && buf.empty() && m.accepting[ms]);
      q.push_back(key);
    }
    return it->second;
  };
  for (int s : m.initial) r.initial.push_back(get({s, 0, 0, std::string{}, 0}));
  if (r.initial.empty()) return empty_language(p.nsym());
  auto msucc = [&](int s, int l, int rr) -> const std::vector<int>& {
    return sm[static_cast<size_t>(s) * m.nsym + p.sym(l, rr)];
  };
  while (!q.empty()) {
    Key key = q.front();
    q.pop_front();
    auto [ms, phase, side, buf, ne] = key;
    int src = ids[key];
    if (!buf.empty()) {
      // flush one buffered letter against padding
      int c = buf[0];
      std::string rest = buf.substr(1);
      const auto& d = side == 1 ? msucc(ms, c, p.pad()) : msucc(ms, p.pad(), c);
      for (int t : d) r.add_trans(src, EPS, get({t, 2, side, rest, ne}));
    }
    if (phase == 2) continue;
    for (int sym = 0; sym < p.nsym(); ++sym) {
      int l = p.left(sym), rr = p.right(sym);
      if (l == p.pad() || rr == p.pad()) {
        if (phase != 0) continue;
        int ns = rr == p.pad() ? 1 : 2;
        if (side != 0 && side != ns) continue;
        if (static_cast<int>(buf.size()) >= k) continue;
        std::string nb = buf + static_cast<char>(rr == p.pad() ? l : rr);
        r.add_trans(src, sym, get({ms, 0, ns, nb, 1}));
        continue;
      }
      if (buf.empty()) {
        for (int t : msucc(ms, l, rr)) r.add_trans(src, sym, get({t, 1, side, buf, 1}));
        continue;
      }
      int c = buf[0];
      std::string nb = buf.substr(1) + static_cast<char>(side == 1 ? l : rr);
      const auto& d = side == 1 ? msucc(ms, c, rr) : msucc(ms, l, c);
      for (int t : d) r.add_trans(src, sym, get({t, 1, side, nb, 1}));
    }
  }
  return r;
}

}  // namespace

Fsa swap_side(const Fsa& m, int n, int k, Side from, int audit_depth) {
  enforce_bound(m, n, k, audit_depth, "swap_side");
  if (from == Side::R) return minimize(swap_r_to_l(m, n, k));
  return minimize(reverse(swap_r_to_l(reverse(m), n, k)));
}

Fsa odot_right(const Fsa& m0, const Fsa& n0, int n, int bound, int audit_depth) {
  enforce_bound(m0, n, bound, audit_depth, "odot_right");
  PairAlphabet p(n);
  Fsa m = remove_epsilon(minimize(m0)), nn = remove_epsilon(minimize(n0));
  auto sm = successors(m), sn = successors(nn);
  constexpr int DONE = -1, IDLE = -1;
  // flags: 1 top switched, 2 bottom switched, 4 top ended, 8 bottom ended, 16 read something
  // side: 0 none, 1 top letters buffered, 2 bottom letters buffered
  using Key = std::tuple<int, int, int, int, std::string>;
  Fsa r(p.nsym());
  std::map<Key, int> ids;
  std::deque<Key> q;
  auto get = [&](const Key& key) {
    auto [it, fresh] = ids.try_emplace(key, 0);
    if (fresh) {
      const auto& [ms, ns, flags, side, buf] = key;
      bool acc = (flags & 3) == 3 && ms == DONE && ns != IDLE && buf.empty() && (flags & 16) &&
                 nn.accepting[ns];
      it->second = r.add_state(acc);
      q.push_back(key);
    }
    return it->second;
  };
  for (int s : m.initial) r.initial.push_back(get({s, IDLE, 0, 0, std::string{}}));
  if (r.initial.empty()) return empty_language(p.nsym());
  auto mstep = [&](int s, int l, int rr) -> const std::vector<int>& {
    return sm[static_cast<size_t>(s) * m.nsym + p.sym(l, rr)];
  };
  auto nstep = [&](int s, int l, int rr) -> std::vector<int> {
    int sym = p.sym(l, rr);
    if (s == IDLE) {
      std::vector<int> out;
      for (int i : nn.initial) {
        const auto& d = sn[static_cast<size_t>(i) * nn.nsym + sym];
        out.insert(out.end(), d.begin(), d.end());
      }
      return out;
    }
    return sn[static_cast<size_t>(s) * nn.nsym + sym];
  };
  while (!q.empty()) {
    Key key = q.front();
    q.pop_front();
    auto [ms, ns, flags, side, buf] = key;
    int src = ids[key];
    bool tsw = flags & 1, bsw = flags & 2, tend = flags & 4, bend = flags & 8;
    // switching a track from its M part to its N part
    for (int bit : {1, 2}) {
      if (flags & bit) continue;
      int nf = flags | bit;
      if ((nf & 3) == 3) {
        if (!m.accepting[ms]) continue;
        r.add_trans(src, EPS, get({DONE, IDLE, nf, side, buf}));
      } else {
        r.add_trans(src, EPS, get({ms, ns, nf, side, buf}));
      }
    }
    // flushing buffered letters of the ahead track against padding
    if (tsw && bsw && !buf.empty()) {
      int c = buf[0];
      std::string rest = buf.substr(1);
      int nf = flags | (side == 1 ? 8 : 4);
      auto d = side == 1 ? nstep(ns, c, p.pad()) : nstep(ns, p.pad(), c);
      for (int t : d) r.add_trans(src, EPS, get({DONE, t, nf, side, rest}));
    }
    for (int sym = 0; sym < p.nsym(); ++sym) {
      int t = p.left(sym), b = p.right(sym);
      if (tend && t != p.pad()) continue;
      if (bend && b != p.pad()) continue;
      if (t == p.pad() && !tsw) continue;
      if (b == p.pad() && !bsw) continue;
      int nf = flags | 16 | (t == p.pad() ? 4 : 0) | (b == p.pad() ? 8 : 0);
      if (!tsw && !bsw) {
        for (int x : mstep(ms, t, b)) r.add_trans(src, sym, get({x, ns, nf, side, buf}));
      } else if (tsw && !bsw) {
        std::string nb = buf;
        if (t != p.pad()) nb.push_back(static_cast<char>(t));
        if (static_cast<int>(nb.size()) > bound) continue;
        for (int x : mstep(ms, p.pad(), b))
          r.add_trans(src, sym, get({x, ns, nf, nb.empty() ? side : 1, nb}));
      } else if (!tsw && bsw) {
        std::string nb = buf;
        if (b != p.pad()) nb.push_back(static_cast<char>(b));
        if (static_cast<int>(nb.size()) > bound) continue;
        for (int x : mstep(ms, t, p.pad()))
          r.add_trans(src, sym, get({x, ns, nf, nb.empty() ? side : 2, nb}));
      } else if (buf.empty()) {
        for (int x : nstep(ns, t, b)) r.add_trans(src, sym, get({DONE, x, nf, 0, buf}));
      } else if (side == 1) {
        std::string nb = buf.substr(1);
        if (t != p.pad()) nb.push_back(static_cast<char>(t));
        for (int x : nstep(ns, buf[0], b)) r.add_trans(src, sym, get({DONE, x, nf, 1, nb}));
      } else {
        std::string nb = buf.substr(1);
        if (b != p.pad()) nb.push_back(static_cast<char>(b));
        for (int x : nstep(ns, t, buf[0])) r.add_trans(src, sym, get({DONE, x, nf, 2, nb}));
      }
    }
  }
  return minimize(r);
}

Fsa odot_left(const Fsa& m, const Fsa& nn, int n, int bound_m, int bound_n, int audit_depth) {
  Fsa mr = swap_side(m, n, bound_m, Side::L, audit_depth);
  Fsa nr = swap_side(nn, n, bound_n, Side::L, audit_depth);
  Fsa r = odot_right(mr, nr, n, bound_m + bound_n, audit_depth);
  return swap_side(r, n, bound_m + bound_n, Side::R, audit_depth);
}

namespace expr {
ExprPtr diag(Fsa l) { return std::make_shared<PaddedExpr>(PaddedExpr{PaddedExpr::DiagOf{std::move(l)}}); }
ExprPtr pair(Word u, Word v, Side side) {
  return std::make_shared<PaddedExpr>(PaddedExpr{PaddedExpr::PairConst{std::move(u), std::move(v), side}});
}
ExprPtr cat(ExprPtr a, ExprPtr b) { return std::make_shared<PaddedExpr>(PaddedExpr{PaddedExpr::Concat{a, b}}); }
ExprPtr alt(ExprPtr a, ExprPtr b) { return std::make_shared<PaddedExpr>(PaddedExpr{PaddedExpr::Union{a, b}}); }
ExprPtr alt(std::vector<ExprPtr> xs) {
  if (xs.empty()) throw invalid_input("empty union");
  ExprPtr r = xs[0];
  for (size_t i = 1; i < xs.size(); ++i) r = alt(r, xs[i]);
  return r;
}
ExprPtr star(ExprPtr a) { return std::make_shared<PaddedExpr>(PaddedExpr{PaddedExpr::Star{a}}); }
ExprPtr plus(ExprPtr a) { return std::make_shared<PaddedExpr>(PaddedExpr{PaddedExpr::Plus{a}}); }
ExprPtr odot(ExprPtr m, ExprPtr n, int bound) {
  return std::make_shared<PaddedExpr>(PaddedExpr{PaddedExpr::OdotR{m, n, bound}});
}
ExprPtr odot_l(ExprPtr m, ExprPtr n, int bound_m, int bound_n) {
  return std::make_shared<PaddedExpr>(PaddedExpr{PaddedExpr::OdotL{m, n, bound_m, bound_n}});
}
ExprPtr within(ExprPtr a, Fsa l1, Fsa l2, Side side) {
  return std::make_shared<PaddedExpr>(
      PaddedExpr{PaddedExpr::IntersectPairs{a, std::move(l1), std::move(l2), side}});
}
ExprPtr raw(Fsa m) { return std::make_shared<PaddedExpr>(PaddedExpr{PaddedExpr::Raw{std::move(m)}}); }
}  // namespace expr

Fsa eval_expr(const ExprPtr& e, const Alphabet& a) {
  int n = static_cast<int>(a.size());
  struct Visitor {
    const Alphabet& a;
    int n;
    Fsa operator()(const PaddedExpr::DiagOf& x) const { return diagonal(x.language, n); }
    Fsa operator()(const PaddedExpr::PairConst& x) const { return pair_const(x.u, x.v, a, x.side); }
    Fsa operator()(const PaddedExpr::Concat& x) const {
      return concat(eval_expr(x.a, a), eval_expr(x.b, a));
    }
    Fsa operator()(const PaddedExpr::Union& x) const {
      return union_of(eval_expr(x.a, a), eval_expr(x.b, a));
    }
    Fsa operator()(const PaddedExpr::Star& x) const { return osr::star(eval_expr(x.a, a)); }
    Fsa operator()(const PaddedExpr::Plus& x) const { return osr::plus(eval_expr(x.a, a)); }
    Fsa operator()(const PaddedExpr::OdotR& x) const {
      return odot_right(eval_expr(x.m, a), eval_expr(x.n, a), n, x.bound);
    }
    Fsa operator()(const PaddedExpr::OdotL& x) const {
      return odot_left(eval_expr(x.m, a), eval_expr(x.n, a), n, x.bound_m, x.bound_n);
    }
    Fsa operator()(const PaddedExpr::IntersectPairs& x) const {
      return intersect(eval_expr(x.a, a), pair_product(x.l1, x.l2, n, x.side));
    }
    Fsa operator()(const PaddedExpr::Raw& x) const { return x.fsa; }
  };
  if (!e) throw invalid_input("null expression");
  return minimize(std::visit(Visitor{a, n}, e->node));
}

}  // namespace osr
