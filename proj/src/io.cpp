#include "osr/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "osr/errors.hpp"

namespace osr {

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

int to_int(const std::string& s, size_t line) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw invalid_input("line " + std::to_string(line) + ": expected an integer, got '" + s + "'");
}

std::string letter_key(char c) { return c == kEpsKey ? "eps" : std::string(1, c); }

std::string multiplier_file(char letter, Flavor f) {
  return "mult_" + letter_key(letter) + "_" + flavor_name(f);
}

Alphabet alphabet_from(const std::string& letters, const std::string& identity) {
  if (identity.empty() || identity == "none") return Alphabet::parse(letters);
  if (identity.size() != 1) throw invalid_input("identity must be one letter: " + identity);
  std::string plain;
  for (char c : letters)
    if (c != ',') plain.push_back(c);
  return Alphabet(plain, identity[0]);
}

std::string identity_text(const Alphabet& a) { return a.identity() ? std::string(1, *a.identity()) : "none"; }

Word word_field(const std::string& s) { return parse_word(s); }

std::map<std::string, std::string> read_meta(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw invalid_input("meta line without '=': " + line);
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return kv;
}

const std::string& field(const std::map<std::string, std::string>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw invalid_input("meta is missing '" + key + "'");
  return it->second;
}

}  // namespace

std::vector<std::string> letter_names(const Alphabet& a) {
  std::vector<std::string> out;
  for (char c : a.letters()) out.emplace_back(1, c);
  return out;
}

std::vector<std::string> pair_names(const Alphabet& a) {
  PairAlphabet p(static_cast<int>(a.size()));
  std::vector<std::string> out;
  for (int s = 0; s < p.nsym(); ++s) out.push_back(pair_symbol_name(s, a));
  return out;
}

std::string write_fsa(const Fsa& m, const std::vector<std::string>& names) {
  if (static_cast<int>(names.size()) != m.nsym)
    throw contract_error("symbol names do not match the automaton domain");
  std::ostringstream os;
  os << "domain";
  for (const auto& n : names) os << ' ' << n;
  os << '\n';
  std::vector<char> init(static_cast<size_t>(m.num_states()), 0);
  for (int s : m.initial) init[static_cast<size_t>(s)] = 1;
  for (int s = 0; s < m.num_states(); ++s) {
    os << "state " << s;
    if (init[static_cast<size_t>(s)]) os << " initial";
    if (m.accepting[static_cast<size_t>(s)]) os << " accept";
    os << '\n';
  }
  for (int s = 0; s < m.num_states(); ++s)
    for (auto [x, t] : m.out[static_cast<size_t>(s)])
      os << "trans " << s << ' ' << (x == EPS ? std::string("EPS") : names[static_cast<size_t>(x)]) << ' ' << t << '\n';
  return os.str();
}

Fsa read_fsa(const std::string& text, std::vector<std::string>* names) {
  std::istringstream is(text);
  std::vector<std::string> domain;
  std::map<std::string, int> sym;
  std::map<int, int> state;
  bool have_domain = false;
  Fsa m;
  auto state_of = [&](int id) {
    auto [it, fresh] = state.emplace(id, 0);
    if (fresh) it->second = m.add_state(false);
    return it->second;
  };
  size_t lineno = 0;
  for (std::string line; std::getline(is, line);) {
    ++lineno;
    auto t = tokens(line);
    if (t.empty() || t[0][0] == '#') continue;
    auto where = [&] { return "line " + std::to_string(lineno) + ": "; };
    if (t[0] == "domain") {
      if (have_domain) throw invalid_input(where() + "second domain line");
      have_domain = true;
      domain.assign(t.begin() + 1, t.end());
      for (size_t i = 0; i < domain.size(); ++i)
        if (!sym.emplace(domain[i], static_cast<int>(i)).second)
          throw invalid_input(where() + "duplicate symbol " + domain[i]);
      m.nsym = static_cast<int>(domain.size());
    } else if (!have_domain) {
      throw invalid_input(where() + "the domain line must come first");
    } else if (t[0] == "state") {
      if (t.size() < 2) throw invalid_input(where() + "state without id");
      int s = state_of(to_int(t[1], lineno));
      for (size_t i = 2; i < t.size(); ++i) {
        if (t[i] == "initial")
          m.initial.push_back(s);
        else if (t[i] == "accept")
          m.accepting[static_cast<size_t>(s)] = 1;
        else
          throw invalid_input(where() + "unknown state flag " + t[i]);
      }
    } else if (t[0] == "trans") {
      if (t.size() != 4) throw invalid_input(where() + "expected: trans <src> <sym> <dst>");
      int src = state_of(to_int(t[1], lineno));
      int x = EPS;
      if (t[2] != "EPS") {
        auto it = sym.find(t[2]);
        if (it == sym.end()) throw invalid_input(where() + "symbol not in domain: " + t[2]);
        x = it->second;
      }
      m.add_trans(src, x, state_of(to_int(t[3], lineno)));
    } else {
      throw invalid_input(where() + "unknown item " + t[0]);
    }
  }
  if (!have_domain) throw invalid_input("missing domain line");
  if (names) *names = domain;
  return m;
}

std::string write_dot(const Fsa& m, const std::vector<std::string>& names, const std::string& title) {
  std::ostringstream os;
  os << "digraph \"" << title << "\" {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (int s = 0; s < m.num_states(); ++s)
    if (m.accepting[static_cast<size_t>(s)]) os << "  " << s << " [shape=doublecircle];\n";
  for (int s : m.initial) os << "  start" << s << " [shape=point];\n  start" << s << " -> " << s << ";\n";
  for (int s = 0; s < m.num_states(); ++s) {
    std::map<int, std::string> labels;
    for (auto [x, t] : m.out[static_cast<size_t>(s)]) {
      auto& l = labels[t];
      if (!l.empty()) l += ",";
      l += x == EPS ? std::string("EPS") : names[static_cast<size_t>(x)];
    }
    for (const auto& [t, l] : labels) os << "  " << s << " -> " << t << " [label=\"" << l << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string write_normal_form(const NormalForm& nf) {
  std::ostringstream os;
  os << "alphabet " << nf.alphabet.str() << "\nidentity " << identity_text(nf.alphabet) << "\n";
  os << "rs_alphabet " << nf.rs.alphabet.str() << "\nrs_identity " << identity_text(nf.rs.alphabet) << "\n";
  os << "status " << completeness_name(nf.rs.status) << "\nreversed " << (nf.reversed ? 1 : 0) << "\n";
  for (const auto& r : nf.rs.rules) os << "rule " << show_word(r.lhs) << ' ' << show_word(r.rhs) << "\n";
  for (const auto& s : nf.rs.schemas)
    os << "schema " << show_word(s.lhs_pre) << ' ' << show_word(s.lhs_pump) << ' ' << show_word(s.lhs_suf) << ' '
       << show_word(s.rhs_pre) << ' ' << show_word(s.rhs_pump) << ' ' << show_word(s.rhs_suf) << ' ' << s.min_i
       << "\n";
  if (nf.gsm) {
    const Gsm& g = *nf.gsm;
    os << "gsm " << g.nstates << ' ' << g.nin << ' ' << g.nout << ' ' << g.initial << "\n";
    for (int s = 0; s < g.nstates; ++s)
      if (g.terminal[static_cast<size_t>(s)]) os << "gsm_terminal " << s << "\n";
    for (const auto& e : g.edges) {
      os << "gsm_edge " << e.src << ' ' << e.in << ' ' << e.dst;
      for (int x : e.out) os << ' ' << x;
      os << "\n";
    }
  }
  return os.str();
}

NormalForm read_normal_form(const std::string& text) {
  std::istringstream is(text);
  std::map<std::string, std::string> single;
  NormalForm nf;
  size_t lineno = 0;
  for (std::string line; std::getline(is, line);) {
    ++lineno;
    auto t = tokens(line);
    if (t.empty()) continue;
    auto where = [&] { return "normal form line " + std::to_string(lineno) + ": "; };
    const std::string& k = t[0];
    if (k == "rule") {
      if (t.size() != 3) throw invalid_input(where() + "expected: rule <lhs> <rhs>");
      nf.rs.rules.push_back({word_field(t[1]), word_field(t[2])});
    } else if (k == "schema") {
      if (t.size() != 8) throw invalid_input(where() + "schema needs seven fields");
      RuleSchema s{word_field(t[1]), word_field(t[2]), word_field(t[3]),
                   word_field(t[4]), word_field(t[5]), word_field(t[6]),
                   static_cast<size_t>(to_int(t[7], lineno))};
      nf.rs.schemas.push_back(s);
    } else if (k == "gsm") {
      if (t.size() != 5) throw invalid_input(where() + "expected: gsm <states> <in> <out> <initial>");
      Gsm g;
      for (int i = 0, n = to_int(t[1], lineno); i < n; ++i) g.add_state(false);
      g.nin = to_int(t[2], lineno);
      g.nout = to_int(t[3], lineno);
      g.initial = to_int(t[4], lineno);
      nf.gsm = g;
    } else if (k == "gsm_terminal" || k == "gsm_edge") {
      if (!nf.gsm) throw invalid_input(where() + "gsm data before the gsm line");
      if (k == "gsm_terminal") {
        if (t.size() != 2) throw invalid_input(where() + "expected: gsm_terminal <state>");
        int s = to_int(t[1], lineno);
        if (s < 0 || s >= nf.gsm->nstates) throw invalid_input(where() + "gsm state out of range");
        nf.gsm->terminal[static_cast<size_t>(s)] = 1;
      } else {
        if (t.size() < 4) throw invalid_input(where() + "expected: gsm_edge <src> <in> <dst> <out>...");
        Symbols out;
        for (size_t i = 4; i < t.size(); ++i) out.push_back(to_int(t[i], lineno));
        nf.gsm->add_edge(to_int(t[1], lineno), to_int(t[2], lineno), to_int(t[3], lineno), out);
      }
    } else if (t.size() == 2) {
      single[k] = t[1];
    } else {
      throw invalid_input(where() + "unknown item " + k);
    }
  }
  nf.alphabet = alphabet_from(field(single, "alphabet"), field(single, "identity"));
  nf.rs.alphabet = alphabet_from(field(single, "rs_alphabet"), field(single, "rs_identity"));
  const std::string& status = field(single, "status");
  bool known = false;
  for (auto c : {Completeness::complete, Completeness::bounded_incomplete, Completeness::unknown})
    if (status == completeness_name(c)) {
      nf.rs.status = c;
      known = true;
    }
  if (!known) throw invalid_input("unknown completeness status: " + status);
  nf.reversed = field(single, "reversed") == "1";
  return nf;
}

void save_structure(const AutomaticStructure& s, const NormalForm& nf, const std::filesystem::path& dir,
                    ExportFormat format) {
  std::filesystem::create_directories(dir);
  auto letters = letter_names(s.alphabet);
  auto pairs = pair_names(s.alphabet);
  auto emit = [&](const std::string& stem, const Fsa& m, const std::vector<std::string>& names) {
    write_file(dir / (stem + ".fsa"), write_fsa(m, names));
    if (format == ExportFormat::dot) write_file(dir / (stem + ".dot"), write_dot(m, names, stem));
  };
  emit("acceptor", s.language, letters);
  for (const auto& [key, m] : s.multipliers) emit(multiplier_file(key.first, key.second), m, pairs);
  if (s.prefix_equality) emit("prefix_eq", *s.prefix_equality, pairs);

  std::ostringstream meta;
  meta << "alphabet=" << s.alphabet.str() << "\nidentity=" << identity_text(s.alphabet) << "\ncase=" << s.case_id
       << "\nflavors=";
  bool first = true;
  for (Flavor f : s.flavors()) {
    meta << (first ? "" : ",") << flavor_name(f);
    first = false;
  }
  meta << "\nprefix=" << (s.prefix_equality ? 1 : 0) << "\nuniqueness=" << (s.uniqueness ? 1 : 0)
       << "\nprovenance=" << s.provenance << "\n";
  write_file(dir / "meta", meta.str());
  write_file(dir / "normal_form", write_normal_form(nf));
}

LoadedStructure load_structure(const std::filesystem::path& dir) {
  auto kv = read_meta(read_file(dir / "meta"));
  LoadedStructure out;
  AutomaticStructure& s = out.structure;
  s.alphabet = alphabet_from(field(kv, "alphabet"), field(kv, "identity"));
  s.case_id = field(kv, "case");
  s.provenance = field(kv, "provenance");
  s.uniqueness = field(kv, "uniqueness") == "1";
  auto load = [&](const std::string& stem, const std::vector<std::string>& expect) {
    std::vector<std::string> names;
    Fsa m = read_fsa(read_file(dir / (stem + ".fsa")), &names);
    if (names != expect) throw invalid_input(stem + ".fsa: domain does not match the alphabet");
    return m;
  };
  s.language = load("acceptor", letter_names(s.alphabet));
  auto pairs = pair_names(s.alphabet);
  std::vector<char> keys{kEpsKey};
  keys.insert(keys.end(), s.alphabet.letters().begin(), s.alphabet.letters().end());
  std::istringstream fl(field(kv, "flavors"));
  for (std::string name; std::getline(fl, name, ',');) {
    if (name.empty()) continue;
    auto f = parse_flavor(name);
    if (!f) throw invalid_input("unknown flavor in meta: " + name);
    for (char c : keys) {
      auto stem = multiplier_file(c, *f);
      if (std::filesystem::exists(dir / (stem + ".fsa"))) s.multipliers[{c, *f}] = load(stem, pairs);
    }
  }
  if (field(kv, "prefix") == "1") s.prefix_equality = load("prefix_eq", pairs);
  out.nf = read_normal_form(read_file(dir / "normal_form"));
  return out;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw invalid_input("cannot read " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw invalid_input("cannot write " + p.string());
  out << text;
}

}  // namespace osr
