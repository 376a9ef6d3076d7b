#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "osr/classifier.hpp"
#include "osr/errors.hpp"
#include "osr/io.hpp"
#include "osr/structures.hpp"

using namespace osr;

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kFail = 1;  // verification failed or no witness exists
constexpr int kParse = 2;
constexpr int kScope = 3;
constexpr int kContract = 4;

struct Options {
  std::string relation;
  std::string file;
  std::optional<std::string> alphabet;
  std::optional<size_t> depth;
  std::optional<std::string> flavor;
  std::optional<std::string> letter;
  std::string out;
  std::string in;
  std::string format = "text";
  unsigned seed = 1;
  size_t max_rules = 200;
  size_t max_len = 20;
  size_t letters = 2;
  std::vector<std::string> words;
};

Presentation presentation(const Options& o) {
  if (!o.file.empty()) {
    if (!o.relation.empty()) throw invalid_input("give either a relation or --file, not both");
    return parse_presentation(read_file(o.file));
  }
  if (o.relation.empty()) throw invalid_input("missing relation");
  return parse_relation(o.relation, o.alphabet);
}

std::optional<std::vector<Flavor>> flavors(const Options& o) {
  if (!o.flavor) return std::nullopt;
  if (*o.flavor == "all") return std::vector<Flavor>(std::begin(kAllFlavors), std::end(kAllFlavors));
  auto f = parse_flavor(*o.flavor);
  if (!f) throw invalid_input("unknown flavor: " + *o.flavor);
  return std::vector<Flavor>{*f};
}

CompletionLimits limits(const Options& o) {
  CompletionLimits lim;
  lim.max_rules = o.max_rules;
  lim.max_len = o.max_len;
  return lim;
}

OrderedNormalForm ordered(const Presentation& p, const Options& o) {
  auto nf = normal_form_for(p, limits(o));
  if (!nf)
    throw not_applicable("completion did not finish under the order " + p.alphabet.str() +
                         "; try another --alphabet order or larger limits");
  return *nf;
}

int cmd_classify(const Options& o) {
  std::cout << classify(presentation(o)).record() << "\n";
  return kOk;
}

int cmd_table(const Options& o) {
  for (const auto& row : full_table(o.letters)) std::cout << row.result.record() << "\n";
  return kOk;
}

int cmd_complete(const Options& o) {
  Presentation p = presentation(o);
  if (p.relations.size() != 1) throw out_of_scope("exactly one relation is supported");
  auto [u, v] = p.relations[0];
  if (u.size() > 3 || v.size() > 3) throw out_of_scope("relator longer than 3");
  RewriteSystem rs;
  if (v.empty() || u.empty()) {
    MonoidEmbedding emb = monoid_embedding(p.alphabet, p.relations, 'e');
    rs = shirshov_complete(emb.relations, emb.alphabet, limits(o));
  } else {
    rs = shirshov_complete(p.relations, p.alphabet, limits(o));
  }
  std::cout << "alphabet=" << rs.alphabet.str() << "\n";
  for (const auto& r : rule_strings(rs)) std::cout << "rule=" << r << "\n";
  std::cout << "status=" << completeness_name(rs.status) << "\n";
  return kOk;
}

int cmd_nf(const Options& o) {
  Presentation p = presentation(o);
  auto on = ordered(p, o);
  std::cout << "alphabet=" << on.nf.alphabet.str() << "\n";
  if (auto e = on.nf.identity()) std::cout << "identity=" << *e << "\n";
  for (const auto& r : rule_strings(on.nf.rs)) std::cout << "rule=" << r << "\n";
  std::cout << "status=" << completeness_name(on.nf.rs.status) << "\n";
  std::cout << "language_states=" << on.language.num_states() << "\n";
  for (const auto& w : o.words) {
    Word x = parse_word(w);
    check_word(x, on.nf.alphabet);
    std::cout << "word=" << show_word(x) << " nf=" << show_word(on.nf.rep(x)) << "\n";
  }
  return kOk;
}

int cmd_enumerate(const Options& o) {
  Presentation p = presentation(o);
  auto on = ordered(p, o);
  size_t depth = o.depth.value_or(6);
  size_t count = 0;
  for (const auto& s : enumerate(on.language, depth)) {
    std::cout << "nf=" << show_word(word_of(s, on.nf.alphabet)) << "\n";
    ++count;
  }
  std::cout << "depth=" << depth << " count=" << count << "\n";
  return kOk;
}

Witness witness(const Options& o) {
  Presentation p = presentation(o);
  ClassificationResult r = classify(p);
  return build_witness(p, r, 6, flavors(o), o.seed);
}

void print_witness(const Witness& w) {
  std::cout << "case=" << w.structure.case_id << "\nprovenance=\"" << w.structure.provenance << "\"\n";
  for (const auto& n : w.notes) std::cout << "note=\"" << n << "\"\n";
}

int cmd_structure(const Options& o) {
  if (o.out.empty()) throw invalid_input("structure needs --out <dir>");
  if (o.format != "text" && o.format != "dot") throw invalid_input("unknown format: " + o.format);
  Witness w = witness(o);
  save_structure(w.structure, w.nf, o.out, o.format == "dot" ? ExportFormat::dot : ExportFormat::text);
  print_witness(w);
  std::cout << "out=" << o.out << "\n";
  return kOk;
}

int cmd_verify(const Options& o) {
  size_t depth = o.depth.value_or(8);
  VerificationReport rep;
  if (!o.in.empty()) {
    LoadedStructure ls = load_structure(o.in);
    rep = verify_structure(ls.structure, ls.nf, depth);
  } else {
    Witness w = witness(o);
    print_witness(w);
    rep = verify_structure(w.structure, w.nf, depth);
  }
  std::cout << rep.str();
  return rep.passed() ? kOk : kFail;
}

int cmd_nerode(const Options& o) {
  Presentation p = presentation(o);
  auto on = ordered(p, o);
  size_t depth = o.depth.value_or(10);
  std::vector<Flavor> fs = flavors(o).value_or(std::vector<Flavor>{Flavor::rr});
  std::vector<char> keys;
  if (o.letter) {
    if (*o.letter == "eps") keys.push_back(kEpsKey);
    else if (o.letter->size() == 1 && on.nf.alphabet.contains((*o.letter)[0])) keys.push_back((*o.letter)[0]);
    else throw invalid_input("unknown letter: " + *o.letter);
  } else {
    keys = on.nf.alphabet.letters();
  }
  std::vector<size_t> depths;
  for (size_t d = 1; d <= depth; ++d) depths.push_back(d);
  for (Flavor f : fs)
    for (char c : keys) {
      auto sample = multiplier_oracle(on.language, on.nf, c, f, depth);
      for (const auto& pt : nerode_lower_bound(sample, depths))
        std::cout << "multiplier=" << (c == kEpsKey ? std::string("eps") : std::string(1, c)) << "/"
                  << flavor_name(f) << " depth=" << pt.depth << " bound=" << pt.bound << "\n";
    }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"One-relator semigroups: automaticity classification, automatic structures and verification"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_relation = [&](CLI::App* c) {
    c->add_option("relation", o.relation, "relation <word>=<word>; 1 is the empty word");
    c->add_option("--file", o.file, "presentation file (gens: / rel: lines)");
    c->add_option("--alphabet", o.alphabet, "letters in increasing order, e.g. a,b,c");
    c->add_option("--max-rules", o.max_rules, "completion rule limit")->capture_default_str();
    c->add_option("--max-len", o.max_len, "completion length limit")->capture_default_str();
  };
  auto add_witness = [&](CLI::App* c) {
    c->add_option("--flavor", o.flavor, "rr|rl|lr|ll|all (default: the declared flavors)");
    c->add_option("--seed", o.seed, "seed for the learner's random probes")->capture_default_str();
  };

  auto* classify_cmd = app.add_subcommand("classify", "print the verdict record");
  add_relation(classify_cmd);
  auto* table_cmd = app.add_subcommand("table", "classify every pattern with |v| <= |u| <= 3");
  table_cmd->add_option("--letters", o.letters, "number of abstract letters")->capture_default_str();
  auto* complete_cmd = app.add_subcommand("complete", "complete the relation under the declared order");
  add_relation(complete_cmd);
  auto* nf_cmd = app.add_subcommand("nf", "print the normal form system and reduce words");
  add_relation(nf_cmd);
  nf_cmd->add_option("--word", o.words, "word to reduce (repeatable)");
  auto* structure_cmd = app.add_subcommand("structure", "write the witness structure to a directory");
  add_relation(structure_cmd);
  add_witness(structure_cmd);
  structure_cmd->add_option("--out", o.out, "output directory");
  structure_cmd->add_option("--format", o.format, "text|dot")->capture_default_str();
  auto* verify_cmd = app.add_subcommand("verify", "verify the witness against the rewriting oracle");
  add_relation(verify_cmd);
  add_witness(verify_cmd);
  verify_cmd->add_option("--in", o.in, "verify a saved structure directory instead");
  verify_cmd->add_option("--depth", o.depth, "oracle depth (default 8)");
  auto* nerode_cmd = app.add_subcommand("nerode", "Nerode lower bounds of multiplier samples");
  add_relation(nerode_cmd);
  nerode_cmd->add_option("--depth", o.depth, "largest sample depth (default 10)");
  nerode_cmd->add_option("--flavor", o.flavor, "rr|rl|lr|ll|all (default rr)");
  nerode_cmd->add_option("--letter", o.letter, "letter or eps (default: every letter)");
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list normal forms up to a length");
  add_relation(enumerate_cmd);
  enumerate_cmd->add_option("--depth", o.depth, "largest length (default 6)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*classify_cmd) return cmd_classify(o);
    if (*table_cmd) return cmd_table(o);
    if (*complete_cmd) return cmd_complete(o);
    if (*nf_cmd) return cmd_nf(o);
    if (*structure_cmd) return cmd_structure(o);
    if (*verify_cmd) return cmd_verify(o);
    if (*nerode_cmd) return cmd_nerode(o);
    if (*enumerate_cmd) return cmd_enumerate(o);
  } catch (const invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const trivial_relation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const out_of_scope& e) {
    std::cerr << "out of scope: " << e.what() << "\n";
    return kScope;
  } catch (const not_applicable& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return kFail;
  } catch (const contract_error& e) {
    std::cerr << "contract error: " << e.what() << "\n";
    return kContract;
  }
  return kOk;
}
