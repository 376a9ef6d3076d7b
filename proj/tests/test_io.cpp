#include <doctest.h>

#include <filesystem>
#include <random>

#include "helpers.hpp"
#include "osr/classifier.hpp"
#include "osr/errors.hpp"
#include "osr/io.hpp"

using namespace osr;
using namespace osr::testing;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
  auto d = std::filesystem::temp_directory_path() / ("osr_test_" + name);
  std::filesystem::remove_all(d);
  return d;
}

}  // namespace

TEST_CASE("fsa text format") {
  Alphabet ab("ab");
  Fsa m = containing(ab, "ab");
  std::string text = write_fsa(m, letter_names(ab));
  CHECK(text.rfind("domain a b\n", 0) == 0);
  std::vector<std::string> names;
  Fsa back = read_fsa(text, &names);
  CHECK(names == letter_names(ab));
  CHECK(equivalent(back, m).equal);

  Fsa p = read_fsa("domain a|a a|$\nstate 0 initial\nstate 1 accept\ntrans 0 a|a 1\ntrans 1 EPS 0\n");
  CHECK(p.nsym == 2);
  CHECK(accepts(p, {0}));
  CHECK(accepts(p, {0, 0}));
  CHECK_FALSE(accepts(p, {1}));
}

TEST_CASE("fsa text format errors") {
  CHECK_THROWS_AS(read_fsa("state 0 initial\n"), invalid_input);
  CHECK_THROWS_AS(read_fsa("domain a b\ntrans 0 c 1\n"), invalid_input);
  CHECK_THROWS_AS(read_fsa("domain a b\nstate x\n"), invalid_input);
  CHECK_THROWS_AS(read_fsa("domain a b\nstate 0 final\n"), invalid_input);
  CHECK_THROWS_AS(read_fsa("domain a a\n"), invalid_input);
  CHECK_THROWS_AS(read_fsa("domain a\nedge 0 a 1\n"), invalid_input);
}

TEST_CASE("property: fsa text round trip") {
  std::mt19937 rng(17);
  Alphabet ab("ab");
  auto names = pair_names(ab);
  for (int trial = 0; trial < 40; ++trial) {
    Fsa m = random_nfa(rng, static_cast<int>(names.size()), 2 + trial % 5);
    Fsa back = read_fsa(write_fsa(m, names));
    CHECK(equivalent(back, m).equal);
    CHECK(back.num_states() == m.num_states());
  }
}

TEST_CASE("dot export") {
  Alphabet ab("ab");
  std::string dot = write_dot(lit(ab, "ab"), letter_names(ab), "ab");
  CHECK(dot.rfind("digraph \"ab\"", 0) == 0);
  CHECK(dot.find("doublecircle") != std::string::npos);
  CHECK(dot.find("label=\"a\"") != std::string::npos);
}

TEST_CASE("normal form round trip") {
  Presentation p = parse_relation("aab=bb");
  Witness w = build_witness(p, classify(p));
  NormalForm back = read_normal_form(write_normal_form(w.nf));
  CHECK(back.alphabet == w.nf.alphabet);
  CHECK(back.rs.rules == w.nf.rs.rules);
  CHECK(back.gsm.has_value() == w.nf.gsm.has_value());
  for (const auto& x : words_up_to(w.nf.alphabet, 5)) CHECK(back.rep(x) == w.nf.rep(x));

  auto on = normal_form_for(parse_relation("aba=ba"));
  REQUIRE(on.has_value());
  NormalForm s = read_normal_form(write_normal_form(on->nf));
  CHECK(s.rs.schemas == on->nf.rs.schemas);
  CHECK_THROWS_AS(read_normal_form("alphabet a,b\n"), invalid_input);
}

TEST_CASE("structure directory round trip re-verifies identically") {
  for (const char* rel : {"ab=ba", "aab=bb", "aba=1"}) {
    Presentation p = parse_relation(rel);
    Witness w = build_witness(p, classify(p));
    auto dir = scratch_dir(std::string("rt_") + std::to_string(std::hash<std::string>{}(rel)));
    save_structure(w.structure, w.nf, dir, ExportFormat::dot);
    CHECK(std::filesystem::exists(dir / "acceptor.fsa"));
    CHECK(std::filesystem::exists(dir / "acceptor.dot"));
    CHECK(std::filesystem::exists(dir / "prefix_eq.fsa"));
    CHECK(std::filesystem::exists(dir / "mult_eps_rr.fsa"));
    LoadedStructure ls = load_structure(dir);
    CHECK(ls.structure.case_id == w.structure.case_id);
    CHECK(ls.structure.provenance == w.structure.provenance);
    CHECK(ls.structure.flavors() == w.structure.flavors());
    CHECK(verify_structure(ls.structure, ls.nf, 6).str() == verify_structure(w.structure, w.nf, 6).str());
    std::filesystem::remove_all(dir);
  }
}
