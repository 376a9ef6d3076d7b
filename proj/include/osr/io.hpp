#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "osr/fsa.hpp"
#include "osr/structures.hpp"

namespace osr {

// Names of the symbols 0..nsym-1: letters, or `x|y` pairs with `$` for padding.
std::vector<std::string> letter_names(const Alphabet& a);
std::vector<std::string> pair_names(const Alphabet& a);

// Text format, one item per line:
//   domain <sym> <sym> ...
//   state <id> [initial] [accept]
//   trans <src> <sym|EPS> <dst>
std::string write_fsa(const Fsa& m, const std::vector<std::string>& names);
// Symbols are resolved against the domain line; `names` receives it when given.
Fsa read_fsa(const std::string& text, std::vector<std::string>* names = nullptr);
std::string write_dot(const Fsa& m, const std::vector<std::string>& names, const std::string& title = "fsa");

// Normal form (alphabet, rules, schemas, gsm) as text.
std::string write_normal_form(const NormalForm& nf);
NormalForm read_normal_form(const std::string& text);

enum class ExportFormat { text, dot };

// Directory with acceptor.fsa, mult_<letter|eps>_<flavor>.fsa, prefix_eq.fsa,
// meta and normal_form; DOT copies are added for ExportFormat::dot.
void save_structure(const AutomaticStructure& s, const NormalForm& nf, const std::filesystem::path& dir,
                    ExportFormat format = ExportFormat::text);
struct LoadedStructure {
  AutomaticStructure structure;
  NormalForm nf;
};
LoadedStructure load_structure(const std::filesystem::path& dir);

std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, const std::string& text);

}  // namespace osr
