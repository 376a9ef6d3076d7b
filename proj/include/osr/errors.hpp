#pragma once

#include <stdexcept>
#include <string>

namespace osr {

struct invalid_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A caller-declared bound or precondition was violated.
struct contract_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct not_applicable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct out_of_scope : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct trivial_relation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace osr
