#pragma once

#include <stdexcept>
#include <string>

namespace ssa {

/// Malformed text input (bad DNA letter, bad block-set file, ...).
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// Decoder input that no encoder in this library can have produced.
class not_a_codeword : public std::runtime_error {
 public:
  explicit not_a_codeword(const std::string& what) : std::runtime_error("not a codeword: " + what) {}
};

}  // namespace ssa
