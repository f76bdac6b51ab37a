#pragma once

#include <stdexcept>
#include <string>

namespace ssr {

enum class Errc {
  parse_error,
  positivity_violation,
  wrong_kind,
  dimension_mismatch,
  singular_innovation,
  underidentified,
  nonfinite,
  insufficient_data,
  invalid_argument,
  io_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::parse_error: return "parse_error";
    case Errc::positivity_violation: return "positivity_violation";
    case Errc::wrong_kind: return "wrong_kind";
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::singular_innovation: return "singular_innovation";
    case Errc::underidentified: return "underidentified";
    case Errc::nonfinite: return "nonfinite";
    case Errc::insufficient_data: return "insufficient_data";
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::io_error: return "io_error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ssr
