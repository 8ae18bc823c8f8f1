#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mpcq {

enum class Errc {
  Parse,
  Schema,
  RankMismatch,
  NonUnimodular,
  NotSymplectic,
  StepTooCoarse,
  NotPrequantizable,
  NoFixedPoints,
  InconsistentDefects,
  RankUnsupported,
  UnboundedNeedsWindow,
  Unbounded,
  NoPolyhedron,
  NotQuantized,
  ActionNotFree,
  NotOnLevelSet,
  InvalidGenerator,
  UnsupportedModel,
};

std::string_view errc_name(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above so
// callers (and the CLI exit-code mapping) can branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mpcq
