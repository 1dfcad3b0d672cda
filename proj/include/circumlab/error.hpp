#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace circumlab {

enum class Errc {
  MalformedGraph6,
  Unsupported,
  InvalidArgument,
  Disconnected,
  Acyclic,
  NoVineFound,
  VineTooSmall,
  DegenerateUnion,
  PrereqViolation,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::MalformedGraph6: return "MalformedGraph6";
    case Errc::Unsupported: return "Unsupported";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Disconnected: return "Disconnected";
    case Errc::Acyclic: return "Acyclic";
    case Errc::NoVineFound: return "NoVineFound";
    case Errc::VineTooSmall: return "VineTooSmall";
    case Errc::DegenerateUnion: return "DegenerateUnion";
    case Errc::PrereqViolation: return "PrereqViolation";
  }
  return "Unknown";
}

// Every failure raised by the library carries one of the codes above so
// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace circumlab
