#ifndef SPINED_ERROR_HPP
#define SPINED_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace spined {

enum class Errc {
  cap_exceeded,
  invalid_argument,
  legs_not_mono,
  legs_invalid,
  spine_mismatch,
  not_reflexive_mono,
  out_of_range,
  apex_mismatch,
  invalid_permutation,
  not_chordal,
  no_mediator,
  no_distinguished_preimage,
  surjection_misses_spine,
  antisymmetry_violated,
  parse_error,
};

inline std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::cap_exceeded: return "cap-exceeded";
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::legs_not_mono: return "legs-not-mono";
    case Errc::legs_invalid: return "legs-invalid";
    case Errc::spine_mismatch: return "spine-mismatch";
    case Errc::not_reflexive_mono: return "input-not-reflexive-mono";
    case Errc::out_of_range: return "n-out-of-range";
    case Errc::apex_mismatch: return "apex-mismatch";
    case Errc::invalid_permutation: return "invalid-permutation";
    case Errc::not_chordal: return "not-chordal";
    case Errc::no_mediator: return "no-mediator";
    case Errc::no_distinguished_preimage: return "no-distinguished-preimage";
    case Errc::surjection_misses_spine: return "surjection-misses-spine";
    case Errc::antisymmetry_violated: return "antisymmetry-violated";
    case Errc::parse_error: return "parse-error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace spined

#endif  // SPINED_ERROR_HPP
