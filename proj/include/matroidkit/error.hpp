// Copyright 2026 The MatroidKit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace matroidkit {

enum class Errc {
  universe_mismatch,
  overlapping_universes,
  not_defined,
  precondition_violated,
  too_large,
  not_common_independent,
  state_invariant_broken,
  postcondition_failed,
  extension_failed,
  stuck,
  invalid_input_packcov,
  demand_out_of_range,
  certificate_invalid,
  parse_error,
};

constexpr std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::universe_mismatch: return "UniverseMismatch";
    case Errc::overlapping_universes: return "OverlappingUniverses";
    case Errc::not_defined: return "NotDefined";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::too_large: return "TooLarge";
    case Errc::not_common_independent: return "NotCommonIndependent";
    case Errc::state_invariant_broken: return "StateInvariantBroken";
    case Errc::postcondition_failed: return "PostconditionFailed";
    case Errc::extension_failed: return "ExtensionFailed";
    case Errc::stuck: return "Stuck";
    case Errc::invalid_input_packcov: return "InvalidInputPackCov";
    case Errc::demand_out_of_range: return "DemandOutOfRange";
    case Errc::certificate_invalid: return "CertificateInvalid";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Internal failures (solver bugs) as opposed to bad input.
constexpr bool is_internal(Errc code) {
  return code == Errc::stuck || code == Errc::postcondition_failed ||
         code == Errc::extension_failed || code == Errc::certificate_invalid ||
         code == Errc::state_invariant_broken;
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace matroidkit
