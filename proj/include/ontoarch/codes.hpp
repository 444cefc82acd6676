#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "ontoarch/diagnostic.hpp"

namespace ontoarch {

/// Documentation for one stable diagnostic code.
struct CodeInfo {
  std::string_view code;
  std::optional<RuleId> rule;
  std::string_view title;
  /// Verbatim ThingFO wording the code enforces; empty for front-end codes.
  std::string_view anchor;
  /// A minimal input that triggers the code.
  std::string_view example;
};

std::span<const CodeInfo> all_codes();
const CodeInfo* find_code(std::string_view code);

}  // namespace ontoarch
