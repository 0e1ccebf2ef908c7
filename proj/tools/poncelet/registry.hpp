#pragma once

#include <span>
#include <string_view>

namespace poncelet::cli {

/// One verified result. Check records point at these by id.
struct RegisteredResult {
  std::string_view id;
  std::string_view statement;
};

std::span<const RegisteredResult> registry();

/// nullptr when unknown.
const RegisteredResult* find_result(std::string_view id);

}  // namespace poncelet::cli
