#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace eit {

/// Locale-independent rendering with 17 significant digits.
std::string format_double(double value);

std::optional<double> parse_double(std::string_view text);
std::optional<long long> parse_integer(std::string_view text);

}  // namespace eit
