#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace clima {

/// Shortest text that parses back to exactly `v`.
std::string format_exact(double v);

/// At most `digits` significant digits, locale independent. Used for SVG
/// coordinates so output is stable across platforms.
std::string format_sig(double v, int digits = 6);

/// Strict numeric parse: surrounding spaces allowed, nothing else. Non-finite
/// values are rejected.
std::optional<double> parse_double(std::string_view text);
std::optional<long long> parse_int(std::string_view text);

std::string_view trim(std::string_view s);

}  // namespace clima
