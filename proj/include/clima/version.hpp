#pragma once

#include <string_view>

namespace clima {

std::string_view version();

/// Contents of the global axis-range preset file shipped with this build.
std::string_view global_ranges_json();

}  // namespace clima
