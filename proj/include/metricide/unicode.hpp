#pragma once

#include <cstddef>
#include <string>
#include <string_view>

// Thin wrappers over ICU for the handful of Unicode operations the metrics
// need. All strings are UTF-8.
namespace metricide::unicode {

std::string nfc(std::string_view text);
std::string to_lower(std::string_view text);

bool is_space(char32_t cp);
bool is_alpha(char32_t cp);

/// Number of code points that are not white space.
std::size_t count_non_space(std::string_view text);
/// Number of alphabetic code points.
std::size_t count_alpha(std::string_view text);

}  // namespace metricide::unicode
