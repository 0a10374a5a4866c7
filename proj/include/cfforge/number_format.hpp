#ifndef CFFORGE_NUMBER_FORMAT_HPP
#define CFFORGE_NUMBER_FORMAT_HPP

#include <string>
#include <string_view>

namespace cfforge {

/// Shortest decimal string that parses back to exactly `v`.
std::string format_double(double v);

/// Inverse of format_double; throws std::invalid_argument on junk.
double parse_double(std::string_view text);

}  // namespace cfforge

#endif  // CFFORGE_NUMBER_FORMAT_HPP
