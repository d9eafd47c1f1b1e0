#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rslist/unipoly.hpp"

namespace rslist {

/// Parses "p" or "p^m" into (characteristic, extension degree).
std::pair<uint32_t, uint32_t> parse_field_spec(const std::string& s);

/// Parses a comma-separated list of nonnegative integers, e.g. "6,2,4".
std::vector<uint32_t> parse_symbols(const std::string& s);

/// Joins symbols with commas.
std::string format_symbols(const std::vector<uint32_t>& v);

/// Coefficients lowest degree first, comma-separated; the zero polynomial
/// prints as "0".
std::string format_poly(const UniPoly& h);

}  // namespace rslist
