#include "rslist/io.hpp"

#include <charconv>

#include "rslist/errors.hpp"

namespace rslist {
namespace {

uint32_t parse_u32(const std::string& s) {
  uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw MalformedInput("expected a nonnegative integer, got '" + s + "'");
  return v;
}

}  // namespace

std::pair<uint32_t, uint32_t> parse_field_spec(const std::string& s) {
  size_t caret = s.find('^');
  if (caret == std::string::npos) return {parse_u32(s), 1};
  return {parse_u32(s.substr(0, caret)), parse_u32(s.substr(caret + 1))};
}

std::vector<uint32_t> parse_symbols(const std::string& s) {
  std::vector<uint32_t> out;
  if (s.empty()) throw MalformedInput("empty symbol list");
  size_t pos = 0;
  while (true) {
    size_t comma = s.find(',', pos);
    out.push_back(parse_u32(s.substr(pos, comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string format_symbols(const std::vector<uint32_t>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string format_poly(const UniPoly& h) {
  if (h.is_zero()) return "0";
  return format_symbols(h.coeffs());
}

}  // namespace rslist
