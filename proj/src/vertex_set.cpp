#include "hk/vertex_set.hpp"

#include <charconv>
#include <sstream>

#include "hk/errors.hpp"

namespace hk {

std::string format_set(VertexSet x) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (int v : x.elements()) {
    if (!first) out << ",";
    out << v;
    first = false;
  }
  out << "}";
  return out.str();
}

VertexSet parse_set(std::string_view text, int n) {
  // Strip surrounding whitespace.
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text == "-" || text.empty()) return VertexSet{};

  VertexSet out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start);
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size()) {
      throw ParseError(0, "bad set element '" + std::string(item) + "'");
    }
    if (v < 1 || v > n) {
      throw ParseError(0, "set element " + std::to_string(v) +
                              " out of range [1, " + std::to_string(n) + "]");
    }
    out |= VertexSet::single(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace hk
