#ifndef QPSURF_DETAIL_TEXT_HPP
#define QPSURF_DETAIL_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace qpsurf::detail {

/// Splits on whitespace.
std::vector<std::string> tokenize(std::string_view line);

/// Splits into lines, strips '#' comments and surrounding blanks, drops empty lines.
/// Each entry keeps its 1-based source line number.
struct Line {
  std::size_t number;
  std::string text;
};
std::vector<Line> content_lines(std::string_view text);

/// "key=value" -> value if the token has that key, else empty optional-like "".
bool split_key_value(std::string_view token, std::string_view key, std::string& value);

}  // namespace qpsurf::detail

#endif  // QPSURF_DETAIL_TEXT_HPP
