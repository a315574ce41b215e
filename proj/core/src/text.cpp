#include "qpsurf/detail/text.hpp"

#include <cctype>

namespace qpsurf::detail {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(start, end - start);
    // '#' opens a comment only at the start of a token; arrow ids like "1>2#1" keep theirs.
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '#' && (i == 0 || std::isspace(static_cast<unsigned char>(line[i - 1])))) {
        line = line.substr(0, i);
        break;
      }
    }
    std::size_t b = 0;
    std::size_t e = line.size();
    while (b < e && std::isspace(static_cast<unsigned char>(line[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(line[e - 1]))) --e;
    if (e > b) out.push_back({number, std::string(line.substr(b, e - b))});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

bool split_key_value(std::string_view token, std::string_view key, std::string& value) {
  if (token.size() <= key.size() || token.substr(0, key.size()) != key || token[key.size()] != '=') return false;
  value = std::string(token.substr(key.size() + 1));
  return true;
}

}  // namespace qpsurf::detail
