#pragma once

// Line-oriented helpers shared by the data-file loaders. Internal header.

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "powerwords/error.hpp"

namespace powerwords::detail {

inline std::string_view trim(std::string_view s) {
  constexpr std::string_view kWs = " \t\r\n\f\v";
  const auto b = s.find_first_not_of(kWs);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(kWs);
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// Visits every line that is neither blank nor a `#` comment, passing the
// 1-based line number and the trimmed content.
template <typename Fn>
void for_each_data_line(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    fn(number, content);
  }
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataFileError(path.string(), 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <typename Loader>
auto load_from_file(const std::filesystem::path& path, Loader&& loader) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataFileError(path.string(), 0, "cannot open file");
  return loader(in, path.string());
}

}  // namespace powerwords::detail
