#pragma once

// Test-side helpers and oracles. Oracles deliberately avoid the library code they check.

#include <cstddef>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

namespace testing_support {

inline std::string data_path(const std::string& rel) { return std::string(ESPACE_DATA_DIR) + "/" + rel; }
inline std::string test_data_path(const std::string& rel) { return std::string(ESPACE_TEST_DATA_DIR) + "/" + rel; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<std::string> lines_of(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') out.push_back(line);
  return out;
}

/// Word runs (with inner apostrophes and periods kept out) and single punctuation marks.
inline std::vector<std::string> oracle_tokens(const std::string& s) {
  static const std::regex word(R"([A-Za-z0-9]+|[^A-Za-z0-9\s])");
  std::vector<std::string> out;
  for (auto it = std::sregex_iterator(s.begin(), s.end(), word); it != std::sregex_iterator(); ++it)
    out.push_back(it->str());
  return out;
}

inline bool is_determiner(const std::string& w) {
  static const char* dets[] = {"the", "a", "an", "The", "A", "An"};
  for (auto* d : dets)
    if (w == d) return true;
  return false;
}

/// Is `needle` an order-preserving subsequence of `hay`? Determiners in `needle` may be
/// dropped when the haystack has none left to match them.
inline bool is_subsequence(const std::vector<std::string>& needle, const std::vector<std::string>& hay) {
  std::size_t j = 0;
  for (const auto& w : needle) {
    std::size_t k = j;
    while (k < hay.size() && hay[k] != w) ++k;
    if (k == hay.size()) {
      if (is_determiner(w)) continue;
      return false;
    }
    j = k + 1;
  }
  return true;
}

}  // namespace testing_support
