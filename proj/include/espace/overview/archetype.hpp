#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "espace/error.hpp"

namespace espace::overview {

struct ArchetypalQuestion {
  std::string name;
  std::size_t rank = 0;  // 1 = most specific
  std::string question_text;

  friend bool operator==(const ArchetypalQuestion&, const ArchetypalQuestion&) = default;
};

inline constexpr std::array<std::string_view, 7> kArchetypeNames = {"why",   "what-for", "how", "who",
                                                                    "where", "when",     "what"};

inline std::string question_text_for(std::string_view name) {
  if (name == "what-for") return "what for";
  return std::string(name);
}

/// The seven archetypes ranked by the given order (most specific first).
/// Throws Error(Configuration) unless `order` is a permutation of the seven names.
inline std::vector<ArchetypalQuestion> make_archetypes(const std::vector<std::string>& order) {
  std::vector<std::string> sorted = order, expected(kArchetypeNames.begin(), kArchetypeNames.end());
  std::sort(sorted.begin(), sorted.end());
  std::sort(expected.begin(), expected.end());
  if (sorted != expected)
    throw Error(ErrorCode::Configuration, "archetype order must list why, what-for, how, who, where, when, what once each");
  std::vector<ArchetypalQuestion> out;
  for (std::size_t i = 0; i < order.size(); ++i) out.push_back({order[i], i + 1, question_text_for(order[i])});
  return out;
}

inline std::vector<std::string> default_archetype_order() {
  return {kArchetypeNames.begin(), kArchetypeNames.end()};
}

inline const std::vector<ArchetypalQuestion>& default_archetypes() {
  static const auto a = make_archetypes(default_archetype_order());
  return a;
}

}  // namespace espace::overview
