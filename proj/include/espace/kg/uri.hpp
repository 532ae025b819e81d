#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "espace/error.hpp"
#include "espace/nlp/lemmatizer.hpp"
#include "espace/text.hpp"

namespace espace::kg {

inline constexpr std::string_view kDefaultNamespace = "ns:";

namespace detail {

inline bool uri_char(char c) {
  return text::is_alnum(c) || c == '-' || c == '.' || static_cast<unsigned char>(c) >= 0x80;
}

}  // namespace detail

/// Lowercased, per-token noun lemmas of a label. Underscores and spaces separate
/// tokens; characters outside [a-z0-9.-] and non-ASCII also split.
inline std::vector<std::string> label_lemmas(std::string_view label) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    while (!cur.empty() && (cur.back() == '.' || cur.back() == '-')) cur.pop_back();
    std::size_t lead = 0;
    while (lead < cur.size() && (cur[lead] == '.' || cur[lead] == '-')) ++lead;
    cur.erase(0, lead);
    if (!cur.empty()) out.push_back(nlp::noun_lemma(text::lower(cur)));
    cur.clear();
  };
  for (char c : label) {
    if (detail::uri_char(c))
      cur += c;
    else
      flush();
  }
  flush();
  return out;
}

/// "Bank Accounts" -> "ns:bank_account". Labels already carrying the namespace are
/// re-minted from their local part, so minting is idempotent.
inline std::string mint_uri(std::string_view label, std::string_view ns = kDefaultNamespace) {
  std::string_view local = label;
  if (!ns.empty() && local.substr(0, ns.size()) == ns) local.remove_prefix(ns.size());
  auto lemmas = label_lemmas(local);
  if (lemmas.empty()) throw Error(ErrorCode::EmptyInput, "cannot mint a uri from an empty label");
  return std::string(ns) + text::join(lemmas, "_");
}

/// "ns:bank_account" -> "bank account".
inline std::string label_from_uri(std::string_view uri, std::string_view ns = kDefaultNamespace) {
  if (!ns.empty() && uri.substr(0, ns.size()) == ns) uri.remove_prefix(ns.size());
  std::string out(uri);
  for (char& c : out)
    if (c == '_') c = ' ';
  return out;
}

}  // namespace espace::kg
