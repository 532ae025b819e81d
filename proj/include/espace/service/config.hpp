#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "espace/error.hpp"
#include "espace/overview/archetype.hpp"
#include "espace/overview/overview.hpp"
#include "espace/text.hpp"

namespace espace::service {

struct PipelineConfig {
  // inputs; relative paths are resolved against the config file's directory
  std::string manifest;
  std::string lexicon;          // TSV dump or WordNet dict directory; empty = no taxonomy
  std::string frequency_table;  // required for annotation
  std::string static_dir;

  std::string ns = "ns:";
  std::string parser = "reference";
  std::string embedder = "reference";
  std::string embedder_url;
  std::size_t embedding_dimension = 512;
  double context_weight = 0.5;
  std::string summarizer = "reference";
  std::string wsd = "most-frequent-sense";

  double pertinence_threshold = 0.55;
  std::size_t fanout = 3;
  std::size_t summary_budget = 500;
  std::size_t abstract_budget = 200;
  std::size_t frequency_rank_cutoff = 1000;
  std::vector<std::string> archetype_order = overview::default_archetype_order();
  std::size_t max_fca_objects = 5000;
  std::size_t betweenness_samples = 0;
  unsigned threads = 1;

  std::string host = "127.0.0.1";
  int port = 8080;
  std::size_t annotate_max_bytes = 64 * 1024;

  /// Throws Error(Configuration) on out-of-range values.
  void validate() const {
    auto fail = [](const std::string& m) { throw Error(ErrorCode::Configuration, m); };
    if (!(pertinence_threshold >= 0.0 && pertinence_threshold <= 1.0)) fail("pertinence_threshold must lie in [0, 1]");
    if (fanout < 2 || fanout > 64) fail("fanout must lie in [2, 64]");
    if (summary_budget < 1 || summary_budget > 100000) fail("summary_budget must lie in [1, 100000]");
    if (abstract_budget < 1 || abstract_budget > 100000) fail("abstract_budget must lie in [1, 100000]");
    if (embedding_dimension < 1 || embedding_dimension > 65536) fail("embedding_dimension must lie in [1, 65536]");
    if (!(context_weight >= 0.0 && context_weight <= 1.0)) fail("context_weight must lie in [0, 1]");
    if (max_fca_objects < 1) fail("max_fca_objects must be positive");
    if (port < 0 || port > 65535) fail("port must lie in [0, 65535]");
    if (annotate_max_bytes < 1) fail("annotate_max_bytes must be positive");
    if (threads < 1 || threads > 256) fail("threads must lie in [1, 256]");
    if (parser != "reference") fail("unknown parser " + parser);
    if (embedder != "reference" && embedder != "external") fail("embedder must be reference or external");
    if (embedder == "external" && embedder_url.empty()) fail("embedder_url is required for the external embedder");
    if (summarizer != "reference") fail("unknown summarizer " + summarizer);
    if (wsd != "most-frequent-sense") fail("unknown wsd " + wsd);
    if (ns.empty()) fail("namespace must not be empty");
    overview::make_archetypes(archetype_order);
  }

  /// Settings that change what the pipeline produces (paths, host and port excluded).
  nlohmann::json content_json() const {
    return {{"namespace", ns},
            {"parser", parser},
            {"embedder", embedder},
            {"embedder_url", embedder_url},
            {"embedding_dimension", embedding_dimension},
            {"context_weight", context_weight},
            {"summarizer", summarizer},
            {"wsd", wsd},
            {"pertinence_threshold", pertinence_threshold},
            {"fanout", fanout},
            {"summary_budget", summary_budget},
            {"abstract_budget", abstract_budget},
            {"frequency_rank_cutoff", frequency_rank_cutoff},
            {"archetype_order", archetype_order},
            {"max_fca_objects", max_fca_objects},
            {"betweenness_samples", betweenness_samples}};
  }

  std::uint64_t hash() const { return text::fnv1a(content_json().dump()); }

  overview::OverviewConfig overview_config() const {
    overview::OverviewConfig c;
    c.threshold = pertinence_threshold;
    c.fanout = fanout;
    c.summary_budget = summary_budget;
    c.abstract_budget = abstract_budget;
    c.archetypes = overview::make_archetypes(archetype_order);
    return c;
  }

  /// Unknown keys are rejected so typos do not silently fall back to defaults.
  static PipelineConfig from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {}) {
    static const std::vector<std::string> known = {
        "manifest", "lexicon", "frequency_table", "static_dir", "namespace", "parser", "embedder", "embedder_url",
        "embedding_dimension", "context_weight", "summarizer", "wsd", "pertinence_threshold", "fanout",
        "summary_budget", "abstract_budget", "frequency_rank_cutoff", "archetype_order", "max_fca_objects",
        "betweenness_samples", "threads", "host", "port", "annotate_max_bytes"};
    if (!j.is_object()) throw Error(ErrorCode::Configuration, "configuration must be a JSON object");
    for (const auto& [key, value] : j.items())
      if (std::find(known.begin(), known.end(), key) == known.end())
        throw Error(ErrorCode::Configuration, "unknown configuration key " + key);
    PipelineConfig c;
    try {
      auto path = [&](const char* key, std::string& field) {
        if (!j.contains(key)) return;
        std::filesystem::path p = j.at(key).get<std::string>();
        field = (p.is_relative() && !base_dir.empty() ? base_dir / p : p).lexically_normal().string();
      };
      path("manifest", c.manifest);
      path("lexicon", c.lexicon);
      path("frequency_table", c.frequency_table);
      path("static_dir", c.static_dir);
      c.ns = j.value("namespace", c.ns);
      c.parser = j.value("parser", c.parser);
      c.embedder = j.value("embedder", c.embedder);
      c.embedder_url = j.value("embedder_url", c.embedder_url);
      c.embedding_dimension = j.value("embedding_dimension", c.embedding_dimension);
      c.context_weight = j.value("context_weight", c.context_weight);
      c.summarizer = j.value("summarizer", c.summarizer);
      c.wsd = j.value("wsd", c.wsd);
      c.pertinence_threshold = j.value("pertinence_threshold", c.pertinence_threshold);
      c.fanout = j.value("fanout", c.fanout);
      c.summary_budget = j.value("summary_budget", c.summary_budget);
      c.abstract_budget = j.value("abstract_budget", c.abstract_budget);
      c.frequency_rank_cutoff = j.value("frequency_rank_cutoff", c.frequency_rank_cutoff);
      c.archetype_order = j.value("archetype_order", c.archetype_order);
      c.max_fca_objects = j.value("max_fca_objects", c.max_fca_objects);
      c.betweenness_samples = j.value("betweenness_samples", c.betweenness_samples);
      c.threads = j.value("threads", c.threads);
      c.host = j.value("host", c.host);
      c.port = j.value("port", c.port);
      c.annotate_max_bytes = j.value("annotate_max_bytes", c.annotate_max_bytes);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::Configuration, std::string("bad configuration value: ") + e.what());
    }
    c.validate();
    return c;
  }

  static PipelineConfig load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw Error(ErrorCode::Configuration, "cannot open configuration " + file.string());
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::Configuration, std::string("configuration is not valid JSON: ") + e.what());
    }
    return from_json(j, file.parent_path());
  }
};

struct ManifestEntry {
  std::string path;
  std::string title;
};

/// `path \t title` per line ('#' comments); relative paths resolve against the manifest's directory.
inline std::vector<ManifestEntry> read_manifest(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorCode::Io, "cannot open manifest " + file.string());
  std::vector<ManifestEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (text::trim(line).empty() || text::trim(line)[0] == '#') continue;
    auto tab = line.find('\t');
    std::filesystem::path p = std::string(text::trim(line.substr(0, tab)));
    std::string title = tab == std::string::npos ? p.stem().string() : std::string(text::trim(line.substr(tab + 1)));
    if (p.is_relative()) p = file.parent_path() / p;
    out.push_back({p.lexically_normal().string(), title});
  }
  return out;
}

}  // namespace espace::service
