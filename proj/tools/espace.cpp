// espace: build, serve and query an Explanatory Space snapshot.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "espace/nlp/parser.hpp"
#include "espace/nlp/senses.hpp"
#include "espace/service/http.hpp"

using namespace espace;

namespace {

std::string default_snapshot_dir() {
  const char* env = std::getenv("ESPACE_SNAPSHOT");
  return env ? env : "espace-snapshot";
}

struct Overrides {
  std::optional<std::string> manifest, ns;
  std::optional<double> threshold;
  std::optional<std::size_t> fanout, summary_budget, rank_cutoff, samples;
  std::optional<unsigned> threads;

  void add_to(CLI::App* app) {
    app->add_option("--manifest", manifest, "Corpus manifest (path<TAB>title per line)");
    app->add_option("--namespace", ns, "URI namespace prefix");
    app->add_option("--pertinence-threshold", threshold, "Minimum question/answer inner product");
    app->add_option("--fanout", fanout, "Summary tree fan-out");
    app->add_option("--summary-budget", summary_budget, "Summary length in code points");
    app->add_option("--rank-cutoff", rank_cutoff, "Frequency rank at or below which a word is common");
    app->add_option("--betweenness-samples", samples, "Sampled sources for betweenness (0 = exact)");
    app->add_option("--threads", threads, "Parser threads");
  }

  void apply(service::PipelineConfig& c) const {
    if (manifest) c.manifest = *manifest;
    if (ns) c.ns = *ns;
    if (threshold) c.pertinence_threshold = *threshold;
    if (fanout) c.fanout = *fanout;
    if (summary_budget) c.summary_budget = *summary_budget;
    if (rank_cutoff) c.frequency_rank_cutoff = *rank_cutoff;
    if (samples) c.betweenness_samples = *samples;
    if (threads) c.threads = *threads;
    c.validate();
  }
};

int ingest(const std::string& config_path, const Overrides& ov, const std::string& out_dir) {
  auto config = config_path.empty() ? service::PipelineConfig{} : service::PipelineConfig::load(config_path);
  ov.apply(config);
  if (config.manifest.empty()) throw Error(ErrorCode::Configuration, "no manifest given");
  std::vector<std::string> warnings;
  auto docs = service::load_documents(service::read_manifest(config.manifest), warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';

  std::optional<nlp::LexicalDatabase> lexicon;
  if (!config.lexicon.empty()) lexicon = nlp::LexicalDatabase::load(config.lexicon);
  else std::cerr << "warning: no lexicon configured; the taxonomy will be empty\n";
  annotate::FrequencyTable freq;
  if (!config.frequency_table.empty()) freq = annotate::FrequencyTable::load(config.frequency_table);
  else std::cerr << "warning: no frequency table configured; annotation will be unavailable\n";

  nlp::RuleBasedParser parser;
  auto snap = service::build_snapshot(docs, config, {parser, lexicon ? &*lexicon : nullptr, std::move(freq)});
  for (const auto& w : snap.graph.warnings) std::cerr << "warning: " << w << '\n';
  service::write_snapshot(snap, out_dir);
  std::cout << "concepts " << snap.graph.concepts.size() << "\ntriples " << snap.graph.triples.size() << "\ntrees "
            << snap.forest.trees.size() << "\nsnapshot " << out_dir << '\n';
  return 0;
}

std::string read_text(const std::string& text, const std::string& file) {
  if (!file.empty()) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot read " + file);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  if (!text.empty()) return text;
  std::ostringstream ss;
  ss << std::cin.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explanatory Space engine"};
  app.require_subcommand(1);
  std::string snapshot_dir = default_snapshot_dir();
  app.add_option("--snapshot", snapshot_dir, "Snapshot directory (default: $ESPACE_SNAPSHOT)");

  std::string config_path;
  Overrides ov;
  auto* ingest_cmd = app.add_subcommand("ingest", "Build a snapshot from a corpus manifest");
  ingest_cmd->add_option("--config", config_path, "PipelineConfig JSON")->check(CLI::ExistingFile);
  ov.add_to(ingest_cmd);

  std::string host = "127.0.0.1", static_dir;
  std::optional<int> port;
  auto* serve_cmd = app.add_subcommand("serve", "Serve a snapshot over HTTP");
  serve_cmd->add_option("--host", host);
  serve_cmd->add_option("--port", port, "Defaults to the snapshot's configured port");
  serve_cmd->add_option("--static", static_dir, "Directory served at /");

  std::string uri;
  auto* overview_cmd = app.add_subcommand("overview", "Print a concept's overview JSON");
  overview_cmd->add_option("uri", uri)->required();

  std::string text, file;
  bool html = false;
  auto* annotate_cmd = app.add_subcommand("annotate", "Annotate text (argument, file or stdin)");
  annotate_cmd->add_option("--text", text);
  annotate_cmd->add_option("--file", file);
  annotate_cmd->add_flag("--html", html, "Include annotated HTML");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*ingest_cmd) return ingest(config_path, ov, snapshot_dir);

    auto engine = std::make_shared<const service::Engine>(service::read_snapshot(snapshot_dir));
    if (*overview_cmd) {
      const auto& g = engine->snapshot().graph;
      if (!g.contains(uri) && g.contains(g.ns + uri)) uri = g.ns + uri;
      std::cout << engine->overview_json(uri) << '\n';
    } else if (*annotate_cmd) {
      std::cout << engine->annotate_json(read_text(text, file), html).dump(2) << '\n';
    } else if (*serve_cmd) {
      const auto& cfg = engine->snapshot().config;
      service::EngineSlot slot;
      slot.set(engine);
      httplib::Server server;
      service::install_routes(server, slot, {cfg.annotate_max_bytes, static_dir});
      int p = port.value_or(cfg.port);
      std::cerr << "listening on " << host << ':' << p << '\n';
      if (!server.listen(host, p)) throw Error(ErrorCode::Io, "cannot listen on " + host + ":" + std::to_string(p));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::Configuration ? 2 : 1;
  }
  return 0;
}
