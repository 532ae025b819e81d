#include <gtest/gtest.h>

#include <chrono>
#include <filesystem>
#include <functional>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

#include <unistd.h>

#include "httplib.h"
#include "json.hpp"

#include "espace/service/engine.hpp"
#include "espace/service/http.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace espace;
using namespace espace::service;
namespace fs = std::filesystem;
namespace ts = testing_support;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Io;
}

fs::path scratch_dir(const std::string& name) {
  auto p = fs::temp_directory_path() / ("espace-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string dir_bytes(const fs::path& dir) {
  std::string out;
  for (auto f : {"snapshot.json", "corpus.jsonl", "graph.jsonl", "taxonomy.jsonl", "centrality.jsonl", "frequency.tsv"})
    out += std::string(f) + "\n" + ts::slurp((dir / f).string());
  return out;
}

const Snapshot& toy() {
  static const Snapshot s = ts::toy_snapshot();
  return s;
}

// Serves the routes on an ephemeral port for the lifetime of the object.
struct TestServer {
  httplib::Server server;
  EngineSlot slot;
  std::thread thread;
  int port = 0;

  explicit TestServer(HttpOptions opts) {
    install_routes(server, slot, opts);
    port = server.bind_to_any_port("127.0.0.1");
    thread = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }
  ~TestServer() {
    server.stop();
    thread.join();
  }
  httplib::Client client() const { return httplib::Client("127.0.0.1", port); }
};

}  // namespace

TEST(Config, DefaultsAndOverrides) {
  auto c = PipelineConfig::from_json(nlohmann::json::object());
  EXPECT_EQ(c.pertinence_threshold, 0.55);
  EXPECT_EQ(c.fanout, 3u);
  EXPECT_EQ(c.embedding_dimension, 512u);
  EXPECT_EQ(c.port, 8080);
  auto d = PipelineConfig::from_json({{"manifest", "m.tsv"}, {"fanout", 5}, {"namespace", "ex:"}}, "/base");
  EXPECT_EQ(d.manifest, "/base/m.tsv");
  EXPECT_EQ(d.fanout, 5u);
  EXPECT_NE(c.hash(), d.hash());
  EXPECT_EQ(c.hash(), PipelineConfig::from_json({{"port", 9000}, {"host", "0.0.0.0"}}).hash());
  EXPECT_EQ(d.overview_config().fanout, 5u);
}

TEST(Config, Rejections) {
  for (auto j : std::vector<nlohmann::json>{{{"fanuot", 3}},
                                            {{"fanout", 1}},
                                            {{"fanout", "three"}},
                                            {{"pertinence_threshold", 1.5}},
                                            {{"embedder", "external"}},
                                            {{"archetype_order", {"why"}}},
                                            {{"parser", "stanza"}},
                                            nlohmann::json::array()})
    EXPECT_EQ(code_of([&] { PipelineConfig::from_json(j); }), ErrorCode::Configuration) << j.dump();
  EXPECT_EQ(code_of([] { PipelineConfig::load("/nonexistent/config.json"); }), ErrorCode::Configuration);
  auto dir = scratch_dir("config");
  std::ofstream(dir / "bad.json") << "{ not json";
  EXPECT_EQ(code_of([&] { PipelineConfig::load(dir / "bad.json"); }), ErrorCode::Configuration);
  fs::remove_all(dir);
}

TEST(Config, ShippedToyConfigResolves) {
  auto c = PipelineConfig::load(ts::data_path("toy/config.json"));
  EXPECT_TRUE(fs::exists(c.manifest));
  EXPECT_TRUE(fs::exists(c.lexicon));
  EXPECT_TRUE(fs::exists(c.frequency_table));
  EXPECT_TRUE(fs::is_directory(c.static_dir));
  auto m = read_manifest(c.manifest);
  ASSERT_EQ(m.size(), 3u);
  for (const auto& e : m) EXPECT_TRUE(fs::exists(e.path)) << e.path;
}

TEST(Snapshot, ManifestSkipsUnreadableFiles) {
  auto dir = scratch_dir("manifest");
  std::ofstream(dir / "a.txt") << "The lender approves the loan.";
  std::ofstream(dir / "manifest.tsv") << "# docs\na.txt\tFirst\nmissing.txt\n";
  auto m = read_manifest(dir / "manifest.tsv");
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[0].title, "First");
  EXPECT_EQ(m[1].title, "missing");
  std::vector<std::string> warnings;
  auto docs = load_documents(m, warnings);
  EXPECT_EQ(docs.size(), 1u);
  EXPECT_EQ(warnings.size(), 1u);
  EXPECT_EQ(code_of([&] { read_manifest(dir / "none.tsv"); }), ErrorCode::Io);
  fs::remove_all(dir);
}

TEST(Snapshot, ToyBuildsForestAndCentrality) {
  const auto& s = toy();
  EXPECT_GT(s.graph.concepts.size(), 30u);
  EXPECT_GT(s.graph.triples.size(), 50u);
  EXPECT_GE(s.forest.trees.size(), 2u);
  EXPECT_EQ(s.centrality.size(), s.graph.concepts.size());
  EXPECT_EQ(s.alignment.aligned.size() + s.alignment.misses.size(), s.graph.concepts.size());
  auto sum = snapshot_summary(s);
  EXPECT_EQ(sum["schema_version"], kSnapshotSchemaVersion);
}

TEST(Snapshot, WriteReadRoundTripIsByteStable) {
  auto dir = scratch_dir("snap");
  write_snapshot(toy(), dir / "a");
  write_snapshot(ts::toy_snapshot(), dir / "b");
  EXPECT_EQ(dir_bytes(dir / "a"), dir_bytes(dir / "b"));
  EXPECT_FALSE(fs::exists(dir / "a.tmp"));

  auto back = read_snapshot(dir / "a");
  EXPECT_EQ(back.graph.concepts.size(), toy().graph.concepts.size());
  EXPECT_EQ(back.forest, toy().forest);
  EXPECT_EQ(back.centrality, toy().centrality);
  EXPECT_EQ(back.config_hash, toy().config_hash);
  write_snapshot(back, dir / "c");
  EXPECT_EQ(dir_bytes(dir / "a"), dir_bytes(dir / "c"));
  // overwriting an existing snapshot replaces it whole
  write_snapshot(back, dir / "a");
  EXPECT_EQ(dir_bytes(dir / "a"), dir_bytes(dir / "c"));

  EXPECT_EQ(code_of([&] { read_snapshot(dir / "none"); }), ErrorCode::Io);
  std::ofstream(dir / "c" / "snapshot.json") << "{}";
  EXPECT_EQ(code_of([&] { read_snapshot(dir / "c"); }), ErrorCode::Format);
  write_snapshot(back, dir / "c");
  std::ofstream(dir / "c" / "graph.jsonl", std::ios::app) << "{broken\n";
  EXPECT_EQ(code_of([&] { read_snapshot(dir / "c"); }), ErrorCode::Format);
  fs::remove_all(dir);
}

TEST(Engine, OverviewAnnotateAndListings) {
  Engine e(toy());
  auto body = e.overview_json("ns:hard_inquiry");
  auto j = nlohmann::json::parse(body);
  EXPECT_EQ(j["concept_uri"], "ns:hard_inquiry");
  EXPECT_FALSE(j["archetypes"].empty());
  EXPECT_EQ(e.overview_json("ns:hard_inquiry"), body);
  EXPECT_EQ(e.cached_overviews(), 1u);
  EXPECT_EQ(code_of([&] { e.overview_json("ns:unicorn"); }), ErrorCode::MissingConcept);

  auto a = e.annotate_json("A hard inquiry stays on the credit report.", true);
  EXPECT_EQ(a["schema_version"], kSnapshotSchemaVersion);
  ASSERT_FALSE(a["annotations"].empty());
  for (const auto& x : a["annotations"]) {
    EXPECT_LT(x["start"].get<std::size_t>(), x["end"].get<std::size_t>());
    EXPECT_TRUE(e.snapshot().graph.contains(x["concept_uri"].get<std::string>()));
  }
  EXPECT_NE(a["html"].get<std::string>().find("data-concept="), std::string::npos);
  EXPECT_FALSE(e.annotate_json("x", false).contains("html"));

  auto c = e.concepts_json("CRED", 2);
  EXPECT_GT(c["total"].get<std::size_t>(), 2u);
  EXPECT_EQ(c["concepts"].size(), 2u);
  for (const auto& x : c["concepts"]) EXPECT_EQ(x["label"].get<std::string>().rfind("credit", 0), 0u);
  auto t = e.taxonomy_json();
  EXPECT_EQ(t["trees"].size(), toy().forest.trees.size());
  EXPECT_EQ(e.health_json()["status"], "ok");
}

TEST(Engine, AnnotationWithoutFrequencyTableIsAConfigurationError) {
  auto s = toy();
  s.frequency = annotate::FrequencyTable{};
  Engine e(std::move(s));
  EXPECT_EQ(code_of([&] { e.annotate_json("credit report", false); }), ErrorCode::Configuration);
}

TEST(Http, Routes) {
  HttpOptions opts;
  opts.annotate_max_bytes = 200;
  opts.static_dir = PipelineConfig::load(ts::data_path("toy/config.json")).static_dir;
  TestServer srv(opts);
  auto cli = srv.client();

  auto h = cli.Get("/health");
  ASSERT_TRUE(h);
  EXPECT_EQ(nlohmann::json::parse(h->body)["status"], "no snapshot");
  EXPECT_EQ(cli.Get("/overview/ns:credit_score")->status, 503);
  EXPECT_EQ(cli.Post("/annotate", R"({"text":"x"})", "application/json")->status, 503);

  srv.slot.set(std::make_shared<const Engine>(toy()));
  EXPECT_EQ(nlohmann::json::parse(cli.Get("/health")->body)["status"], "ok");

  auto ov = cli.Get("/overview/ns:credit_score");
  ASSERT_EQ(ov->status, 200);
  EXPECT_EQ(ov->get_header_value("Content-Type"), "application/json");
  EXPECT_EQ(cli.Get("/overview/ns:credit_score")->body, ov->body);
  EXPECT_EQ(cli.Get("/overview/credit_score")->body, ov->body);
  EXPECT_EQ(cli.Get("/overview/ns%3Acredit_score")->body, ov->body);
  EXPECT_EQ(cli.Get("/overview/ns:unicorn")->status, 404);

  auto an = cli.Post("/annotate", R"({"text":"A hard inquiry stays on the credit report.","html":true})", "application/json");
  ASSERT_EQ(an->status, 200);
  EXPECT_TRUE(nlohmann::json::parse(an->body).contains("html"));
  EXPECT_EQ(cli.Post("/annotate", "not json", "application/json")->status, 400);
  EXPECT_EQ(cli.Post("/annotate", R"({"txt":"x"})", "application/json")->status, 400);
  std::string big(300, 'a');
  EXPECT_EQ(cli.Post("/annotate", nlohmann::json{{"text", big}}.dump(), "application/json")->status, 413);
  EXPECT_EQ(cli.Post("/annotate", std::string(2000, ' '), "application/json")->status, 413);

  auto con = cli.Get("/concepts?q=ban&limit=3");
  ASSERT_EQ(con->status, 200);
  for (const auto& x : nlohmann::json::parse(con->body)["concepts"])
    EXPECT_EQ(x["label"].get<std::string>().rfind("ban", 0), 0u);
  EXPECT_EQ(cli.Get("/concepts?limit=many")->status, 400);
  EXPECT_EQ(nlohmann::json::parse(cli.Get("/taxonomy")->body)["trees"].size(), toy().forest.trees.size());

  auto page = cli.Get("/");
  ASSERT_EQ(page->status, 200);
  EXPECT_NE(page->body.find("<html"), std::string::npos);
}

TEST(Http, MissingStaticDirIsAConfigurationError) {
  httplib::Server server;
  EngineSlot slot;
  HttpOptions opts;
  opts.static_dir = "/nonexistent/web";
  EXPECT_EQ(code_of([&] { install_routes(server, slot, opts); }), ErrorCode::Configuration);
}
