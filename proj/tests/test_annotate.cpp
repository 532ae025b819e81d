#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "espace/annotate/annotator.hpp"
#include "espace/nlp/parser.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace espace;
using namespace espace::annotate;
namespace ts = testing_support;

namespace {

Graph from_adjacency(const oracle::Adjacency& adj) {
  Graph g(adj.size());
  for (std::size_t a = 0; a < adj.size(); ++a)
    for (auto b : adj[a]) g.add_edge(a, b);
  return g;
}

kg::KnowledgeGraph graph_of(const std::string& text) {
  nlp::RuleBasedParser p;
  return kg::build_graph(kg::ingest_corpus({{"d", text}}, p), p);
}

const FrequencyTable& shipped_frequency() {
  static const auto t = FrequencyTable::load(ts::data_path("frequency.tsv"));
  return t;
}

std::vector<ts::OracleAnnotation> plain(const std::vector<Annotation>& v) {
  std::vector<ts::OracleAnnotation> out;
  for (const auto& a : v) out.push_back({a.start, a.end, a.concept_uri});
  return out;
}

}  // namespace

TEST(Betweenness, MatchesBruteForce) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    auto adj = oracle::random_graph(rng, 50);
    auto got = betweenness(from_adjacency(adj));
    auto want = oracle::betweenness(adj);
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t v = 0; v < got.size(); ++v) EXPECT_NEAR(got[v], want[v], 1e-9) << "graph " << i << " vertex " << v;
  }
}

TEST(Betweenness, StarAndPathAreExact) {
  for (std::size_t n = 2; n <= 30; ++n) {
    Graph star(n), path(n);
    for (std::size_t i = 1; i < n; ++i) star.add_edge(0, i);
    for (std::size_t i = 1; i < n; ++i) path.add_edge(i - 1, i);
    auto s = betweenness(star);
    EXPECT_EQ(s[0], static_cast<double>((n - 1) * (n - 2) / 2));
    for (std::size_t i = 1; i < n; ++i) EXPECT_EQ(s[i], 0.0);
    auto p = betweenness(path);
    for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(p[i], static_cast<double>(i * (n - 1 - i)));
  }
}

TEST(Betweenness, EdgesAreSimple) {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  g.add_edge(1, 1);
  g.add_edge(1, 2);
  EXPECT_EQ(g.adj[1], (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(betweenness(g), (std::vector<double>{0, 1, 0}));
  EXPECT_TRUE(betweenness(Graph(0)).empty());
}

TEST(Betweenness, Sampling) {
  std::mt19937_64 rng(4);
  auto adj = oracle::random_graph(rng, 40);
  auto g = from_adjacency(adj);
  EXPECT_EQ(betweenness(g, {g.size(), 7}), betweenness(g));
  EXPECT_EQ(betweenness(g, {g.size() + 5, 7}), betweenness(g));
  auto a = betweenness(g, {5, 3}), b = betweenness(g, {5, 3});
  EXPECT_EQ(a, b);
  for (double x : a) EXPECT_GE(x, 0.0);
  // a path sampled at both ends still sees every interior vertex
  Graph path(5);
  for (std::size_t i = 1; i < 5; ++i) path.add_edge(i - 1, i);
  for (std::uint64_t seed = 1; seed < 20; ++seed) EXPECT_EQ(betweenness(path, {4, seed})[0], 0.0);
}

TEST(Betweenness, ConceptGraph) {
  auto g = graph_of("The customer opened a bank account. The bank account holds money.");
  auto bc = compute_betweenness(g);
  EXPECT_EQ(bc.size(), g.concepts.size());
  EXPECT_GT(bc.at("ns:bank_account"), 0.0);
  EXPECT_EQ(bc.at("ns:customer"), 0.0);
  EXPECT_EQ(bc.at("ns:bank"), 0.0);  // composition parts carry no triples
}

TEST(Frequency, TableAndCommonKnowledge) {
  std::istringstream in("# comment\nthe\t1\nbank\t500\naccounts\t700\nbank\t900\ninquiry\t4000\n");
  auto t = FrequencyTable::from_tsv(in);
  EXPECT_EQ(t.rank("bank"), 500u);
  EXPECT_EQ(t.rank("account"), 700u);  // plural folded to its lemma
  EXPECT_FALSE(t.rank("loan"));
  EXPECT_EQ(t.entries().front(), (std::pair<std::string, std::size_t>{"the", 1}));
  EXPECT_TRUE(is_common_knowledge("bank", t));
  EXPECT_TRUE(is_common_knowledge("bank account", t));
  EXPECT_TRUE(is_common_knowledge("ns:bank_account", t));
  EXPECT_FALSE(is_common_knowledge("bank inquiry", t));
  EXPECT_FALSE(is_common_knowledge("bank loan", t));
  EXPECT_FALSE(is_common_knowledge("bank", t, 100));
  EXPECT_FALSE(is_common_knowledge("", t));
  std::istringstream bad("bank\tmany\n");
  EXPECT_THROW(FrequencyTable::from_tsv(bad), Error);
  try {
    is_common_knowledge("bank", FrequencyTable{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Configuration);
  }
}

TEST(Frequency, ShippedTableRanksEverydayWords) {
  const auto& t = shipped_frequency();
  EXPECT_GE(t.size(), 4000u);
  for (auto w : {"day", "time", "space", "november", "bank", "account"}) EXPECT_TRUE(is_common_knowledge(w, t)) << w;
  for (auto w : {"inquiry", "overdraft", "credit bureau"}) EXPECT_FALSE(is_common_knowledge(w, t)) << w;
}

TEST(Matcher, LeftmostLongestWholeTokens) {
  auto g = graph_of("The customer opened a new bank account.");
  ConceptMatcher m(g);
  std::string text = "Bank accounts and banking: a bank, an account, a customer's bank account.";
  std::vector<std::string> found;
  for (const auto& x : m.find(text)) found.push_back(text.substr(x.byte_begin, x.byte_end - x.byte_begin) + "=" + x.concept_uri);
  EXPECT_EQ(found, (std::vector<std::string>{"Bank accounts=ns:bank_account", "bank=ns:bank", "account=ns:account",
                                             "customer=ns:customer", "bank account=ns:bank_account"}));
  EXPECT_TRUE(m.find("").empty());
}

TEST(Annotate, FixtureMatchesExhaustiveOracle) {
  auto g = graph_of(ts::slurp(ts::test_data_path("annotate_corpus.txt")));
  auto text = ts::slurp(ts::test_data_path("annotate_text.txt"));
  auto bc = compute_betweenness(g);
  const auto& freq = shipped_frequency();
  ConceptMatcher m(g);
  auto got = annotate::annotate(text, g, m, bc, freq);
  EXPECT_EQ(plain(got), ts::annotation_oracle(text, g, freq, 1000));

  // the everyday words are central here, so only their frequency suppresses them
  for (auto uri : {"ns:day", "ns:time", "ns:space", "ns:november"}) {
    EXPECT_GT(bc.at(uri), 0.0) << uri;
    bool mentioned = false;
    for (const auto& x : m.find(text)) mentioned |= x.concept_uri == uri;
    EXPECT_TRUE(mentioned) << uri;
  }
  ASSERT_FALSE(got.empty());
  for (const auto& a : got) {
    EXPECT_GT(bc.at(a.concept_uri), 0.0);
    EXPECT_FALSE(is_common_knowledge(g.at(a.concept_uri).label, freq));
  }
  std::vector<std::string> uris;
  for (const auto& a : got) uris.push_back(a.concept_uri);
  EXPECT_EQ(uris, (std::vector<std::string>{"ns:credit_bureau", "ns:payment_history"}));
}

TEST(Annotate, CodePointOffsetsAndHtml) {
  auto g = graph_of("The lender sends the credit report to the credit bureau. The credit bureau checks the payment history.");
  auto bc = compute_betweenness(g);
  ConceptMatcher m(g);
  std::string text = "\xC3\x89t\xC3\xA9 <b>: the credit bureau & co.";
  auto got = annotate::annotate(text, g, m, bc, shipped_frequency());
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(got[0].start, 13u);
  EXPECT_EQ(got[0].end, 26u);
  EXPECT_EQ(to_html(text, got),
            "\xC3\x89t\xC3\xA9 &lt;b&gt;: the <a class=\"es-concept\" href=\"#\" data-concept=\"ns:credit_bureau\">"
            "credit bureau</a> &amp; co.");
  EXPECT_EQ(plain(got), ts::annotation_oracle(text, g, shipped_frequency(), 1000));
  EXPECT_EQ(to_html("a<b", {}), "a&lt;b");
}
