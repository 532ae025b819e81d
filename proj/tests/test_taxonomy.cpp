#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "espace/kg/graph.hpp"
#include "espace/nlp/parser.hpp"
#include "espace/taxonomy/forest.hpp"
#include "espace/taxonomy/io.hpp"
#include "espace/taxonomy/lattice.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace espace;
using namespace espace::taxonomy;
namespace ts = testing_support;

namespace {

std::vector<std::size_t> ids(const Bits& b) {
  std::vector<std::size_t> out;
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) out.push_back(i);
  return out;
}

FormalContext named_context(const oracle::Incidence& inc) {
  std::vector<std::string> objs, attrs;
  for (std::size_t g = 0; g < inc.size(); ++g) objs.push_back("g" + std::to_string(g));
  for (std::size_t m = 0; m < inc[0].size(); ++m) attrs.push_back("m" + std::to_string(m));
  return FormalContext(objs, attrs, inc);
}

void expect_matches_oracle(const oracle::Incidence& inc) {
  auto lat = fca_lattice(named_context(inc));
  auto want = oracle::fca(inc, inc[0].size());
  ASSERT_EQ(lat.size(), want.nodes.size());
  for (std::size_t i = 0; i < lat.size(); ++i) {
    EXPECT_EQ(ids(lat.nodes[i].extent), want.nodes[i].extent) << "node " << i;
    EXPECT_EQ(ids(lat.nodes[i].intent), want.nodes[i].intent) << "node " << i;
  }
  EXPECT_EQ(lat.covers, want.covers);
}

nlp::SenseEntry sense(std::string id, std::string lemma, std::vector<std::string> hyper) {
  return {std::move(id), std::move(lemma), std::move(hyper)};
}

// dog/cat/bank alignment over a two-root hierarchy
Alignment animals_and_banks() {
  Alignment a;
  a["ns:dog"] = sense("dog", "dog", {"canine", "carnivore", "animal", "physical"});
  a["ns:wolf"] = sense("wolf", "wolf", {"canine", "carnivore", "animal", "physical"});
  a["ns:cat"] = sense("cat", "cat", {"feline", "carnivore", "animal", "physical"});
  a["ns:canine"] = sense("canine", "canine", {"carnivore", "animal", "physical"});
  a["ns:bank"] = sense("bank", "bank", {"institution", "abstraction"});
  a["ns:agency"] = sense("agency", "agency", {"institution", "abstraction"});
  return a;
}

}  // namespace

TEST(Fca, TextbookContext) {
  // objects: 0 dog, 1 cat, 2 bank; attributes: 0 animal, 1 pet, 2 institution
  oracle::Incidence inc{{true, true, false}, {true, true, false}, {false, false, true}};
  auto lat = fca_lattice(named_context(inc));
  ASSERT_EQ(lat.size(), 4u);
  EXPECT_EQ(ids(lat.nodes[lat.top()].extent), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_TRUE(lat.nodes[lat.top()].intent.none());
  EXPECT_EQ(ids(lat.nodes[1].extent), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(ids(lat.nodes[1].intent), (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(lat.nodes[lat.bottom()].extent.none());
  EXPECT_EQ(ids(lat.nodes[lat.bottom()].intent), (std::vector<std::size_t>{0, 1, 2}));
  expect_matches_oracle(inc);
}

TEST(Fca, RandomContextsMatchBruteForce) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    auto inc = oracle::random_context(rng, 8, 8);
    SCOPED_TRACE(i);
    expect_matches_oracle(inc);
  }
}

TEST(Fca, EveryNodeIsClosed) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    auto ctx = named_context(oracle::random_context(rng, 12, 9));
    auto lat = fca_lattice(ctx);
    for (const auto& c : lat.nodes) {
      EXPECT_EQ(ctx.intent_of(c.extent), c.intent);
      EXPECT_EQ(ctx.extent_of(c.intent), c.extent);
    }
    for (auto [lo, up] : lat.covers) EXPECT_TRUE(lat.nodes[lo].extent.is_proper_subset_of(lat.nodes[up].extent));
  }
}

TEST(Fca, SizeLimits) {
  oracle::Incidence inc(6, std::vector<bool>(3, true));
  try {
    fca_lattice(named_context(inc), {5, 100});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeLimit);
  }
  // the contranominal scale has 2^n concepts
  oracle::Incidence scale(6, std::vector<bool>(6, true));
  for (std::size_t i = 0; i < 6; ++i) scale[i][i] = false;
  EXPECT_EQ(fca_lattice(named_context(scale)).size(), 64u);
  EXPECT_THROW(fca_lattice(named_context(scale), {100, 63}), Error);
}

TEST(Context, BuiltFromAlignment) {
  auto ctx = build_formal_context(animals_and_banks());
  EXPECT_EQ(ctx.object_count(), 6u);
  // own senses plus hypernyms, each once
  EXPECT_EQ(ctx.attribute_count(), 12u);
  for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
    if (ctx.attributes[m] == "physical" || ctx.attributes[m] == "abstraction") {
      EXPECT_EQ(ctx.attribute_depth[m], 0u);
    }
  EXPECT_THROW(build_formal_context({}), Error);
}

TEST(Forest, TwoRootsSplitIntoTwoTrees) {
  auto ctx = build_formal_context(animals_and_banks());
  auto forest = extract_forest(fca_lattice(ctx), ctx);
  ASSERT_EQ(forest.trees.size(), 2u);
  EXPECT_EQ(forest.trees[0].root_label, "abstraction");
  EXPECT_EQ(forest.trees[0].members, (std::vector<std::string>{"ns:agency", "ns:bank"}));
  EXPECT_TRUE(forest.trees[0].parent.empty());
  EXPECT_EQ(forest.trees[1].root_label, "physical");
  EXPECT_EQ(forest.trees[1].parent, (std::map<std::string, std::string>{{"ns:dog", "ns:canine"}, {"ns:wolf", "ns:canine"}}));
  EXPECT_EQ(forest.tree_of("ns:cat"), 1u);
  EXPECT_FALSE(forest.tree_of("ns:unknown"));
}

TEST(Forest, SharedRootGivesOneTree) {
  auto a = animals_and_banks();
  for (auto& [uri, e] : a) e.hypernyms.push_back("entity");
  auto ctx = build_formal_context(a);
  auto forest = extract_forest(fca_lattice(ctx), ctx);
  ASSERT_EQ(forest.trees.size(), 1u);
  EXPECT_EQ(forest.trees[0].root_label, "entity");
  EXPECT_EQ(forest.trees[0].members.size(), 6u);
}

TEST(Forest, EveryObjectInExactlyOneTreeAndParentsAcyclic) {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 50; ++round) {
    // random hypernym chains over a small random tree of senses
    std::uniform_int_distribution<int> parent_pick(0, 100);
    std::vector<int> parent(20, -1);
    for (int s = 2; s < 20; ++s) parent[s] = parent_pick(rng) % s;  // senses 0 and 1 are roots
    parent[1] = -1;
    Alignment a;
    std::uniform_int_distribution<int> pick(0, 19);
    for (int o = 0; o < 12; ++o) {
      int s = pick(rng);
      std::vector<std::string> chain;
      for (int p = parent[s]; p >= 0; p = parent[p]) chain.push_back("s" + std::to_string(p));
      a["ns:o" + std::to_string(o)] = sense("s" + std::to_string(s), "l" + std::to_string(s), chain);
    }
    auto ctx = build_formal_context(a);
    auto forest = extract_forest(fca_lattice(ctx), ctx);
    std::map<std::string, int> seen;
    for (const auto& t : forest.trees) {
      for (const auto& m : t.members) ++seen[m];
      for (const auto& [child, par] : t.parent) {
        EXPECT_TRUE(std::binary_search(t.members.begin(), t.members.end(), par));
        std::string cur = child;
        for (int steps = 0; t.parent.count(cur); ++steps) {
          cur = t.parent.at(cur);
          ASSERT_LT(steps, 20) << "parent cycle";
        }
      }
    }
    EXPECT_EQ(seen.size(), a.size());
    for (const auto& [m, n] : seen) EXPECT_EQ(n, 1) << m;
  }
}

TEST(Taxonomy, NavigationMergesForestAndCompositionEdges) {
  nlp::RuleBasedParser p;
  auto corpus = kg::ingest_corpus({{"d", "The customer opened a new bank account. The bank account holds money."}}, p);
  auto g = kg::build_graph(corpus, p);
  Alignment a;
  a["ns:account"] = sense("account", "account", {"relation", "abstraction"});
  a["ns:bank_account"] = sense("bank_account", "bank account", {"account", "relation", "abstraction"});
  a["ns:money"] = sense("money", "money", {"assets", "relation", "abstraction"});
  auto ctx = build_formal_context(a);
  auto forest = extract_forest(fca_lattice(ctx), ctx);
  Taxonomy tax(g, forest);
  EXPECT_EQ(tax.superclasses("ns:bank_account"), (std::vector<std::string>{"ns:account", "ns:bank"}));
  EXPECT_EQ(tax.subclasses("ns:account"), (std::vector<std::string>{"ns:bank_account"}));
  EXPECT_EQ(tax.subtree("ns:bank"), (std::vector<std::string>{"ns:bank", "ns:bank_account"}));
  EXPECT_EQ(tax.tree_label("ns:money"), "abstraction");
  EXPECT_FALSE(tax.tree_label("ns:customer"));
  EXPECT_TRUE(tax.superclasses("ns:customer").empty());
  EXPECT_THROW(tax.superclasses("ns:nope"), Error);
}

TEST(Taxonomy, AlignmentRecordsMisses) {
  nlp::RuleBasedParser p;
  auto g = kg::build_graph(kg::ingest_corpus({{"d", "The customer opened a new bank account."}}, p), p);
  auto db = nlp::LexicalDatabase::load(ts::data_path("lexicon.tsv"));
  nlp::MostFrequentSense wsd(db);
  auto res = align_concepts(g, wsd);
  EXPECT_EQ(res.aligned.size(), 4u);
  EXPECT_TRUE(res.misses.empty());
  std::istringstream tiny("x.n.01\taccount\t-\n");
  auto small = nlp::LexicalDatabase::from_tsv(tiny);
  nlp::MostFrequentSense wsd2(small);
  auto res2 = align_concepts(g, wsd2);
  EXPECT_EQ(res2.misses, (std::vector<std::string>{"ns:bank", "ns:bank_account", "ns:customer"}));
}

TEST(Io, TaxonomyRoundTrip) {
  Alignment a = animals_and_banks();
  AlignmentResult res{a, {"ns:zzz"}};
  auto ctx = build_formal_context(a);
  auto forest = extract_forest(fca_lattice(ctx), ctx);
  std::stringstream out;
  write_taxonomy_jsonl(res, forest, out);
  AlignmentResult back_res;
  TaxonomyForest back;
  read_taxonomy_jsonl(out, back_res, back);
  EXPECT_EQ(back, forest);
  EXPECT_EQ(back_res.aligned, res.aligned);
  EXPECT_EQ(back_res.misses, res.misses);
}
