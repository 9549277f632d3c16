#include <gtest/gtest.h>

#include <cstdio>
#include <string>
#include <thread>

#include "json.hpp"

#include "cutlab/cutlab.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  cutlab_string_free(s);
  return out;
}

}  // namespace

TEST(CApi, GraphCutAndOracle) {
  cutlab_graph* g = nullptr;
  ASSERT_EQ(cutlab_graph_create(4, &g), CUTLAB_OK);
  // Directed 4-cycle with weights 1..4.
  for (uint32_t v = 0; v < 4; ++v) ASSERT_EQ(cutlab_graph_add_edge(g, v, (v + 1) % 4, v + 1.0), CUTLAB_OK);
  EXPECT_EQ(cutlab_graph_add_edge(g, 0, 1, 1.0), CUTLAB_INVALID_ARGUMENT);
  EXPECT_NE(std::string(cutlab_last_error()), "");
  size_t m = 0;
  cutlab_graph_edge_count(g, &m);
  EXPECT_EQ(m, 4u);
  const uint32_t s[] = {0, 1};
  double w = 0;
  ASSERT_EQ(cutlab_graph_cut_weight(g, s, 2, &w), CUTLAB_OK);
  EXPECT_EQ(w, 2.0);  // only 1 -> 2 leaves {0, 1}
  EXPECT_EQ(std::string(cutlab_last_error()), "");
  const uint32_t bad[] = {9};
  EXPECT_EQ(cutlab_graph_cut_weight(g, bad, 1, &w), CUTLAB_INVALID_ARGUMENT);

  double mc = 0;
  uint8_t side[4];
  ASSERT_EQ(cutlab_graph_min_cut(g, &mc, side), CUTLAB_OK);
  EXPECT_EQ(mc, 1.0 + 2.0);  // isolate vertex 1: edges 0->1 and 1->2
  EXPECT_EQ(side[0], 1);

  cutlab_cut_oracle* o = nullptr;
  ASSERT_EQ(cutlab_cut_oracle_create(g, "noise:0.1:hashed", 5, &o), CUTLAB_OK);
  double a = 0, b = 0;
  cutlab_cut_oracle_query(o, s, 2, &a);
  cutlab_cut_oracle_query(o, s, 2, &b);
  EXPECT_EQ(a, b);
  EXPECT_NEAR(a, 2.0, 0.2 + 1e-12);
  uint64_t q = 0;
  cutlab_cut_oracle_query_count(o, &q);
  EXPECT_EQ(q, 2u);
  cutlab_cut_oracle_free(o);
  EXPECT_EQ(cutlab_cut_oracle_create(g, "bogus", 1, &o), CUTLAB_INVALID_ARGUMENT);
  cutlab_graph_free(g);
  EXPECT_EQ(cutlab_graph_create(3, nullptr), CUTLAB_INVALID_ARGUMENT);
}

TEST(CApi, SaveAndLoad) {
  cutlab_graph* g = nullptr;
  cutlab_graph_create(3, &g);
  cutlab_graph_add_edge(g, 0, 1, 0.1);
  cutlab_graph_add_edge(g, 2, 0, 1.0 / 3.0);
  const std::string path = ::testing::TempDir() + "capi_graph.txt";
  ASSERT_EQ(cutlab_graph_save(g, path.c_str()), CUTLAB_OK);
  cutlab_graph* h = nullptr;
  ASSERT_EQ(cutlab_graph_load(path.c_str(), &h), CUTLAB_OK);
  const uint32_t s[] = {2};
  double a = 0, b = 0;
  cutlab_graph_cut_weight(g, s, 1, &a);
  cutlab_graph_cut_weight(h, s, 1, &b);
  EXPECT_EQ(a, b);  // %.17g round-trips exactly
  cutlab_graph_free(g);
  cutlab_graph_free(h);
  EXPECT_EQ(cutlab_graph_load("/nonexistent/x", &h), CUTLAB_IO);
}

TEST(CApi, LocalOracle) {
  // Path 0-1-2.
  const uint32_t e[] = {0, 1, 1, 2};
  cutlab_local_oracle* o = nullptr;
  ASSERT_EQ(cutlab_local_oracle_create(3, e, 2, &o), CUTLAB_OK);
  size_t d = 0;
  cutlab_local_degree(o, 1, &d);
  EXPECT_EQ(d, 2u);
  uint32_t nb = 0;
  int found = 0;
  cutlab_local_neighbor(o, 1, 2, &nb, &found);
  EXPECT_TRUE(found);
  EXPECT_EQ(nb, 2u);
  cutlab_local_neighbor(o, 0, 2, &nb, &found);
  EXPECT_FALSE(found);
  int adj = 1;
  cutlab_local_adjacent(o, 0, 2, &adj);
  EXPECT_EQ(adj, 0);
  uint64_t dq, nq, aq;
  cutlab_local_counts(o, &dq, &nq, &aq);
  EXPECT_EQ(dq, 1u);
  EXPECT_EQ(nq, 2u);
  EXPECT_EQ(aq, 1u);
  double k = 0;
  ASSERT_EQ(cutlab_local_estimate(o, 0.2, R"({"seed": 3})", &k), CUTLAB_OK);
  EXPECT_EQ(k, 1.0);
  cutlab_local_oracle_free(o);
}

TEST(CApi, RunAndSweep) {
  char* out = nullptr;
  ASSERT_EQ(cutlab_run("foreach.roundtrip", R"({"k": 2, "beta": 1, "n": 8, "oracle": "exact"})",
                       R"({"seed": 7})", &out),
            CUTLAB_OK);
  const auto rec = nlohmann::json::parse(take(out));
  EXPECT_EQ(rec["correct"].get<int>(), rec["bit_count"].get<int>() - rec["failures"].get<int>());
  EXPECT_EQ(rec["seed"], 7);

  ASSERT_EQ(cutlab_run("twosum.lemma-check", R"({"N": 9, "exhaustive": true})", nullptr, &out),
            CUTLAB_OK);
  EXPECT_EQ(nlohmann::json::parse(take(out))["violations"], 0);

  EXPECT_EQ(cutlab_run("foreach.roundtrip", R"({"beta": 3})", nullptr, &out), CUTLAB_INFEASIBLE);
  EXPECT_EQ(cutlab_run("foreach.roundtrip", "{bad json", nullptr, &out), CUTLAB_INVALID_ARGUMENT);
  EXPECT_EQ(cutlab_run("foreach.roundtrip", "{}", R"({"preset": "huge"})", &out),
            CUTLAB_INVALID_ARGUMENT);

  ASSERT_EQ(cutlab_sweep("mincut.estimate", R"({"n": 200, "m": 2000})",
                         R"([{"key": "k", "values": [2, 4, 8]}])", R"({"seed": 1, "jobs": 2})", &out),
            CUTLAB_OK);
  const std::string csv = take(out);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
  EXPECT_EQ(cutlab_sweep("mincut.estimate", "{}", "{}", nullptr, &out), CUTLAB_INVALID_ARGUMENT);

  ASSERT_EQ(cutlab_commands(&out), CUTLAB_OK);
  EXPECT_NE(take(out).find("twosum.reduce"), std::string::npos);
}

TEST(CApi, ConstantsFileAndPaperPreset) {
  const std::string path = ::testing::TempDir() + "capi_constants.txt";
  FILE* f = std::fopen(path.c_str(), "w");
  std::fputs("# override\nc_sample = 3\n", f);
  std::fclose(f);
  char* out = nullptr;
  const std::string opts = R"({"preset": "paper", "constants": ")" + path + "\"}";
  ASSERT_EQ(cutlab_run("mincut.estimate", R"({"n": 100, "k": 2})", opts.c_str(), &out), CUTLAB_OK);
  const auto rec = nlohmann::json::parse(take(out));
  EXPECT_EQ(rec["preset"], "paper+custom");
  EXPECT_EQ(rec["constants"]["c_kappa"], 2000.0);
  EXPECT_EQ(rec["constants"]["c_sample"], 3.0);
}

TEST(CApi, LastErrorIsPerThread) {
  char* out = nullptr;
  EXPECT_EQ(cutlab_run("nope", "{}", nullptr, &out), CUTLAB_INVALID_ARGUMENT);
  std::string other;
  std::thread t([&] { other = cutlab_last_error(); });
  t.join();
  EXPECT_EQ(other, "");
  EXPECT_NE(std::string(cutlab_last_error()), "");
}
