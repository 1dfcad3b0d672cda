#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace circumlab;

namespace {

PathSeq host_of(std::initializer_list<Vertex> vs) { return PathSeq{std::vector<Vertex>(vs)}; }

PathSeq identity_host(int p) {
  PathSeq h;
  for (int i = 0; i < p; ++i) h.vertices.push_back(i);
  return h;
}

Vine chords(std::initializer_list<std::pair<int, int>> anchors) {
  Vine v;
  for (auto [x, y] : anchors) v.paths.push_back({x, y, {}});
  return v;
}

std::vector<oracle::VinePathSpec> to_spec(const Vine& v) {
  std::vector<oracle::VinePathSpec> out;
  for (const VinePath& l : v.paths) out.push_back({l.start_pos, l.end_pos, l.interior});
  return out;
}

Vine from_spec(const std::vector<oracle::VinePathSpec>& s) {
  Vine v;
  for (const auto& l : s) v.paths.push_back({l.x, l.y, l.interior});
  return v;
}

// C6 on 0..5 with chords 0-3 and 2-5.
const Graph c6_chords = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}, {2, 5}});
const Graph c6_chords_open = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 3}, {2, 5}});

}  // namespace

TEST(ValidateVine, Examples) {
  EXPECT_TRUE(validate_vine(c6_chords, identity_host(6), chords({{0, 3}, {2, 5}})));
  const VineVerdict bad = validate_vine(c6_chords, identity_host(6), chords({{0, 2}, {2, 4}}));
  EXPECT_FALSE(bad);
  EXPECT_EQ(bad.violation, "x_2 < y_1 violated");
  EXPECT_TRUE(validate_vine(make::cycle(4), identity_host(4), chords({{0, 3}})));
}

TEST(ValidateVine, RejectsStructuralFaults) {
  const Graph g = make::cycle(6);
  EXPECT_FALSE(validate_vine(g, identity_host(6), Vine{}));
  EXPECT_FALSE(validate_vine(g, identity_host(6), chords({{0, 1}})));  // host edge
  EXPECT_FALSE(validate_vine(g, identity_host(6), chords({{0, 4}})));  // not an edge, y != p-1
  const PathSeq host = host_of({0, 1, 2, 3, 4});
  EXPECT_TRUE(validate_vine(g, host, Vine{{{0, 4, {5}}}}));
  EXPECT_FALSE(validate_vine(g, host, Vine{{{0, 4, {1}}}}));  // interior on host
}

TEST(FindMinimumVine, Examples) {
  EXPECT_EQ(find_minimum_vine(make::complete(4), identity_host(4)).size(), 1);
  const Vine v = find_minimum_vine(c6_chords_open, identity_host(6));
  EXPECT_EQ(v.size(), 2);
  EXPECT_TRUE(validate_vine(c6_chords_open, identity_host(6), v));
  const Graph p5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 2}, {2, 4}});
  try {
    find_minimum_vine(p5, identity_host(5));
    FAIL() << "expected NoVineFound";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoVineFound);
  }
  EXPECT_EQ(find_minimum_vine(make::cycle(5), identity_host(5)).size(), 1);
}

TEST(FindAnyVine, Examples) {
  const Graph k23 = make::complete_bipartite(2, 3);
  const PathSeq host = longest_path(k23).witness;
  ASSERT_EQ(host.size(), 5);
  EXPECT_TRUE(validate_vine(k23, host, find_any_vine(k23, host)));
  EXPECT_EQ(find_any_vine(make::complete(4), identity_host(4)).size(), 1);
}

// The library validator and the definition-level oracle agree on every
// combination of up to two candidate paths.
TEST(ValidateVine, AgreesWithOracleOnCandidatePairs) {
  for (int n = 4; n <= 6; ++n) {
    for (const Graph& g : enumerate_two_connected(n)) {
      const auto a = oracle::matrix(g);
      for (const PathSeq& host : enumerate_longest_paths(g, 2)) {
        const auto cand = oracle::candidate_paths(a, host.vertices);
        for (std::size_t i = 0; i < cand.size(); ++i) {
          EXPECT_EQ(bool(validate_vine(g, host, from_spec({cand[i]}))), oracle::is_vine(a, host.vertices, {cand[i]}));
          for (std::size_t j = 0; j < cand.size(); ++j) {
            const std::vector<oracle::VinePathSpec> pair{cand[i], cand[j]};
            ASSERT_EQ(bool(validate_vine(g, host, from_spec(pair))), oracle::is_vine(a, host.vertices, pair))
                << graph_to_graph6(g);
          }
        }
      }
    }
  }
}

// Minimum vines are valid, minimal by exhaustive search, lexicographically
// first among vines of that size, and never beaten by the greedy search.
TEST(FindMinimumVine, MinimalOnSmallCorpus) {
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : enumerate_two_connected(n)) {
      const auto a = oracle::matrix(g);
      for (const PathSeq& host : enumerate_longest_paths(g, 50)) {
        const Vine v = find_minimum_vine(g, host);
        ASSERT_TRUE(validate_vine(g, host, v));
        ASSERT_TRUE(oracle::is_vine(a, host.vertices, to_spec(v)));
        ASSERT_EQ(oracle::min_vine_size(a, host.vertices, v.size()), v.size()) << graph_to_graph6(g);

        const auto every = all_vines(g, host, v.size());
        std::optional<Vine> least;
        for (const Vine& w : every) {
          ASSERT_TRUE(oracle::is_vine(a, host.vertices, to_spec(w)));
          ASSERT_GE(w.size(), v.size());
          if (w.size() == v.size() && (!least || w < *least)) least = w;
        }
        ASSERT_TRUE(least.has_value());
        EXPECT_EQ(*least, v);

        const Vine greedy = find_any_vine(g, host);
        EXPECT_TRUE(validate_vine(g, host, greedy));
        EXPECT_GE(greedy.size(), v.size());
      }
    }
  }
}
