#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "wilf/enumerate.hpp"
#include "wilf/matching.hpp"

using wilf::AperyPairGraph;
using wilf::build_semigroup;
using wilf::maximum_bipartite_matching;
using wilf::min_vertex_cover_bruteforce;
using wilf::Semigroup;

namespace {

// Exhaustive maximum independent edge set, the second brute-force oracle.
int max_matching_by_edge_subsets(int, const std::vector<std::pair<int, int>>& edges) {
  const int m = static_cast<int>(edges.size());
  REQUIRE(m <= 20);
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::uint32_t left_used = 0, right_used = 0;
    bool ok = true;
    int size = 0;
    for (int e = 0; e < m && ok; ++e) {
      if (!((mask >> e) & 1u)) continue;
      const auto [u, v] = edges[static_cast<std::size_t>(e)];
      if ((left_used >> u) & 1u) ok = false;
      if ((right_used >> v) & 1u) ok = false;
      left_used |= 1u << u;
      right_used |= 1u << v;
      ++size;
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

}  // namespace

TEST_CASE("empty side gives an empty graph") {
  const Semigroup s = build_semigroup({5, 7, 9});
  const auto pr = partition_generators(s);
  const AperyPairGraph g = apery_pairs(s, pr);
  CHECK(g.edges.empty());
  CHECK(g.sigma == 0);
  CHECK(g.witness.empty());
}

TEST_CASE("three-edge abstract graph has matching number 2") {
  // edges {(a,b), (a,b'), (a',b')}
  const std::vector<std::pair<int, int>> edges = {{0, 0}, {0, 1}, {1, 1}};
  const auto m = maximum_bipartite_matching(2, 2, edges);
  CHECK(m.size == 2);
  CHECK(m.size == max_matching_by_edge_subsets(2, edges));
  CHECK(min_vertex_cover_bruteforce(2, 2, edges) == 2);
  // witness edges are pairwise vertex-disjoint
  REQUIRE(m.pairs.size() == 2);
  CHECK(m.pairs[0].first != m.pairs[1].first);
  CHECK(m.pairs[0].second != m.pairs[1].second);
}

TEST_CASE("star graph has cover number 1") {
  const std::vector<std::pair<int, int>> star = {{0, 0}, {0, 1}, {0, 2}};
  CHECK(min_vertex_cover_bruteforce(1, 3, star) == 1);
  CHECK(maximum_bipartite_matching(1, 3, star).size == 1);
  CHECK(min_vertex_cover_bruteforce(0, 0, {}) == 0);
}

TEST_CASE("complete bipartite graphs match the smaller side") {
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < a; ++i) {
        for (int j = 0; j < b; ++j) edges.emplace_back(i, j);
      }
      const auto m = maximum_bipartite_matching(a, b, edges);
      CHECK(m.size == std::min(a, b));
      // sigma * max >= |edges| holds with equality here
      CHECK(m.size * std::max(a, b) == a * b);
    }
  }
}

TEST_CASE("vertex cover oracle rejects oversized graphs") {
  CHECK_THROWS_AS(min_vertex_cover_bruteforce(15, 15, {}),
                  std::invalid_argument);
}

TEST_CASE("koenig duality on random graphs") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const int a = static_cast<int>(rng() % 7) + 1;
    const int b = static_cast<int>(rng() % 7) + 1;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i) {
      for (int j = 0; j < b; ++j) {
        if (rng() % 3 == 0) edges.emplace_back(i, j);
      }
    }
    const auto m = maximum_bipartite_matching(a, b, edges);
    CHECK(m.size == min_vertex_cover_bruteforce(a, b, edges));
    if (edges.size() <= 16) {
      CHECK(m.size == max_matching_by_edge_subsets(a, edges));
    }
  }
}

TEST_CASE("matching size is independent of edge input order") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const int a = static_cast<int>(rng() % 6) + 1;
    const int b = static_cast<int>(rng() % 6) + 1;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i) {
      for (int j = 0; j < b; ++j) {
        if (rng() % 2 == 0) edges.emplace_back(i, j);
      }
    }
    auto shuffled = edges;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto m1 = maximum_bipartite_matching(a, b, edges);
    const auto m2 = maximum_bipartite_matching(a, b, shuffled);
    CHECK(m1.size == m2.size);
    CHECK(m1.pairs == m2.pairs);  // witness too: adjacency is canonicalized
  }
}

TEST_CASE("first enumerated instance with a nonempty pair graph") {
  bool found = false;
  wilf::enumerate_by_genus(10, [&](const wilf::TreeSemigroup& node) {
    if (found) return;
    const Semigroup s = build_semigroup(node.min_generators());
    const auto pr = partition_generators(s);
    if (!pr.large_a2 || pr.q1 < 1 || pr.q2 < 1) return;
    const AperyPairGraph g = apery_pairs(s, pr);
    if (g.edges.empty()) return;
    found = true;
    CHECK(g.sigma >= 1);
    REQUIRE(g.witness.size() == static_cast<std::size_t>(g.sigma));
    for (auto [a, b] : g.witness) {
      // definitional Apery-pair test
      CHECK(s.contains(a + b));
      CHECK_FALSE(s.contains(a + b - s.multiplicity));
      CHECK(a + b < s.conductor + s.multiplicity);
    }
    for (std::size_t i = 0; i < g.witness.size(); ++i) {
      for (std::size_t j = i + 1; j < g.witness.size(); ++j) {
        CHECK(g.witness[i].first != g.witness[j].first);
        CHECK(g.witness[i].second != g.witness[j].second);
      }
    }
  });
  CHECK(found);
}

TEST_CASE("sigma bound and matching-derived multiplicity bound") {
  const Semigroup s = build_semigroup({5, 7, 9});
  const auto pr = partition_generators(s);
  const AperyPairGraph g = apery_pairs(s, pr);
  const auto sigma_entry = check_sigma_bound(g);
  CHECK(sigma_entry.holds());  // 0 >= 0, max(q1,q2) = 2 so not vacuous
  CHECK(sigma_entry.lhs == wilf::Rational(0));
  CHECK(sigma_entry.rhs == wilf::Rational(0));
  const auto cor = check_matching_mu_bound(s, pr, g);
  CHECK(cor.holds());
  CHECK(cor.lhs == wilf::Rational(6));
  CHECK(cor.rhs == wilf::Rational(5));
}

TEST_CASE("sigma bound on a synthetic graph") {
  // |Sigma| = 3, max(q1,q2) = 2, sigma = 2: 4 >= 3
  AperyPairGraph g;
  g.left = {10, 11};
  g.right = {20, 21};
  g.edges = {{10, 20}, {10, 21}, {11, 21}};
  g.sigma = 2;
  g.witness = {{10, 20}, {11, 21}};
  const auto entry = check_sigma_bound(g);
  CHECK(entry.holds());
  CHECK(entry.lhs == wilf::Rational(4));
  CHECK(entry.rhs == wilf::Rational(3));

  AperyPairGraph empty;
  CHECK(check_sigma_bound(empty).skipped());
}

TEST_CASE("sigma bound over the enumerated corpus") {
  wilf::enumerate_by_genus(10, [](const wilf::TreeSemigroup& node) {
    const Semigroup s = build_semigroup(node.min_generators());
    const auto pr = partition_generators(s);
    if (!pr.large_a2) return;
    const AperyPairGraph g = apery_pairs(s, pr);
    CHECK(g.sigma <= std::min(pr.q1, pr.q2));
    const auto entry = check_sigma_bound(g);
    if (std::max(pr.q1, pr.q2) == 0) {
      CHECK(entry.skipped());
    } else {
      CHECK(entry.holds());
    }
    CHECK(check_matching_mu_bound(s, pr, g).holds());
    // koenig duality against the exhaustive cover when small enough
    if (pr.q1 + pr.q2 <= 12) {
      CHECK(g.sigma == min_vertex_cover_bruteforce(g));
    }
  });
}
