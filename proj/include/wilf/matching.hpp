#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wilf/ledger.hpp"
#include "wilf/partition.hpp"
#include "wilf/semigroup.hpp"

namespace wilf {

struct MatchingResult {
  std::int64_t size = 0;
  std::vector<std::pair<int, int>> pairs;  // (left index, right index)
};

// Maximum matching by repeated augmenting paths. Left vertices are processed
// in index order and adjacency lists are sorted, so the witness is a
// deterministic function of the edge *set* (input order irrelevant).
inline MatchingResult maximum_bipartite_matching(
    int left_size, int right_size,
    const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(left_size));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= left_size || v < 0 || v >= right_size) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    adj[static_cast<std::size_t>(u)].push_back(v);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  std::vector<int> match_right(static_cast<std::size_t>(right_size), -1);
  std::vector<int> match_left(static_cast<std::size_t>(left_size), -1);
  std::vector<char> seen;

  std::function<bool(int)> augment = [&](int u) -> bool {
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (seen[static_cast<std::size_t>(v)]) continue;
      seen[static_cast<std::size_t>(v)] = 1;
      if (match_right[static_cast<std::size_t>(v)] == -1 ||
          augment(match_right[static_cast<std::size_t>(v)])) {
        match_right[static_cast<std::size_t>(v)] = u;
        match_left[static_cast<std::size_t>(u)] = v;
        return true;
      }
    }
    return false;
  };

  MatchingResult result;
  for (int u = 0; u < left_size; ++u) {
    seen.assign(static_cast<std::size_t>(right_size), 0);
    if (augment(u)) ++result.size;
  }
  for (int u = 0; u < left_size; ++u) {
    if (match_left[static_cast<std::size_t>(u)] != -1) {
      result.pairs.emplace_back(u, match_left[static_cast<std::size_t>(u)]);
    }
  }
  return result;
}

// Exhaustive minimum vertex cover, for Koenig-duality testing only.
// Enumerates subsets of the left side; right vertices are forced by the
// edges the subset leaves uncovered.
inline std::int64_t min_vertex_cover_bruteforce(
    int left_size, int right_size,
    const std::vector<std::pair<int, int>>& edges) {
  if (left_size + right_size > 20) {
    throw std::invalid_argument("vertex cover oracle limited to 20 vertices");
  }
  std::vector<std::pair<int, int>> unique_edges = edges;
  std::sort(unique_edges.begin(), unique_edges.end());
  unique_edges.erase(std::unique(unique_edges.begin(), unique_edges.end()),
                     unique_edges.end());

  std::int64_t best = left_size + right_size;
  for (std::uint32_t mask = 0; mask < (1u << left_size); ++mask) {
    std::uint32_t forced_right = 0;
    for (auto [u, v] : unique_edges) {
      if ((mask >> u) & 1u) continue;
      forced_right |= 1u << v;
    }
    const std::int64_t size =
        __builtin_popcount(mask) + __builtin_popcount(forced_right);
    best = std::min(best, size);
  }
  return best;
}

// Bipartite graph of Apery pairs: (a, b) in P1 x P2 with a + b in Ap(S),
// together with the maximum matching size sigma and a witness.
struct AperyPairGraph {
  std::vector<std::int64_t> left;   // P1, increasing
  std::vector<std::int64_t> right;  // P2, increasing
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  std::int64_t sigma = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> witness;

  std::int64_t q1() const { return static_cast<std::int64_t>(left.size()); }
  std::int64_t q2() const { return static_cast<std::int64_t>(right.size()); }
};

inline AperyPairGraph apery_pairs(const Semigroup& s,
                                  const PartitionReport& pr) {
  detail::require_large_a2(pr);
  AperyPairGraph g;
  g.left = pr.p1;
  g.right = pr.p2;
  std::vector<std::pair<int, int>> index_edges;
  for (std::size_t i = 0; i < g.left.size(); ++i) {
    for (std::size_t j = 0; j < g.right.size(); ++j) {
      const std::int64_t sum = g.left[i] + g.right[j];
      if (s.apery[static_cast<std::size_t>(sum % s.multiplicity)] == sum) {
        g.edges.emplace_back(g.left[i], g.right[j]);
        index_edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  MatchingResult m = maximum_bipartite_matching(
      static_cast<int>(g.left.size()), static_cast<int>(g.right.size()),
      index_edges);
  g.sigma = m.size;
  for (auto [i, j] : m.pairs) {
    g.witness.emplace_back(g.left[static_cast<std::size_t>(i)],
                           g.right[static_cast<std::size_t>(j)]);
  }
  return g;
}

inline std::int64_t min_vertex_cover_bruteforce(const AperyPairGraph& g) {
  std::vector<std::pair<int, int>> index_edges;
  for (auto [a, b] : g.edges) {
    const auto i = std::lower_bound(g.left.begin(), g.left.end(), a) -
                   g.left.begin();
    const auto j = std::lower_bound(g.right.begin(), g.right.end(), b) -
                   g.right.begin();
    index_edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  return min_vertex_cover_bruteforce(static_cast<int>(g.left.size()),
                                     static_cast<int>(g.right.size()),
                                     index_edges);
}

// sigma * max(q1, q2) >= |Sigma|, the cleared form of the matching bound.
// Vacuous (emitted as skipped) when both sides of the graph are empty.
inline LedgerEntry check_sigma_bound(const AperyPairGraph& g) {
  const std::int64_t qmax = std::max(g.q1(), g.q2());
  if (qmax == 0) {
    return LedgerEntry::skip("matching_bound",
                             "skipped (vacuous): max(q1,q2) = 0");
  }
  return LedgerEntry::compare(
      "matching_bound", Rational(g.sigma * qmax), Relation::GE,
      Rational(static_cast<std::int64_t>(g.edges.size())));
}

// q1(q1+1)/2 + sigma*max(q1,q2) + nu >= mu.
inline LedgerEntry check_matching_mu_bound(const Semigroup& s,
                                           const PartitionReport& pr,
                                           const AperyPairGraph& g) {
  const std::int64_t lhs = pr.q1 * (pr.q1 + 1) / 2 +
                           g.sigma * std::max(pr.q1, pr.q2) + s.embedding_dim;
  return LedgerEntry::compare("matching_mu_bound", Rational(lhs), Relation::GE,
                              Rational(s.multiplicity));
}

}  // namespace wilf
