#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "wilf/rational.hpp"

namespace wilf {

// Input guards. Together they keep every derived quantity (shortest-path
// distances, conductor + multiplicity, genus accumulation) inside int64.
inline constexpr std::int64_t kMaxGeneratorValue = 1'000'000'000;
inline constexpr std::int64_t kMaxMultiplicity = 2'000'000;

// A numerical semigroup, fully determined at construction time and immutable
// afterwards; values are safe to share across threads.
//
// apery[t] is the least element of S congruent to t mod multiplicity, so
// membership, the Frobenius number and all per-class counts are O(1) reads.
struct Semigroup {
  std::vector<std::int64_t> min_generators;  // strictly increasing, minimal
  std::int64_t multiplicity = 1;             // least positive element
  std::int64_t embedding_dim = 1;            // |min_generators|
  std::int64_t frobenius = -1;               // largest integer not in S
  std::int64_t conductor = 0;                // frobenius + 1
  std::int64_t genus = 0;                    // |N \ S|
  std::int64_t left_count = 0;               // |{x in S : 0 <= x < conductor}|
  std::vector<std::int64_t> apery;           // size == multiplicity

  bool contains(std::int64_t x) const {
    if (x < 0) return false;
    return x >= apery[static_cast<std::size_t>(x % multiplicity)];
  }

  // Second smallest minimal generator, absent for S = N.
  std::optional<std::int64_t> second_generator() const {
    if (min_generators.size() < 2) return std::nullopt;
    return min_generators[1];
  }
};

namespace detail {

inline std::int64_t floordiv(std::int64_t a, std::int64_t b) {
  // b > 0; rounds toward minus infinity.
  std::int64_t q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

}  // namespace detail

// Builds the semigroup generated by `generators` (which need not be a
// minimal system). The Apery set with respect to the multiplicity m is
// computed exactly by single-source shortest paths on the residue graph:
// nodes {0..m-1}, and for every generator g with g % m != 0 an edge
// t -> (t+g) mod m of weight g. dist[t] is then the least element of S in
// class t, with no dependence on the size of the conductor. The minimal
// generating system is recomputed from the Apery set.
inline Semigroup build_semigroup(std::vector<std::int64_t> generators) {
  if (generators.empty()) {
    throw std::invalid_argument("empty generator list");
  }
  for (std::int64_t g : generators) {
    if (g <= 0) throw std::invalid_argument("generators must be positive");
    if (g > kMaxGeneratorValue) {
      throw std::invalid_argument("generator exceeds supported range");
    }
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());

  std::int64_t g = 0;
  for (std::int64_t v : generators) g = std::gcd(g, v);
  if (g != 1) {
    throw std::invalid_argument(
        "not a numerical semigroup: gcd of generators is " + std::to_string(g));
  }

  Semigroup s;
  s.multiplicity = generators.front();
  if (s.multiplicity > kMaxMultiplicity) {
    throw std::invalid_argument("multiplicity exceeds supported range");
  }

  if (s.multiplicity == 1) {
    s.min_generators = {1};
    s.embedding_dim = 1;
    s.frobenius = -1;
    s.conductor = 0;
    s.genus = 0;
    s.left_count = 0;
    s.apery = {0};
    return s;
  }

  const std::int64_t m = s.multiplicity;
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> dist(static_cast<std::size_t>(m), kInf);
  dist[0] = 0;
  using Item = std::pair<std::int64_t, std::int64_t>;  // (dist, node)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, t] = queue.top();
    queue.pop();
    if (d != dist[static_cast<std::size_t>(t)]) continue;
    for (std::int64_t gen : generators) {
      if (gen % m == 0) continue;  // multiples of m never shrink a class
      const std::int64_t to = (t + gen) % m;
      if (d + gen < dist[static_cast<std::size_t>(to)]) {
        dist[static_cast<std::size_t>(to)] = d + gen;
        queue.emplace(d + gen, to);
      }
    }
  }

  s.apery = std::move(dist);
  const std::int64_t max_apery = *std::max_element(s.apery.begin(), s.apery.end());
  s.frobenius = max_apery - m;
  s.conductor = s.frobenius + 1;
  s.genus = 0;
  for (std::int64_t t = 0; t < m; ++t) {
    // gaps in class t are t, t+m, ..., apery[t]-m
    s.genus += (s.apery[static_cast<std::size_t>(t)] - t) / m;
  }
  s.left_count = s.conductor - s.genus;

  // x != m is a minimal generator iff x is a nonzero Apery element with no
  // decomposition x = u + v, u, v in S \ {0}.
  std::vector<std::int64_t> candidates;
  candidates.push_back(m);
  for (std::int64_t t = 1; t < m; ++t) {
    candidates.push_back(s.apery[static_cast<std::size_t>(t)]);
  }
  std::sort(candidates.begin(), candidates.end());
  for (std::int64_t x : candidates) {
    bool minimal = true;
    if (x != m) {
      for (std::int64_t u = m; 2 * u <= x; ++u) {
        if (s.contains(u) && s.contains(x - u)) {
          minimal = false;
          break;
        }
      }
    }
    if (minimal) s.min_generators.push_back(x);
  }
  s.embedding_dim = static_cast<std::int64_t>(s.min_generators.size());
  return s;
}

// |L_x| for x = apery[t]: elements of the class of t below the conductor.
inline std::int64_t left_class_count(const Semigroup& s, std::int64_t t) {
  if (t < 0 || t >= s.multiplicity) {
    throw std::out_of_range("residue out of range");
  }
  const std::int64_t a = s.apery[static_cast<std::size_t>(t)];
  if (a >= s.conductor) return 0;
  return (s.conductor - 1 - a) / s.multiplicity + 1;
}

struct WilfCheck {
  std::optional<Rational> ratio;  // nu*|L|/c, absent when c == 0
  bool holds = true;
};

inline WilfCheck wilf_check(const Semigroup& s) {
  WilfCheck result;
  if (s.conductor == 0) return result;  // S = N, vacuously true
  const std::int64_t lhs = s.embedding_dim * s.left_count;
  result.ratio = Rational(lhs, s.conductor);
  result.holds = lhs >= s.conductor;
  return result;
}

}  // namespace wilf
