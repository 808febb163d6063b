#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wilf/ledger.hpp"
#include "wilf/rational.hpp"
#include "wilf/semigroup.hpp"

namespace wilf {

// Subset of Z/mZ backed by a bitmap.
struct ResidueSet {
  std::int64_t modulus = 1;
  std::vector<bool> bits;

  explicit ResidueSet(std::int64_t m = 1)
      : modulus(m), bits(static_cast<std::size_t>(m), false) {
    if (m <= 0) throw std::invalid_argument("modulus must be positive");
  }

  void insert(std::int64_t v) {
    std::int64_t r = v % modulus;
    if (r < 0) r += modulus;
    bits[static_cast<std::size_t>(r)] = true;
  }

  bool contains(std::int64_t v) const {
    std::int64_t r = v % modulus;
    if (r < 0) r += modulus;
    return bits[static_cast<std::size_t>(r)];
  }

  std::int64_t count() const {
    std::int64_t n = 0;
    for (bool b : bits) n += b ? 1 : 0;
    return n;
  }

  bool empty() const { return count() == 0; }
  bool full() const { return count() == modulus; }

  std::vector<std::int64_t> members() const {
    std::vector<std::int64_t> out;
    for (std::int64_t r = 0; r < modulus; ++r) {
      if (bits[static_cast<std::size_t>(r)]) out.push_back(r);
    }
    return out;
  }
};

inline ResidueSet project(const std::vector<std::int64_t>& values,
                          std::int64_t modulus) {
  ResidueSet set(modulus);
  for (std::int64_t v : values) set.insert(v);
  return set;
}

// {(x+y) mod m : x in X, y in Y}; empty if either side is empty.
inline ResidueSet sumset(const ResidueSet& x, const ResidueSet& y) {
  if (x.modulus != y.modulus) {
    throw std::invalid_argument("sumset requires equal moduli");
  }
  ResidueSet out(x.modulus);
  for (std::int64_t a = 0; a < x.modulus; ++a) {
    if (!x.bits[static_cast<std::size_t>(a)]) continue;
    for (std::int64_t b = 0; b < y.modulus; ++b) {
      if (!y.bits[static_cast<std::size_t>(b)]) continue;
      out.insert(a + b);
    }
  }
  return out;
}

// Size partition of the non-multiplicity minimal generators against the
// thresholds (c+m)/3, (c+m)/2 and 2(c+m)/3, decided by exact integer
// comparisons with cleared denominators. Interval brackets follow the
// definitions exactly: P1 open on both sides, P2 and P3 closed-left /
// open-right, so a generator with 2a == c+m lands in P2.
struct PartitionReport {
  bool large_a2 = false;  // 3*a2 > c + multiplicity
  std::vector<std::int64_t> p1, p2, p3;
  std::int64_t q1 = 0, q2 = 0, q3 = 0;
};

inline PartitionReport partition_generators(const Semigroup& s) {
  PartitionReport pr;
  const std::int64_t T = s.conductor + s.multiplicity;
  if (auto a2 = s.second_generator()) {
    pr.large_a2 = 3 * *a2 > T;
  }
  for (std::size_t i = 1; i < s.min_generators.size(); ++i) {
    const std::int64_t a = s.min_generators[i];
    if (3 * a > T && 2 * a < T) {
      pr.p1.push_back(a);
    } else if (2 * a >= T && 3 * a < 2 * T) {
      pr.p2.push_back(a);
    } else if (3 * a >= 2 * T && a < T) {
      pr.p3.push_back(a);
    }
    // generators at or below (c+m)/3 land nowhere; they only occur when
    // large_a2 is false and downstream checks are gated on that flag
  }
  pr.q1 = static_cast<std::int64_t>(pr.p1.size());
  pr.q2 = static_cast<std::int64_t>(pr.p2.size());
  pr.q3 = static_cast<std::int64_t>(pr.p3.size());
  return pr;
}

namespace detail {

inline void require_large_a2(const PartitionReport& pr) {
  if (!pr.large_a2) {
    throw std::invalid_argument(
        "hypothesis not satisfied: 3*a2 <= conductor + multiplicity");
  }
}

}  // namespace detail

struct CoverageCheck {
  bool holds = false;
  ResidueSet uncovered;  // residues missed by A, A1+A1 and A1+A2
};

// Z/mZ = A u (A1+A1) u (A1+A2), where A is the projection of all minimal
// generators and Ai the projection of Pi.
inline CoverageCheck coverage_check(const Semigroup& s,
                                    const PartitionReport& pr) {
  detail::require_large_a2(pr);
  const std::int64_t m = s.multiplicity;
  ResidueSet covered = project(s.min_generators, m);
  const ResidueSet a1 = project(pr.p1, m);
  const ResidueSet a2 = project(pr.p2, m);
  for (std::int64_t r : sumset(a1, a1).members()) covered.insert(r);
  for (std::int64_t r : sumset(a1, a2).members()) covered.insert(r);

  CoverageCheck out{true, ResidueSet(m)};
  for (std::int64_t r = 0; r < m; ++r) {
    if (!covered.bits[static_cast<std::size_t>(r)]) {
      out.uncovered.insert(r);
      out.holds = false;
    }
  }
  return out;
}

// The three bounds relating multiplicity, embedding dimension and q1, q2.
// The q1 bound is decided by the integer-square predicate equivalent to
// q1 >= (2*nu - 1 - sqrt((2*nu+1)^2 - 8*mu)) / 2.
inline std::vector<LedgerEntry> generator_count_bounds(
    const Semigroup& s, const PartitionReport& pr) {
  detail::require_large_a2(pr);
  const std::int64_t mu = s.multiplicity;
  const std::int64_t nu = s.embedding_dim;
  const std::int64_t q1 = pr.q1, q2 = pr.q2;

  std::vector<LedgerEntry> entries;
  entries.push_back(LedgerEntry::compare(
      "mu_bound_a", Rational(mu), Relation::LE,
      Rational(nu + q1 * (q1 + 1) / 2 + q1 * q2)));
  entries.push_back(LedgerEntry::compare(
      "mu_bound_b", Rational(mu), Relation::LE, Rational(nu * (nu + 1) / 2)));

  const std::int64_t disc = (2 * nu + 1) * (2 * nu + 1) - 8 * mu;
  if (2 * q1 >= 2 * nu - 1) {
    entries.push_back(LedgerEntry::compare(
        "q1_bound", Rational(2 * q1), Relation::GE, Rational(2 * nu - 1),
        "q1 at or beyond the parabola vertex"));
  } else if (disc < 0) {
    entries.push_back(
        LedgerEntry{"q1_bound", Rational((2 * nu + 1) * (2 * nu + 1)),
                    Rational(8 * mu), Relation::GE, CheckStatus::Fails,
                    "mu_bound_b violated: negative discriminant"});
  } else {
    const std::int64_t root = 2 * nu - 1 - 2 * q1;
    entries.push_back(LedgerEntry::compare(
        "q1_bound", Rational(root * root), Relation::LE, Rational(disc)));
  }
  return entries;
}

// Membership in the planar region bounded by q1 >= 0, q2 >= 0,
// q1 + q2 <= nu - 1 and the hyperbola q1*(q1/2 + 1/2 + q2) >= mu - nu.
inline bool omega_contains(std::int64_t mu, std::int64_t nu, const Rational& x,
                           const Rational& y) {
  if (mu <= 0 || nu <= 0) {
    throw std::invalid_argument("mu and nu must be positive");
  }
  if (x < Rational(0) || y < Rational(0)) return false;
  if (x + y > Rational(nu - 1)) return false;
  return x * (x / Rational(2) + Rational(1, 2) + y) >= Rational(mu - nu);
}

// All integer points of the region, sorted lexicographically. Uses the
// cleared-denominator form q1*(q1+1) + 2*q1*q2 >= 2*(mu-nu).
inline std::vector<std::pair<std::int64_t, std::int64_t>> omega_lattice_points(
    std::int64_t mu, std::int64_t nu) {
  if (mu <= 0 || nu <= 0) {
    throw std::invalid_argument("mu and nu must be positive");
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> points;
  for (std::int64_t x = 0; x <= nu - 1; ++x) {
    for (std::int64_t y = 0; x + y <= nu - 1; ++y) {
      if (x * (x + 1) + 2 * x * y >= 2 * (mu - nu)) points.emplace_back(x, y);
    }
  }
  return points;
}

// Exact ordinate of the hyperbola bounding the region, for boundary export.
inline Rational omega_hyperbola_y(std::int64_t mu, std::int64_t nu,
                                  std::int64_t x) {
  if (x <= 0) throw std::invalid_argument("hyperbola sample needs x > 0");
  return Rational(mu - nu) / Rational(x) - Rational(x, 2) - Rational(1, 2);
}

}  // namespace wilf
