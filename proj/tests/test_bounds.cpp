#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wilf/bounds.hpp"
#include "wilf/enumerate.hpp"

using wilf::build_semigroup;
using wilf::ell_coefficients;
using wilf::Rational;
using wilf::ReducedBranch;
using wilf::reduced_coefficients;
using wilf::Semigroup;
using wilf::theta_decompose;

TEST_CASE("theta decomposition") {
  auto td = theta_decompose(25, 5);
  CHECK(td.k == 1);
  CHECK(td.theta == Rational(0));
  CHECK(td.floor_theta == 0);

  td = theta_decompose(29, 5);
  CHECK(td.k == 1);
  CHECK(td.theta == Rational(4, 5));
  CHECK(td.floor_theta == 0);

  td = theta_decompose(14, 5);
  CHECK(td.k == 0);
  CHECK(td.theta == Rational(19, 5));
  CHECK(td.floor_theta == 3);
}

TEST_CASE("theta decomposition round-trips") {
  for (std::int64_t m = 1; m <= 23; ++m) {
    for (std::int64_t c = 0; c <= 200; ++c) {
      const auto td = theta_decompose(c, m);
      CHECK(Rational(6 * td.k - 1) * Rational(m) + td.theta * Rational(m) ==
            Rational(c));
      CHECK(td.theta >= Rational(0));
      CHECK(td.theta < Rational(6));
      CHECK(td.theta.floor() == td.floor_theta);
    }
  }
}

TEST_CASE("the six-case coefficient table") {
  const Rational expected[6][4] = {
      {{5, 6}, {1, 2}, {1, 3}, {0, 1}},
      {{6, 7}, {3, 7}, {2, 7}, {1, 7}},
      {{7, 8}, {1, 2}, {1, 4}, {1, 8}},
      {{8, 9}, {4, 9}, {1, 3}, {1, 9}},
      {{3, 4}, {1, 2}, {1, 4}, {0, 1}},
      {{4, 5}, {2, 5}, {4, 15}, {2, 15}},
  };
  for (std::int64_t i = 0; i < 6; ++i) {
    const auto& c = ell_coefficients(i);
    CHECK(c.const_term == expected[i][0]);
    CHECK(c.q1_coeff == expected[i][1]);
    CHECK(c.q2_coeff == expected[i][2]);
    CHECK(c.sigma_coeff == expected[i][3]);
    // grouped-form consistency: sigma coefficient is alpha - beta - gamma
    CHECK(c.sigma_coeff == c.const_term - c.q1_coeff - c.q2_coeff);
  }
  CHECK_THROWS_AS(ell_coefficients(6), std::out_of_range);
  CHECK_THROWS_AS(ell_coefficients(-1), std::out_of_range);
}

TEST_CASE("ell evaluations") {
  CHECK(ell_coefficients(0).evaluate(1, 0, 0) == Rational(4, 3));
  CHECK(ell_coefficients(4).evaluate(0, 0, 0) == Rational(3, 4));
  CHECK(ell_coefficients(5).evaluate(0, 0, 0) == Rational(4, 5));
}

TEST_CASE("exact grouped coefficients") {
  // theta integer exactly when the multiplicity divides the conductor
  const auto exact = wilf::exact_grouped_coefficients(20, 5);
  CHECK(exact.alpha == Rational(1));
  const auto inexact = wilf::exact_grouped_coefficients(14, 5);
  CHECK(inexact.alpha == Rational(5, 7));   // (m/c) * floor(c/m)
  CHECK(inexact.beta == Rational(5, 14));   // (m/c) * (3k + floor(theta/2))
  CHECK(inexact.gamma == Rational(5, 14));
}

TEST_CASE("reduced coefficients, q2 = sigma branch") {
  const auto rc = reduced_coefficients(5, ReducedBranch::Q2EqualsSigma);
  CHECK(rc.alpha == Rational(4, 5));
  CHECK(rc.beta == Rational(2, 5));
  CHECK(rc.gamma == Rational(2, 5));
  CHECK(rc.quad_a == Rational(8, 25));
  CHECK(rc.quad_b == Rational(1, 5));
  CHECK(rc.quad_c == Rational(-1, 2));

  CHECK(reduced_coefficients(0, ReducedBranch::Q2EqualsSigma).gamma ==
        Rational(1, 3));
  CHECK(reduced_coefficients(0, ReducedBranch::Q2EqualsSigma).quad_a ==
        Rational(4, 9));
}

TEST_CASE("reduced coefficients, q1 = sigma branch") {
  const auto rc = reduced_coefficients(5, ReducedBranch::Q1EqualsSigma);
  CHECK(rc.beta == Rational(8, 15));
  CHECK(rc.gamma == Rational(4, 15));
  CHECK(rc.quad_a == Rational(32, 75));
  CHECK(rc.quad_a > Rational(8, 25));
}

TEST_CASE("quadratic coefficient minimality across the cases") {
  const Rational expected_a[6] = {{4, 9},  {18, 49}, {15, 32},
                                  {32, 81}, {3, 8},  {8, 25}};
  Rational min_a(1);
  for (std::int64_t i = 0; i < 6; ++i) {
    const auto rc = reduced_coefficients(i, ReducedBranch::Q2EqualsSigma);
    CHECK(rc.quad_a == expected_a[i]);
    min_a = std::min(min_a, rc.quad_a);
  }
  CHECK(min_a == Rational(8, 25));
  for (std::int64_t i = 0; i < 6; ++i) {
    // the q1 = sigma branch never improves on 8/25
    CHECK(reduced_coefficients(i, ReducedBranch::Q1EqualsSigma).quad_a >
          Rational(8, 25));
  }
}

TEST_CASE("remainder data for the worst case") {
  const auto rc = reduced_coefficients(5, ReducedBranch::Q2EqualsSigma);
  const Rational lambda = wilf::remainder_lambda(rc);
  CHECK(lambda == Rational(5));
  CHECK(lambda * lambda * lambda * rc.quad_a == Rational(40));
  const Rational bound10 = wilf::remainder_bound(rc, 10);
  CHECK(bound10 == Rational(70711, 100000));
  CHECK(bound10 < Rational(3, 4));
  CHECK(wilf::remainder_bound(rc, 20) == Rational(70711, 200000));
  CHECK_THROWS_AS(wilf::remainder_bound(rc, 9), std::domain_error);
}

TEST_CASE("multiplicity threshold") {
  const auto rc5 = reduced_coefficients(5, ReducedBranch::Q2EqualsSigma);
  CHECK(wilf::mu_threshold(rc5, 10, Rational(3, 4)) == Rational(131, 4));
  const auto rc4 = reduced_coefficients(4, ReducedBranch::Q2EqualsSigma);
  // A=3/8, B=1/4, C=-3/8
  CHECK(rc4.quad_a == Rational(3, 8));
  CHECK(rc4.quad_b == Rational(1, 4));
  CHECK(wilf::mu_threshold(rc4, 10, Rational(0)) ==
        Rational(3, 8) * Rational(100) + Rational(10, 4) + rc4.quad_c);
  // a large eps empties the admissible range [2*nu, threshold]
  CHECK(wilf::mu_threshold(rc5, 10, Rational(20)) < Rational(20));
  CHECK_THROWS_AS(wilf::mu_threshold(rc5, 10, Rational(-1)),
                  std::invalid_argument);
}

TEST_CASE("lattice check of the quadratic lemma") {
  const auto rc = reduced_coefficients(5, ReducedBranch::Q2EqualsSigma);
  CHECK(wilf::lattice_bound_check(rc, 20, 10));
  CHECK(wilf::lattice_bound_check(rc, 32, 10));
  // far beyond the threshold the minimum dips below mu/nu
  CHECK_FALSE(wilf::lattice_bound_check(rc, 55, 10));
  CHECK_THROWS_AS(wilf::lattice_bound_check(rc, 19, 10),
                  std::invalid_argument);
  CHECK_THROWS_AS(wilf::lattice_bound_check(rc, 20, 9),
                  std::invalid_argument);
}

TEST_CASE("progression counting") {
  CHECK(wilf::ap_count_lower(Rational(0), Rational(14), Rational(0),
                             Rational(5)) == 2);
  CHECK(wilf::ap_count_exact(Rational(0), Rational(14), Rational(0),
                             Rational(5)) == 3);  // {0, 5, 10}
  // one full period plus the left endpoint: y - x in (p, 2p)
  CHECK(wilf::ap_count_exact(Rational(3), Rational(19, 2), Rational(3),
                             Rational(5)) == 2);  // {3, 8}
  CHECK_THROWS_AS(wilf::ap_count_lower(Rational(3), Rational(3), Rational(0),
                                       Rational(5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(wilf::ap_count_lower(Rational(0), Rational(14), Rational(0),
                                       Rational(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(wilf::ap_count_exact(Rational(1), Rational(14), Rational(0),
                                       Rational(5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(wilf::ap_count_exact(Rational(0), Rational(15), Rational(0),
                                       Rational(5)),
                  std::invalid_argument);
}

TEST_CASE("progression counting against the stepping oracle") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::int64_t> den(1, 12);
  std::uniform_int_distribution<std::int64_t> num(-60, 60);
  std::uniform_int_distribution<std::int64_t> span(1, 120);
  for (int i = 0; i < 5000; ++i) {
    const Rational b(num(rng), den(rng));
    const Rational x(num(rng), den(rng));
    const Rational p(span(rng), den(rng));
    const Rational y = x + Rational(span(rng), den(rng));
    const std::int64_t direct = oracle::direct_progression_count(x, y, b, p);
    CHECK(wilf::ap_count_lower(x, y, b, p) <= direct);
    if (wilf::in_progression(x, b, p) && !wilf::in_progression(y, b, p)) {
      CHECK(wilf::ap_count_exact(x, y, b, p) == direct);
    }
  }
}

TEST_CASE("lower bounds on the left part") {
  const Semigroup s = build_semigroup({5, 7, 9});
  const auto pr = partition_generators(s);
  const auto basic = lbound_basic(s, pr);
  CHECK(basic.holds());
  CHECK(basic.rhs == Rational(4));
  CHECK(basic.lhs == Rational(6));
  // sigma = 0 reduces the pair bound to the basic bound
  const auto pairs = lbound_pairs(s, pr, 0);
  CHECK(pairs.rhs == basic.rhs);
  CHECK(pairs.holds());
  CHECK_THROWS_AS(lbound_pairs(s, pr, 1), std::invalid_argument);
}

TEST_CASE("ell value and chain") {
  const Semigroup s = build_semigroup({5, 7, 9});
  const auto pr = partition_generators(s);
  // c = 14 <= 15: the small-conductor certificate applies instead
  CHECK_THROWS_AS(wilf::ell_value(s, pr, 0), std::domain_error);

  const Semigroup t = build_semigroup({5, 9, 11, 13});
  REQUIRE(t.conductor == 18);
  const auto tpr = partition_generators(t);
  REQUIRE(tpr.large_a2);
  REQUIRE(tpr.q1 == 2);
  REQUIRE(tpr.q2 == 1);
  const auto g = apery_pairs(t, tpr);
  REQUIRE(g.sigma == 1);
  const auto ev = wilf::ell_value(t, tpr, g.sigma);
  CHECK(ev.case_index == 4);
  CHECK(ev.value == Rational(2));  // 3/4 + 1/2*2 + 1/4*1 + 0*1
  const auto chain = wilf::ell_chain_check(t, tpr, g.sigma);
  CHECK(chain.holds());
  CHECK(chain.lhs == Rational(2));      // 4*9/18
  CHECK(chain.rhs == Rational(8, 5));   // (4/5)*2
}

TEST_CASE("certificates") {
  CHECK(wilf::certify(build_semigroup({5, 7, 9})).certificate.tag() ==
        "EliahouSmallC");
  CHECK(wilf::certify(build_semigroup({1})).certificate.tag() ==
        "EliahouSmallC");
  // c = 11 <= 12 = 3*mu takes the small-conductor branch ahead of the
  // maximal-embedding-dimension one
  CHECK(wilf::certify(build_semigroup({4, 9, 11, 14})).certificate.tag() ==
        "EliahouSmallC");
  // maximal embedding dimension with c = 4*mu
  const auto max_ed = wilf::certify(build_semigroup({5, 21, 22, 23, 24}));
  CHECK(max_ed.certificate.tag() == "MaxEmbeddingDim");
  // chain certificate: large a2, c > 3*mu, (nu/mu)*ell >= 1
  const auto ell_cert = wilf::certify(build_semigroup({5, 9, 11, 13}));
  CHECK(ell_cert.certificate.tag() == "EllBound(4)");
  CHECK(ell_cert.find("ell_certificate")->lhs >= Rational(1));
  CHECK(ell_cert.all_hold_or_skipped());
}

TEST_CASE("divisible-conductor certificate") {
  // hypotheses not met: embedding dimension below 10
  const Semigroup small = build_semigroup({5, 21, 22, 23, 24});
  CHECK(wilf::divisible_conductor_check(small, partition_generators(small)).skipped());

  // maximal embedding dimension instance with nu = 11 and c = 44
  std::vector<std::int64_t> gens{11};
  for (std::int64_t x = 45; x <= 54; ++x) gens.push_back(x);
  const Semigroup s = build_semigroup(gens);
  REQUIRE(s.embedding_dim == 11);
  REQUIRE(s.conductor == 44);
  REQUIRE(s.conductor % s.multiplicity == 0);
  const auto pr = partition_generators(s);
  REQUIRE(pr.large_a2);
  const auto entry = wilf::divisible_conductor_check(s, pr);
  CHECK_FALSE(entry.skipped());
  CHECK(entry.holds());
  // theta is an integer here, so the exact alpha coefficient is exactly 1
  CHECK(wilf::exact_grouped_coefficients(s.conductor, s.multiplicity).alpha ==
        Rational(1));
}

TEST_CASE("conductor threshold and check") {
  CHECK(wilf::conductor_threshold_rhs(50, 10, Rational(1, 6)) == Rational(2450));
  // monotone growth as chi shrinks
  CHECK(wilf::conductor_threshold_rhs(50, 10, Rational(1, 12)) >
        wilf::conductor_threshold_rhs(50, 10, Rational(1, 6)));
  CHECK_THROWS_AS(wilf::conductor_threshold_rhs(50, 10, Rational(1, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(wilf::conductor_threshold_rhs(50, 10, Rational(0)),
                  std::invalid_argument);
  CHECK(wilf::conductor_threshold_reference_note().find("2450") != std::string::npos);
  CHECK(wilf::conductor_threshold_reference_note().find("26050") != std::string::npos);

  const Semigroup s = build_semigroup({5, 9, 11, 13});
  const auto pr = partition_generators(s);
  const auto entry = wilf::conductor_threshold_check(s, pr, Rational(1, 6));
  CHECK(entry.holds());  // vacuous or confirmed, never failing here
  CHECK(entry.note.find("26050") != std::string::npos);
}

TEST_CASE("weak wilf inequality") {
  const Semigroup s = build_semigroup({5, 9, 11, 13});
  const auto check = wilf::weak_wilf_check(s, Rational(79, 100));
  CHECK(check.entry.holds());
  CHECK(check.mu_within_quadratic);
  // (8/25) / (79/100)^2 = 3200/6241 > 1/2
  CHECK(check.case_index == 4);
  const auto case5 =
      wilf::weak_wilf_check(build_semigroup({5, 21, 22, 23, 24}),
                            Rational(79, 100));
  CHECK(case5.case_index == 5);
  CHECK(case5.coefficient_ratio == Rational(3200, 6241));
  CHECK(case5.coefficient_ratio > Rational(1, 2));
  CHECK_THROWS_AS(wilf::weak_wilf_check(s, Rational(4, 5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(wilf::weak_wilf_check(s, Rational(0)),
                  std::invalid_argument);
  // lambda = 1/2 passes for any Wilf-satisfying semigroup
  CHECK(wilf::weak_wilf_check(s, Rational(1, 2)).entry.holds());
}

TEST_CASE("pair bound against the basic bound on enumerated instances") {
  // the first genus-ordered instance with sigma >= 1 and c > 3*mu sits in
  // (3*mu, 4*mu), where the per-pair gain is zero: the bounds coincide
  bool found_first = false;
  wilf::enumerate_by_genus(14, [&](const wilf::TreeSemigroup& node) {
    if (found_first) return;
    const Semigroup s = build_semigroup(node.min_generators());
    const auto pr = partition_generators(s);
    if (!pr.large_a2 || s.conductor <= 3 * s.multiplicity) return;
    const auto g = apery_pairs(s, pr);
    if (g.sigma < 1) return;
    found_first = true;
    CHECK(s.min_generators ==
          std::vector<std::int64_t>{8, 14, 15, 18, 19, 20, 21});
    CHECK(lbound_pairs(s, pr, g.sigma).rhs == lbound_basic(s, pr).rhs);
  });
  CHECK(found_first);

  // once c reaches 4*mu the pair bound strictly improves
  const Semigroup s = build_semigroup({8, 17, 18, 19, 20, 21, 22});
  REQUIRE(s.conductor == 32);
  const auto pr = partition_generators(s);
  REQUIRE(pr.large_a2);
  const auto g = apery_pairs(s, pr);
  REQUIRE(g.sigma == 3);
  CHECK(lbound_pairs(s, pr, g.sigma).rhs > lbound_basic(s, pr).rhs);
}

TEST_CASE("divisible-conductor boundary arithmetic") {
  // at mu = nu*(nu+1)/2 with (q1, q2) = (nu-1, 0) the certificate value is
  // exactly mu/nu on both sides
  const std::int64_t nu = 10, mu = 55, q1 = 9, q2 = 0;
  CHECK(nu * (2 + q1 + q2) == 2 * mu);
  CHECK(Rational(nu, mu) * (Rational(1) + Rational(q1, 2) + Rational(q2, 2)) ==
        Rational(1));
}

TEST_CASE("bound chain over the enumerated corpus") {
  wilf::enumerate_by_genus(12, [](const wilf::TreeSemigroup& node) {
    const Semigroup s = build_semigroup(node.min_generators());
    const auto pr = partition_generators(s);
    if (!pr.large_a2 || s.conductor == 0) return;
    const auto g = apery_pairs(s, pr);
    const auto basic = lbound_basic(s, pr);
    const auto pairs = lbound_pairs(s, pr, g.sigma);
    CHECK(basic.holds());
    CHECK(pairs.holds());
    if (s.conductor > 3 * s.multiplicity) {
      CHECK(pairs.rhs >= basic.rhs);
      CHECK(pairs.note.empty());
      CHECK(wilf::ell_chain_check(s, pr, g.sigma).holds());
      // exact grouped alpha and beta dominate the case table entries
      const auto exact =
          wilf::exact_grouped_coefficients(s.conductor, s.multiplicity);
      const auto td = theta_decompose(s.conductor, s.multiplicity);
      const auto& table = ell_coefficients(td.floor_theta);
      CHECK(exact.alpha >= table.const_term);
      CHECK(exact.beta >= table.q1_coeff);
    }
    CHECK(wilf::certify(s).certificate.tag() != "None");
  });
}
