#include <random>

#include "doctest.h"
#include "nestsub/error.hpp"
#include "nestsub/families.hpp"
#include "nestsub/prs.hpp"
#include "oracles.hpp"

using namespace nestsub;

namespace {

Poly P(std::initializer_list<long> c) { return Poly::from_ints(c); }

void check_stage_identities(const PrsStage& s) {
  REQUIRE(s.alphas.size() + 2 == s.length());
  for (std::size_t i = 2; i < s.length(); ++i) {
    const Poly lhs = s.alphas[i - 2] * s.polys[i - 2];
    const Poly rhs = s.quotients[i - 2] * s.polys[i - 1] + s.betas[i - 2] * s.polys[i];
    CHECK(lhs == rhs);
    CHECK(s.alphas[i - 2] != 0);
    CHECK(s.betas[i - 2] != 0);
    CHECK(s.polys[i].degree() < s.polys[i - 1].degree());
    CHECK(!s.polys[i].is_zero());
  }
  // The sequence stops at the last nonzero pseudo-remainder.
  if (s.length() >= 2) {
    CHECK(pseudo_divide(s.polys[s.length() - 2], s.last()).remainder.is_zero());
  }
}

std::pair<Poly, Poly> random_pair(std::mt19937_64& rng, int max_deg) {
  const int m = 2 + static_cast<int>(rng() % (max_deg - 1));
  const int n = 1 + static_cast<int>(rng() % (m - 1));
  return {oracle::random_int_poly(rng, m, 9), oracle::random_int_poly(rng, n, 9)};
}

}  // namespace

TEST_CASE("g dividing f ends the sequence immediately") {
  const auto s = prs(P({-1, 0, 1}), P({-1, 1}));
  CHECK(s.length() == 2);
  CHECK_FALSE(s.complete());
}

TEST_CASE("Euclidean rule against long division") {
  const auto s = prs(P({1, 0, 0, 1}), P({1, 0, 1}), DivisionRule::Euclidean);
  REQUIRE(s.length() == 4);
  CHECK(s.polys[2] == P({1, -1}));
  CHECK(s.polys[3] == P({2}));
  CHECK(s.complete());
  check_stage_identities(s);

  const auto seq = oracle::euclid_sequence(oracle::to_vec(P({1, 0, 0, 1})), oracle::to_vec(P({1, 0, 1})));
  REQUIRE(seq.size() == 4);
  for (std::size_t i = 0; i < seq.size(); ++i) CHECK(s.polys[i] == oracle::to_poly(seq[i]));
}

TEST_CASE("Knuth pair under the subresultant rule") {
  const Instance k = knuth_pair();
  const auto s = prs(k.f, k.g);
  CHECK(s.degrees() == std::vector<int>{8, 6, 4, 2, 1, 0});
  CHECK(s.polys[2] == P({9, 0, -3, 0, 15}));
  CHECK(s.polys[3] == P({-245, 125, 65}));
  CHECK(s.polys[4] == P({-12300, 9326}));
  CHECK(s.polys[5] == P({260708}));
  for (const auto& p : s.polys)
    for (const auto& c : p.coeffs()) CHECK(c.get_den() == 1);
  check_stage_identities(s);
  // Each element is a multiple of the Euclidean remainder of the same index.
  const auto seq = oracle::euclid_sequence(oracle::to_vec(k.f), oracle::to_vec(k.g));
  REQUIRE(seq.size() == s.length());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    CHECK(proportionality_factor(s.polys[i], oracle::to_poly(seq[i])).has_value());
  }
}

TEST_CASE("zero input is rejected") {
  CHECK_THROWS_AS(prs(Poly(), P({1, 1})), Error);
  CHECK_THROWS_AS(prs(P({1, 1}), Poly()), Error);
  CHECK_THROWS_AS(recursive_prs(P({1, 1, 1}), Poly()), Error);
}

TEST_CASE("equal degrees are accepted and flagged") {
  const auto s = prs(P({1, 2, 3}), P({2, 0, 1}));
  CHECK(s.equal_degree_start);
  check_stage_identities(s);
}

TEST_CASE("rule independence on random pairs") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 100; ++t) {
    auto [f, g] = random_pair(rng, 8);
    if (t % 2 == 0) {
      const Poly d = oracle::random_int_poly(rng, 1 + static_cast<int>(rng() % 2), 3);
      f *= d;
      g *= d;
    }
    const Poly expect = oracle::to_poly(oracle::monic_gcd(oracle::to_vec(f), oracle::to_vec(g)));
    for (auto rule : {DivisionRule::Euclidean, DivisionRule::Primitive, DivisionRule::Subresultant}) {
      const auto s = prs(f, g, rule);
      check_stage_identities(s);
      CHECK(proportionality_factor(s.last(), expect).has_value());
    }
  }
}

TEST_CASE("subresultant rule keeps integer coefficients") {
  std::mt19937_64 rng(202);
  for (int t = 0; t < 50; ++t) {
    auto [f, g] = random_pair(rng, 8);
    const auto s = prs(f, g, DivisionRule::Subresultant);
    for (const auto& p : s.polys)
      for (const auto& c : p.coeffs()) CHECK(c.get_den() == 1);
  }
}

TEST_CASE("recursive PRS examples") {
  const Poly xm1 = P({-1, 1}), xp1 = P({1, 1}), xp2 = P({2, 1});
  auto r = recursive_prs(xm1 * xm1 * xp1, xm1 * xp2);
  CHECK(degree_chain(r) == std::vector<int>{3, 1, 0});
  CHECK(r.depth() == 2);
  CHECK(proportionality_factor(r.stages[0].last(), xm1).has_value());
  CHECK(r.stages[1].length() == 2);
  CHECK(r.stages[1].last().degree() == 0);

  const Instance d = deg5_deg4_family();
  r = recursive_prs(d.f, d.g);
  CHECK(degree_chain(r) == std::vector<int>{5, 4, 2, 0});
  CHECK(r.depth() == 3);

  r = recursive_prs(P({-1, 0, 1}), xp1);
  CHECK(degree_chain(r) == std::vector<int>{2, 1, 0});
  CHECK(r.depth() == 2);
  CHECK(r.complete);
}

TEST_CASE("stage gluing and gamma convention") {
  std::mt19937_64 rng(303);
  for (int t = 0; t < 40; ++t) {
    const Instance inst = random_gcd_chain_pair(derive_seed(303, t), 8);
    const auto r = recursive_prs(inst.f, inst.g);
    REQUIRE(r.complete);
    REQUIRE(r.depth() >= 2);
    for (std::size_t k = 1; k < r.depth(); ++k) {
      CHECK(r.stages[k].polys[0] == r.stages[k - 1].last());
      CHECK(r.stages[k].polys[1] == derivative(r.stages[k].polys[0]));
    }
    for (std::size_t k = 0; k < r.depth(); ++k) {
      check_stage_identities(r.stages[k]);
      const auto& s = r.stages[k];
      const Poly g = oracle::to_poly(oracle::monic_gcd(oracle::to_vec(s.polys[0]), oracle::to_vec(s.polys[1])));
      const Poly prim = content_primitive(g).primitive;
      CHECK(s.last() == r.gammas[k] * prim);
    }
    CHECK(r.stages.back().last().degree() == 0);
    const auto chain = degree_chain(r);
    for (std::size_t i = 1; i < chain.size(); ++i) CHECK(chain[i] < chain[i - 1]);
  }
}

TEST_CASE("degree chain of an incomplete sequence") {
  RecursivePrs r;
  CHECK_THROWS_AS(degree_chain(r), Error);
}

TEST_CASE("rule names") {
  CHECK(parse_division_rule("primitive") == DivisionRule::Primitive);
  CHECK(to_string(DivisionRule::Subresultant) == "subresultant");
  CHECK_THROWS_AS(parse_division_rule("fast"), Error);
}
