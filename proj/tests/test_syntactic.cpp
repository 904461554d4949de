#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "synmon/brandt.hpp"
#include "synmon/syntactic.hpp"

using namespace synmon;
using E = BrandtElement;

namespace {
  std::vector<index_t> random_subset(std::mt19937& rng, index_t size) {
    std::vector<index_t>    subset;
    std::bernoulli_distribution coin(0.4);
    for (index_t x = 0; x < size; ++x) {
      if (coin(rng)) {
        subset.push_back(x);
      }
    }
    return subset;
  }

  std::vector<index_t> all_of(index_t size) {
    std::vector<index_t> s(size);
    std::iota(s.begin(), s.end(), 0);
    return s;
  }
}  // namespace

TEST_CASE("context modes") {
  CHECK(to_string(ContextMode::monoid) == "monoid");
  CHECK(context_mode_from_string("semigroup") == ContextMode::semigroup);
  CHECK_THROWS_AS(context_mode_from_string("group"), ParseError);
}

TEST_CASE("syntactic_congruence examples") {
  auto const B2 = brandt_semigroup(2);
  CHECK(syntactic_congruence(B2, all_of(5)).is_universal());
  CHECK(syntactic_congruence(B2, {}).is_universal());
  CHECK_THROWS_AS(syntactic_congruence(B2, std::vector<index_t>{5}), IndexOutOfRange);

  auto const A1 = construct_a_plus_bn(1);
  auto const id = A1.nsupport(1, 1, {0});
  for (auto mode : {ContextMode::monoid, ContextMode::semigroup}) {
    CHECK(syntactic_congruence(A1.add_reduct, std::vector<index_t>{id}, mode).is_equality());
  }

  auto const A2 = construct_a_plus_bn(2);
  for (auto mode : {ContextMode::monoid, ContextMode::semigroup}) {
    auto const c = syntactic_congruence(A2.add_reduct, disjunctive_subset_additive(A2), mode);
    CHECK(c.block_count() == 29);
  }
}

TEST_CASE("syntactic_congruence against context enumeration") {
  std::mt19937 rng(21);
  for (auto const& S : oracle::random_semigroups(23, 150, 8)) {
    for (int trial = 0; trial < 4; ++trial) {
      auto const D = random_subset(rng, S.size());
      for (bool monoid : {true, false}) {
        auto const mode = monoid ? ContextMode::monoid : ContextMode::semigroup;
        auto const c    = syntactic_congruence(S, D, mode);
        CHECK(c.partition() == oracle::syntactic_partition(S, D, monoid));
      }
    }
  }
}

TEST_CASE("syntactic congruences are D-saturating congruences") {
  std::mt19937 rng(8);
  for (auto const& S : oracle::random_semigroups(29, 100, 8)) {
    auto const D = random_subset(rng, S.size());
    std::vector<bool> in(S.size(), false);
    for (index_t d : D) {
      in[d] = true;
    }
    auto const m = syntactic_congruence(S, D, ContextMode::monoid);
    auto const s = syntactic_congruence(S, D, ContextMode::semigroup);
    CHECK(oracle::compatible(S, m.partition()));
    CHECK(oracle::compatible(S, s.partition()));
    for (index_t x = 0; x < S.size(); ++x) {
      for (index_t y = 0; y < S.size(); ++y) {
        if (m.related(x, y)) {
          CHECK(in[x] == in[y]);
        }
      }
    }
    // Monoid contexts include the semigroup ones.
    CHECK(m.partition().refines(s.partition()));
  }
}

TEST_CASE("maximality among D-saturating congruences") {
  std::mt19937 rng(31);
  auto corpus = oracle::random_semigroups(37, 40, 5);
  corpus.push_back(brandt_semigroup(2));
  corpus.push_back(construct_a_plus_bn(1).add_reduct);
  corpus.push_back(construct_a_plus_bn(1).mul_reduct);
  for (auto const& S : corpus) {
    auto const lattice = oracle::all_congruences(S);
    for (int trial = 0; trial < 4; ++trial) {
      auto const D = random_subset(rng, S.size());
      std::vector<bool> in(S.size(), false);
      for (index_t d : D) {
        in[d] = true;
      }
      auto const syn = syntactic_congruence(S, D, ContextMode::monoid);
      for (auto const& c : lattice) {
        bool saturates = true;
        for (index_t x = 0; x < S.size(); ++x) {
          for (index_t y = 0; y < S.size(); ++y) {
            saturates = saturates && (!c.related(x, y) || in[x] == in[y]);
          }
        }
        if (saturates) {
          CHECK(c.refines(syn.partition()));
        }
      }
    }
  }
}

TEST_CASE("first_separating_context scans u, then v, empty sides first") {
  auto const S = brandt_semigroup(2);
  std::vector<index_t> const D{E::pair(1, 2).encode(2)};
  // (1,1) + (1,2) = (1,2) is in D while (2,2) + (1,2) = theta is not.
  auto const c = first_separating_context(S, D, ContextMode::monoid, 0, 3);
  REQUIRE(c);
  CHECK_FALSE(c->u);
  REQUIRE(c->v);
  CHECK(*c->v == E::pair(1, 2).encode(2));
  CHECK(c->x_in_subset);

  auto const s = first_separating_context(S, D, ContextMode::semigroup, 0, 3);
  REQUIRE(s);
  CHECK(s->u);
  CHECK(s->v);
  CHECK_FALSE(first_separating_context(S, D, ContextMode::monoid, 2, 2));
}

TEST_CASE("is_disjunctive and certificates") {
  SUBCASE("empty subset merges everything") {
    auto const r = is_disjunctive(brandt_semigroup(2), {});
    CHECK_FALSE(r.disjunctive);
    REQUIRE(r.merged);
    CHECK(r.merged->first < r.merged->second);
    CHECK_FALSE(r.certificate);
  }
  SUBCASE("P and D for n = 2, both modes") {
    auto const A = construct_a_plus_bn(2);
    for (auto mode : {ContextMode::monoid, ContextMode::semigroup}) {
      for (bool additive : {true, false}) {
        auto const& S = additive ? A.add_reduct : A.mul_reduct;
        auto const  D = additive ? disjunctive_subset_additive(A)
                                 : disjunctive_subset_multiplicative(A);
        auto const  r = is_disjunctive(S, D, mode);
        REQUIRE(r.disjunctive);
        REQUIRE(r.certificate);
        CHECK(r.certificate->pairs.size() == 29 * 28 / 2);
        CHECK(r.certificate->mode == mode);
        CHECK(replay_certificate(S, *r.certificate));
        if (mode == ContextMode::semigroup) {
          for (auto const& p : r.certificate->pairs) {
            CHECK(p.u);
            CHECK(p.v);
          }
        }
      }
    }
  }
  SUBCASE("tampered certificates are rejected") {
    auto const A    = construct_a_plus_bn(2);
    auto const S    = A.mul_reduct;
    auto const cert = *is_disjunctive(S, disjunctive_subset_multiplicative(A)).certificate;
    auto bad        = cert;
    bad.pairs[3].x_in_subset = !bad.pairs[3].x_in_subset;
    CHECK_FALSE(replay_certificate(S, bad));
    bad = cert;
    bad.pairs.pop_back();
    CHECK_FALSE(replay_certificate(S, bad));
    bad = cert;
    bad.pairs.push_back(bad.pairs.front());
    CHECK_FALSE(replay_certificate(S, bad));
    bad = cert;
    bad.pairs[0].u = S.size();
    CHECK_FALSE(replay_certificate(S, bad));
    bad = cert;
    bad.subset.push_back(S.size());
    CHECK_FALSE(replay_certificate(S, bad));
    bad = cert;
    bad.mode = ContextMode::semigroup;
    bool const has_empty = std::any_of(cert.pairs.begin(), cert.pairs.end(),
                                       [](auto const& p) { return !p.u || !p.v; });
    CHECK(replay_certificate(S, bad) == !has_empty);
  }
  SUBCASE("certificates on random semigroups") {
    std::mt19937 rng(41);
    for (auto const& S : oracle::random_semigroups(43, 80, 8)) {
      auto const D = random_subset(rng, S.size());
      auto const r = is_disjunctive(S, D);
      CHECK(r.disjunctive == oracle::is_disjunctive(S, D, true));
      if (r.disjunctive) {
        CHECK(replay_certificate(S, *r.certificate));
      } else {
        auto const [x, y] = *r.merged;
        CHECK(oracle::syntactic_partition(S, D, true).related(x, y));
      }
    }
  }
}

TEST_CASE("the subsets P and D") {
  CHECK_THROWS_AS(disjunctive_subset_additive(construct_a_plus_bn(1)), InvalidForN1);
  auto const A1 = construct_a_plus_bn(1);
  CHECK(disjunctive_subset_multiplicative(A1)
        == std::vector<index_t>{A1.constant(E::pair(1, 1)), A1.nsupport(1, 1, {0})});
  for (index_t n = 2; n <= 3; ++n) {
    auto const A = construct_a_plus_bn(n);
    auto const P = disjunctive_subset_additive(A);
    auto const D = disjunctive_subset_multiplicative(A);
    CHECK(P.size() == n * n + 1);
    CHECK(D.size() == n * n + 1);
    CHECK(std::is_sorted(P.begin(), P.end()));
    CHECK(std::find(P.begin(), P.end(), A.constant(E::pair(1, 2))) != P.end());
    CHECK(std::find(D.begin(), D.end(), A.constant(E::theta())) == D.end());
    for (index_t k = 1; k <= n; ++k) {
      for (index_t l = 1; l <= n; ++l) {
        CHECK(std::find(P.begin(), P.end(), A.singleton(E::pair(k, l), E::pair(1, 1)))
              != P.end());
        CHECK(std::find(D.begin(), D.end(), A.constant(E::pair(k, l))) != D.end());
      }
    }
  }
}

TEST_CASE("A+(B_2)+ modulo the syntactic congruence of P is itself") {
  auto const A = construct_a_plus_bn(2);
  auto const c = syntactic_congruence(A.add_reduct, disjunctive_subset_additive(A));
  auto const Q = quotient(A.add_reduct, c);
  auto const iso = find_isomorphism(Q, A.add_reduct);
  REQUIRE(iso);
  CHECK(is_isomorphism(Q, A.add_reduct, iso->mapping));
}
