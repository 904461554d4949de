#include "doctest.h"
#include "oracles.hpp"
#include "synmon/brandt.hpp"
#include "synmon/syntactic.hpp"

using namespace synmon;

namespace {
  FiniteSemigroup null_semigroup(index_t n) {
    return validate_semigroup(std::vector<std::vector<index_t>>(n, std::vector<index_t>(n, 0)));
  }

  void check_against_oracle(FiniteSemigroup const& S, ContextMode mode) {
    auto const expected = oracle::exhaustive_disjunctive(S, mode == ContextMode::monoid);
    DecideOptions opts;
    opts.mode    = mode;
    auto const d = decide_syntactic(S, opts);
    CHECK(d.verdict == (expected ? Verdict::yes : Verdict::no));
    if (d.verdict == Verdict::yes) {
      REQUIRE(d.subset);
      REQUIRE(d.certificate);
      CHECK(oracle::is_disjunctive(S, *d.subset, mode == ContextMode::monoid));
      CHECK(replay_certificate(S, *d.certificate));
      CHECK(d.certificate->subset == *d.subset);
    }
  }
}  // namespace

TEST_CASE("verdict names") {
  CHECK(to_string(Verdict::yes) == "yes");
  CHECK(to_string(Verdict::no) == "no");
  CHECK(to_string(Verdict::unknown) == "unknown");
}

TEST_CASE("congruence atoms are the minimal nontrivial congruences") {
  auto corpus = oracle::random_semigroups(51, 40, 6);
  corpus.push_back(brandt_semigroup(2));
  for (auto const& S : corpus) {
    auto const atoms   = congruence_atoms(S);
    auto const lattice = oracle::all_congruences(S);
    std::vector<Partition> minimal;
    for (auto const& c : lattice) {
      if (c.is_equality()) {
        continue;
      }
      bool const is_minimal = std::none_of(lattice.begin(), lattice.end(), [&](auto const& d) {
        return !d.is_equality() && d != c && d.refines(c);
      });
      if (is_minimal) {
        minimal.push_back(c);
      }
    }
    CHECK(atoms.size() == minimal.size());
    for (auto const& a : atoms) {
      CHECK(std::find(minimal.begin(), minimal.end(), a.partition()) != minimal.end());
    }
  }
}

TEST_CASE("decide_syntactic examples") {
  auto const A1 = construct_a_plus_bn(1);
  CHECK(decide_syntactic(A1.add_reduct).verdict == Verdict::yes);
  CHECK(decide_syntactic(A1.mul_reduct).verdict == Verdict::yes);
  CHECK(decide_syntactic(brandt_semigroup(2)).verdict == Verdict::yes);
  CHECK(decide_syntactic(brandt_semigroup(3)).verdict == Verdict::yes);

  auto const one = decide_syntactic(null_semigroup(1));
  CHECK(one.verdict == Verdict::yes);
  CHECK(one.atoms == 0);

  // Every subset of the 3-element null semigroup leaves two elements on the
  // same side with the same (zero) contexts.
  CHECK(decide_syntactic(null_semigroup(3)).verdict == Verdict::no);
  CHECK(decide_syntactic(null_semigroup(2)).verdict == Verdict::yes);
}

TEST_CASE("decide_syntactic on A+(B_n) reducts") {
  for (index_t n = 2; n <= 3; ++n) {
    auto const A = construct_a_plus_bn(n);
    for (auto const* S : {&A.add_reduct, &A.mul_reduct}) {
      auto const d = decide_syntactic(*S);
      REQUIRE(d.verdict == Verdict::yes);
      CHECK(replay_certificate(*S, *d.certificate));
    }
  }
}

TEST_CASE("decide_syntactic agrees with exhaustive enumeration") {
  for (auto const& S : oracle::random_semigroups(61, 150, 8)) {
    check_against_oracle(S, ContextMode::monoid);
  }
  for (auto const& S : oracle::random_semigroups(67, 60, 7)) {
    check_against_oracle(S, ContextMode::semigroup);
  }
  for (auto const& S : oracle::random_associative_tables(71, 100, 4)) {
    check_against_oracle(S, ContextMode::monoid);
    check_against_oracle(S, ContextMode::semigroup);
  }
  auto const B2 = brandt_semigroup(2);
  for (auto const& c : oracle::all_congruences(B2)) {
    check_against_oracle(quotient(B2, c), ContextMode::monoid);
    check_against_oracle(quotient(B2, c), ContextMode::semigroup);
  }
}

TEST_CASE("budget exhaustion") {
  auto const    B2 = brandt_semigroup(2);
  DecideOptions opts;
  opts.node_budget          = 0;
  opts.exhaustive_threshold = 0;
  CHECK(decide_syntactic(B2, opts).verdict == Verdict::unknown);
  // Small semigroups fall back to enumerating all subsets.
  opts.exhaustive_threshold = 20;
  CHECK(decide_syntactic(B2, opts).verdict == Verdict::yes);
  CHECK(decide_syntactic(null_semigroup(3), opts).verdict == Verdict::no);
}
