#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "synmon/automata.hpp"
#include "synmon/syntactic.hpp"
#include "synmon/verify.hpp"

using namespace synmon;

namespace {
  std::vector<std::string> const abc{"a", "b", "c"};

  Dfa all_words_dfa() {
    return Dfa(1, abc, 0, {0}, {{0, 0, 0}});
  }

  // For every pair of symbols, the product of their maps is the map the
  // literal table predicts.
  void check_table(Dfa const& A, FiniteSemigroup const& table) {
    auto const r = transition_monoid(minimize(A));
    REQUIRE(r.monoid.size() == table.size());
    for (index_t x = 0; x < 3; ++x) {
      for (index_t y = 0; y < 3; ++y) {
        CHECK(r.monoid.product(r.generator_map[x], r.generator_map[y])
              == r.generator_map[table.product(x, y)]);
      }
    }
    auto const iso = find_isomorphism(r.monoid, table);
    CHECK(iso.has_value());
  }
}  // namespace

TEST_CASE("Dfa validation") {
  CHECK_THROWS_AS(Dfa(1, abc, 0, {0}, {{0, 0}}), ParseError);
  CHECK_THROWS_AS(Dfa(1, abc, 1, {0}, {{0, 0, 0}}), ParseError);
  CHECK_THROWS_AS(Dfa(1, abc, 0, {0}, {{0, 0, 1}}), ParseError);
  CHECK_THROWS_AS(Dfa(1, {}, 0, {0}, {{}}), ParseError);
  CHECK_THROWS_AS(Dfa(1, {"a", "a"}, 0, {0}, {{0, 0}}), ParseError);
  CHECK_THROWS_AS(Dfa(1, abc, 0, {3}, {{0, 0, 0}}), ParseError);
}

TEST_CASE("the two example automata") {
  auto const Ab = contains_b_without_c_dfa();
  auto const Aa = ends_with_a_then_bs_dfa();
  CHECK(dfa_accepts(Ab, "ab"));
  CHECK(dfa_accepts(Ab, "bbab"));
  CHECK_FALSE(dfa_accepts(Ab, "ac"));
  CHECK_FALSE(dfa_accepts(Ab, "aaa"));
  CHECK_FALSE(dfa_accepts(Ab, "bcb"));
  CHECK(dfa_accepts(Aa, "cab"));
  CHECK(dfa_accepts(Aa, "abb"));
  CHECK(dfa_accepts(Aa, "a"));
  CHECK_FALSE(dfa_accepts(Aa, "abc"));
  CHECK_FALSE(dfa_accepts(Aa, "bac"));
  CHECK_FALSE(dfa_accepts(Ab, ""));
  CHECK_FALSE(dfa_accepts(Aa, ""));
  CHECK_THROWS_AS(dfa_accepts(Aa, "ad"), UnknownSymbol);

  // Direct membership predicates on every word up to length 6.
  for (auto const& w : oracle::all_words(abc, 6)) {
    std::string s;
    for (auto const& a : w) {
      s += a;
    }
    bool const has_b = s.find('b') != std::string::npos;
    bool const has_c = s.find('c') != std::string::npos;
    CHECK(dfa_accepts(Ab, s) == (has_b && !has_c));
    auto const last_a = s.find_last_of('a');
    bool const a_then_bs = last_a != std::string::npos
                           && s.find_first_not_of('b', last_a + 1) == std::string::npos;
    CHECK(dfa_accepts(Aa, s) == a_then_bs);
  }
}

TEST_CASE("minimize") {
  auto const Ab = contains_b_without_c_dfa();
  auto const Aa = ends_with_a_then_bs_dfa();
  CHECK(minimize(Ab).state_count() == 3);
  CHECK(minimize(Aa).state_count() == 2);
  CHECK(minimize(minimize(Ab)) == minimize(Ab));

  // An unreachable copy of the accepting state disappears.
  std::vector<std::vector<index_t>> delta = Ab.delta();
  delta.push_back(delta[Ab.finals().front()]);
  auto finals = Ab.finals();
  finals.push_back(Ab.state_count());
  Dfa const padded(Ab.state_count() + 1, abc, Ab.initial(), finals, delta);
  CHECK(minimize(padded).state_count() == 3);
  CHECK(dfa_equivalent(padded, Ab).equivalent);

  // A redundant split of the initial state merges back.
  Dfa const split(2, abc, 0, {}, {{1, 1, 1}, {0, 0, 0}});
  CHECK(minimize(split).state_count() == 1);
  CHECK(dfa_equivalent(split, Dfa(1, abc, 0, {}, {{0, 0, 0}})).equivalent);
}

TEST_CASE("minimize preserves the language") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<index_t> states(1, 6);
    index_t const                          k = states(rng);
    std::uniform_int_distribution<index_t> pick(0, k - 1);
    std::bernoulli_distribution            coin(0.4);
    std::vector<std::vector<index_t>>      delta(k, std::vector<index_t>(2));
    std::vector<index_t>                   finals;
    for (index_t q = 0; q < k; ++q) {
      delta[q] = {pick(rng), pick(rng)};
      if (coin(rng)) {
        finals.push_back(q);
      }
    }
    Dfa const A(k, {"x", "y"}, pick(rng), finals, delta);
    Dfa const M = minimize(A);
    CHECK(M.state_count() <= A.state_count());
    for (auto const& w : oracle::all_words({"x", "y"}, 7)) {
      std::string s;
      for (auto const& a : w) {
        s += a;
      }
      CHECK(dfa_accepts(A, s) == dfa_accepts(M, s));
    }
  }
}

TEST_CASE("dfa_equivalent") {
  auto const Ab = contains_b_without_c_dfa();
  auto const Aa = ends_with_a_then_bs_dfa();
  auto const r  = dfa_equivalent(Ab, Aa);
  CHECK_FALSE(r.equivalent);
  REQUIRE(r.witness);
  CHECK(Ab.format_word(*r.witness) == "a");
  CHECK(dfa_accepts(Ab, *r.witness) != dfa_accepts(Aa, *r.witness));
  CHECK(dfa_equivalent(Ab, Ab).equivalent);
  CHECK_FALSE(dfa_equivalent(Ab, Ab).witness);
  CHECK_THROWS_AS(dfa_equivalent(Ab, Dfa(1, {"a", "b"}, 0, {0}, {{0, 0}})), AlphabetMismatch);
  CHECK_THROWS_AS(dfa_equivalent(Ab, Dfa(1, {"b", "a", "c"}, 0, {0}, {{0, 0, 0}})),
                  AlphabetMismatch);
}

TEST_CASE("transition monoids of the example automata") {
  check_table(contains_b_without_c_dfa(), contains_b_without_c_table());
  check_table(ends_with_a_then_bs_dfa(), ends_with_a_then_bs_table());

  auto const r = transition_monoid(minimize(contains_b_without_c_dfa()));
  CHECK(r.monoid.label(0) == "1");
  CHECK(r.words[0].empty());
  REQUIRE(r.monoid.identity());
  CHECK(*r.monoid.identity() == 0);
  // Reading a changes nothing.
  CHECK(r.generator_map[0] == 0);
  CHECK(is_aperiodic(r.monoid).aperiodic);
  CHECK(is_aperiodic(syntactic_monoid_of(ends_with_a_then_bs_dfa())).aperiodic);
}

TEST_CASE("f_xy = f_x f_y") {
  for (auto const& A : {contains_b_without_c_dfa(), ends_with_a_then_bs_dfa()}) {
    auto const r = transition_monoid(A);
    auto const element_of = [&](Word const& w) {
      std::vector<index_t> f(A.state_count());
      for (index_t q = 0; q < A.state_count(); ++q) {
        f[q] = A.run(q, w);
      }
      auto const it = std::find(r.functions.begin(), r.functions.end(), f);
      REQUIRE(it != r.functions.end());
      return static_cast<index_t>(it - r.functions.begin());
    };
    for (index_t x = 0; x < r.monoid.size(); ++x) {
      CHECK(element_of(r.words[x]) == x);
    }
    auto const words = oracle::all_words(abc, 3);
    for (auto const& u : words) {
      Word wu = A.parse_word([&] {
        std::string s;
        for (auto const& a : u) {
          s += a;
        }
        return s;
      }());
      for (auto const& v : words) {
        Word wv;
        for (auto const& a : v) {
          wv.push_back(A.symbol_index(a));
        }
        Word uv = wu;
        uv.insert(uv.end(), wv.begin(), wv.end());
        CHECK(element_of(uv) == r.monoid.product(element_of(wu), element_of(wv)));
      }
    }
  }
}

TEST_CASE("the all-words automaton has a trivial monoid") {
  auto const r = transition_monoid(all_words_dfa());
  CHECK(r.monoid.size() == 1);
  CHECK(r.generator_map == std::vector<index_t>{0, 0, 0});
  CHECK(syntactic_semigroup_of(all_words_dfa()).monoid.size() == 1);
  CHECK_THROWS_AS(transition_monoid(contains_b_without_c_dfa(), 2), BudgetExceeded);
}

TEST_CASE("syntactic_semigroup_of drops the identity when no word induces it") {
  // Words of length at least one: f_eps differs from every f_w.
  Dfa const nonempty(2, {"a"}, 0, {1}, {{1}, {1}});
  CHECK(syntactic_monoid_of(nonempty).size() == 2);
  auto const s = syntactic_semigroup_of(nonempty);
  CHECK(s.monoid.size() == 1);
  // Over {a, b, c}, reading a is the identity of the b-language automaton.
  CHECK(syntactic_semigroup_of(contains_b_without_c_dfa()).monoid.size() == 3);
}

TEST_CASE("sum language") {
  for (index_t n = 1; n <= 2; ++n) {
    auto const A = construct_a_plus_bn(n);
    std::vector<index_t> const target = n == 1 ? disjunctive_subset_multiplicative(A)
                                               : disjunctive_subset_additive(A);
    auto const dfa = sum_language_dfa(A, target);
    CHECK(dfa.alphabet().size() == A.aff.size());
    CHECK(dfa.state_count() == A.elements.size() + 1);
    CHECK_FALSE(dfa_accepts(dfa, Word{}));
    for (index_t f = 0; f < A.aff.size(); ++f) {
      bool const in_target
          = std::find(target.begin(), target.end(), A.aff[f]) != target.end();
      CHECK(dfa_accepts(dfa, Word{f}) == in_target);
    }
    // Words with the same letter sum have the same state map.
    std::mt19937                                rng(n);
    std::uniform_int_distribution<index_t>      letter(0, static_cast<index_t>(A.aff.size() - 1));
    std::uniform_int_distribution<std::size_t>  length(1, 4);
    auto const                                  sum = [&](Word const& w) {
      index_t s = A.aff[w[0]];
      for (std::size_t i = 1; i < w.size(); ++i) {
        s = A.add_reduct.product(s, A.aff[w[i]]);
      }
      return s;
    };
    for (int trial = 0; trial < 300; ++trial) {
      Word u(length(rng));
      Word v(length(rng));
      for (auto& x : u) {
        x = letter(rng);
      }
      for (auto& x : v) {
        x = letter(rng);
      }
      if (sum(u) == sum(v)) {
        for (index_t q = 0; q < dfa.state_count(); ++q) {
          CHECK(dfa.run(q, u) == dfa.run(q, v));
        }
      }
    }
  }
  auto const A2 = construct_a_plus_bn(2);
  auto const s  = syntactic_semigroup_of(sum_language_dfa(A2, disjunctive_subset_additive(A2)));
  CHECK(s.monoid.size() == 29);
  CHECK(is_aperiodic(s.monoid).aperiodic);
  CHECK(find_isomorphism(s.monoid, A2.add_reduct).has_value());
}

TEST_CASE("words and rendering") {
  Dfa const A(1, {"x", "yy"}, 0, {0}, {{0, 0}});
  auto const w = A.parse_word("x{yy}x");
  CHECK(w == Word{0, 1, 0});
  CHECK(A.format_word(w) == "x{yy}x");
  CHECK_THROWS_AS((void)A.parse_word("y"), UnknownSymbol);
  CHECK_THROWS_AS((void)A.parse_word("{yy"), UnknownSymbol);
  CHECK(A.symbol_index("yy") == 1);

  auto const dot = to_dot(contains_b_without_c_dfa(), "Ab");
  CHECK(dot.starts_with("digraph Ab {"));
  CHECK(dot.find("doublecircle") != std::string::npos);
  CHECK(dot.ends_with("}\n"));
}
