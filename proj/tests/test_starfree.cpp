#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "synmon/starfree.hpp"
#include "synmon/verify.hpp"

using namespace synmon;
using X = StarFreeExpr;

namespace {
  std::vector<std::string> const abc{"a", "b", "c"};

  // The compiled automaton and the factor semantics agree on every word of
  // length at most max_len.
  void check_semantics(X const& e, std::vector<std::string> const& sigma, std::size_t max_len) {
    auto const dfa = compile_starfree(e, sigma);
    for (auto const& w : oracle::all_words(sigma, max_len)) {
      Word word;
      for (auto const& a : w) {
        word.push_back(dfa.symbol_index(a));
      }
      CHECK_MESSAGE(dfa_accepts(dfa, word) == oracle::matches(e, w),
                    e.to_string() << " on " << dfa.format_word(word));
    }
  }
}  // namespace

TEST_CASE("parse and print") {
  auto const e = parse_starfree("(0^c c 0^c)^c b (0^c c 0^c)^c");
  CHECK(e.kind() == X::Kind::concat);
  CHECK(e.symbols() == std::vector<std::string>{"c", "b"});
  CHECK(parse_starfree(e.to_string()) == e);

  CHECK(parse_starfree("a + b c") == X::union_of(X::symbol("a"), X::concat(X::symbol("b"), X::symbol("c"))));
  CHECK(parse_starfree("abc") == X::concat(X::concat(X::symbol("a"), X::symbol("b")), X::symbol("c")));
  CHECK(parse_starfree("(a^c)^c") == X::complement(X::complement(X::symbol("a"))));
  CHECK(parse_starfree("0") == X::empty());
  CHECK(parse_starfree(" e ") == X::epsilon());
  CHECK(parse_starfree("{ab}").name() == "ab");
  CHECK(parse_starfree("{e}") == X::symbol("e"));
  CHECK(X::symbol("e").to_string() == "{e}");
  CHECK(X::symbol("ab").to_string() == "{ab}");
  CHECK(X::union_of(X::symbol("a"), X::epsilon()).to_string() == "(a+e)");
  CHECK(X::complement(X::empty()).to_string() == "(0)^c");
  CHECK_THROWS_AS(X::symbol("a}"), ParseError);
  CHECK_THROWS_AS(X::symbol(""), ParseError);

  std::mt19937 rng(3);
  for (int i = 0; i < 300; ++i) {
    auto const r = oracle::random_starfree(rng, {"a", "b", "e", "xy"}, 4);
    CHECK(parse_starfree(r.to_string()) == r);
  }
}

TEST_CASE("parse errors") {
  for (char const* bad : {"", "(", "a)", "a+", "+a", "^c", "a^", "a^d", "{", "{}", "{a", "a b)", "()", "a^c^c"}) {
    CHECK_THROWS_AS(parse_starfree(bad), ParseError);
  }
  try {
    (void)parse_starfree("a+)");
    FAIL("expected ParseError");
  } catch (ParseError const& e) {
    CHECK(std::string(e.what()).find('2') != std::string::npos);
  }
}

TEST_CASE("parse_alphabet") {
  CHECK(parse_alphabet("abc") == abc);
  CHECK(parse_alphabet("a,bb,c") == std::vector<std::string>{"a", "bb", "c"});
  CHECK_THROWS_AS(parse_alphabet(""), ParseError);
  CHECK_THROWS_AS(parse_alphabet("aba"), ParseError);
  CHECK_THROWS_AS(parse_alphabet("a,,b"), ParseError);
}

TEST_CASE("compiling the named expressions gives the example automata") {
  auto const b = compile_starfree(parse_starfree(contains_b_without_c_expr), abc);
  auto const a = compile_starfree(parse_starfree(ends_with_a_then_bs_expr), abc);
  CHECK(dfa_equivalent(b, contains_b_without_c_dfa()).equivalent);
  CHECK(dfa_equivalent(a, ends_with_a_then_bs_dfa()).equivalent);
  CHECK(b.state_count() == 3);
  CHECK(a.state_count() == 2);
  check_semantics(parse_starfree(contains_b_without_c_expr), abc, 8);
  check_semantics(parse_starfree(ends_with_a_then_bs_expr), abc, 8);
}

TEST_CASE("small expressions") {
  auto const all = compile_starfree(parse_starfree("0^c"), abc);
  CHECK(all.state_count() == 1);
  CHECK(all.is_final(0));
  auto const none = compile_starfree(X::empty(), abc);
  CHECK(none.state_count() == 1);
  CHECK_FALSE(none.is_final(0));
  auto const eps = compile_starfree(X::epsilon(), abc);
  CHECK(eps.state_count() == 2);
  CHECK(dfa_accepts(eps, ""));
  CHECK_FALSE(dfa_accepts(eps, "a"));
  CHECK(compile_starfree(X::symbol("a"), abc).state_count() == 3);
  CHECK_THROWS_AS(compile_starfree(X::symbol("d"), abc), UnknownSymbol);
}

TEST_CASE("multi-character symbols") {
  std::vector<std::string> const sigma{"ab", "c"};
  auto const e   = parse_starfree("{ab} 0^c");
  auto const dfa = compile_starfree(e, sigma);
  CHECK(dfa_accepts(dfa, "{ab}cc"));
  CHECK_FALSE(dfa_accepts(dfa, "c{ab}"));
  check_semantics(e, sigma, 5);
}

TEST_CASE("compiled automata agree with the semantics on random expressions") {
  std::mt19937 rng(17);
  for (int i = 0; i < 150; ++i) {
    auto const e = oracle::random_starfree(rng, abc, 4);
    check_semantics(e, abc, 6);
    // Minimal automata: re-minimising changes nothing.
    auto const dfa = compile_starfree(e, abc);
    CHECK(minimize(dfa).state_count() == dfa.state_count());
  }
  std::mt19937 rng2(19);
  for (int i = 0; i < 60; ++i) {
    check_semantics(oracle::random_starfree(rng2, {"a", "b"}, 5), {"a", "b"}, 8);
  }
}

TEST_CASE("star-free languages have aperiodic syntactic monoids") {
  std::mt19937 rng(23);
  for (int i = 0; i < 200; ++i) {
    auto const e = oracle::random_starfree(rng, abc, 4);
    auto const M = syntactic_monoid_of(compile_starfree(e, abc));
    CHECK_MESSAGE(oracle::aperiodic(M), e.to_string());
  }
  // (aa)* is not star-free; its two-state automaton has a group monoid.
  Dfa const even(2, {"a"}, 0, {0}, {{1}, {0}});
  CHECK_FALSE(is_aperiodic(syntactic_monoid_of(even)).aperiodic);
}
