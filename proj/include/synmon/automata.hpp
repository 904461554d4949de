// Complete deterministic finite automata, Moore minimisation, transition
// monoids and language equivalence.

#ifndef SYNMON_AUTOMATA_HPP_
#define SYNMON_AUTOMATA_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "synmon/affine.hpp"
#include "synmon/semigroup.hpp"

namespace synmon {

  using Word = std::vector<index_t>;  // symbol indices

  class Dfa {
   public:
    //! \throws ParseError if delta is not total or a state is out of range,
    //! or the alphabet is empty or has repeated symbols.
    Dfa(index_t                           state_count,
        std::vector<std::string>          alphabet,
        index_t                           initial,
        std::vector<index_t>              finals,
        std::vector<std::vector<index_t>> delta);

    [[nodiscard]] index_t state_count() const noexcept {
      return state_count_;
    }
    [[nodiscard]] std::vector<std::string> const& alphabet() const noexcept {
      return alphabet_;
    }
    [[nodiscard]] index_t initial() const noexcept {
      return initial_;
    }
    [[nodiscard]] bool is_final(index_t q) const noexcept {
      return final_[q];
    }
    //! Final states in increasing order.
    [[nodiscard]] std::vector<index_t> finals() const;
    [[nodiscard]] index_t next(index_t q, index_t symbol) const noexcept {
      return delta_[q][symbol];
    }
    [[nodiscard]] std::vector<std::vector<index_t>> const& delta() const noexcept {
      return delta_;
    }

    //! \throws UnknownSymbol.
    [[nodiscard]] index_t symbol_index(std::string_view name) const;

    //! Splits a word into symbols: single characters, or {name} for
    //! multi-character symbols.  \throws UnknownSymbol.
    [[nodiscard]] Word parse_word(std::string_view text) const;

    //! Symbols concatenated, multi-character ones wrapped in braces.
    [[nodiscard]] std::string format_word(Word const& w) const;

    //! The state reached from q after reading w.
    [[nodiscard]] index_t run(index_t q, Word const& w) const;

    bool operator==(Dfa const&) const = default;

   private:
    index_t                           state_count_;
    std::vector<std::string>          alphabet_;
    index_t                           initial_;
    std::vector<bool>                 final_;
    std::vector<std::vector<index_t>> delta_;
  };

  bool dfa_accepts(Dfa const& A, Word const& w);
  //! \throws UnknownSymbol.
  bool dfa_accepts(Dfa const& A, std::string_view w);

  //! Removes unreachable states and merges equivalent ones by Moore
  //! partition refinement.  States of the result are numbered in
  //! breadth-first order from the initial state.
  Dfa minimize(Dfa const& A);

  struct TransitionMonoidResult {
    FiniteSemigroup                   monoid;         // identity f_eps first
    std::vector<index_t>              generator_map;  // symbol -> element
    std::vector<std::vector<index_t>> functions;      // element -> state map
    std::vector<Word>                 words;          // shortlex-least word per element
  };

  //! The monoid of state maps f_w.  The product of rows then columns is
  //! "row first": q(f_x f_y) = (q f_x) f_y.  Element 0 is f_eps; the others
  //! follow in shortlex order of their least words.  Labels are "1" and
  //! "f_" + word.  \throws BudgetExceeded past element_cap.
  TransitionMonoidResult transition_monoid(Dfa const& A,
                                           std::size_t element_cap = 1'000'000);

  //! The transition monoid of the minimal automaton.
  FiniteSemigroup syntactic_monoid_of(Dfa const& A);

  //! The transition semigroup (nonempty words only) of the minimal
  //! automaton; differs from syntactic_monoid_of by dropping f_eps when no
  //! nonempty word induces it.
  TransitionMonoidResult syntactic_semigroup_of(Dfa const& A);

  struct EquivalenceResult {
    bool                equivalent = false;
    std::optional<Word> witness;  // shortest, lexicographically least
  };

  //! \throws AlphabetMismatch unless both alphabets are identical lists.
  EquivalenceResult dfa_equivalent(Dfa const& A, Dfa const& B);

  //! Words over {a, b, c} containing no c and at least one b.
  Dfa contains_b_without_c_dfa();

  //! Words over {a, b, c} of the form x a b^k.
  Dfa ends_with_a_then_bs_dfa();

  //! The language { w in Aff(B_n)^+ : sum of the letters of w is in target }.
  //! Alphabet: the labels of the affine maps in index order; states: the
  //! elements of A+(B_n) followed by a fresh initial state; the letter f
  //! takes the initial state to f and a state s to s + f.
  Dfa sum_language_dfa(APlusBn const& A, std::span<index_t const> target);

  //! Graphviz rendering.
  std::string to_dot(Dfa const& A, std::string const& name = "dfa");

}  // namespace synmon

#endif  // SYNMON_AUTOMATA_HPP_
