// Star-free expressions: union, concatenation and complement over Sigma*,
// starting from the empty set, the empty word and single symbols.
//
// Concrete syntax:
//
//   expr   := term ('+' term)*
//   term   := factor+                      (juxtaposition = concatenation)
//   factor := atom ['^c']                  (complement)
//   atom   := '0' | 'e' | SYMBOL | '(' expr ')'
//
// where 0 is the empty set, e the empty word, and SYMBOL a single letter or
// {name} for a multi-character symbol.  Blanks between tokens are ignored.

#ifndef SYNMON_STARFREE_HPP_
#define SYNMON_STARFREE_HPP_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "synmon/automata.hpp"

namespace synmon {

  class StarFreeExpr {
   public:
    enum class Kind { empty, epsilon, symbol, union_, concat, complement };

    static StarFreeExpr empty();
    static StarFreeExpr epsilon();
    static StarFreeExpr symbol(std::string name);
    static StarFreeExpr union_of(StarFreeExpr lhs, StarFreeExpr rhs);
    static StarFreeExpr concat(StarFreeExpr lhs, StarFreeExpr rhs);
    static StarFreeExpr complement(StarFreeExpr child);

    [[nodiscard]] Kind kind() const noexcept {
      return node_->kind;
    }
    //! Only meaningful for Kind::symbol.
    [[nodiscard]] std::string const& name() const noexcept {
      return node_->name;
    }
    //! The operand of a complement, or the left operand of a binary node.
    [[nodiscard]] StarFreeExpr lhs() const;
    [[nodiscard]] StarFreeExpr rhs() const;

    //! Fully parenthesised rendering in the concrete syntax; parsing it
    //! gives back an equal expression.
    [[nodiscard]] std::string to_string() const;

    //! All symbol names, in order of first occurrence.
    [[nodiscard]] std::vector<std::string> symbols() const;

    bool operator==(StarFreeExpr const& other) const;

   private:
    struct Node {
      Kind                        kind;
      std::string                 name;
      std::shared_ptr<Node const> left;
      std::shared_ptr<Node const> right;
    };
    explicit StarFreeExpr(std::shared_ptr<Node const> node) : node_(std::move(node)) {}
    std::shared_ptr<Node const> node_;
  };

  //! \throws ParseError with the offending position.
  StarFreeExpr parse_starfree(std::string_view text);

  //! "abc" is three single-letter symbols; anything containing a comma is
  //! split on commas.  \throws ParseError on an empty or repeated symbol.
  std::vector<std::string> parse_alphabet(std::string_view text);

  //! A minimal complete DFA for the language of e over Sigma*: unions by
  //! product automata, complements by swapping final states, and
  //! concatenations by subset construction, minimising after every step.
  //! \throws UnknownSymbol if e uses a symbol outside the alphabet.
  Dfa compile_starfree(StarFreeExpr const& e, std::vector<std::string> const& alphabet);

}  // namespace synmon

#endif  // SYNMON_STARFREE_HPP_
