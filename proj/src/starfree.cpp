#include "synmon/starfree.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace synmon {

  StarFreeExpr StarFreeExpr::empty() {
    return StarFreeExpr(std::make_shared<Node const>(Node{Kind::empty, {}, {}, {}}));
  }

  StarFreeExpr StarFreeExpr::epsilon() {
    return StarFreeExpr(std::make_shared<Node const>(Node{Kind::epsilon, {}, {}, {}}));
  }

  StarFreeExpr StarFreeExpr::symbol(std::string name) {
    if (name.empty() || name.find_first_of("{}") != std::string::npos) {
      throw ParseError("invalid symbol name \"" + name + "\"");
    }
    return StarFreeExpr(
        std::make_shared<Node const>(Node{Kind::symbol, std::move(name), {}, {}}));
  }

  StarFreeExpr StarFreeExpr::union_of(StarFreeExpr lhs, StarFreeExpr rhs) {
    return StarFreeExpr(std::make_shared<Node const>(
        Node{Kind::union_, {}, std::move(lhs.node_), std::move(rhs.node_)}));
  }

  StarFreeExpr StarFreeExpr::concat(StarFreeExpr lhs, StarFreeExpr rhs) {
    return StarFreeExpr(std::make_shared<Node const>(
        Node{Kind::concat, {}, std::move(lhs.node_), std::move(rhs.node_)}));
  }

  StarFreeExpr StarFreeExpr::complement(StarFreeExpr child) {
    return StarFreeExpr(std::make_shared<Node const>(
        Node{Kind::complement, {}, std::move(child.node_), {}}));
  }

  StarFreeExpr StarFreeExpr::lhs() const {
    if (!node_->left) {
      throw std::logic_error("star-free expression has no operand");
    }
    return StarFreeExpr(node_->left);
  }

  StarFreeExpr StarFreeExpr::rhs() const {
    if (!node_->right) {
      throw std::logic_error("star-free expression has no right operand");
    }
    return StarFreeExpr(node_->right);
  }

  namespace {
    bool is_reserved(char c) {
      return std::isspace(static_cast<unsigned char>(c)) || c == '+' || c == '('
             || c == ')' || c == '^' || c == '{' || c == '}' || c == '0' || c == 'e';
    }
  }  // namespace

  std::string StarFreeExpr::to_string() const {
    switch (kind()) {
      case Kind::empty: return "0";
      case Kind::epsilon: return "e";
      case Kind::symbol:
        return name().size() == 1 && !is_reserved(name()[0]) ? name()
                                                             : "{" + name() + "}";
      case Kind::union_: return "(" + lhs().to_string() + "+" + rhs().to_string() + ")";
      case Kind::concat: return "(" + lhs().to_string() + rhs().to_string() + ")";
      case Kind::complement: return "(" + lhs().to_string() + ")^c";
    }
    return {};
  }

  std::vector<std::string> StarFreeExpr::symbols() const {
    std::vector<std::string> result;
    std::vector<Node const*> stack{node_.get()};
    while (!stack.empty()) {
      auto const* n = stack.back();
      stack.pop_back();
      if (n->kind == Kind::symbol
          && std::find(result.begin(), result.end(), n->name) == result.end()) {
        result.push_back(n->name);
      }
      // Right first so that the left operand is visited first.
      if (n->right) {
        stack.push_back(n->right.get());
      }
      if (n->left) {
        stack.push_back(n->left.get());
      }
    }
    return result;
  }

  bool StarFreeExpr::operator==(StarFreeExpr const& other) const {
    if (node_ == other.node_) {
      return true;
    }
    if (kind() != other.kind() || name() != other.name()) {
      return false;
    }
    if (static_cast<bool>(node_->left) != static_cast<bool>(other.node_->left)
        || static_cast<bool>(node_->right) != static_cast<bool>(other.node_->right)) {
      return false;
    }
    return (!node_->left || lhs() == other.lhs())
           && (!node_->right || rhs() == other.rhs());
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {
    class Parser {
     public:
      explicit Parser(std::string_view text) : text_(text) {}

      StarFreeExpr parse() {
        auto e = expr();
        skip();
        if (pos_ != text_.size()) {
          fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return e;
      }

     private:
      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError("star-free expression, position " + std::to_string(pos_)
                         + ": " + what);
      }

      void skip() {
        while (pos_ < text_.size()
               && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }

      bool at_atom() {
        skip();
        if (pos_ >= text_.size()) {
          return false;
        }
        char const c = text_[pos_];
        return c != '+' && c != ')' && c != '^' && c != '}';
      }

      StarFreeExpr expr() {
        auto e = term();
        skip();
        while (pos_ < text_.size() && text_[pos_] == '+') {
          ++pos_;
          e = StarFreeExpr::union_of(std::move(e), term());
          skip();
        }
        return e;
      }

      StarFreeExpr term() {
        if (!at_atom()) {
          fail("expected an expression");
        }
        auto e = factor();
        while (at_atom()) {
          e = StarFreeExpr::concat(std::move(e), factor());
        }
        return e;
      }

      StarFreeExpr factor() {
        auto e = atom();
        skip();
        if (pos_ < text_.size() && text_[pos_] == '^') {
          if (pos_ + 1 >= text_.size() || text_[pos_ + 1] != 'c') {
            fail("expected '^c'");
          }
          pos_ += 2;
          e = StarFreeExpr::complement(std::move(e));
        }
        return e;
      }

      StarFreeExpr atom() {
        skip();
        char const c = text_[pos_];
        if (c == '0') {
          ++pos_;
          return StarFreeExpr::empty();
        }
        if (c == 'e') {
          ++pos_;
          return StarFreeExpr::epsilon();
        }
        if (c == '(') {
          ++pos_;
          auto e = expr();
          skip();
          if (pos_ >= text_.size() || text_[pos_] != ')') {
            fail("expected ')'");
          }
          ++pos_;
          return e;
        }
        if (c == '{') {
          auto const close = text_.find('}', pos_);
          if (close == std::string_view::npos) {
            fail("unterminated '{'");
          }
          auto name = std::string(text_.substr(pos_ + 1, close - pos_ - 1));
          if (name.empty()) {
            fail("empty symbol name");
          }
          pos_ = close + 1;
          return StarFreeExpr::symbol(std::move(name));
        }
        ++pos_;
        return StarFreeExpr::symbol(std::string(1, c));
      }

      std::string_view text_;
      std::size_t      pos_ = 0;
    };
  }  // namespace

  StarFreeExpr parse_starfree(std::string_view text) {
    return Parser(text).parse();
  }

  std::vector<std::string> parse_alphabet(std::string_view text) {
    std::vector<std::string> result;
    if (text.find(',') != std::string_view::npos) {
      std::size_t start = 0;
      while (true) {
        auto const comma = text.find(',', start);
        result.emplace_back(text.substr(start, comma - start));
        if (comma == std::string_view::npos) {
          break;
        }
        start = comma + 1;
      }
    } else {
      for (char c : text) {
        result.emplace_back(1, c);
      }
    }
    if (result.empty()) {
      throw ParseError("empty alphabet");
    }
    std::set<std::string> seen;
    for (auto const& a : result) {
      if (a.empty() || !seen.insert(a).second) {
        throw ParseError("alphabet \"" + std::string(text)
                         + "\" has an empty or repeated symbol");
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Compilation
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using Alphabet = std::vector<std::string>;

    Dfa uniform(Alphabet const& alphabet, bool accept) {
      return Dfa(1, alphabet, 0, accept ? std::vector<index_t>{0} : std::vector<index_t>{},
                 {std::vector<index_t>(alphabet.size(), 0)});
    }

    Dfa epsilon_dfa(Alphabet const& alphabet) {
      std::vector<std::vector<index_t>> delta(2, std::vector<index_t>(alphabet.size(), 1));
      return Dfa(2, alphabet, 0, {0}, delta);
    }

    Dfa symbol_dfa(Alphabet const& alphabet, std::string const& name) {
      auto it = std::find(alphabet.begin(), alphabet.end(), name);
      if (it == alphabet.end()) {
        throw UnknownSymbol("symbol \"" + name + "\" is not in the alphabet");
      }
      std::vector<std::vector<index_t>> delta(3, std::vector<index_t>(alphabet.size(), 2));
      delta[0][it - alphabet.begin()] = 1;
      return Dfa(3, alphabet, 0, {1}, delta);
    }

    Dfa complement_dfa(Dfa const& A) {
      std::vector<index_t> finals;
      for (index_t q = 0; q < A.state_count(); ++q) {
        if (!A.is_final(q)) {
          finals.push_back(q);
        }
      }
      return Dfa(A.state_count(), A.alphabet(), A.initial(), finals, A.delta());
    }

    Dfa union_dfa(Dfa const& A, Dfa const& B) {
      auto const sigma = A.alphabet().size();
      auto const id    = [&](index_t p, index_t q) { return p * B.state_count() + q; };
      index_t const                     states = A.state_count() * B.state_count();
      std::vector<std::vector<index_t>> delta(states, std::vector<index_t>(sigma));
      std::vector<index_t>              finals;
      for (index_t p = 0; p < A.state_count(); ++p) {
        for (index_t q = 0; q < B.state_count(); ++q) {
          for (index_t a = 0; a < sigma; ++a) {
            delta[id(p, q)][a] = id(A.next(p, a), B.next(q, a));
          }
          if (A.is_final(p) || B.is_final(q)) {
            finals.push_back(id(p, q));
          }
        }
      }
      return Dfa(states, A.alphabet(), id(A.initial(), B.initial()), finals, delta);
    }

    // States are pairs (state of A, set of live states of B); a B-copy is
    // started whenever A reaches a final state.
    Dfa concat_dfa(Dfa const& A, Dfa const& B) {
      auto const sigma = A.alphabet().size();
      using State      = std::pair<index_t, std::vector<index_t>>;
      std::map<State, index_t>          ids;
      std::vector<State>                states;
      std::vector<std::vector<index_t>> delta;
      auto intern = [&](index_t p, std::vector<index_t> live) {
        if (A.is_final(p)) {
          live.push_back(B.initial());
        }
        std::sort(live.begin(), live.end());
        live.erase(std::unique(live.begin(), live.end()), live.end());
        State s{p, std::move(live)};
        auto [it, inserted] = ids.try_emplace(s, static_cast<index_t>(states.size()));
        if (inserted) {
          states.push_back(std::move(s));
        }
        return it->second;
      };
      intern(A.initial(), {});
      for (std::size_t i = 0; i < states.size(); ++i) {
        std::vector<index_t> row(sigma);
        for (index_t a = 0; a < sigma; ++a) {
          std::vector<index_t> live;
          for (index_t q : states[i].second) {
            live.push_back(B.next(q, a));
          }
          row[a] = intern(A.next(states[i].first, a), std::move(live));
        }
        delta.push_back(std::move(row));
      }
      std::vector<index_t> finals;
      for (std::size_t i = 0; i < states.size(); ++i) {
        auto const& live = states[i].second;
        if (std::any_of(live.begin(), live.end(), [&](index_t q) { return B.is_final(q); })) {
          finals.push_back(static_cast<index_t>(i));
        }
      }
      return Dfa(static_cast<index_t>(states.size()), A.alphabet(), 0, finals, delta);
    }

    Dfa compile(StarFreeExpr const& e, Alphabet const& alphabet) {
      switch (e.kind()) {
        case StarFreeExpr::Kind::empty: return uniform(alphabet, false);
        case StarFreeExpr::Kind::epsilon: return minimize(epsilon_dfa(alphabet));
        case StarFreeExpr::Kind::symbol: return minimize(symbol_dfa(alphabet, e.name()));
        case StarFreeExpr::Kind::union_:
          return minimize(union_dfa(compile(e.lhs(), alphabet), compile(e.rhs(), alphabet)));
        case StarFreeExpr::Kind::concat:
          return minimize(concat_dfa(compile(e.lhs(), alphabet), compile(e.rhs(), alphabet)));
        case StarFreeExpr::Kind::complement:
          return minimize(complement_dfa(compile(e.lhs(), alphabet)));
      }
      throw std::logic_error("unreachable");
    }
  }  // namespace

  Dfa compile_starfree(StarFreeExpr const& e, std::vector<std::string> const& alphabet) {
    if (alphabet.empty()) {
      throw ParseError("empty alphabet");
    }
    return compile(e, alphabet);
  }

}  // namespace synmon
