#include "synmon/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_set>

namespace synmon {

  Dfa::Dfa(index_t                           state_count,
           std::vector<std::string>          alphabet,
           index_t                           initial,
           std::vector<index_t>              finals,
           std::vector<std::vector<index_t>> delta)
      : state_count_(state_count),
        alphabet_(std::move(alphabet)),
        initial_(initial),
        final_(state_count, false),
        delta_(std::move(delta)) {
    if (state_count_ == 0) {
      throw ParseError("a DFA needs at least one state");
    }
    if (alphabet_.empty()) {
      throw ParseError("a DFA needs a nonempty alphabet");
    }
    std::unordered_set<std::string> names;
    for (auto const& a : alphabet_) {
      if (a.empty() || a.find_first_of("{}") != std::string::npos) {
        throw ParseError("invalid symbol name \"" + a + "\"");
      }
      if (!names.insert(a).second) {
        throw ParseError("repeated symbol \"" + a + "\"");
      }
    }
    if (initial_ >= state_count_) {
      throw ParseError("initial state out of range");
    }
    for (index_t f : finals) {
      if (f >= state_count_) {
        throw ParseError("final state " + std::to_string(f) + " out of range");
      }
      final_[f] = true;
    }
    if (delta_.size() != state_count_) {
      throw ParseError("transition table has " + std::to_string(delta_.size())
                       + " rows, expected " + std::to_string(state_count_));
    }
    for (auto const& row : delta_) {
      if (row.size() != alphabet_.size()) {
        throw ParseError("transition table is not total");
      }
      for (index_t q : row) {
        if (q >= state_count_) {
          throw ParseError("transition target " + std::to_string(q)
                           + " out of range");
        }
      }
    }
  }

  std::vector<index_t> Dfa::finals() const {
    std::vector<index_t> result;
    for (index_t q = 0; q < state_count_; ++q) {
      if (final_[q]) {
        result.push_back(q);
      }
    }
    return result;
  }

  index_t Dfa::symbol_index(std::string_view name) const {
    auto it = std::find(alphabet_.begin(), alphabet_.end(), name);
    if (it == alphabet_.end()) {
      throw UnknownSymbol("unknown symbol \"" + std::string(name) + "\"");
    }
    return static_cast<index_t>(it - alphabet_.begin());
  }

  Word Dfa::parse_word(std::string_view text) const {
    Word w;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '{') {
        auto const close = text.find('}', i);
        if (close == std::string_view::npos) {
          throw UnknownSymbol("unterminated symbol in \"" + std::string(text) + "\"");
        }
        w.push_back(symbol_index(text.substr(i + 1, close - i - 1)));
        i = close;
      } else {
        w.push_back(symbol_index(text.substr(i, 1)));
      }
    }
    return w;
  }

  std::string Dfa::format_word(Word const& w) const {
    std::string result;
    for (index_t a : w) {
      auto const& name = alphabet_.at(a);
      result += name.size() == 1 ? name : "{" + name + "}";
    }
    return result;
  }

  index_t Dfa::run(index_t q, Word const& w) const {
    for (index_t a : w) {
      q = delta_[q][a];
    }
    return q;
  }

  bool dfa_accepts(Dfa const& A, Word const& w) {
    for (index_t a : w) {
      if (a >= A.alphabet().size()) {
        throw UnknownSymbol("symbol index " + std::to_string(a) + " out of range");
      }
    }
    return A.is_final(A.run(A.initial(), w));
  }

  bool dfa_accepts(Dfa const& A, std::string_view w) {
    return dfa_accepts(A, A.parse_word(w));
  }

  ////////////////////////////////////////////////////////////////////////
  // Minimisation
  ////////////////////////////////////////////////////////////////////////

  Dfa minimize(Dfa const& A) {
    index_t const sigma = static_cast<index_t>(A.alphabet().size());

    std::vector<index_t> reachable{A.initial()};
    std::vector<bool>    seen(A.state_count(), false);
    seen[A.initial()] = true;
    for (std::size_t i = 0; i < reachable.size(); ++i) {
      for (index_t a = 0; a < sigma; ++a) {
        index_t const q = A.next(reachable[i], a);
        if (!seen[q]) {
          seen[q] = true;
          reachable.push_back(q);
        }
      }
    }

    // Moore refinement: blocks are split by the blocks of their successors.
    std::vector<index_t> block(A.state_count(), 0);
    for (index_t q : reachable) {
      block[q] = A.is_final(q) ? 1 : 0;
    }
    std::size_t count = 0;
    while (true) {
      std::map<std::vector<index_t>, index_t> ids;
      std::vector<index_t>                    next(A.state_count(), 0);
      for (index_t q : reachable) {
        std::vector<index_t> sig{block[q]};
        for (index_t a = 0; a < sigma; ++a) {
          sig.push_back(block[A.next(q, a)]);
        }
        next[q] = ids.try_emplace(std::move(sig), static_cast<index_t>(ids.size()))
                      .first->second;
      }
      block.swap(next);
      if (ids.size() == count) {
        break;
      }
      count = ids.size();
    }

    // Renumber blocks breadth-first from the initial block.
    std::vector<std::int64_t> number(count, -1);
    std::vector<index_t>      rep;
    number[block[A.initial()]] = 0;
    rep.push_back(A.initial());
    for (std::size_t i = 0; i < rep.size(); ++i) {
      for (index_t a = 0; a < sigma; ++a) {
        index_t const b = block[A.next(rep[i], a)];
        if (number[b] < 0) {
          number[b] = static_cast<std::int64_t>(rep.size());
          rep.push_back(A.next(rep[i], a));
        }
      }
    }
    std::vector<std::vector<index_t>> delta(rep.size(), std::vector<index_t>(sigma));
    std::vector<index_t>              finals;
    for (std::size_t i = 0; i < rep.size(); ++i) {
      for (index_t a = 0; a < sigma; ++a) {
        delta[i][a] = static_cast<index_t>(number[block[A.next(rep[i], a)]]);
      }
      if (A.is_final(rep[i])) {
        finals.push_back(static_cast<index_t>(i));
      }
    }
    return Dfa(static_cast<index_t>(rep.size()), A.alphabet(), 0, finals, delta);
  }

  ////////////////////////////////////////////////////////////////////////
  // Transition monoids
  ////////////////////////////////////////////////////////////////////////

  TransitionMonoidResult transition_monoid(Dfa const& A, std::size_t element_cap) {
    index_t const sigma = static_cast<index_t>(A.alphabet().size());
    std::vector<std::vector<index_t>>       functions;
    std::vector<Word>                       words;
    std::map<std::vector<index_t>, index_t> position;
    std::vector<index_t>                    generator_map(sigma);

    std::vector<index_t> id(A.state_count());
    for (index_t q = 0; q < A.state_count(); ++q) {
      id[q] = q;
    }
    position.emplace(id, 0);
    functions.push_back(std::move(id));
    words.emplace_back();
    for (std::size_t i = 0; i < functions.size(); ++i) {
      for (index_t a = 0; a < sigma; ++a) {
        std::vector<index_t> g(A.state_count());
        for (index_t q = 0; q < A.state_count(); ++q) {
          g[q] = A.next(functions[i][q], a);
        }
        auto const [it, inserted]
            = position.try_emplace(g, static_cast<index_t>(functions.size()));
        if (i == 0) {
          generator_map[a] = it->second;
        }
        if (inserted) {
          Word w = words[i];
          w.push_back(a);
          functions.push_back(std::move(g));
          words.push_back(std::move(w));
          if (functions.size() > element_cap) {
            throw BudgetExceeded("transition monoid exceeded "
                                 + std::to_string(element_cap) + " elements");
          }
        }
      }
    }

    auto const                        size = static_cast<index_t>(functions.size());
    std::vector<std::vector<index_t>> table(size, std::vector<index_t>(size));
    std::vector<index_t>              h(A.state_count());
    for (index_t x = 0; x < size; ++x) {
      for (index_t y = 0; y < size; ++y) {
        for (index_t q = 0; q < A.state_count(); ++q) {
          h[q] = functions[y][functions[x][q]];
        }
        table[x][y] = position.at(h);
      }
    }
    std::vector<std::string> labels;
    for (auto const& w : words) {
      labels.push_back(w.empty() ? "1" : "f_" + A.format_word(w));
    }
    return {validate_semigroup(table, std::move(labels)),
            std::move(generator_map),
            std::move(functions),
            std::move(words)};
  }

  FiniteSemigroup syntactic_monoid_of(Dfa const& A) {
    return transition_monoid(minimize(A)).monoid;
  }

  TransitionMonoidResult syntactic_semigroup_of(Dfa const& A) {
    auto          m = transition_monoid(minimize(A));
    index_t const n = m.monoid.size();
    bool identity_reached
        = std::find(m.generator_map.begin(), m.generator_map.end(), 0)
          != m.generator_map.end();
    for (index_t x = 1; x < n && !identity_reached; ++x) {
      for (index_t g : m.generator_map) {
        if (m.monoid.product(x, g) == 0) {
          identity_reached = true;
          break;
        }
      }
    }
    if (identity_reached) {
      return m;
    }
    std::vector<index_t> rest;
    for (index_t x = 1; x < n; ++x) {
      rest.push_back(x);
    }
    TransitionMonoidResult result{subsemigroup(m.monoid, rest), {}, {}, {}};
    for (index_t g : m.generator_map) {
      result.generator_map.push_back(g - 1);
    }
    result.functions.assign(m.functions.begin() + 1, m.functions.end());
    result.words.assign(m.words.begin() + 1, m.words.end());
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Equivalence
  ////////////////////////////////////////////////////////////////////////

  EquivalenceResult dfa_equivalent(Dfa const& A, Dfa const& B) {
    if (A.alphabet() != B.alphabet()) {
      throw AlphabetMismatch("automata have different alphabets");
    }
    index_t const sigma = static_cast<index_t>(A.alphabet().size());
    auto const    key   = [&](index_t p, index_t q) {
      return static_cast<std::size_t>(p) * B.state_count() + q;
    };
    struct Node {
      index_t     p, q;
      std::size_t parent;
      index_t     symbol;
    };
    std::vector<Node> nodes{{A.initial(), B.initial(), 0, 0}};
    std::vector<bool> seen(static_cast<std::size_t>(A.state_count()) * B.state_count(),
                           false);
    seen[key(A.initial(), B.initial())] = true;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      auto const node = nodes[i];
      if (A.is_final(node.p) != B.is_final(node.q)) {
        Word w;
        for (std::size_t j = i; j != 0; j = nodes[j].parent) {
          w.push_back(nodes[j].symbol);
        }
        std::reverse(w.begin(), w.end());
        return {false, std::move(w)};
      }
      for (index_t a = 0; a < sigma; ++a) {
        index_t const p = A.next(node.p, a), q = B.next(node.q, a);
        if (!seen[key(p, q)]) {
          seen[key(p, q)] = true;
          nodes.push_back({p, q, i, a});
        }
      }
    }
    return {true, std::nullopt};
  }

  ////////////////////////////////////////////////////////////////////////
  // Named automata
  ////////////////////////////////////////////////////////////////////////

  Dfa contains_b_without_c_dfa() {
    // 0: no b yet, 1: seen b, 2: seen c (sink).
    return Dfa(3, {"a", "b", "c"}, 0, {1}, {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}});
  }

  Dfa ends_with_a_then_bs_dfa() {
    // 1: the word so far ends in a b^k.
    return Dfa(2, {"a", "b", "c"}, 0, {1}, {{1, 0, 0}, {1, 1, 0}});
  }

  Dfa sum_language_dfa(APlusBn const& A, std::span<index_t const> target) {
    auto const               n    = static_cast<index_t>(A.elements.size());
    index_t const            init = n;
    std::vector<std::string> alphabet;
    for (index_t f : A.aff) {
      alphabet.push_back(A.label(f));
    }
    std::vector<std::vector<index_t>> delta(n + 1);
    for (index_t s = 0; s < n; ++s) {
      for (index_t f : A.aff) {
        delta[s].push_back(A.add_reduct.product(s, f));
      }
    }
    delta[init].assign(A.aff.begin(), A.aff.end());
    for (index_t t : target) {
      if (t >= n) {
        throw IndexOutOfRange("target element out of range");
      }
    }
    return Dfa(n + 1,
               std::move(alphabet),
               init,
               std::vector<index_t>(target.begin(), target.end()),
               std::move(delta));
  }

  std::string to_dot(Dfa const& A, std::string const& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n  rankdir=LR;\n  start [shape=point];\n";
    for (index_t q = 0; q < A.state_count(); ++q) {
      os << "  q" << q << " [shape=" << (A.is_final(q) ? "doublecircle" : "circle")
         << "];\n";
    }
    os << "  start -> q" << A.initial() << ";\n";
    for (index_t q = 0; q < A.state_count(); ++q) {
      // One edge per target, labelled with all symbols leading there.
      std::map<index_t, std::string> edges;
      for (index_t a = 0; a < A.alphabet().size(); ++a) {
        auto& label = edges[A.next(q, a)];
        label += (label.empty() ? "" : ", ") + A.alphabet()[a];
      }
      for (auto const& [target, label] : edges) {
        os << "  q" << q << " -> q" << target << " [label=\"" << label << "\"];\n";
      }
    }
    os << "}\n";
    return os.str();
  }

}  // namespace synmon
