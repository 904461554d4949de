#include <algorithm>
#include <map>
#include <numeric>

#include "synmon/syntactic.hpp"

namespace synmon {

  std::vector<Congruence> congruence_atoms(FiniteSemigroup const& S) {
    std::vector<Congruence>                 principal;
    std::map<std::vector<index_t>, index_t> seen;
    for (index_t x = 0; x < S.size(); ++x) {
      for (index_t y = x + 1; y < S.size(); ++y) {
        auto c = principal_congruence(S, x, y);
        if (seen.try_emplace(c.partition().block_ids(),
                             static_cast<index_t>(principal.size()))
                .second) {
          principal.push_back(std::move(c));
        }
      }
    }
    // A strictly finer congruence has strictly more blocks, so it is seen
    // before every congruence it refines.
    std::vector<std::size_t> order(principal.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
      return principal[a].block_count() > principal[b].block_count();
    });
    std::vector<std::size_t> atoms;
    for (auto i : order) {
      bool const minimal = std::none_of(atoms.begin(), atoms.end(), [&](auto a) {
        return principal[a].partition().refines(principal[i].partition());
      });
      if (minimal) {
        atoms.push_back(i);
      }
    }
    std::sort(atoms.begin(), atoms.end());
    std::vector<Congruence> result;
    for (auto a : atoms) {
      result.push_back(principal[a]);
    }
    return result;
  }

  namespace {
    constexpr int kUnassigned = -1;

    // Backtracking over memberships: every atom must have a class that
    // contains elements both inside and outside the subset.
    class SubsetSearch {
     public:
      SubsetSearch(FiniteSemigroup const&         S,
                   std::vector<Congruence> const& atoms,
                   DecideOptions const&           opts)
          : S_(S), opts_(opts), assign_(S.size(), kUnassigned) {
        occurrences_.resize(S.size());
        for (auto const& atom : atoms) {
          AtomState st;
          for (auto& block : atom.partition().blocks()) {
            if (block.size() < 2) {
              continue;
            }
            for (index_t x : block) {
              occurrences_[x].emplace_back(atoms_.size(), st.classes.size());
            }
            st.classes.push_back({std::move(block), 0, 0, 0});
            st.classes.back().unassigned = st.classes.back().members.size();
            ++st.open;
          }
          atoms_.push_back(std::move(st));
        }
        order_.resize(S.size());
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](index_t a, index_t b) {
          return occurrences_[a].size() > occurrences_[b].size();
        });
      }

      // true: found; false: exhausted the tree.  Throws on budget.
      bool run() {
        return descend(0);
      }

      std::vector<index_t> subset() const {
        std::vector<index_t> result;
        for (index_t x = 0; x < S_.size(); ++x) {
          if (assign_[x] == 1) {
            result.push_back(x);
          }
        }
        return result;
      }

      std::uint64_t nodes() const {
        return nodes_;
      }

      struct BudgetOut {};

     private:
      struct ClassState {
        std::vector<index_t> members;
        std::size_t          in, out, unassigned;
      };
      struct AtomState {
        std::vector<ClassState> classes;
        std::size_t             satisfied = 0;  // classes split by the subset
        std::size_t             open      = 0;  // classes with unassigned members
      };

      bool set(index_t x, int value) {
        assign_[x] = value;
        trail_.push_back(x);
        bool ok = true;
        for (auto [a, c] : occurrences_[x]) {
          auto& atom = atoms_[a];
          auto& cls  = atom.classes[c];
          bool const was_split = cls.in > 0 && cls.out > 0;
          (value ? cls.in : cls.out)++;
          if (--cls.unassigned == 0) {
            --atom.open;
          }
          if (!was_split && cls.in > 0 && cls.out > 0) {
            ++atom.satisfied;
          }
          if (atom.satisfied == 0) {
            if (atom.open == 0) {
              ok = false;
            } else {
              pending_.push_back(a);
            }
          }
        }
        return ok;
      }

      void unset_to(std::size_t mark) {
        while (trail_.size() > mark) {
          index_t const x     = trail_.back();
          int const     value = assign_[x];
          trail_.pop_back();
          for (auto [a, c] : occurrences_[x]) {
            auto& atom = atoms_[a];
            auto& cls  = atom.classes[c];
            bool const was_split = cls.in > 0 && cls.out > 0;
            (value ? cls.in : cls.out)--;
            if (cls.unassigned++ == 0) {
              ++atom.open;
            }
            if (was_split && !(cls.in > 0 && cls.out > 0)) {
              --atom.satisfied;
            }
          }
          assign_[x] = kUnassigned;
        }
      }

      // An unsatisfied atom with a single open class whose only unassigned
      // member must take the colour opposite to the assigned ones.
      bool propagate() {
        while (!pending_.empty()) {
          auto const a = pending_.back();
          pending_.pop_back();
          auto const& atom = atoms_[a];
          if (atom.satisfied > 0 || atom.open != 1) {
            continue;
          }
          for (auto const& cls : atom.classes) {
            if (cls.unassigned != 1) {
              continue;
            }
            auto const x = *std::find_if(cls.members.begin(), cls.members.end(),
                                         [&](index_t m) { return assign_[m] == kUnassigned; });
            if (!set(x, cls.in > 0 ? 0 : 1)) {
              return false;
            }
            break;
          }
        }
        return true;
      }

      bool all_satisfied() const {
        return std::all_of(atoms_.begin(), atoms_.end(),
                           [](auto const& a) { return a.satisfied > 0; });
      }

      bool accept_leaf() {
        if (!all_satisfied()) {
          return false;
        }
        if (opts_.mode == ContextMode::monoid) {
          return true;
        }
        auto const d = subset();
        return syntactic_congruence(S_, d, opts_.mode).is_equality();
      }

      bool descend(std::size_t depth) {
        while (depth < order_.size() && assign_[order_[depth]] != kUnassigned) {
          ++depth;
        }
        if (depth == order_.size()) {
          return accept_leaf();
        }
        index_t const x = order_[depth];
        if (occurrences_[x].empty()) {
          // In no atom: membership is irrelevant to the monoid test.
          std::size_t const mark = trail_.size();
          set(x, 0);
          if (descend(depth + 1)) {
            return true;
          }
          unset_to(mark);
          if (opts_.mode == ContextMode::monoid) {
            return false;
          }
          set(x, 1);
          if (descend(depth + 1)) {
            return true;
          }
          unset_to(mark);
          return false;
        }
        for (int value : {0, 1}) {
          if (++nodes_ > opts_.node_budget) {
            throw BudgetOut{};
          }
          std::size_t const mark = trail_.size();
          pending_.clear();
          if (set(x, value) && propagate() && descend(depth + 1)) {
            return true;
          }
          pending_.clear();
          unset_to(mark);
        }
        return false;
      }

      FiniteSemigroup const&                         S_;
      DecideOptions const&                           opts_;
      std::vector<int>                               assign_;
      std::vector<AtomState>                         atoms_;
      std::vector<std::vector<std::pair<std::size_t, std::size_t>>> occurrences_;
      std::vector<index_t>                           order_;
      std::vector<index_t>                           trail_;
      std::vector<std::size_t>                       pending_;
      std::uint64_t                                  nodes_ = 0;
    };

    bool splits_every_atom(std::vector<Congruence> const& atoms,
                           std::vector<bool> const&       in) {
      for (auto const& atom : atoms) {
        bool split = false;
        for (auto const& block : atom.partition().blocks()) {
          for (index_t x : block) {
            if (in[x] != in[block[0]]) {
              split = true;
              break;
            }
          }
          if (split) {
            break;
          }
        }
        if (!split) {
          return false;
        }
      }
      return true;
    }

    std::optional<std::vector<index_t>>
    exhaustive_search(FiniteSemigroup const&         S,
                      std::vector<Congruence> const& atoms,
                      ContextMode                    mode) {
      index_t const n = S.size();
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        std::vector<bool>    in(n);
        std::vector<index_t> subset;
        for (index_t x = 0; x < n; ++x) {
          in[x] = (bits >> x) & 1;
          if (in[x]) {
            subset.push_back(x);
          }
        }
        if (!splits_every_atom(atoms, in)) {
          continue;
        }
        if (mode == ContextMode::monoid
            || syntactic_congruence(S, subset, mode).is_equality()) {
          return subset;
        }
      }
      return std::nullopt;
    }
  }  // namespace

  Decision decide_syntactic(FiniteSemigroup const& S, DecideOptions const& opts) {
    Decision   decision;
    auto const atoms = congruence_atoms(S);
    decision.atoms   = atoms.size();

    std::optional<std::vector<index_t>> found;
    bool                                exhausted = false;
    SubsetSearch                        search(S, atoms, opts);
    try {
      if (search.run()) {
        found = search.subset();
      } else {
        exhausted = true;
      }
    } catch (SubsetSearch::BudgetOut const&) {
      if (S.size() <= opts.exhaustive_threshold) {
        found     = exhaustive_search(S, atoms, opts.mode);
        exhausted = !found;
      }
    }
    decision.nodes = search.nodes();

    if (found) {
      auto result = is_disjunctive(S, *found, opts.mode);
      if (!result.disjunctive || !replay_certificate(S, *result.certificate)) {
        throw std::logic_error("decide_syntactic: subset splitting every atom "
                               "is not disjunctive");
      }
      decision.verdict     = Verdict::yes;
      decision.subset      = std::move(found);
      decision.certificate = std::move(result.certificate);
    } else if (exhausted) {
      decision.verdict = Verdict::no;
    }
    return decision;
  }

}  // namespace synmon
