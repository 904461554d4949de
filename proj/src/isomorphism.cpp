#include <algorithm>
#include <array>
#include <limits>
#include <map>

#include "synmon/semigroup.hpp"

namespace synmon {

  bool is_isomorphism(FiniteSemigroup const&      S,
                      FiniteSemigroup const&      T,
                      std::vector<index_t> const& mapping) {
    if (S.size() != T.size() || mapping.size() != S.size()) {
      return false;
    }
    std::vector<bool> hit(T.size(), false);
    for (index_t m : mapping) {
      if (m >= T.size() || hit[m]) {
        return false;
      }
      hit[m] = true;
    }
    for (index_t x = 0; x < S.size(); ++x) {
      for (index_t y = 0; y < S.size(); ++y) {
        if (mapping[S.product(x, y)] != T.product(mapping[x], mapping[y])) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    constexpr index_t kUnset = std::numeric_limits<index_t>::max();

    // Isomorphism invariants of a single element.
    using Profile = std::array<index_t, 10>;

    std::vector<Profile> profiles(FiniteSemigroup const& S) {
      index_t const        n = S.size();
      std::vector<Profile> result(n);
      for (index_t x = 0; x < n; ++x) {
        auto const        c = power_cycle(S, x);
        std::vector<bool> right(n, false), left(n, false);
        index_t           fixes_right = 0, fixes_left = 0, absorbs_right = 0,
                absorbs_left = 0, commutes = 0;
        for (index_t y = 0; y < n; ++y) {
          index_t const xy = S.product(x, y), yx = S.product(y, x);
          right[xy] = true;
          left[yx]  = true;
          fixes_right += (xy == y);
          fixes_left += (yx == y);
          absorbs_right += (xy == x);
          absorbs_left += (yx == x);
          commutes += (xy == yx);
        }
        result[x] = {S.identity() == x,
                     c.index,
                     c.period,
                     static_cast<index_t>(std::count(right.begin(), right.end(), true)),
                     static_cast<index_t>(std::count(left.begin(), left.end(), true)),
                     fixes_right,
                     fixes_left,
                     absorbs_right,
                     absorbs_left,
                     commutes};
      }
      return result;
    }

    class IsoSearch {
     public:
      IsoSearch(FiniteSemigroup const& S,
                FiniteSemigroup const& T,
                std::uint64_t          budget)
          : S_(S),
            T_(T),
            budget_(budget),
            phi_(S.size(), kUnset),
            inv_(T.size(), kUnset) {}

      std::optional<IsoWitness> run() {
        auto ps = profiles(S_);
        auto pt = profiles(T_);
        {
          auto a = ps, b = pt;
          std::sort(a.begin(), a.end());
          std::sort(b.begin(), b.end());
          if (a != b) {
            return std::nullopt;
          }
        }
        std::map<Profile, index_t> ids;
        for (auto const& p : ps) {
          ids.try_emplace(p, static_cast<index_t>(ids.size()));
        }
        class_s_.resize(S_.size());
        class_t_.resize(T_.size());
        for (index_t x = 0; x < S_.size(); ++x) {
          class_s_[x] = ids.at(ps[x]);
        }
        for (index_t t = 0; t < T_.size(); ++t) {
          class_t_[t] = ids.at(pt[t]);
        }
        candidates_.resize(ids.size());
        for (index_t t = 0; t < T_.size(); ++t) {
          candidates_[class_t_[t]].push_back(t);
        }
        choose_generators();
        if (!extend(0)) {
          return std::nullopt;
        }
        return IsoWitness{phi_};
      }

     private:
      // Greedy generating set, preferring elements with few candidates.
      void choose_generators() {
        std::vector<bool> in_sub(S_.size(), false);
        std::vector<index_t> members;
        while (members.size() < S_.size()) {
          index_t best = kUnset;
          for (index_t x = 0; x < S_.size(); ++x) {
            if (!in_sub[x]
                && (best == kUnset
                    || candidates_[class_s_[x]].size()
                           < candidates_[class_s_[best]].size())) {
              best = x;
            }
          }
          generators_.push_back(best);
          in_sub[best] = true;
          members.push_back(best);
          for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
              for (index_t p : {S_.product(members[i], members[j]),
                                S_.product(members[j], members[i])}) {
                if (!in_sub[p]) {
                  in_sub[p] = true;
                  members.push_back(p);
                }
              }
            }
          }
        }
      }

      bool set(index_t x, index_t t) {
        if (inv_[t] != kUnset || class_s_[x] != class_t_[t]) {
          return false;
        }
        phi_[x] = t;
        inv_[t] = x;
        mapped_.push_back(x);
        return true;
      }

      // Extends phi to everything generated by the mapped elements.
      bool close(std::size_t from) {
        for (std::size_t i = from; i < mapped_.size(); ++i) {
          index_t const a = mapped_[i];
          for (std::size_t j = 0; j <= i; ++j) {
            index_t const b = mapped_[j];
            for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
              index_t const p = S_.product(x, y);
              index_t const q = T_.product(phi_[x], phi_[y]);
              if (phi_[p] == kUnset) {
                if (!set(p, q)) {
                  return false;
                }
              } else if (phi_[p] != q) {
                return false;
              }
            }
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (mapped_.size() > mark) {
          index_t const x = mapped_.back();
          inv_[phi_[x]]   = kUnset;
          phi_[x]         = kUnset;
          mapped_.pop_back();
        }
      }

      bool extend(std::size_t depth) {
        if (depth == generators_.size()) {
          return mapped_.size() == S_.size();
        }
        index_t const g = generators_[depth];
        if (phi_[g] != kUnset) {
          return extend(depth + 1);
        }
        for (index_t t : candidates_[class_s_[g]]) {
          if (inv_[t] != kUnset) {
            continue;
          }
          if (++nodes_ > budget_) {
            throw BudgetExceeded("isomorphism search exceeded "
                                 + std::to_string(budget_) + " nodes");
          }
          std::size_t const mark = mapped_.size();
          if (set(g, t) && close(mark) && extend(depth + 1)) {
            return true;
          }
          undo(mark);
        }
        return false;
      }

      FiniteSemigroup const&            S_;
      FiniteSemigroup const&            T_;
      std::uint64_t                     budget_;
      std::uint64_t                     nodes_ = 0;
      std::vector<index_t>              class_s_, class_t_;
      std::vector<std::vector<index_t>> candidates_;
      std::vector<index_t>              generators_;
      std::vector<index_t>              phi_, inv_, mapped_;
    };
  }  // namespace

  std::optional<IsoWitness> find_isomorphism(FiniteSemigroup const& S,
                                             FiniteSemigroup const& T,
                                             std::uint64_t node_budget) {
    if (S.size() != T.size()) {
      return std::nullopt;
    }
    return IsoSearch(S, T, node_budget).run();
  }

}  // namespace synmon
