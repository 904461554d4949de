#include "synmon/separation_cases.hpp"

#include <optional>
#include <set>
#include <variant>

#include "synmon/syntactic.hpp"

namespace synmon {

  namespace {
    using Pair = BrandtElement;

    // Kind ranks used to orient a pair; the member with the lower rank
    // plays the role of x (resp. f).
    enum Rank { rank_full = 0, rank_nsupport = 1, rank_singleton = 2, rank_zero = 3 };

    Rank rank_of(MapKind const& k) {
      if (auto c = std::get_if<kind::Constant>(&k)) {
        return c->c.is_theta() ? rank_zero : rank_full;
      }
      if (std::holds_alternative<kind::NSupport>(k)) {
        return rank_nsupport;
      }
      return rank_singleton;
    }

    class Replayer {
     public:
      Replayer(APlusBn const&               A,
               FiniteSemigroup const&       S,
               std::vector<index_t> const&  subset,
               std::string                  sep)
          : A_(A), S_(S), in_(S.size(), false), sep_(std::move(sep)) {
        for (index_t x : subset) {
          in_[x] = true;
        }
      }

      // Evaluates u x v and u y v and checks the closed forms (when given)
      // and that exactly the expected side lands in the subset.
      void check(index_t                u,
                 index_t                x,
                 index_t                y,
                 index_t                v,
                 std::optional<index_t> x_value,
                 std::optional<index_t> y_value,
                 bool                   x_in) {
        ++result_.instances;
        covered_.emplace(std::min(x, y), std::max(x, y));
        index_t const vx = S_.product(S_.product(u, x), v);
        index_t const vy = S_.product(S_.product(u, y), v);
        auto const context = "u = " + A_.label(u) + ", v = " + A_.label(v) + ", x = "
                             + A_.label(x) + ", y = " + A_.label(y) + ": ";
        if (x_value && vx != *x_value) {
          fail(context + "u" + sep_ + "x" + sep_ + "v = " + A_.label(vx) + ", expected "
               + A_.label(*x_value));
        }
        if (y_value && vy != *y_value) {
          fail(context + "u" + sep_ + "y" + sep_ + "v = " + A_.label(vy) + ", expected "
               + A_.label(*y_value));
        }
        if (in_[vx] != x_in || in_[vy] == x_in) {
          fail(context + "context does not separate the pair");
        }
      }

      void fail(std::string what) {
        result_.failures.push_back(std::move(what));
      }

      SeparationReplay finish() {
        index_t const size = S_.size();
        result_.pairs      = covered_.size();
        if (covered_.size() != static_cast<std::size_t>(size) * (size - 1) / 2) {
          fail("only " + std::to_string(covered_.size()) + " of "
               + std::to_string(static_cast<std::size_t>(size) * (size - 1) / 2)
               + " pairs are covered");
        }
        return std::move(result_);
      }

     private:
      APlusBn const&                        A_;
      FiniteSemigroup const&                S_;
      std::vector<bool>                     in_;
      std::string                           sep_;
      std::set<std::pair<index_t, index_t>> covered_;
      SeparationReplay                      result_;
    };

    // Orients every unordered pair by rank and hands it to f(x, y).
    template <typename F>
    void for_each_oriented_pair(APlusBn const& A, F&& f) {
      auto const size = static_cast<index_t>(A.elements.size());
      for (index_t a = 0; a < size; ++a) {
        for (index_t b = a + 1; b < size; ++b) {
          if (rank_of(A.kinds[b]) < rank_of(A.kinds[a])) {
            f(b, a);
          } else {
            f(a, b);
          }
        }
      }
    }
  }  // namespace

  SeparationReplay replay_additive_separations(APlusBn const& A) {
    auto const     P = disjunctive_subset_additive(A);
    index_t const  n = A.n;
    Replayer       r(A, A.add_reduct, P, " + ");
    index_t const  zero = A.constant(Pair::theta());

    for_each_oriented_pair(A, [&](index_t x, index_t y) {
      auto const& kx = A.kinds[x];
      auto const& ky = A.kinds[y];
      if (auto c = std::get_if<kind::Constant>(&kx); c && !c->c.is_theta()) {
        // x = xi(p,q): u = xi(1,p), v = xi(q,2).
        index_t const p = c->c.i(), q = c->c.j();
        index_t const u = A.constant(Pair::pair(1, p));
        index_t const v = A.constant(Pair::pair(q, 2));
        std::optional<index_t> expected = zero;
        if (auto ns = std::get_if<kind::NSupport>(&ky); ns && ns->q == q) {
          index_t j = 0;
          while (ns->sigma[j] + 1 != p) {
            ++j;
          }
          expected = A.singleton(Pair::pair(j + 1, ns->p), Pair::pair(1, 2));
        } else if (auto s = std::get_if<kind::SingletonSupport>(&ky);
                   s && s->to == Pair::pair(p, q)) {
          expected = A.singleton(s->from, Pair::pair(1, 2));
        }
        r.check(u, x, y, v, A.constant(Pair::pair(1, 2)), expected, true);
        return;
      }
      if (auto ns = std::get_if<kind::NSupport>(&kx)) {
        // x = (p,q;sigma): u = (l,p)->(1,l sigma), v = xi(q,1).
        index_t const p = ns->p, q = ns->q;
        auto const&   sigma = ns->sigma;
        index_t const v     = A.constant(Pair::pair(q, 1));
        auto context_at     = [&](index_t l) {
          index_t const u  = A.singleton(Pair::pair(l, p), Pair::pair(1, sigma[l - 1] + 1));
          index_t const xv = A.singleton(Pair::pair(l, p), Pair::pair(1, 1));
          r.check(u, x, y, v, xv, zero, true);
        };
        if (auto ny = std::get_if<kind::NSupport>(&ky)) {
          if (ny->p != p || ny->q != q) {
            context_at(ny->q);
          } else {
            for (index_t j0 = 1; j0 <= n; ++j0) {
              if (sigma[j0 - 1] != ny->sigma[j0 - 1]) {
                context_at(j0);
              }
            }
          }
        } else if (auto sy = std::get_if<kind::SingletonSupport>(&ky)) {
          for (index_t l = 1; l <= n; ++l) {
            if (sigma[l - 1] + 1 != sy->to.i()) {
              context_at(l);
            }
          }
        } else {
          for (index_t l = 1; l <= n; ++l) {
            context_at(l);
          }
        }
        return;
      }
      if (auto s = std::get_if<kind::SingletonSupport>(&kx)) {
        // x = (p,q)->(r,s): u = (p,q)->(1,r), v = (p,q)->(s,1).
        index_t const u  = A.singleton(s->from, Pair::pair(1, s->to.i()));
        index_t const v  = A.singleton(s->from, Pair::pair(s->to.j(), 1));
        index_t const xv = A.singleton(s->from, Pair::pair(1, 1));
        r.check(u, x, y, v, xv, zero, true);
        return;
      }
      r.fail("pair " + A.label(x) + ", " + A.label(y) + " matches no case");
    });
    return r.finish();
  }

  SeparationReplay replay_multiplicative_separations(APlusBn const& A) {
    auto const    D = disjunctive_subset_multiplicative(A);
    index_t const n = A.n;
    Replayer      r(A, A.mul_reduct, D, "");
    index_t const zero = A.constant(Pair::theta());
    auto const    id   = identity_permutation(n);

    // Multiplicative ranks: n-support first, then full, singleton, zero.
    auto mul_rank = [](MapKind const& k) {
      auto const rk = rank_of(k);
      return rk == rank_nsupport ? 0 : rk == rank_full ? 1 : static_cast<int>(rk);
    };
    auto const size = static_cast<index_t>(A.elements.size());
    for (index_t a = 0; a < size; ++a) {
      for (index_t b = a + 1; b < size; ++b) {
        bool const    swap = mul_rank(A.kinds[b]) < mul_rank(A.kinds[a]);
        index_t const f    = swap ? b : a;
        index_t const g    = swap ? a : b;
        auto const&   kf   = A.kinds[f];
        auto const&   kg   = A.kinds[g];

        if (auto ns = std::get_if<kind::NSupport>(&kf)) {
          // f = (p,q;sigma).
          index_t const p = ns->p, q = ns->q;
          if (auto c = std::get_if<kind::Constant>(&kg); c && !c->c.is_theta()) {
            // g = xi(k,l): h = xi(theta), h' = (k,l)->(s,t).
            for (index_t s = 1; s <= n; ++s) {
              for (index_t t = 1; t <= n; ++t) {
                index_t const h2 = A.singleton(c->c, Pair::pair(s, t));
                r.check(zero, f, g, h2, zero, A.constant(Pair::pair(s, t)), false);
              }
            }
            continue;
          }
          index_t const h  = A.nsupport(1, p, id);
          index_t const h2 = A.nsupport(q, 1, permutation_inverse(ns->sigma));
          std::optional<index_t> expected;
          if (auto ng = std::get_if<kind::NSupport>(&kg)) {
            expected = (ng->p != p || ng->q != q)
                           ? zero
                           : A.nsupport(1, 1,
                                        permutation_product(ng->sigma,
                                                            permutation_inverse(ns->sigma)));
          } else if (!std::holds_alternative<kind::SingletonSupport>(kg)) {
            expected = zero;
          }
          r.check(h, f, g, h2, A.nsupport(1, 1, id), expected, true);
          if (std::holds_alternative<kind::SingletonSupport>(kg)) {
            auto const value = A.mul_reduct.product(A.mul_reduct.product(h, g), h2);
            auto const rk    = rank_of(A.kinds[value]);
            if (rk != rank_zero && rk != rank_singleton) {
              r.fail("h g h' = " + A.label(value) + " for singleton g = " + A.label(g)
                     + " is neither zero nor of singleton support");
            }
          }
          continue;
        }
        if (auto c = std::get_if<kind::Constant>(&kf); c && !c->c.is_theta()) {
          // f = xi(p,q).
          if (std::holds_alternative<kind::Constant>(kg)) {
            for (index_t s = 1; s <= n; ++s) {
              for (index_t t = 1; t <= n; ++t) {
                index_t const h2 = A.singleton(c->c, Pair::pair(s, t));
                r.check(f, f, g, h2, A.constant(Pair::pair(s, t)), zero, true);
              }
            }
          } else {
            index_t const q  = c->c.j();
            index_t const h2 = A.nsupport(q, q, id);
            r.check(zero, f, g, h2, f, zero, true);
          }
          continue;
        }
        if (auto s = std::get_if<kind::SingletonSupport>(&kf)) {
          // f = (p,q)->(r,s): h = xi(p,q), h' = (r,s)->(u,v).
          index_t const h = A.constant(s->from);
          for (index_t u = 1; u <= n; ++u) {
            for (index_t v = 1; v <= n; ++v) {
              index_t const h2 = A.singleton(s->to, Pair::pair(u, v));
              r.check(h, f, g, h2, A.constant(Pair::pair(u, v)), zero, true);
            }
          }
          continue;
        }
        r.fail("pair " + A.label(f) + ", " + A.label(g) + " matches no case");
      }
    }
    return r.finish();
  }

}  // namespace synmon
