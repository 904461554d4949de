#include "synmon/syntactic.hpp"

#include <algorithm>
#include <map>

namespace synmon {

  std::string to_string(ContextMode mode) {
    return mode == ContextMode::monoid ? "monoid" : "semigroup";
  }

  ContextMode context_mode_from_string(std::string const& s) {
    if (s == "monoid") {
      return ContextMode::monoid;
    }
    if (s == "semigroup") {
      return ContextMode::semigroup;
    }
    throw ParseError("unknown context mode \"" + s
                     + "\", expected \"monoid\" or \"semigroup\"");
  }

  namespace {
    using Context = std::optional<index_t>;

    // The right-context classes a ~ b iff av in D <=> bv in D for every
    // right context v.  x and y are then syntactically equivalent iff
    // ux ~ uy for every left context u.
    class ContextTables {
     public:
      ContextTables(FiniteSemigroup const&   S,
                    std::span<index_t const> subset,
                    ContextMode              mode)
          : S_(S), in_(S.size(), false) {
        for (index_t d : subset) {
          if (d >= S.size()) {
            throw IndexOutOfRange("subset element " + std::to_string(d)
                                  + " is not in the semigroup");
          }
          in_[d] = true;
        }
        if (mode == ContextMode::monoid) {
          contexts_.emplace_back(std::nullopt);
        }
        for (index_t s = 0; s < S.size(); ++s) {
          contexts_.emplace_back(s);
        }
        std::map<std::vector<bool>, index_t> ids;
        right_class_.resize(S.size());
        for (index_t a = 0; a < S.size(); ++a) {
          std::vector<bool> sig;
          sig.reserve(contexts_.size());
          for (auto v : contexts_) {
            sig.push_back(in_[right(a, v)]);
          }
          right_class_[a]
              = ids.try_emplace(std::move(sig), static_cast<index_t>(ids.size()))
                    .first->second;
        }
      }

      index_t left(Context u, index_t x) const {
        return u ? S_.product(*u, x) : x;
      }
      index_t right(index_t x, Context v) const {
        return v ? S_.product(x, *v) : x;
      }

      Partition partition() const {
        std::map<std::vector<index_t>, index_t> ids;
        std::vector<index_t>                    label(S_.size());
        for (index_t x = 0; x < S_.size(); ++x) {
          std::vector<index_t> sig;
          sig.reserve(contexts_.size());
          for (auto u : contexts_) {
            sig.push_back(right_class_[left(u, x)]);
          }
          label[x] = ids.try_emplace(std::move(sig), static_cast<index_t>(ids.size()))
                         .first->second;
        }
        return Partition::from_labels(label);
      }

      // The first u with ux, uy in different right classes yields the
      // lexicographically least separating context.
      std::optional<SeparatingContext> separate(index_t x, index_t y) const {
        for (auto u : contexts_) {
          index_t const a = left(u, x), b = left(u, y);
          if (right_class_[a] == right_class_[b]) {
            continue;
          }
          for (auto v : contexts_) {
            bool const ina = in_[right(a, v)];
            if (ina != in_[right(b, v)]) {
              return SeparatingContext{x, y, u, v, ina};
            }
          }
        }
        return std::nullopt;
      }

     private:
      FiniteSemigroup const& S_;
      std::vector<bool>      in_;
      std::vector<Context>   contexts_;
      std::vector<index_t>   right_class_;
    };
  }  // namespace

  Congruence syntactic_congruence(FiniteSemigroup const&   S,
                                  std::span<index_t const> subset,
                                  ContextMode              mode) {
    return make_congruence(S, ContextTables(S, subset, mode).partition());
  }

  std::optional<SeparatingContext>
  first_separating_context(FiniteSemigroup const&   S,
                           std::span<index_t const> subset,
                           ContextMode              mode,
                           index_t                  x,
                           index_t                  y) {
    if (x >= S.size() || y >= S.size()) {
      throw IndexOutOfRange("first_separating_context: element out of range");
    }
    return ContextTables(S, subset, mode).separate(x, y);
  }

  DisjunctivityResult is_disjunctive(FiniteSemigroup const&   S,
                                     std::span<index_t const> subset,
                                     ContextMode              mode) {
    ContextTables const tables(S, subset, mode);
    Partition const     p = tables.partition();
    DisjunctivityResult result;
    if (!p.is_equality()) {
      for (index_t x = 0; x < S.size() && !result.merged; ++x) {
        for (index_t y = x + 1; y < S.size(); ++y) {
          if (p.related(x, y)) {
            result.merged = std::pair{x, y};
            break;
          }
        }
      }
      return result;
    }
    DisjunctiveCertificate cert;
    cert.subset.assign(subset.begin(), subset.end());
    std::sort(cert.subset.begin(), cert.subset.end());
    cert.subset.erase(std::unique(cert.subset.begin(), cert.subset.end()),
                      cert.subset.end());
    cert.mode = mode;
    cert.pairs.reserve(static_cast<std::size_t>(S.size()) * (S.size() - 1) / 2);
    for (index_t x = 0; x < S.size(); ++x) {
      for (index_t y = x + 1; y < S.size(); ++y) {
        cert.pairs.push_back(*tables.separate(x, y));
      }
    }
    result.disjunctive = true;
    result.certificate = std::move(cert);
    return result;
  }

  bool replay_certificate(FiniteSemigroup const&        S,
                          DisjunctiveCertificate const& cert) {
    std::vector<bool> in(S.size(), false);
    for (index_t d : cert.subset) {
      if (d >= S.size()) {
        return false;
      }
      in[d] = true;
    }
    std::size_t const n = S.size();
    if (cert.pairs.size() != n * (n - 1) / 2) {
      return false;
    }
    auto eval = [&](std::optional<index_t> u, index_t x, std::optional<index_t> v) {
      index_t r = u ? S.product(*u, x) : x;
      return v ? S.product(r, *v) : r;
    };
    std::size_t k = 0;
    for (index_t x = 0; x < S.size(); ++x) {
      for (index_t y = x + 1; y < S.size(); ++y, ++k) {
        auto const& c = cert.pairs[k];
        if (c.x != x || c.y != y || (c.u && *c.u >= S.size())
            || (c.v && *c.v >= S.size())) {
          return false;
        }
        if (cert.mode == ContextMode::semigroup && (!c.u || !c.v)) {
          return false;
        }
        if (in[eval(c.u, x, c.v)] != c.x_in_subset
            || in[eval(c.u, y, c.v)] != !c.x_in_subset) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<index_t> disjunctive_subset_additive(APlusBn const& A) {
    if (A.n < 2) {
      throw InvalidForN1("the additive disjunctive subset needs n >= 2");
    }
    std::vector<index_t> result{A.constant(BrandtElement::pair(1, 2))};
    for (index_t k = 1; k <= A.n; ++k) {
      for (index_t l = 1; l <= A.n; ++l) {
        result.push_back(A.singleton(BrandtElement::pair(k, l),
                                     BrandtElement::pair(1, 1)));
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  std::vector<index_t> disjunctive_subset_multiplicative(APlusBn const& A) {
    std::vector<index_t> result{A.nsupport(1, 1, identity_permutation(A.n))};
    for (index_t p = 1; p <= A.n; ++p) {
      for (index_t q = 1; q <= A.n; ++q) {
        result.push_back(A.constant(BrandtElement::pair(p, q)));
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  std::string to_string(Verdict v) {
    switch (v) {
      case Verdict::yes: return "yes";
      case Verdict::no: return "no";
      default: return "unknown";
    }
  }

}  // namespace synmon
