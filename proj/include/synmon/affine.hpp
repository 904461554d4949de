// Self-maps of B_n under pointwise addition and composition, and the
// affine near-semiring A+(B_n) generated by the affine maps.
//
// Maps act on the right: images[x] is the value xf, and compose(f, g) is
// "apply f, then g", so x(f o g) = (xf)g.

#ifndef SYNMON_AFFINE_HPP_
#define SYNMON_AFFINE_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "synmon/brandt.hpp"
#include "synmon/semigroup.hpp"

namespace synmon {

  //! A permutation of [n] stored as 0-based images: sigma[i] is the image
  //! of i + 1, minus one.  The product sigma * tau means "sigma, then tau".
  using Permutation = std::vector<index_t>;

  Permutation identity_permutation(index_t n);
  Permutation permutation_product(Permutation const& sigma,
                                  Permutation const& tau);
  Permutation permutation_inverse(Permutation const& sigma);
  //! All permutations of [n] in lexicographic order of their image arrays.
  std::vector<Permutation> all_permutations(index_t n);

  class MapOnBn {
   public:
    //! images must have n^2 + 1 encoded entries.
    MapOnBn(index_t n, std::vector<index_t> images);

    [[nodiscard]] index_t n() const noexcept {
      return n_;
    }
    [[nodiscard]] std::vector<index_t> const& images() const noexcept {
      return images_;
    }
    [[nodiscard]] index_t image(index_t code) const noexcept {
      return images_[code];
    }

    bool operator==(MapOnBn const&) const = default;

   private:
    index_t              n_;
    std::vector<index_t> images_;
  };

  struct MapOnBnHash {
    std::size_t operator()(MapOnBn const& f) const noexcept;
  };

  // Constructors for the named kinds of maps.
  MapOnBn constant_map(index_t n, BrandtElement c);
  MapOnBn singleton_map(index_t n, BrandtElement from, BrandtElement to);
  //! (p, q; sigma) sends (i, p) to (i sigma, q) and everything else to
  //! theta.
  MapOnBn nsupport_map(index_t n, index_t p, index_t q, Permutation const& sigma);
  MapOnBn identity_map(index_t n);

  namespace kind {
    struct Constant {
      BrandtElement c;
      bool          operator==(Constant const&) const = default;
    };
    struct SingletonSupport {
      BrandtElement from;
      BrandtElement to;
      bool          operator==(SingletonSupport const&) const = default;
    };
    struct NSupport {
      index_t     p;
      index_t     q;
      Permutation sigma;
      bool        operator==(NSupport const&) const = default;
    };
    struct Other {
      bool operator==(Other const&) const = default;
    };
  }  // namespace kind

  using MapKind = std::variant<kind::Constant,
                               kind::SingletonSupport,
                               kind::NSupport,
                               kind::Other>;

  //! Human-readable name: "xi(1,2)", "xi(theta)", "(1,2)->(2,1)",
  //! "(1,2;id)", "(1,1;[2,1])", or "other".
  std::string kind_label(MapKind const& k);

  BrandtElement apply(MapOnBn const& f, BrandtElement x);

  //! x(f + g) = xf + xg.  \throws DimensionMismatch.
  MapOnBn pointwise_add(MapOnBn const& f, MapOnBn const& g);

  //! x(f o g) = (xf)g.  \throws DimensionMismatch.
  MapOnBn compose(MapOnBn const& f, MapOnBn const& g);

  //! Arguments with a non-theta image, in encoding order.
  std::vector<BrandtElement> support(MapOnBn const& f);

  //! The unique matching kind.  For n = 1 the map (1, 1; id) is reported
  //! as NSupport even though its support is also a singleton.
  MapKind classify(MapOnBn const& f);

  struct ConstructionBudget {
    index_t       max_n                = 3;
    std::size_t   element_cap          = 100'000;
    std::uint64_t endomorphism_budget  = 10'000'000;
  };

  //! All additive endomorphisms of B_n, in lexicographic order of their
  //! image tables.  \throws BudgetExceeded.
  std::vector<MapOnBn> endomorphisms(index_t                   n,
                                     ConstructionBudget const& budget = {});

  //! All maps g + h with g an endomorphism and h constant, deduplicated,
  //! in lexicographic order of image tables.
  std::vector<MapOnBn> affine_maps(index_t                   n,
                                   ConstructionBudget const& budget = {});

  enum class Operation { add, compose };

  //! The least set containing gens and closed under op, generators first
  //! and then in discovery order.  \throws BudgetExceeded past cap.
  std::vector<MapOnBn> generate_closure(std::span<MapOnBn const> gens,
                                        Operation                op,
                                        std::size_t element_cap = 100'000);

  struct Census {
    std::size_t constants = 0;
    std::size_t singleton = 0;
    std::size_t nsupport  = 0;
    std::size_t other     = 0;
    [[nodiscard]] std::size_t total() const noexcept {
      return constants + singleton + nsupport + other;
    }
  };

  //! The affine near-semiring A+(B_n) with both semigroup reducts.
  //!
  //! Elements are in canonical order: constants by encoded value, then
  //! singleton-support maps by (k, l, p, q), then n-support maps by
  //! (p, q, sigma).  add_reduct and mul_reduct use this order; in
  //! mul_reduct the row element is applied first.
  struct APlusBn {
    index_t              n;
    std::vector<MapOnBn> elements;
    std::vector<MapKind> kinds;
    FiniteSemigroup      add_reduct;
    FiniteSemigroup      mul_reduct;
    std::vector<index_t> aff;  // indices of the affine maps
    Census               census;
    std::unordered_map<MapOnBn, index_t, MapOnBnHash> positions;

    //! \throws IndexOutOfRange if f is not an element.
    [[nodiscard]] index_t index_of(MapOnBn const& f) const;
    [[nodiscard]] index_t constant(BrandtElement c) const;
    [[nodiscard]] index_t singleton(BrandtElement from, BrandtElement to) const;
    [[nodiscard]] index_t nsupport(index_t p, index_t q, Permutation const& sigma) const;
    [[nodiscard]] std::string label(index_t x) const;
  };

  //! Closure of Aff(B_n) under +, checked against the classified
  //! enumeration (n^2 + 1 constants, n^4 singleton-support maps and
  //! n! n^2 n-support maps for n >= 2; 3 elements for n = 1).
  //!
  //! \throws BudgetExceeded if n > budget.max_n.
  //! \throws CensusMismatch if the closure disagrees with the enumeration
  //! or is not closed under composition.
  APlusBn construct_a_plus_bn(index_t n, ConstructionBudget const& budget = {});

  //! Expected size (n! + 1) n^2 + n^4 + 1 for n >= 2 and 3 for n = 1.
  std::size_t expected_a_plus_bn_size(index_t n);

}  // namespace synmon

#endif  // SYNMON_AFFINE_HPP_
