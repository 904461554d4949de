// Finite semigroups given by Cayley tables, together with partitions,
// congruences, quotients, Green's relations, aperiodicity and isomorphism
// search.
//
// Elements are dense indices 0, ..., size() - 1.  The table entry in row i
// and column j is the index of the product x_i x_j.

#ifndef SYNMON_SEMIGROUP_HPP_
#define SYNMON_SEMIGROUP_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "synmon/errors.hpp"

namespace synmon {

  class FiniteSemigroup {
   public:
    FiniteSemigroup(FiniteSemigroup const&)            = default;
    FiniteSemigroup(FiniteSemigroup&&)                 = default;
    FiniteSemigroup& operator=(FiniteSemigroup const&) = default;
    FiniteSemigroup& operator=(FiniteSemigroup&&)      = default;

    [[nodiscard]] index_t size() const noexcept {
      return size_;
    }

    [[nodiscard]] index_t product(index_t x, index_t y) const noexcept {
      return table_[static_cast<std::size_t>(x) * size_ + y];
    }

    //! Row x of the Cayley table, i.e. all products x * y.
    [[nodiscard]] std::span<index_t const> row(index_t x) const noexcept {
      return {table_.data() + static_cast<std::size_t>(x) * size_, size_};
    }

    [[nodiscard]] std::vector<std::vector<index_t>> table() const;

    //! Labels are empty when the semigroup was built without them.
    [[nodiscard]] std::vector<std::string> const& labels() const noexcept {
      return labels_;
    }

    //! The label of x, or its index written in decimal.
    [[nodiscard]] std::string label(index_t x) const;

    [[nodiscard]] std::optional<index_t> identity() const noexcept {
      return identity_;
    }

    [[nodiscard]] bool is_idempotent(index_t x) const noexcept {
      return product(x, x) == x;
    }

    bool operator==(FiniteSemigroup const&) const = default;

   private:
    FiniteSemigroup(index_t                  size,
                    std::vector<index_t>     table,
                    std::vector<std::string> labels);

    friend FiniteSemigroup
    validate_semigroup(std::vector<std::vector<index_t>> const&,
                       std::vector<std::string>);

    index_t                  size_;
    std::vector<index_t>     table_;
    std::vector<std::string> labels_;
    std::optional<index_t>   identity_;
  };

  //! Checks shape, range and associativity of a Cayley table and records
  //! the identity element if there is one.
  //!
  //! \throws MalformedTable if the table is empty or not square, or the
  //! number of labels is neither 0 nor the size.
  //! \throws OutOfRangeEntry for an entry outside [0, size).
  //! \throws NonAssociative with the first failing triple in lexicographic
  //! order.
  FiniteSemigroup validate_semigroup(
      std::vector<std::vector<index_t>> const& table,
      std::vector<std::string>                 labels = {});

  //! S itself if it has an identity, otherwise S with a fresh identity
  //! appended as the last element (labelled "1").
  FiniteSemigroup adjoin_identity(FiniteSemigroup const& S);

  //! The subsemigroup on the given elements, relabelled 0, 1, ... in the
  //! order given.  Throws IncompatiblePartition if the set is not closed.
  FiniteSemigroup subsemigroup(FiniteSemigroup const&     S,
                               std::vector<index_t> const& elements);

  ////////////////////////////////////////////////////////////////////////
  // Partitions and congruences
  ////////////////////////////////////////////////////////////////////////

  //! An equivalence relation on [0, size) stored as block ids.  Block ids
  //! are normalised so that they appear in increasing order of the first
  //! element of each block.
  class Partition {
   public:
    Partition() = default;

    //! Builds a partition from arbitrary block labels.
    static Partition from_labels(std::span<index_t const> labels);
    template <typename T>
    static Partition from_labels(std::vector<T> const& labels) {
      std::vector<index_t> l(labels.begin(), labels.end());
      return from_labels(std::span<index_t const>(l));
    }

    static Partition equality(index_t size);
    static Partition universal(index_t size);

    [[nodiscard]] index_t size() const noexcept {
      return static_cast<index_t>(block_.size());
    }
    [[nodiscard]] index_t block_count() const noexcept {
      return block_count_;
    }
    [[nodiscard]] index_t block(index_t x) const noexcept {
      return block_[x];
    }
    [[nodiscard]] std::vector<index_t> const& block_ids() const noexcept {
      return block_;
    }
    [[nodiscard]] bool related(index_t x, index_t y) const noexcept {
      return block_[x] == block_[y];
    }
    [[nodiscard]] bool is_equality() const noexcept {
      return block_count_ == size();
    }
    [[nodiscard]] bool is_universal() const noexcept {
      return block_count_ <= 1;
    }

    //! The blocks as sorted vectors, in block-id order.
    [[nodiscard]] std::vector<std::vector<index_t>> blocks() const;

    //! True if every block of *this lies inside a block of other.
    [[nodiscard]] bool refines(Partition const& other) const;

    bool operator==(Partition const&) const = default;

   private:
    std::vector<index_t> block_;
    index_t              block_count_ = 0;
  };

  //! A partition known to be compatible with the multiplication of the
  //! semigroup it was built for.
  class Congruence {
   public:
    [[nodiscard]] Partition const& partition() const noexcept {
      return partition_;
    }
    [[nodiscard]] index_t block_count() const noexcept {
      return partition_.block_count();
    }
    [[nodiscard]] index_t block(index_t x) const noexcept {
      return partition_.block(x);
    }
    [[nodiscard]] bool related(index_t x, index_t y) const noexcept {
      return partition_.related(x, y);
    }
    [[nodiscard]] bool is_equality() const noexcept {
      return partition_.is_equality();
    }
    [[nodiscard]] bool is_universal() const noexcept {
      return partition_.is_universal();
    }

    bool operator==(Congruence const&) const = default;

   private:
    explicit Congruence(Partition p) : partition_(std::move(p)) {}
    friend Congruence make_congruence(FiniteSemigroup const&, Partition);
    Partition partition_;
  };

  //! True if x ~ y implies sx ~ sy and xs ~ ys for all s.
  bool is_compatible(FiniteSemigroup const& S, Partition const& p);

  //! \throws IncompatiblePartition if p is not a congruence of S.
  Congruence make_congruence(FiniteSemigroup const& S, Partition p);

  //! The least congruence relating x and y.
  Congruence principal_congruence(FiniteSemigroup const& S,
                                  index_t                x,
                                  index_t                y);

  //! The quotient semigroup whose elements are the blocks of p in block-id
  //! order.  \throws IncompatiblePartition.
  FiniteSemigroup quotient(FiniteSemigroup const& S, Partition const& p);
  FiniteSemigroup quotient(FiniteSemigroup const& S, Congruence const& c);

  ////////////////////////////////////////////////////////////////////////
  // Aperiodicity
  ////////////////////////////////////////////////////////////////////////

  //! The monogenic subsemigroup of x: powers x^1, ..., x^(index + period)
  //! with x^(index + period) = x^index and index, period minimal.
  struct PowerCycle {
    index_t              element;
    index_t              index;
    index_t              period;
    std::vector<index_t> powers;  // powers[k] = x^(k + 1)
  };

  PowerCycle power_cycle(FiniteSemigroup const& S, index_t x);

  //! True if the recorded powers really are successive powers of the
  //! element and close up with the recorded index and period.
  bool replay_power_cycle(FiniteSemigroup const& S, PowerCycle const& c);

  struct AperiodicityResult {
    bool                      aperiodic;
    std::optional<PowerCycle> witness;  // first element with period > 1
  };

  AperiodicityResult is_aperiodic(FiniteSemigroup const& S);

  ////////////////////////////////////////////////////////////////////////
  // Green's relations
  ////////////////////////////////////////////////////////////////////////

  struct GreenClasses {
    Partition R;
    Partition L;
    Partition J;
    Partition H;
  };

  //! Green's relations with respect to the principal ideals xS^1, S^1x and
  //! S^1xS^1.
  GreenClasses green_classes(FiniteSemigroup const& S);
  bool         is_j_trivial(FiniteSemigroup const& S);

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism
  ////////////////////////////////////////////////////////////////////////

  struct IsoWitness {
    std::vector<index_t> mapping;  // mapping[x] is the image of x
  };

  //! True if mapping is a bijection S -> T with
  //! mapping(xy) = mapping(x)mapping(y).
  bool is_isomorphism(FiniteSemigroup const&      S,
                      FiniteSemigroup const&      T,
                      std::vector<index_t> const& mapping);

  //! Profile-pruned backtracking over images of a generating set of S.
  //! Returns std::nullopt if S and T are not isomorphic.
  //!
  //! \throws BudgetExceeded when more than node_budget partial assignments
  //! are tried.
  std::optional<IsoWitness>
  find_isomorphism(FiniteSemigroup const& S,
                   FiniteSemigroup const& T,
                   std::uint64_t          node_budget = 10'000'000);

}  // namespace synmon

#endif  // SYNMON_SEMIGROUP_HPP_
