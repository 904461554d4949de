// Syntactic congruences of subsets of finite semigroups, disjunctivity
// certificates, and the search for a disjunctive subset.

#ifndef SYNMON_SYNTACTIC_HPP_
#define SYNMON_SYNTACTIC_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "synmon/affine.hpp"
#include "synmon/semigroup.hpp"

namespace synmon {

  //! Which contexts (u, v) are used in x ~ y iff (uxv in D <=> uyv in D).
  //!
  //! semigroup: u and v range over S.
  //! monoid:    u and v range over S^1, so either side may be empty.
  enum class ContextMode { semigroup, monoid };

  std::string                to_string(ContextMode mode);
  ContextMode                context_mode_from_string(std::string const& s);

  //! A context (u, v) separating x from y; an empty optional is the empty
  //! side of the context.
  struct SeparatingContext {
    index_t                x;
    index_t                y;
    std::optional<index_t> u;
    std::optional<index_t> v;
    bool                   x_in_subset;  // uxv is in D (otherwise uyv is)

    bool operator==(SeparatingContext const&) const = default;
  };

  //! One separating context for every pair x < y, in lexicographic order
  //! of (x, y).
  struct DisjunctiveCertificate {
    std::vector<index_t>           subset;
    ContextMode                    mode = ContextMode::monoid;
    std::vector<SeparatingContext> pairs;

    bool operator==(DisjunctiveCertificate const&) const = default;
  };

  //! x ~ y iff every context of the given mode puts uxv and uyv on the same
  //! side of the subset.  \throws IndexOutOfRange for a bad subset index.
  Congruence syntactic_congruence(FiniteSemigroup const&   S,
                                  std::span<index_t const> subset,
                                  ContextMode mode = ContextMode::monoid);

  //! The least context (u ascending, then v ascending, empty sides first)
  //! separating x and y, or nothing if x and y are syntactically equivalent.
  std::optional<SeparatingContext>
  first_separating_context(FiniteSemigroup const&   S,
                           std::span<index_t const> subset,
                           ContextMode              mode,
                           index_t                  x,
                           index_t                  y);

  struct DisjunctivityResult {
    bool                                     disjunctive = false;
    std::optional<DisjunctiveCertificate>    certificate;
    std::optional<std::pair<index_t, index_t>> merged;  // first inseparable pair
  };

  DisjunctivityResult is_disjunctive(FiniteSemigroup const&   S,
                                     std::span<index_t const> subset,
                                     ContextMode mode = ContextMode::monoid);

  //! Re-checks a certificate against the Cayley table: every pair x < y
  //! appears exactly once and each context separates its pair as claimed.
  bool replay_certificate(FiniteSemigroup const&        S,
                          DisjunctiveCertificate const& cert);

  //! { xi(1,2) } U { (k,l)->(1,1) : k, l in [n] }, a disjunctive subset of
  //! the additive reduct.  \throws InvalidForN1.
  std::vector<index_t> disjunctive_subset_additive(APlusBn const& A);

  //! { (1,1;id) } U { xi(p,q) : p, q in [n] }, a disjunctive subset of the
  //! multiplicative reduct.
  std::vector<index_t> disjunctive_subset_multiplicative(APlusBn const& A);

  enum class Verdict { yes, no, unknown };
  std::string to_string(Verdict v);

  struct DecideOptions {
    std::uint64_t node_budget          = 10'000'000;
    ContextMode   mode                 = ContextMode::monoid;
    index_t       exhaustive_threshold = 20;
  };

  struct Decision {
    Verdict                               verdict = Verdict::unknown;
    std::optional<std::vector<index_t>>   subset;
    std::optional<DisjunctiveCertificate> certificate;
    std::uint64_t                         nodes = 0;
    std::size_t                           atoms = 0;
  };

  //! The minimal nontrivial congruences of S, each as a principal
  //! congruence, ordered by their first generating pair.
  std::vector<Congruence> congruence_atoms(FiniteSemigroup const& S);

  //! Searches for a disjunctive subset.  A subset is disjunctive (with
  //! monoid contexts) iff it splits a class of every atom, so the search
  //! is a backtracking over memberships pruned by the atoms; when the node
  //! budget runs out and |S| <= exhaustive_threshold it falls back to
  //! enumerating all subsets.  On yes the certificate has been replayed.
  Decision decide_syntactic(FiniteSemigroup const& S, DecideOptions const& opts = {});

}  // namespace synmon

#endif  // SYNMON_SYNTACTIC_HPP_
