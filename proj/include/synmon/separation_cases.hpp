// Replays of the explicit separating contexts for the disjunctive subsets
// P of A+(B_n)+ and D of A+(B_n)o.  Every pair of distinct elements is
// oriented by the kinds of its members, the prescribed context is built
// from the parameters of those kinds, and the resulting products are
// compared with their closed forms and with membership in the subset.

#ifndef SYNMON_SEPARATION_CASES_HPP_
#define SYNMON_SEPARATION_CASES_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "synmon/affine.hpp"

namespace synmon {

  struct SeparationReplay {
    std::size_t              instances = 0;  // contexts evaluated
    std::size_t              pairs     = 0;  // unordered pairs covered
    std::vector<std::string> failures;

    [[nodiscard]] bool passed() const noexcept {
      return failures.empty();
    }
  };

  //! Contexts u + x + v in the additive reduct against
  //! P = disjunctive_subset_additive(A).  \throws InvalidForN1.
  SeparationReplay replay_additive_separations(APlusBn const& A);

  //! Contexts h f h' in the multiplicative reduct against
  //! D = disjunctive_subset_multiplicative(A).
  SeparationReplay replay_multiplicative_separations(APlusBn const& A);

}  // namespace synmon

#endif  // SYNMON_SEPARATION_CASES_HPP_
