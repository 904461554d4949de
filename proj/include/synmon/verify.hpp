// The verification suite: every structural fact about A+(B_n) and the
// automata attached to it, run as named checks with timings and optional
// artifacts (Cayley tables, bundles and certificates) written to disk.

#ifndef SYNMON_VERIFY_HPP_
#define SYNMON_VERIFY_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "synmon/semigroup.hpp"

namespace synmon {

  //! Star-free expressions for the languages of contains_b_without_c_dfa()
  //! and ends_with_a_then_bs_dfa().
  inline constexpr std::string_view contains_b_without_c_expr
      = "(0^c c 0^c)^c b (0^c c 0^c)^c";
  inline constexpr std::string_view ends_with_a_then_bs_expr = "0^c a (0^c (a+c) 0^c)^c";

  //! The Cayley tables of the transition monoids of the two automata over
  //! {a, b, c}, indexed by symbol.
  FiniteSemigroup contains_b_without_c_table();
  FiniteSemigroup ends_with_a_then_bs_table();

  struct CheckRecord {
    std::string              name;
    std::string              anchor;  // what the check establishes
    bool                     passed = false;
    double                   elapsed_ms = 0;
    std::string              detail;
    std::vector<std::string> artifacts;
  };

  struct VerificationReport {
    index_t                  n = 0;
    std::vector<CheckRecord> checks;

    [[nodiscard]] bool passed() const;
  };

  //! Runs every check for A+(B_n), 1 <= n <= 3.  A failing or throwing
  //! check is recorded and the remaining checks still run.
  //! \throws BudgetExceeded if n is outside [1, 3].
  VerificationReport
  run_verification_suite(index_t                                    n,
                         std::optional<std::filesystem::path> const& artifact_dir = {});

  std::string report_to_text(VerificationReport const& report);
  std::string report_to_json(VerificationReport const& report);

}  // namespace synmon

#endif  // SYNMON_VERIFY_HPP_
