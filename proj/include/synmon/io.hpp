// JSON encodings of semigroups, automata, certificates and A+(B_n)
// bundles, plus whole-file helpers.  Every writer emits compact JSON with
// keys in a fixed order followed by a newline, so that reading and
// re-writing a document reproduces it byte for byte.

#ifndef SYNMON_IO_HPP_
#define SYNMON_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "synmon/affine.hpp"
#include "synmon/automata.hpp"
#include "synmon/semigroup.hpp"
#include "synmon/syntactic.hpp"

namespace synmon {

  //! {"size": k, "labels": [...], "table": [[...], ...]}; labels are
  //! omitted when the semigroup has none.
  std::string semigroup_to_json(FiniteSemigroup const& S);

  //! \throws ParseError for malformed JSON or a size that disagrees with
  //! the table, OutOfRangeEntry (also for negative entries), MalformedTable
  //! or NonAssociative.
  FiniteSemigroup semigroup_from_json(std::string_view text);

  //! {"states": k, "alphabet": [...], "initial": q, "finals": [...],
  //!  "delta": [[...], ...]}.
  std::string dfa_to_json(Dfa const& A);
  //! \throws ParseError.
  Dfa dfa_from_json(std::string_view text);

  //! {"subset": [...], "mode": "monoid", "pairs": [{"x", "y", "u", "v",
  //! "in_D": "x" | "y"}, ...]} with u, v = -1 for an empty side.
  std::string certificate_to_json(DisjunctiveCertificate const& cert);
  //! \throws ParseError.
  DisjunctiveCertificate certificate_from_json(std::string_view text);

  //! {"n", "elements": [{"kind": "constant", "c": "theta"}, ...],
  //!  "add_table", "mul_table", "aff"}.  Permutations are written 1-based.
  std::string bundle_to_json(APlusBn const& A);

  //! \throws Error if the file cannot be read.
  std::string read_file(std::filesystem::path const& path);
  //! \throws Error if the file cannot be written.
  void write_file(std::filesystem::path const& path, std::string_view contents);

}  // namespace synmon

#endif  // SYNMON_IO_HPP_
