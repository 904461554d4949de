// Exception hierarchy shared by every synmon module.

#ifndef SYNMON_ERRORS_HPP_
#define SYNMON_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace synmon {

  using index_t = std::uint32_t;

  //! Base class of all errors thrown by synmon.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! A Cayley table that is not square, or has the wrong number of labels.
  class MalformedTable : public Error {
   public:
    using Error::Error;
  };

  class OutOfRangeEntry : public Error {
   public:
    OutOfRangeEntry(std::size_t row, std::size_t col, std::int64_t value)
        : Error("table entry [" + std::to_string(row) + "]["
                + std::to_string(col) + "] = " + std::to_string(value)
                + " is out of range"),
          row(row),
          col(col),
          value(value) {}
    std::size_t  row;
    std::size_t  col;
    std::int64_t value;
  };

  //! Witness triple (i, j, k) with (ij)k != i(jk).
  class NonAssociative : public Error {
   public:
    NonAssociative(index_t i, index_t j, index_t k)
        : Error("table is not associative at (" + std::to_string(i) + ", "
                + std::to_string(j) + ", " + std::to_string(k) + ")"),
          i(i),
          j(j),
          k(k) {}
    index_t i;
    index_t j;
    index_t k;
  };

  //! A partition that is not compatible with the multiplication.
  class IncompatiblePartition : public Error {
   public:
    using Error::Error;
  };

  class IndexOutOfRange : public Error {
   public:
    using Error::Error;
  };

  class DimensionMismatch : public Error {
   public:
    using Error::Error;
  };

  //! A configurable size or search budget was exceeded.
  class BudgetExceeded : public Error {
   public:
    using Error::Error;
  };

  //! The generated closure disagrees with the classified enumeration.
  class CensusMismatch : public Error {
   public:
    using Error::Error;
  };

  class InvalidForN1 : public Error {
   public:
    using Error::Error;
  };

  class UnknownSymbol : public Error {
   public:
    using Error::Error;
  };

  class AlphabetMismatch : public Error {
   public:
    using Error::Error;
  };

  //! Malformed JSON input, star-free expression or command argument.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

}  // namespace synmon

#endif  // SYNMON_ERRORS_HPP_
