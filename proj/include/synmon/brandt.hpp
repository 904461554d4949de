// Brandt semigroups B_n = ([n] x [n]) U {theta} under
//   (i, j) + (k, l) = (i, l) if j = k, theta otherwise,
// with theta a two-sided zero.
//
// Elements are encoded densely: (i, j) -> (i - 1) n + (j - 1), theta -> n^2.

#ifndef SYNMON_BRANDT_HPP_
#define SYNMON_BRANDT_HPP_

#include <string>

#include "synmon/errors.hpp"
#include "synmon/semigroup.hpp"

namespace synmon {

  class BrandtElement {
   public:
    //! The pair (i, j); indices are 1-based.
    static constexpr BrandtElement pair(index_t i, index_t j) noexcept {
      return BrandtElement(i, j);
    }
    static constexpr BrandtElement theta() noexcept {
      return BrandtElement(0, 0);
    }

    [[nodiscard]] constexpr bool is_theta() const noexcept {
      return i_ == 0;
    }
    [[nodiscard]] constexpr index_t i() const noexcept {
      return i_;
    }
    [[nodiscard]] constexpr index_t j() const noexcept {
      return j_;
    }

    //! True if this is theta or a pair with both indices in [1, n].
    [[nodiscard]] constexpr bool valid_for(index_t n) const noexcept {
      return is_theta() || (i_ >= 1 && i_ <= n && j_ >= 1 && j_ <= n);
    }

    [[nodiscard]] index_t encode(index_t n) const;
    static BrandtElement  decode(index_t n, index_t code);

    //! "(i,j)" or "theta".
    [[nodiscard]] std::string to_string() const;

    constexpr bool operator==(BrandtElement const&) const = default;

   private:
    constexpr BrandtElement(index_t i, index_t j) noexcept : i_(i), j_(j) {}
    index_t i_;
    index_t j_;
  };

  //! \throws IndexOutOfRange if either argument is not an element of B_n.
  BrandtElement brandt_add(index_t n, BrandtElement a, BrandtElement b);

  //! The sum of two encoded elements of B_n; no range checks.
  inline index_t brandt_add_code(index_t n, index_t a, index_t b) noexcept {
    index_t const zero = n * n;
    if (a == zero || b == zero || a % n != b / n) {
      return zero;
    }
    return (a / n) * n + b % n;
  }

  //! B_n as a FiniteSemigroup with labels "(i,j)" and "theta".
  FiniteSemigroup brandt_semigroup(index_t n);

}  // namespace synmon

#endif  // SYNMON_BRANDT_HPP_
