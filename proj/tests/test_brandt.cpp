#include "doctest.h"
#include "oracles.hpp"
#include "synmon/brandt.hpp"

using namespace synmon;
using E = BrandtElement;

TEST_CASE("brandt_add") {
  CHECK(brandt_add(2, E::pair(1, 2), E::pair(2, 1)) == E::pair(1, 1));
  CHECK(brandt_add(2, E::pair(1, 2), E::pair(1, 2)) == E::theta());
  CHECK(brandt_add(2, E::theta(), E::pair(2, 2)) == E::theta());
  CHECK(brandt_add(2, E::pair(2, 2), E::theta()) == E::theta());
  CHECK_THROWS_AS(brandt_add(2, E::pair(3, 1), E::pair(1, 1)), IndexOutOfRange);
  CHECK_THROWS_AS(brandt_add(2, E::pair(1, 1), E::pair(1, 0)), IndexOutOfRange);
}

TEST_CASE("encoding") {
  for (index_t n = 1; n <= 4; ++n) {
    for (index_t code = 0; code <= n * n; ++code) {
      CHECK(E::decode(n, code).encode(n) == code);
    }
    CHECK(E::theta().encode(n) == n * n);
    CHECK(E::pair(1, 2).valid_for(n) == (n >= 2));
  }
  CHECK(E::pair(2, 1).encode(3) == 3);
  CHECK(E::pair(2, 1).to_string() == "(2,1)");
  CHECK(E::theta().to_string() == "theta");
  CHECK_THROWS_AS(E::decode(2, 5), IndexOutOfRange);
}

TEST_CASE("brandt_semigroup") {
  auto const B1 = brandt_semigroup(1);
  CHECK(B1.size() == 2);
  REQUIRE(B1.identity());
  CHECK(B1.label(*B1.identity()) == "(1,1)");

  auto const B2 = brandt_semigroup(2);
  CHECK(B2.size() == 5);
  CHECK_FALSE(B2.identity());
  CHECK(oracle::identity(B2) == std::nullopt);

  for (index_t n = 1; n <= 4; ++n) {
    auto const B = brandt_semigroup(n);
    CHECK(B.size() == n * n + 1);
    CHECK(oracle::associative(B.table()));
    index_t const zero = n * n;
    CHECK(B.label(zero) == "theta");
    for (index_t x = 0; x < B.size(); ++x) {
      CHECK(B.product(zero, x) == zero);
      CHECK(B.product(x, zero) == zero);
      CHECK(B.product(x, zero) == brandt_add_code(n, x, zero));
      for (index_t y = 0; y < B.size(); ++y) {
        CHECK(B.product(x, y)
              == brandt_add(n, E::decode(n, x), E::decode(n, y)).encode(n));
      }
    }
  }
}

TEST_CASE("the inverse of (i,j) is (j,i)") {
  for (index_t n = 1; n <= 4; ++n) {
    auto const B = brandt_semigroup(n);
    for (index_t i = 1; i <= n; ++i) {
      for (index_t j = 1; j <= n; ++j) {
        index_t const a = E::pair(i, j).encode(n);
        std::vector<index_t> inverses;
        for (index_t x = 0; x < B.size(); ++x) {
          if (B.product(B.product(a, x), a) == a && B.product(B.product(x, a), x) == x) {
            inverses.push_back(x);
          }
        }
        CHECK(inverses == std::vector<index_t>{E::pair(j, i).encode(n)});
      }
    }
  }
}
