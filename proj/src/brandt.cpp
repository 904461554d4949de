#include "synmon/brandt.hpp"

#include <vector>

namespace synmon {

  index_t BrandtElement::encode(index_t n) const {
    if (!valid_for(n)) {
      throw IndexOutOfRange(to_string() + " is not an element of B_"
                            + std::to_string(n));
    }
    return is_theta() ? n * n : (i_ - 1) * n + (j_ - 1);
  }

  BrandtElement BrandtElement::decode(index_t n, index_t code) {
    if (code > n * n) {
      throw IndexOutOfRange("code " + std::to_string(code)
                            + " is not an element of B_" + std::to_string(n));
    }
    if (code == n * n) {
      return theta();
    }
    return pair(code / n + 1, code % n + 1);
  }

  std::string BrandtElement::to_string() const {
    if (is_theta()) {
      return "theta";
    }
    return "(" + std::to_string(i_) + "," + std::to_string(j_) + ")";
  }

  BrandtElement brandt_add(index_t n, BrandtElement a, BrandtElement b) {
    if (!a.valid_for(n) || !b.valid_for(n)) {
      throw IndexOutOfRange("brandt_add: argument is not an element of B_"
                            + std::to_string(n));
    }
    if (a.is_theta() || b.is_theta() || a.j() != b.i()) {
      return BrandtElement::theta();
    }
    return BrandtElement::pair(a.i(), b.j());
  }

  FiniteSemigroup brandt_semigroup(index_t n) {
    if (n == 0) {
      throw IndexOutOfRange("B_n needs n >= 1");
    }
    index_t const                     size = n * n + 1;
    std::vector<std::vector<index_t>> table(size, std::vector<index_t>(size));
    std::vector<std::string>          labels;
    for (index_t a = 0; a < size; ++a) {
      for (index_t b = 0; b < size; ++b) {
        table[a][b] = brandt_add_code(n, a, b);
      }
      labels.push_back(BrandtElement::decode(n, a).to_string());
    }
    return validate_semigroup(table, std::move(labels));
  }

}  // namespace synmon
