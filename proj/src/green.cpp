#include <vector>

#include "synmon/semigroup.hpp"

namespace synmon {

  namespace {
    using Ideals = std::vector<std::vector<bool>>;

    // Two elements are related when each lies in the other's ideal; the
    // block label is the least such element.
    Partition mutual(Ideals const& ideal) {
      auto const           n = static_cast<index_t>(ideal.size());
      std::vector<index_t> label(n);
      for (index_t x = 0; x < n; ++x) {
        label[x] = x;
        for (index_t y = 0; y < x; ++y) {
          if (ideal[x][y] && ideal[y][x]) {
            label[x] = label[y];
            break;
          }
        }
      }
      return Partition::from_labels(label);
    }
  }  // namespace

  GreenClasses green_classes(FiniteSemigroup const& S) {
    index_t const n = S.size();
    Ideals        right(n, std::vector<bool>(n, false));
    Ideals        left  = right;
    Ideals        twoside = right;
    for (index_t x = 0; x < n; ++x) {
      right[x][x] = left[x][x] = twoside[x][x] = true;
      for (index_t s = 0; s < n; ++s) {
        index_t const xs = S.product(x, s), sx = S.product(s, x);
        right[x][xs] = twoside[x][xs] = true;
        left[x][sx] = twoside[x][sx] = true;
        for (index_t t = 0; t < n; ++t) {
          twoside[x][S.product(sx, t)] = true;
        }
      }
    }
    GreenClasses g{mutual(right), mutual(left), mutual(twoside), {}};
    std::vector<index_t> h(n);
    for (index_t x = 0; x < n; ++x) {
      h[x] = g.R.block(x) * n + g.L.block(x);
    }
    g.H = Partition::from_labels(h);
    return g;
  }

  bool is_j_trivial(FiniteSemigroup const& S) {
    return green_classes(S).J.is_equality();
  }

}  // namespace synmon
