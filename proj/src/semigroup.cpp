#include "synmon/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace synmon {

  FiniteSemigroup::FiniteSemigroup(index_t                  size,
                                   std::vector<index_t>     table,
                                   std::vector<std::string> labels)
      : size_(size), table_(std::move(table)), labels_(std::move(labels)) {
    for (index_t e = 0; e < size_; ++e) {
      bool ok = true;
      for (index_t x = 0; x < size_ && ok; ++x) {
        ok = product(e, x) == x && product(x, e) == x;
      }
      if (ok) {
        identity_ = e;
        break;
      }
    }
  }

  std::vector<std::vector<index_t>> FiniteSemigroup::table() const {
    std::vector<std::vector<index_t>> result(size_);
    for (index_t x = 0; x < size_; ++x) {
      auto r = row(x);
      result[x].assign(r.begin(), r.end());
    }
    return result;
  }

  std::string FiniteSemigroup::label(index_t x) const {
    if (x < labels_.size()) {
      return labels_[x];
    }
    return std::to_string(x);
  }

  FiniteSemigroup
  validate_semigroup(std::vector<std::vector<index_t>> const& table,
                     std::vector<std::string>                 labels) {
    std::size_t const n = table.size();
    if (n == 0) {
      throw MalformedTable("a semigroup needs at least one element");
    }
    if (!labels.empty() && labels.size() != n) {
      throw MalformedTable("expected " + std::to_string(n) + " labels, got "
                           + std::to_string(labels.size()));
    }
    std::vector<index_t> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) {
        throw MalformedTable("row " + std::to_string(i) + " has "
                             + std::to_string(table[i].size())
                             + " entries, expected " + std::to_string(n));
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (table[i][j] >= n) {
          throw OutOfRangeEntry(i, j, table[i][j]);
        }
        flat.push_back(table[i][j]);
      }
    }
    auto const size = static_cast<index_t>(n);
    auto       prod = [&](index_t a, index_t b) { return flat[a * n + b]; };
    for (index_t i = 0; i < size; ++i) {
      for (index_t j = 0; j < size; ++j) {
        index_t const ij = prod(i, j);
        for (index_t k = 0; k < size; ++k) {
          if (prod(ij, k) != prod(i, prod(j, k))) {
            throw NonAssociative(i, j, k);
          }
        }
      }
    }
    return FiniteSemigroup(size, std::move(flat), std::move(labels));
  }

  FiniteSemigroup adjoin_identity(FiniteSemigroup const& S) {
    if (S.identity()) {
      return S;
    }
    index_t const                     n = S.size();
    std::vector<std::vector<index_t>> table(n + 1,
                                            std::vector<index_t>(n + 1));
    for (index_t x = 0; x <= n; ++x) {
      for (index_t y = 0; y <= n; ++y) {
        if (x == n) {
          table[x][y] = y;
        } else if (y == n) {
          table[x][y] = x;
        } else {
          table[x][y] = S.product(x, y);
        }
      }
    }
    std::vector<std::string> labels;
    if (!S.labels().empty()) {
      labels = S.labels();
      labels.emplace_back("1");
    }
    return validate_semigroup(table, std::move(labels));
  }

  FiniteSemigroup subsemigroup(FiniteSemigroup const&      S,
                               std::vector<index_t> const& elements) {
    std::vector<std::int64_t> pos(S.size(), -1);
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (elements[i] >= S.size()) {
        throw IndexOutOfRange("element " + std::to_string(elements[i])
                              + " is not in the semigroup");
      }
      pos[elements[i]] = static_cast<std::int64_t>(i);
    }
    std::vector<std::vector<index_t>> table(elements.size());
    std::vector<std::string>          labels;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (index_t y : elements) {
        auto const p = pos[S.product(elements[i], y)];
        if (p < 0) {
          throw IncompatiblePartition("element set is not closed under "
                                      "multiplication");
        }
        table[i].push_back(static_cast<index_t>(p));
      }
      if (!S.labels().empty()) {
        labels.push_back(S.label(elements[i]));
      }
    }
    return validate_semigroup(table, std::move(labels));
  }

  ////////////////////////////////////////////////////////////////////////
  // Partition
  ////////////////////////////////////////////////////////////////////////

  Partition Partition::from_labels(std::span<index_t const> labels) {
    Partition                            p;
    std::unordered_map<index_t, index_t> renumber;
    p.block_.reserve(labels.size());
    for (index_t l : labels) {
      auto [it, inserted] = renumber.try_emplace(l, p.block_count_);
      if (inserted) {
        ++p.block_count_;
      }
      p.block_.push_back(it->second);
    }
    return p;
  }

  Partition Partition::equality(index_t size) {
    std::vector<index_t> l(size);
    std::iota(l.begin(), l.end(), 0);
    return from_labels(std::span<index_t const>(l));
  }

  Partition Partition::universal(index_t size) {
    std::vector<index_t> l(size, 0);
    return from_labels(std::span<index_t const>(l));
  }

  std::vector<std::vector<index_t>> Partition::blocks() const {
    std::vector<std::vector<index_t>> result(block_count_);
    for (index_t x = 0; x < size(); ++x) {
      result[block_[x]].push_back(x);
    }
    return result;
  }

  bool Partition::refines(Partition const& other) const {
    if (other.size() != size()) {
      return false;
    }
    std::vector<std::int64_t> image(block_count_, -1);
    for (index_t x = 0; x < size(); ++x) {
      auto& im = image[block_[x]];
      if (im < 0) {
        im = other.block(x);
      } else if (im != other.block(x)) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Congruences
  ////////////////////////////////////////////////////////////////////////

  bool is_compatible(FiniteSemigroup const& S, Partition const& p) {
    if (p.size() != S.size()) {
      return false;
    }
    // Compare every element against the first element of its block.
    std::vector<index_t> rep(p.block_count());
    for (index_t x = S.size(); x-- > 0;) {
      rep[p.block(x)] = x;
    }
    for (index_t x = 0; x < S.size(); ++x) {
      index_t const r = rep[p.block(x)];
      if (r == x) {
        continue;
      }
      for (index_t s = 0; s < S.size(); ++s) {
        if (p.block(S.product(x, s)) != p.block(S.product(r, s))
            || p.block(S.product(s, x)) != p.block(S.product(s, r))) {
          return false;
        }
      }
    }
    return true;
  }

  Congruence make_congruence(FiniteSemigroup const& S, Partition p) {
    if (p.size() != S.size()) {
      throw IncompatiblePartition("partition has "
                                  + std::to_string(p.size())
                                  + " points, semigroup has "
                                  + std::to_string(S.size()));
    }
    if (!is_compatible(S, p)) {
      throw IncompatiblePartition("partition is not compatible with the "
                                  "multiplication");
    }
    return Congruence(std::move(p));
  }

  namespace {
    struct UnionFind {
      explicit UnionFind(index_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }
      index_t find(index_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      bool unite(index_t x, index_t y) {
        x = find(x);
        y = find(y);
        if (x == y) {
          return false;
        }
        if (y < x) {
          std::swap(x, y);
        }
        parent[y] = x;
        return true;
      }
      std::vector<index_t> parent;
    };
  }  // namespace

  Congruence principal_congruence(FiniteSemigroup const& S,
                                  index_t                x,
                                  index_t                y) {
    if (x >= S.size() || y >= S.size()) {
      throw IndexOutOfRange("principal_congruence: element out of range");
    }
    UnionFind                               uf(S.size());
    std::vector<std::pair<index_t, index_t>> pending;
    if (uf.unite(x, y)) {
      pending.emplace_back(x, y);
    }
    // Every merged pair is translated on both sides; merges of translates
    // are themselves queued, so the result is closed under S^1 (.) S^1.
    while (!pending.empty()) {
      auto [a, b] = pending.back();
      pending.pop_back();
      for (index_t s = 0; s < S.size(); ++s) {
        index_t const as = S.product(a, s), bs = S.product(b, s);
        if (uf.unite(as, bs)) {
          pending.emplace_back(as, bs);
        }
        index_t const sa = S.product(s, a), sb = S.product(s, b);
        if (uf.unite(sa, sb)) {
          pending.emplace_back(sa, sb);
        }
      }
    }
    std::vector<index_t> roots(S.size());
    for (index_t z = 0; z < S.size(); ++z) {
      roots[z] = uf.find(z);
    }
    return make_congruence(S, Partition::from_labels(roots));
  }

  FiniteSemigroup quotient(FiniteSemigroup const& S, Partition const& p) {
    if (p.size() != S.size()) {
      throw IncompatiblePartition("partition size does not match");
    }
    index_t const                     k = p.block_count();
    std::vector<std::vector<index_t>> table(k, std::vector<index_t>(k));
    std::vector<std::vector<bool>>    seen(k, std::vector<bool>(k, false));
    for (index_t x = 0; x < S.size(); ++x) {
      for (index_t y = 0; y < S.size(); ++y) {
        index_t const bx = p.block(x), by = p.block(y);
        index_t const b  = p.block(S.product(x, y));
        if (!seen[bx][by]) {
          seen[bx][by]  = true;
          table[bx][by] = b;
        } else if (table[bx][by] != b) {
          throw IncompatiblePartition(
              "partition is not compatible with the multiplication at ("
              + std::to_string(x) + ", " + std::to_string(y) + ")");
        }
      }
    }
    std::vector<std::string> labels;
    if (!S.labels().empty()) {
      for (auto const& block : p.blocks()) {
        if (block.size() == 1) {
          labels.push_back(S.label(block[0]));
        } else {
          std::string l = "[";
          for (std::size_t i = 0; i < block.size(); ++i) {
            l += (i ? "," : "") + S.label(block[i]);
          }
          labels.push_back(l + "]");
        }
      }
    }
    return validate_semigroup(table, std::move(labels));
  }

  FiniteSemigroup quotient(FiniteSemigroup const& S, Congruence const& c) {
    return quotient(S, c.partition());
  }

  ////////////////////////////////////////////////////////////////////////
  // Aperiodicity
  ////////////////////////////////////////////////////////////////////////

  PowerCycle power_cycle(FiniteSemigroup const& S, index_t x) {
    if (x >= S.size()) {
      throw IndexOutOfRange("power_cycle: element out of range");
    }
    PowerCycle           c{x, 0, 0, {}};
    std::vector<index_t> first_seen(S.size(), 0);  // exponent, 0 = unseen
    index_t              power = x;
    for (index_t k = 1;; ++k) {
      if (first_seen[power] != 0) {
        c.index  = first_seen[power];
        c.period = k - first_seen[power];
        c.powers.push_back(power);
        return c;
      }
      first_seen[power] = k;
      c.powers.push_back(power);
      power = S.product(power, x);
    }
  }

  bool replay_power_cycle(FiniteSemigroup const& S, PowerCycle const& c) {
    if (c.element >= S.size() || c.index == 0 || c.period == 0
        || c.powers.size() != static_cast<std::size_t>(c.index) + c.period
        || c.powers[0] != c.element) {
      return false;
    }
    for (std::size_t k = 1; k < c.powers.size(); ++k) {
      if (c.powers[k] != S.product(c.powers[k - 1], c.element)) {
        return false;
      }
    }
    return c.powers.back() == c.powers[c.index - 1];
  }

  AperiodicityResult is_aperiodic(FiniteSemigroup const& S) {
    for (index_t x = 0; x < S.size(); ++x) {
      auto c = power_cycle(S, x);
      if (c.period > 1) {
        return {false, std::move(c)};
      }
    }
    return {true, std::nullopt};
  }

}  // namespace synmon
