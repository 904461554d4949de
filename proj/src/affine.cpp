#include "synmon/affine.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace synmon {

  ////////////////////////////////////////////////////////////////////////
  // Permutations
  ////////////////////////////////////////////////////////////////////////

  Permutation identity_permutation(index_t n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
  }

  Permutation permutation_product(Permutation const& sigma,
                                  Permutation const& tau) {
    if (sigma.size() != tau.size()) {
      throw DimensionMismatch("permutations of different degrees");
    }
    Permutation result(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      result[i] = tau[sigma[i]];
    }
    return result;
  }

  Permutation permutation_inverse(Permutation const& sigma) {
    Permutation result(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      result[sigma[i]] = static_cast<index_t>(i);
    }
    return result;
  }

  std::vector<Permutation> all_permutations(index_t n) {
    std::vector<Permutation> result;
    Permutation              p = identity_permutation(n);
    do {
      result.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // MapOnBn
  ////////////////////////////////////////////////////////////////////////

  MapOnBn::MapOnBn(index_t n, std::vector<index_t> images)
      : n_(n), images_(std::move(images)) {
    if (n_ == 0) {
      throw IndexOutOfRange("B_n needs n >= 1");
    }
    if (images_.size() != static_cast<std::size_t>(n_) * n_ + 1) {
      throw DimensionMismatch("a map on B_" + std::to_string(n_) + " needs "
                              + std::to_string(n_ * n_ + 1) + " images, got "
                              + std::to_string(images_.size()));
    }
    for (index_t v : images_) {
      if (v > n_ * n_) {
        throw IndexOutOfRange("image code " + std::to_string(v)
                              + " is not an element of B_"
                              + std::to_string(n_));
      }
    }
  }

  std::size_t MapOnBnHash::operator()(MapOnBn const& f) const noexcept {
    std::size_t h = f.n();
    for (index_t v : f.images()) {
      h = h * 1'000'003u + v;
    }
    return h;
  }

  MapOnBn constant_map(index_t n, BrandtElement c) {
    return MapOnBn(n, std::vector<index_t>(n * n + 1, c.encode(n)));
  }

  MapOnBn singleton_map(index_t n, BrandtElement from, BrandtElement to) {
    if (from.is_theta() || to.is_theta()) {
      throw IndexOutOfRange("singleton-support maps send a pair to a pair");
    }
    std::vector<index_t> images(n * n + 1, n * n);
    images[from.encode(n)] = to.encode(n);
    return MapOnBn(n, std::move(images));
  }

  MapOnBn nsupport_map(index_t n, index_t p, index_t q, Permutation const& sigma) {
    if (sigma.size() != n) {
      throw DimensionMismatch("permutation degree differs from n");
    }
    std::vector<index_t> images(n * n + 1, n * n);
    for (index_t i = 1; i <= n; ++i) {
      images[BrandtElement::pair(i, p).encode(n)]
          = BrandtElement::pair(sigma[i - 1] + 1, q).encode(n);
    }
    return MapOnBn(n, std::move(images));
  }

  MapOnBn identity_map(index_t n) {
    std::vector<index_t> images(n * n + 1);
    std::iota(images.begin(), images.end(), 0);
    return MapOnBn(n, std::move(images));
  }

  std::string kind_label(MapKind const& k) {
    struct Visitor {
      std::string operator()(kind::Constant const& c) const {
        return "xi" + (c.c.is_theta() ? "(theta)" : c.c.to_string());
      }
      std::string operator()(kind::SingletonSupport const& s) const {
        return s.from.to_string() + "->" + s.to.to_string();
      }
      std::string operator()(kind::NSupport const& s) const {
        std::string perm;
        if (s.sigma == identity_permutation(static_cast<index_t>(s.sigma.size()))) {
          perm = "id";
        } else {
          perm = "[";
          for (std::size_t i = 0; i < s.sigma.size(); ++i) {
            perm += (i ? "," : "") + std::to_string(s.sigma[i] + 1);
          }
          perm += "]";
        }
        return "(" + std::to_string(s.p) + "," + std::to_string(s.q) + ";"
               + perm + ")";
      }
      std::string operator()(kind::Other const&) const {
        return "other";
      }
    };
    return std::visit(Visitor{}, k);
  }

  BrandtElement apply(MapOnBn const& f, BrandtElement x) {
    return BrandtElement::decode(f.n(), f.image(x.encode(f.n())));
  }

  MapOnBn pointwise_add(MapOnBn const& f, MapOnBn const& g) {
    if (f.n() != g.n()) {
      throw DimensionMismatch("pointwise_add: maps on different B_n");
    }
    index_t const        n = f.n();
    std::vector<index_t> images(n * n + 1);
    for (index_t x = 0; x <= n * n; ++x) {
      images[x] = brandt_add_code(n, f.image(x), g.image(x));
    }
    return MapOnBn(n, std::move(images));
  }

  MapOnBn compose(MapOnBn const& f, MapOnBn const& g) {
    if (f.n() != g.n()) {
      throw DimensionMismatch("compose: maps on different B_n");
    }
    index_t const        n = f.n();
    std::vector<index_t> images(n * n + 1);
    for (index_t x = 0; x <= n * n; ++x) {
      images[x] = g.image(f.image(x));
    }
    return MapOnBn(n, std::move(images));
  }

  std::vector<BrandtElement> support(MapOnBn const& f) {
    index_t const              n = f.n();
    std::vector<BrandtElement> result;
    for (index_t x = 0; x <= n * n; ++x) {
      if (f.image(x) != n * n) {
        result.push_back(BrandtElement::decode(n, x));
      }
    }
    return result;
  }

  MapKind classify(MapOnBn const& f) {
    index_t const n    = f.n();
    auto const&   im   = f.images();
    if (std::all_of(im.begin(), im.end(), [&](index_t v) { return v == im[0]; })) {
      return kind::Constant{BrandtElement::decode(n, im[0])};
    }
    auto const supp = support(f);
    if (supp.size() == n && !supp[0].is_theta()) {
      // Candidate (p, q; sigma): arguments (i, p), images (i sigma, q).
      index_t const p = supp[0].j();
      index_t const q = apply(f, supp[0]).j();
      Permutation   sigma(n);
      std::vector<bool> hit(n, false);
      bool              ok = true;
      for (index_t i = 1; i <= n && ok; ++i) {
        auto const y = apply(f, BrandtElement::pair(i, p));
        ok = !y.is_theta() && y.j() == q && !hit[y.i() - 1];
        if (ok) {
          hit[y.i() - 1] = true;
          sigma[i - 1]   = y.i() - 1;
        }
      }
      if (ok) {
        return kind::NSupport{p, q, std::move(sigma)};
      }
    }
    if (supp.size() == 1 && !supp[0].is_theta()) {
      return kind::SingletonSupport{supp[0], apply(f, supp[0])};
    }
    return kind::Other{};
  }

  ////////////////////////////////////////////////////////////////////////
  // Endomorphisms and affine maps
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void sort_by_images(std::vector<MapOnBn>& maps) {
      std::sort(maps.begin(), maps.end(), [](auto const& a, auto const& b) {
        return a.images() < b.images();
      });
    }
  }  // namespace

  std::vector<MapOnBn> endomorphisms(index_t n, ConstructionBudget const& budget) {
    if (n == 0) {
      throw IndexOutOfRange("B_n needs n >= 1");
    }
    if (n > budget.max_n) {
      throw BudgetExceeded("endomorphisms: n = " + std::to_string(n)
                           + " exceeds the budget max_n = "
                           + std::to_string(budget.max_n));
    }
    index_t const size = n * n + 1;
    index_t const zero = n * n;

    // The cyclic generators (1,2), (2,3), ..., (n,1).
    std::vector<index_t> gens;
    for (index_t i = 1; i <= n; ++i) {
      index_t const code = BrandtElement::pair(i, i % n + 1).encode(n);
      if (std::find(gens.begin(), gens.end(), code) == gens.end()) {
        gens.push_back(code);
      }
    }
    // Breadth-first closure recording element = parent + generator.
    struct Step {
      index_t element, parent, generator;
    };
    std::vector<bool> generated(size, false);
    std::vector<Step> steps;
    for (index_t g : gens) {
      generated[g] = true;
    }
    std::vector<index_t> frontier = gens;
    while (!frontier.empty()) {
      std::vector<index_t> next;
      for (index_t a : frontier) {
        for (index_t g : gens) {
          index_t const e = brandt_add_code(n, a, g);
          if (!generated[e]) {
            generated[e] = true;
            steps.push_back({e, a, g});
            next.push_back(e);
          }
        }
      }
      frontier = std::move(next);
    }
    std::vector<index_t> free;
    for (index_t x = 0; x < size; ++x) {
      if (!generated[x]) {
        free.push_back(x);
      }
    }

    std::vector<index_t> vars = gens;
    vars.insert(vars.end(), free.begin(), free.end());
    double candidates = 1;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      candidates *= size;
    }
    if (candidates > static_cast<double>(budget.endomorphism_budget)) {
      throw BudgetExceeded("endomorphisms: " + std::to_string(candidates)
                           + " candidate assignments exceed the budget");
    }

    std::vector<MapOnBn> result;
    std::vector<index_t> choice(vars.size(), 0);
    std::vector<index_t> images(size, zero);
    while (true) {
      for (std::size_t v = 0; v < vars.size(); ++v) {
        images[vars[v]] = choice[v];
      }
      for (auto const& s : steps) {
        images[s.element] = brandt_add_code(n, images[s.parent], images[s.generator]);
      }
      bool hom = true;
      for (index_t a = 0; a < size && hom; ++a) {
        for (index_t b = 0; b < size && hom; ++b) {
          hom = images[brandt_add_code(n, a, b)]
                == brandt_add_code(n, images[a], images[b]);
        }
      }
      if (hom) {
        result.emplace_back(n, images);
      }
      std::size_t v = 0;
      while (v < choice.size() && ++choice[v] == size) {
        choice[v++] = 0;
      }
      if (v == choice.size()) {
        break;
      }
    }
    sort_by_images(result);
    return result;
  }

  std::vector<MapOnBn> affine_maps(index_t n, ConstructionBudget const& budget) {
    auto const endos = endomorphisms(n, budget);
    std::unordered_set<MapOnBn, MapOnBnHash> seen;
    std::vector<MapOnBn>                     result;
    for (auto const& g : endos) {
      for (index_t c = 0; c <= n * n; ++c) {
        auto f = pointwise_add(g, constant_map(n, BrandtElement::decode(n, c)));
        if (seen.insert(f).second) {
          result.push_back(std::move(f));
        }
      }
    }
    sort_by_images(result);
    return result;
  }

  std::vector<MapOnBn> generate_closure(std::span<MapOnBn const> gens,
                                        Operation                op,
                                        std::size_t              element_cap) {
    if (gens.empty()) {
      throw DimensionMismatch("generate_closure needs at least one generator");
    }
    std::vector<MapOnBn>                               elements;
    std::unordered_map<MapOnBn, index_t, MapOnBnHash> seen;
    auto add = [&](MapOnBn f) {
      if (seen.try_emplace(f, static_cast<index_t>(elements.size())).second) {
        elements.push_back(std::move(f));
        if (elements.size() > element_cap) {
          throw BudgetExceeded("closure exceeded "
                               + std::to_string(element_cap) + " elements");
        }
      }
    };
    for (auto const& g : gens) {
      add(g);
    }
    auto combine = [op](MapOnBn const& f, MapOnBn const& g) {
      return op == Operation::add ? pointwise_add(f, g) : compose(f, g);
    };
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        // elements may reallocate inside add, so copy the operands first.
        MapOnBn const a = elements[i];
        MapOnBn const b = elements[j];
        add(combine(a, b));
        if (i != j) {
          add(combine(b, a));
        }
      }
    }
    return elements;
  }

  ////////////////////////////////////////////////////////////////////////
  // A+(B_n)
  ////////////////////////////////////////////////////////////////////////

  std::size_t expected_a_plus_bn_size(index_t n) {
    if (n == 1) {
      return 3;
    }
    std::size_t fact = 1;
    for (index_t i = 2; i <= n; ++i) {
      fact *= i;
    }
    std::size_t const n2 = static_cast<std::size_t>(n) * n;
    return (fact + 1) * n2 + n2 * n2 + 1;
  }

  namespace {
    // Every constant, singleton-support and n-support map, in canonical
    // order.
    std::vector<MapOnBn> classified_enumeration(index_t n) {
      std::vector<MapOnBn> result;
      for (index_t c = 0; c <= n * n; ++c) {
        result.push_back(constant_map(n, BrandtElement::decode(n, c)));
      }
      if (n >= 2) {
        for (index_t from = 0; from < n * n; ++from) {
          for (index_t to = 0; to < n * n; ++to) {
            result.push_back(singleton_map(n,
                                           BrandtElement::decode(n, from),
                                           BrandtElement::decode(n, to)));
          }
        }
      }
      auto const perms = all_permutations(n);
      for (index_t p = 1; p <= n; ++p) {
        for (index_t q = 1; q <= n; ++q) {
          for (auto const& sigma : perms) {
            result.push_back(nsupport_map(n, p, q, sigma));
          }
        }
      }
      return result;
    }

    FiniteSemigroup reduct_table(std::vector<MapOnBn> const& elements,
                                 std::unordered_map<MapOnBn, index_t, MapOnBnHash> const& pos,
                                 std::vector<std::string> labels,
                                 Operation                op) {
      std::vector<std::vector<index_t>> table(elements.size());
      for (auto const& f : elements) {
        std::vector<index_t> row;
        row.reserve(elements.size());
        for (auto const& g : elements) {
          auto const h  = op == Operation::add ? pointwise_add(f, g) : compose(f, g);
          auto const it = pos.find(h);
          if (it == pos.end()) {
            throw CensusMismatch(std::string("A+(B_n) is not closed under ")
                                 + (op == Operation::add ? "+" : "composition"));
          }
          row.push_back(it->second);
        }
        table[&f - elements.data()] = std::move(row);
      }
      return validate_semigroup(table, std::move(labels));
    }
  }  // namespace

  APlusBn construct_a_plus_bn(index_t n, ConstructionBudget const& budget) {
    if (n == 0) {
      throw IndexOutOfRange("B_n needs n >= 1");
    }
    if (n > budget.max_n) {
      throw BudgetExceeded("n = " + std::to_string(n)
                           + " exceeds the budget max_n = "
                           + std::to_string(budget.max_n));
    }
    auto const aff     = affine_maps(n, budget);
    auto const closure = generate_closure(aff, Operation::add, budget.element_cap);

    Census census;
    for (auto const& f : closure) {
      switch (classify(f).index()) {
        case 0: ++census.constants; break;
        case 1: ++census.singleton; break;
        case 2: ++census.nsupport; break;
        default: ++census.other; break;
      }
    }
    std::size_t const n2   = static_cast<std::size_t>(n) * n;
    std::size_t const perm = all_permutations(n).size();
    bool const census_ok
        = census.other == 0 && census.constants == n2 + 1
          && census.singleton == (n >= 2 ? n2 * n2 : 0)
          && census.nsupport == perm * n2
          && census.total() == expected_a_plus_bn_size(n);
    if (!census_ok) {
      throw CensusMismatch(
          "closure of Aff(B_" + std::to_string(n) + ") has "
          + std::to_string(census.constants) + " constant, "
          + std::to_string(census.singleton) + " singleton-support, "
          + std::to_string(census.nsupport) + " n-support and "
          + std::to_string(census.other) + " other maps");
    }

    auto elements = classified_enumeration(n);
    std::unordered_map<MapOnBn, index_t, MapOnBnHash> pos;
    for (index_t i = 0; i < elements.size(); ++i) {
      pos.emplace(elements[i], i);
    }
    if (elements.size() != closure.size()
        || !std::all_of(closure.begin(), closure.end(), [&](auto const& f) {
             return pos.contains(f);
           })) {
      throw CensusMismatch("closure of Aff(B_" + std::to_string(n)
                           + ") differs from the classified enumeration");
    }

    std::vector<MapKind>     kinds;
    std::vector<std::string> labels;
    for (auto const& f : elements) {
      kinds.push_back(classify(f));
      labels.push_back(kind_label(kinds.back()));
    }
    auto add = reduct_table(elements, pos, labels, Operation::add);
    auto mul = reduct_table(elements, pos, labels, Operation::compose);

    std::vector<index_t> aff_idx;
    for (auto const& f : aff) {
      aff_idx.push_back(pos.at(f));
    }
    std::sort(aff_idx.begin(), aff_idx.end());

    return APlusBn{n,
                   std::move(elements),
                   std::move(kinds),
                   std::move(add),
                   std::move(mul),
                   std::move(aff_idx),
                   census,
                   std::move(pos)};
  }

  index_t APlusBn::index_of(MapOnBn const& f) const {
    auto it = positions.find(f);
    if (it == positions.end()) {
      throw IndexOutOfRange("map is not an element of A+(B_" + std::to_string(n) + ")");
    }
    return it->second;
  }

  index_t APlusBn::constant(BrandtElement c) const {
    return index_of(constant_map(n, c));
  }

  index_t APlusBn::singleton(BrandtElement from, BrandtElement to) const {
    return index_of(singleton_map(n, from, to));
  }

  index_t APlusBn::nsupport(index_t p, index_t q, Permutation const& sigma) const {
    return index_of(nsupport_map(n, p, q, sigma));
  }

  std::string APlusBn::label(index_t x) const {
    return kind_label(kinds.at(x));
  }

}  // namespace synmon
