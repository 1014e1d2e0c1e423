/**
 * Random small instances: crossed complexes over groups of order <= 4 and
 * presentations whose 3- and 4-cells satisfy the complex condition by
 * construction.
 */
#ifndef XCOMPLEX_RANDOM_HPP
#define XCOMPLEX_RANDOM_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "xcomplex/crossed_complex.hpp"
#include "xcomplex/group.hpp"
#include "xcomplex/presentation.hpp"

namespace xcomplex {

using Rng = std::mt19937_64;

/// Every group of order at most 4, up to isomorphism.
inline std::vector<FiniteGroup> small_groups() {
  return {trivial_group(), cyclic_group(2), cyclic_group(3), cyclic_group(4),
          direct_product(cyclic_group(2), cyclic_group(2))};
}

/// Every homomorphism source -> target, by exhaustive search over maps.
inline std::vector<GroupHom> all_homs(const FiniteGroup& source, const FiniteGroup& target) {
  std::vector<GroupHom> out;
  GroupHom h{source, target, std::vector<Elem>(source.order(), 0)};
  while (true) {
    if (check_hom(h)) out.push_back(h);
    std::size_t i = source.order();
    while (i > 0) {
      if (++h.image[i - 1] < target.order()) break;
      h.image[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

/// Automorphisms as image tables.
inline std::vector<std::vector<Elem>> automorphisms(const FiniteGroup& g) {
  std::vector<std::vector<Elem>> out;
  for (const auto& h : all_homs(g, g)) {
    auto sorted = h.image;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) out.push_back(h.image);
  }
  return out;
}

/// Every left action of actor on space by automorphisms.
inline std::vector<GroupAction> all_actions(const FiniteGroup& actor, const FiniteGroup& space) {
  const auto autos = automorphisms(space);
  std::vector<GroupAction> out;
  std::vector<std::size_t> choice(actor.order(), 0);
  const std::size_t ne = space.order();
  while (true) {
    GroupAction a{actor, space, std::vector<Elem>(actor.order() * ne)};
    for (std::size_t g = 0; g < actor.order(); ++g)
      std::copy(autos[choice[g]].begin(), autos[choice[g]].end(), a.table.begin() + g * ne);
    if (check_action(a)) out.push_back(std::move(a));
    std::size_t i = actor.order();
    while (i > 0) {
      if (++choice[i - 1] < autos.size()) break;
      choice[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& items) {
  std::uniform_int_distribution<std::size_t> d(0, items.size() - 1);
  return items[d(rng)];
}

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// A uniformly chosen valid crossed complex of length 1..max_length over
/// groups of order <= 4.
inline FiniteCrossedComplex random_crossed_complex(Rng& rng, std::size_t max_length = 3) {
  const auto groups = small_groups();
  const std::size_t L = uniform(rng, 1, max_length);
  CrossedComplexData d;
  d.groups.push_back(pick(rng, groups));
  for (std::size_t n = 2; n <= L; ++n) {
    const auto an = pick(rng, groups);
    std::vector<CrossedComplexData> candidates;
    const auto homs = all_homs(an, d.groups[n - 2]);
    const auto actions = all_actions(d.groups[0], an);
    for (const auto& h : homs)
      for (const auto& a : actions) {
        CrossedComplexData e = d;
        e.groups.push_back(an);
        e.boundaries.push_back(h);
        e.actions.push_back(a);
        if (validate(e).ok()) candidates.push_back(std::move(e));
      }
    // zero boundary with trivial action is always a candidate for abelian A_n
    d = pick(rng, candidates);
  }
  d.name = "random(L=" + std::to_string(L) + ")";
  return FiniteCrossedComplex::create(std::move(d));
}

inline Word random_word(Rng& rng, std::size_t gens, std::size_t max_length) {
  Word w;
  if (gens == 0) return w;
  const std::size_t len = uniform(rng, 0, max_length);
  for (std::size_t i = 0; i < len; ++i)
    w.push_back({static_cast<CellIndex>(uniform(rng, 0, gens - 1)), uniform(rng, 0, 1) ? 1 : -1});
  return w;
}

/// Random presentation with at most max_cells cells per dimension up to
/// max_dim (<= 4). 3-cells are products of blocks each mapping to the empty
/// word; 4-cells are built from trivially cancelling terms and from 3-cells
/// with empty attaching data.
inline CWPresentation random_presentation(Rng& rng, std::size_t max_cells = 3, std::size_t max_dim = 4) {
  CWPresentation p;
  const std::size_t dim = uniform(rng, 1, max_dim);
  p.cells.assign(dim + 1, 0);
  p.cells[0] = 1;
  if (dim >= 4) p.attach_high.resize(dim - 3);
  const std::size_t l1 = uniform(rng, 0, max_cells);
  p.cells[1] = l1;
  if (dim >= 2) {
    const std::size_t l2 = uniform(rng, 0, max_cells);
    p.cells[2] = l2;
    for (std::size_t c = 0; c < l2; ++c) {
      if (c > 0 && uniform(rng, 0, 2) == 0) {
        const auto& earlier = p.attach2[uniform(rng, 0, c - 1)];
        p.attach2.push_back(free_reduce(conjugate(random_word(rng, l1, 2), earlier)));
      } else {
        p.attach2.push_back(random_word(rng, l1, 4));
      }
    }
  }
  if (dim >= 3) {
    const std::size_t l2 = p.count(2);
    const std::size_t l3 = uniform(rng, 0, max_cells);
    p.cells[3] = l3;
    for (std::size_t c = 0; c < l3; ++c) {
      CrossedWord cw;
      const std::size_t blocks = l2 == 0 ? 0 : uniform(rng, 1, 3);
      for (std::size_t b = 0; b < blocks; ++b) {
        const auto u = random_word(rng, l1, 2);
        const auto c1 = static_cast<CellIndex>(uniform(rng, 0, l2 - 1));
        const auto c2 = static_cast<CellIndex>(uniform(rng, 0, l2 - 1));
        switch (uniform(rng, 0, 3)) {
          case 0: {  // cancelling pair
            const int e = uniform(rng, 0, 1) ? 1 : -1;
            cw.push_back({u, c1, e});
            cw.push_back({u, c1, -e});
            break;
          }
          case 1: {  // Peiffer identity
            cw.push_back({u, c1, 1});
            cw.push_back({u, c2, 1});
            cw.push_back({u, c1, -1});
            cw.push_back({concat(u, p.attach2[c1]), c2, -1});
            break;
          }
          case 2: {  // a relator that is a conjugate of another one
            const auto place = [&] {
              for (CellIndex a = 0; a < l2; ++a)
                for (CellIndex b = 0; b < l2; ++b) {
                  if (a == b) continue;
                  for (const auto& v : {Word{}, random_word(rng, l1, 2)})
                    if (free_reduce(conjugate(v, p.attach2[a])) == free_reduce(p.attach2[b])) {
                      cw.push_back({concat(u, v), a, 1});
                      cw.push_back({u, b, -1});
                      return true;
                    }
                }
              return false;
            };
            if (!place()) {
              cw.push_back({u, c2, -1});
              cw.push_back({u, c2, 1});
            }
            break;
          }
          default: {  // spherical 2-cells
            bool placed = false;
            for (CellIndex a = 0; a < l2 && !placed; ++a)
              if (free_reduce(p.attach2[a]).empty()) {
                cw.push_back({u, a, uniform(rng, 0, 1) ? 1 : -1});
                placed = true;
              }
            if (!placed) {
              cw.push_back({concat(u, p.attach2[c1]), c1, 1});
              cw.push_back({concat(u, p.attach2[c1]), c1, -1});
            }
            break;
          }
        }
      }
      p.attach3.push_back(std::move(cw));
    }
  }
  if (dim >= 4) {
    const std::size_t l3 = p.count(3);
    const std::size_t l4 = uniform(rng, 0, std::min<std::size_t>(max_cells, 2));
    p.cells[4] = l4;
    for (std::size_t c = 0; c < l4; ++c) {
      ModuleElt m;
      if (l3 > 0) {
        const auto g = static_cast<CellIndex>(uniform(rng, 0, l3 - 1));
        const auto u = random_word(rng, l1, 2);
        const long long k = static_cast<long long>(uniform(rng, 1, 3));
        if (p.attach3[g].empty()) {
          m.push_back({k, u, g});
        } else if (p.count(2) > 0 && uniform(rng, 0, 1)) {
          const auto& rel = p.attach2[uniform(rng, 0, p.count(2) - 1)];
          m.push_back({k, u, g});
          m.push_back({-k, concat(u, rel), g});
        } else {
          m.push_back({k, u, g});
          m.push_back({-k, u, g});
        }
      }
      p.attach_high[0].push_back(std::move(m));
    }
  }
  p.name = "random";
  return p;
}

}  // namespace xcomplex

#endif
