/**
 * The built-in acceptance suite. Each criterion is exact; none are sampled
 * beyond the random instances of criteria 1 and 8, which use fixed seeds.
 */
#ifndef XCOMPLEX_SELFCHECK_HPP
#define XCOMPLEX_SELFCHECK_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "xcomplex/crossed_complex.hpp"
#include "xcomplex/enumerate.hpp"
#include "xcomplex/homotopy.hpp"
#include "xcomplex/invariant.hpp"
#include "xcomplex/library.hpp"
#include "xcomplex/presentation.hpp"
#include "xcomplex/random.hpp"

namespace xcomplex {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
};

namespace selfcheck {

inline std::string pair_name(const CWPresentation& p, const FiniteCrossedComplex& c) {
  return p.name + " x " + c.name();
}

inline std::size_t class_edge_count(const CWPresentation& p, const FiniteCrossedComplex& c, std::uint64_t homs) {
  const BigInt e = count_homotopies_from({}, p, c, 1) * homs;
  return e > std::numeric_limits<std::size_t>::max() ? std::numeric_limits<std::size_t>::max()
                                                      : static_cast<std::size_t>(e);
}

/// count_homs against the brute-force oracle.
inline CriterionResult oracle_equivalence(unsigned threads, std::uint64_t seed = 20240601) {
  CriterionResult r{1, "count_homs equals brute force", true, {}};
  Rng rng(seed);
  std::size_t random_checked = 0;
  std::size_t draws = 0;
  std::size_t nontrivial = 0;
  while (random_checked < 200 && draws < 2000) {
    ++draws;
    const auto c = random_crossed_complex(rng, 3);
    const auto p = random_presentation(rng, 3, 4);
    BigInt oracle;
    try {
      oracle = count_homs_bruteforce(p, c);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InstanceTooLarge) continue;
      throw;
    }
    ++random_checked;
    if (c.length() >= 2 && p.count(2) > 0 && oracle > 1) ++nontrivial;
    const BigInt fast = count_homs(p, c, {threads});
    if (fast != oracle) {
      r.passed = false;
      r.detail += "random draw " + std::to_string(draws) + ": " + fast.str() + " != " + oracle.str() + "; ";
    }
  }
  if (random_checked < 20) {
    r.passed = false;
    r.detail += "only " + std::to_string(random_checked) + " random instances fit the oracle; ";
  }
  std::size_t builtin_checked = 0;
  for (const auto& space : library_space_names())
    for (const auto& cname : library_complex_names()) {
      const auto p = builtin_space(space);
      const auto c = builtin_complex(cname);
      ++builtin_checked;
      const BigInt oracle = count_homs_bruteforce(p, c);
      const BigInt fast = count_homs(p, c, {threads});
      if (fast != oracle) {
        r.passed = false;
        r.detail += pair_name(p, c) + ": " + fast.str() + " != " + oracle.str() + "; ";
      }
    }
  if (r.passed)
    r.detail = std::to_string(random_checked) + " random (" + std::to_string(nontrivial) +
               " with L >= 2, 2-cells and count > 1) and " + std::to_string(builtin_checked) +
               " builtin pairs agree";
  return r;
}

inline CriterionResult decomposition_invariance(unsigned threads) {
  CriterionResult r{2, "invariant independent of the cell decomposition", true, {}};
  std::vector<std::pair<CWPresentation, CWPresentation>> pairs = {
      {point(), disk(2)}, {point(), disk(3)}, {sphere(2), sphere2_two_cells()}};
  for (const auto& p : suite_spaces())
    for (std::size_t n : {2u, 3u}) pairs.emplace_back(p, wedge(p, disk(n)));
  std::size_t checked = 0;
  for (const auto& c : standard_suite())
    for (const auto& [a, b] : pairs) {
      ++checked;
      const auto ia = invariant_IA(a, c, {threads});
      const auto ib = invariant_IA(b, c, {threads});
      if (ia != ib) {
        r.passed = false;
        r.detail += a.name + " vs " + b.name + " over " + c.name() + ": " + to_string(ia) + " != " +
                    to_string(ib) + "; ";
      }
    }
  if (r.passed) r.detail = std::to_string(checked) + " decomposition pairs agree";
  return r;
}

inline CriterionResult disk_wedge_identity(unsigned threads) {
  CriterionResult r{3, "wedging a disk multiplies the count by |A_n|", true, {}};
  std::size_t checked = 0;
  for (const auto& c : standard_suite())
    for (const auto& p : suite_spaces()) {
      const BigInt base = count_homs(p, c, {threads});
      for (std::size_t n : {2u, 3u}) {
        ++checked;
        const BigInt wedged = count_homs(wedge(p, disk(n)), c, {threads});
        if (wedged != base * c.size_at(n)) {
          r.passed = false;
          r.detail += pair_name(p, c) + " n=" + std::to_string(n) + ": " + wedged.str() + " != " +
                      base.str() + " * " + std::to_string(c.size_at(n)) + "; ";
        }
      }
    }
  if (r.passed) r.detail = std::to_string(checked) + " wedges checked";
  return r;
}

inline CriterionResult euler_identity(unsigned threads, std::uint64_t edge_limit = 1'000'000) {
  CriterionResult r{4, "mapping-space Euler characteristic equals the invariant", true, {}};
  std::size_t checked = 0;
  std::size_t skipped = 0;
  for (const auto& c : standard_suite())
    for (const auto& p : suite_spaces()) {
      const BigInt homs = count_homs(p, c, {threads});
      if (homs > default_enumeration_cap || class_edge_count(p, c, static_cast<std::uint64_t>(homs)) > edge_limit) {
        ++skipped;
        continue;
      }
      ++checked;
      const auto euler = euler_char_mapping_space(p, c, {threads, default_enumeration_cap, true});
      const auto ia = invariant_IA(p, c, {threads});
      if (euler != ia) {
        r.passed = false;
        r.detail += pair_name(p, c) + ": " + to_string(euler) + " != " + to_string(ia) + "; ";
      }
    }
  if (r.passed)
    r.detail = std::to_string(checked) + " instances agree, " + std::to_string(skipped) + " over the edge limit";
  return r;
}

inline CriterionResult named_values(unsigned threads) {
  CriterionResult r{5, "named values", true, {}};
  const auto expect = [&](const std::string& what, const BigInt& got, const BigInt& want) {
    if (got != want) {
      r.passed = false;
      r.detail += what + ": " + got.str() + " != " + want.str() + "; ";
    }
  };
  // commuting pairs in S_3: sum of centralizer orders
  const auto s3 = symmetric_group_3();
  std::size_t commuting = 0;
  for (Elem x = 0; x < 6; ++x)
    for (Elem y = 0; y < 6; ++y)
      if (s3.mul(x, y) == s3.mul(y, x)) ++commuting;
  expect("torus x S3 (centralizers)", BigInt(commuting), 18);
  expect("torus x S3", count_homs(torus(), builtin_complex("S3"), {threads}), 18);
  expect("rp2 x Z/2", count_homs(rp2(), builtin_complex("Z:2"), {threads}), 2);
  expect("rp2 x Z/3", count_homs(rp2(), builtin_complex("Z:3"), {threads}), 1);
  expect("rp2 x Z/2 (brute force)", count_homs_bruteforce(rp2(), builtin_complex("Z:2")), 2);
  expect("rp2 x Z/3 (brute force)", count_homs_bruteforce(rp2(), builtin_complex("Z:3")), 1);
  for (const auto& c : standard_suite()) {
    const auto ia = invariant_IA(point(), c, {threads});
    if (ia != 1) {
      r.passed = false;
      r.detail += "point x " + c.name() + ": " + to_string(ia) + "; ";
    }
  }
  if (r.passed) r.detail = "torus/S3 = 18, rp2/Z2 = 2, rp2/Z3 = 1, point = 1 over the suite";
  return r;
}

inline CriterionResult circle_classes(unsigned threads) {
  CriterionResult r{6, "homotopy classes of the circle match pi_1", true, {}};
  for (const auto& c : standard_suite()) {
    const auto classes = homotopy_classes(sphere(1), c, {threads});
    const std::size_t want = pi1(c).order();
    if (classes.count() != want) {
      r.passed = false;
      r.detail += c.name() + ": " + std::to_string(classes.count()) + " != " + std::to_string(want) + "; ";
    } else {
      r.detail += c.name() + "=" + std::to_string(want) + " ";
    }
  }
  return r;
}

inline CriterionResult targets_are_morphisms(unsigned threads, std::uint64_t edge_limit = 10'000) {
  CriterionResult r{7, "every homotopy target is a morphism", true, {}};
  std::uint64_t edges = 0;
  std::uint64_t failures = 0;
  std::size_t instances = 0;
  for (const auto& c : standard_suite())
    for (const auto& p : suite_spaces()) {
      const BigInt homs = count_homs(p, c, {threads});
      if (homs > default_enumeration_cap || class_edge_count(p, c, static_cast<std::uint64_t>(homs)) > edge_limit)
        continue;
      ++instances;
      for (const auto& f : enumerate_homs(p, c, {threads})) {
        for_each_homotopy(c, p, f, [&](const Homotopy1& k) {
          ++edges;
          try {
            homotopy_target(c, p, k);
          } catch (const Error& e) {
            if (e.code() != ErrorCode::TargetNotMorphism) throw;
            ++failures;
          }
        });
      }
    }
  r.passed = failures == 0 && edges > 0;
  r.detail = std::to_string(edges) + " homotopies on " + std::to_string(instances) + " instances, " +
             std::to_string(failures) + " TargetNotMorphism";
  return r;
}

/// A single-entry change guaranteed to break one named axiom.
struct Mutation {
  CrossedComplexData data;
  std::string expected;
  std::string where;
};

inline Mutation mutate(const FiniteCrossedComplex& c, Rng& rng) {
  Mutation m{c.data(), {}, {}};
  const std::size_t L = c.length();
  const std::size_t n = uniform(rng, 2, L);
  const bool hit_action = uniform(rng, 0, 1) == 0;
  if (hit_action) {
    auto& table = m.data.actions[n - 2].table;
    const std::size_t i = uniform(rng, 0, table.size() - 1);
    const std::size_t space = m.data.groups[n - 1].order();
    table[i] = static_cast<Elem>((table[i] + uniform(rng, 1, space - 1)) % space);
    m.expected = std::string(axiom::action);
    m.where = "action " + std::to_string(n) + "[" + std::to_string(i) + "]";
  } else {
    auto& image = m.data.boundaries[n - 2].image;
    const std::size_t target = m.data.groups[n - 2].order();
    // with a source of order 2 only the identity entry is forced
    const std::size_t i = image.size() >= 3 ? uniform(rng, 0, image.size() - 1) : 0;
    image[i] = static_cast<Elem>((image[i] + uniform(rng, 1, target - 1)) % target);
    m.expected = std::string(axiom::boundary_hom);
    m.where = "boundary " + std::to_string(n) + "[" + std::to_string(i) + "]";
  }
  return m;
}

inline CriterionResult axiom_fuzzing(std::uint64_t seed = 7, std::size_t mutations = 100) {
  CriterionResult r{8, "single-entry mutations are flagged by the right axiom", true, {}};
  Rng rng(seed);
  std::vector<FiniteCrossedComplex> bases;
  for (const char* name : {"Z2Z2zero", "Z4Z2incl", "L3", "S3Z3conj", "S3id", "Z2Z3inv"})
    bases.push_back(builtin_complex(name));
  while (bases.size() < 16) {
    auto c = random_crossed_complex(rng, 3);
    // mutations need an entry that can change: |A_n| >= 2 and |A_{n-1}| >= 2
    bool usable = c.length() >= 2;
    for (std::size_t k = 1; k <= c.length() && usable; ++k) usable = c.group(k).order() >= 2;
    if (usable) bases.push_back(std::move(c));
  }
  std::size_t flagged = 0;
  for (std::size_t i = 0; i < mutations; ++i) {
    const auto& base = bases[uniform(rng, 0, bases.size() - 1)];
    const auto m = mutate(base, rng);
    const auto report = validate(m.data);
    if (report.has(m.expected)) {
      ++flagged;
    } else {
      r.passed = false;
      r.detail += base.name() + " " + m.where + ": expected " + m.expected + ", got " + report.summary() + "; ";
    }
  }
  if (r.passed) r.detail = std::to_string(flagged) + "/" + std::to_string(mutations) + " flagged";
  return r;
}

inline CriterionResult parallel_determinism(unsigned threads = 8) {
  CriterionResult r{9, "results independent of the thread count", true, {}};
  std::size_t compared = 0;
  for (const auto& c : standard_suite())
    for (const auto& p : suite_spaces()) {
      const auto name = pair_name(p, c);
      ++compared;
      if (count_homs(p, c, {1}) != count_homs(p, c, {threads})) {
        r.passed = false;
        r.detail += name + " count; ";
      }
      if (invariant_IA(p, c, {1}) != invariant_IA(p, c, {threads})) {
        r.passed = false;
        r.detail += name + " invariant; ";
      }
      const BigInt homs = count_homs(p, c, {1});
      if (homs > default_enumeration_cap ||
          class_edge_count(p, c, static_cast<std::uint64_t>(homs)) > default_edge_budget)
        continue;
      if (enumerate_homs(p, c, {1}) != enumerate_homs(p, c, {threads})) {
        r.passed = false;
        r.detail += name + " enumeration; ";
      }
      const auto a = homotopy_classes(p, c, {1});
      const auto b = homotopy_classes(p, c, {threads});
      if (a.class_of != b.class_of || a.representatives != b.representatives || a.sizes != b.sizes) {
        r.passed = false;
        r.detail += name + " classes; ";
      }
    }
  if (r.passed) r.detail = std::to_string(compared) + " pairs identical at 1 and " + std::to_string(threads) + " threads";
  return r;
}

}  // namespace selfcheck

inline std::vector<CriterionResult> run_selfcheck(unsigned threads = 1) {
  using namespace selfcheck;
  const std::vector<std::function<CriterionResult()>> criteria = {
      [&] { return oracle_equivalence(threads); },
      [&] { return decomposition_invariance(threads); },
      [&] { return disk_wedge_identity(threads); },
      [&] { return euler_identity(threads); },
      [&] { return named_values(threads); },
      [&] { return circle_classes(threads); },
      [&] { return targets_are_morphisms(threads); },
      [] { return axiom_fuzzing(); },
      [] { return parallel_determinism(8); },
  };
  std::vector<CriterionResult> out;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      out.push_back(criteria[i]());
    } catch (const std::exception& e) {
      out.push_back({static_cast<int>(i + 1), "criterion " + std::to_string(i + 1), false,
                     std::string("exception: ") + e.what()});
    }
  }
  return out;
}

}  // namespace xcomplex

#endif
