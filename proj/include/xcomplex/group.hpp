/**
 * Finite groups stored as multiplication tables, together with
 * homomorphisms, actions by automorphisms, subgroups and quotients.
 *
 * Elements are dense indices 0..n-1 and the identity is always 0.
 * Every object here is immutable once constructed, so a single instance
 * can be read concurrently by any number of enumeration workers.
 */
#ifndef XCOMPLEX_GROUP_HPP
#define XCOMPLEX_GROUP_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "xcomplex/error.hpp"

namespace xcomplex {

using Elem = std::uint32_t;
using Table = std::vector<std::vector<Elem>>;

class FiniteGroup {
 public:
  static constexpr Elem identity = 0;

  /// The trivial group.
  FiniteGroup() : FiniteGroup(std::vector<Elem>{0}, 1, "1") {}

  /// Validates a square multiplication table and derives the inverse table.
  /// Throws Error(NoIdentityAtZero | MissingInverse | NotAssociative |
  /// DimensionMismatch) naming the first violating tuple.
  static FiniteGroup from_table(const Table& mul, std::string name = {}) {
    const std::size_t n = mul.size();
    if (n == 0) throw Error(ErrorCode::DimensionMismatch, "empty multiplication table");
    std::vector<Elem> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (mul[i].size() != n) {
        throw Error(ErrorCode::DimensionMismatch,
                    "row " + std::to_string(i) + " has " + std::to_string(mul[i].size()) +
                        " entries, expected " + std::to_string(n));
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (mul[i][j] >= n) {
          throw Error(ErrorCode::DimensionMismatch, "entry (" + std::to_string(i) + "," +
                                                        std::to_string(j) + ") out of range");
        }
        flat.push_back(mul[i][j]);
      }
    }
    return from_flat(std::move(flat), n, std::move(name));
  }

  /// Same as from_table for a row-major flattened n*n table.
  static FiniteGroup from_flat(std::vector<Elem> flat, std::size_t n, std::string name = {}) {
    if (n == 0 || flat.size() != n * n) {
      throw Error(ErrorCode::DimensionMismatch, "flattened table is not square");
    }
    for (Elem v : flat) {
      if (v >= n) throw Error(ErrorCode::DimensionMismatch, "table entry out of range");
    }
    const auto at = [&](std::size_t a, std::size_t b) { return flat[a * n + b]; };
    for (std::size_t x = 0; x < n; ++x) {
      if (at(0, x) != x || at(x, 0) != x) {
        throw Error(ErrorCode::NoIdentityAtZero,
                    "0 is not a two-sided identity at element " + std::to_string(x));
      }
    }
    std::vector<Elem> inv(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t y = 0;
      while (y < n && !(at(x, y) == 0 && at(y, x) == 0)) ++y;
      if (y == n) {
        throw Error(ErrorCode::MissingInverse, "element " + std::to_string(x) + " has no inverse");
      }
      inv[x] = static_cast<Elem>(y);
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t ab = at(a, b);
        for (std::size_t c = 0; c < n; ++c) {
          if (at(ab, c) != at(a, at(b, c))) {
            throw Error(ErrorCode::NotAssociative, "(" + std::to_string(a) + "," +
                                                       std::to_string(b) + "," +
                                                       std::to_string(c) + ")");
          }
        }
      }
    }
    return FiniteGroup(std::move(flat), n, std::move(name), std::move(inv));
  }

  std::size_t order() const noexcept { return data_->n; }
  const std::string& name() const noexcept { return data_->name; }

  Elem mul(Elem a, Elem b) const noexcept { return data_->mul[a * data_->n + b]; }
  Elem inv(Elem a) const noexcept { return data_->inv[a]; }
  /// x y x^-1
  Elem conj(Elem x, Elem y) const noexcept { return mul(mul(x, y), inv(x)); }

  /// a^k for any integer k.
  Elem power(Elem a, long long k) const noexcept {
    if (k < 0) {
      a = inv(a);
      k = -k;
    }
    Elem result = identity;
    Elem base = a;
    while (k > 0) {
      if (k & 1) result = mul(result, base);
      base = mul(base, base);
      k >>= 1;
    }
    return result;
  }

  bool is_abelian() const noexcept {
    const std::size_t n = order();
    for (Elem a = 0; a < n; ++a)
      for (Elem b = a + 1; b < n; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  Table table() const {
    Table t(order(), std::vector<Elem>(order()));
    for (Elem a = 0; a < order(); ++a)
      for (Elem b = 0; b < order(); ++b) t[a][b] = mul(a, b);
    return t;
  }

  std::span<const Elem> flat_table() const noexcept { return data_->mul; }

  FiniteGroup renamed(std::string name) const {
    FiniteGroup g = *this;
    auto d = std::make_shared<Data>(*data_);
    d->name = std::move(name);
    g.data_ = std::move(d);
    return g;
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) noexcept {
    return a.data_ == b.data_ || (a.data_->n == b.data_->n && a.data_->mul == b.data_->mul);
  }

 private:
  struct Data {
    std::size_t n;
    std::vector<Elem> mul;
    std::vector<Elem> inv;
    std::string name;
  };

  FiniteGroup(std::vector<Elem> flat, std::size_t n, std::string name,
              std::vector<Elem> inv = {0})
      : data_(std::make_shared<Data>(Data{n, std::move(flat), std::move(inv), std::move(name)})) {}

  std::shared_ptr<const Data> data_;
};

/// The outcome of a structural check; `what` and `witness` describe the first
/// failing instance.
struct CheckResult {
  bool ok = true;
  std::string what;
  std::vector<Elem> witness;

  explicit operator bool() const noexcept { return ok; }
  static CheckResult fail(std::string what, std::vector<Elem> witness) {
    return {false, std::move(what), std::move(witness)};
  }
};

struct GroupHom {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<Elem> image;

  Elem operator()(Elem x) const noexcept { return image[x]; }
};

struct GroupAction {
  FiniteGroup actor;
  FiniteGroup space;
  /// row-major actor.order() x space.order()
  std::vector<Elem> table;

  Elem apply(Elem g, Elem e) const noexcept { return table[g * space.order() + e]; }
};

/// A subgroup given by its sorted members. Built through make_subgroup /
/// make_normal_subgroup, which validate closure (and normality).
struct NormalSubgroupData {
  FiniteGroup parent;
  std::vector<Elem> members;

  std::size_t size() const noexcept { return members.size(); }
  bool contains(Elem x) const { return std::binary_search(members.begin(), members.end(), x); }
};

using Fibers = std::vector<std::vector<Elem>>;

// ---------------------------------------------------------------------------
// Standard constructions

inline FiniteGroup trivial_group() { return FiniteGroup(); }

inline FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "cyclic group of order 0");
  std::vector<Elem> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) flat[a * n + b] = static_cast<Elem>((a + b) % n);
  return FiniteGroup::from_flat(std::move(flat), n, "Z/" + std::to_string(n));
}

/// (g, h) is stored as g * |H| + h.
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t m = h.order();
  const std::size_t n = g.order() * m;
  std::vector<Elem> flat(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Elem first = g.mul(static_cast<Elem>(a / m), static_cast<Elem>(b / m));
      const Elem second = h.mul(static_cast<Elem>(a % m), static_cast<Elem>(b % m));
      flat[a * n + b] = static_cast<Elem>(first * m + second);
    }
  return FiniteGroup::from_flat(std::move(flat), n, g.name() + "x" + h.name());
}

/// Permutations of {0,1,2} as image triples in lexicographic order:
///   0 = 012 (identity), 1 = 021, 2 = 102, 3 = 120, 4 = 201, 5 = 210.
/// Elements 1, 2, 5 are transpositions; 3 and 4 are the 3-cycles.
/// The product is composition, (p*q)(i) = p(q(i)).
inline const std::vector<std::array<int, 3>>& symmetric_group_3_permutations() {
  static const std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  return perms;
}

inline FiniteGroup symmetric_group_3() {
  const auto& perms = symmetric_group_3_permutations();
  std::vector<Elem> flat(36);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      const auto it = std::find(perms.begin(), perms.end(), c);
      flat[a * 6 + b] = static_cast<Elem>(it - perms.begin());
    }
  return FiniteGroup::from_flat(std::move(flat), 6, "S3");
}

// ---------------------------------------------------------------------------
// Homomorphisms and actions

inline GroupHom identity_hom(const FiniteGroup& g) {
  std::vector<Elem> img(g.order());
  for (Elem x = 0; x < g.order(); ++x) img[x] = x;
  return {g, g, std::move(img)};
}

inline GroupHom zero_hom(const FiniteGroup& source, const FiniteGroup& target) {
  return {source, target, std::vector<Elem>(source.order(), FiniteGroup::identity)};
}

inline GroupAction trivial_action(const FiniteGroup& actor, const FiniteGroup& space) {
  std::vector<Elem> table(actor.order() * space.order());
  for (std::size_t g = 0; g < actor.order(); ++g)
    for (std::size_t e = 0; e < space.order(); ++e)
      table[g * space.order() + e] = static_cast<Elem>(e);
  return {actor, space, std::move(table)};
}

/// Conjugation action of a group on itself.
inline GroupAction conjugation_action(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Elem> table(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem e = 0; e < n; ++e) table[x * n + e] = g.conj(x, e);
  return {g, g, std::move(table)};
}

inline void require_shape(const GroupHom& h) {
  if (h.image.size() != h.source.order()) {
    throw Error(ErrorCode::DimensionMismatch, "homomorphism image has " +
                                                  std::to_string(h.image.size()) +
                                                  " entries, source order is " +
                                                  std::to_string(h.source.order()));
  }
}

inline void require_shape(const GroupAction& a) {
  if (a.table.size() != a.actor.order() * a.space.order()) {
    throw Error(ErrorCode::DimensionMismatch, "action table is not actor x space");
  }
}

inline CheckResult check_hom(const GroupHom& h) {
  require_shape(h);
  for (Elem v : h.image)
    if (v >= h.target.order()) return CheckResult::fail("image out of range", {v});
  if (h(FiniteGroup::identity) != FiniteGroup::identity)
    return CheckResult::fail("identity not preserved", {0});
  const std::size_t n = h.source.order();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (h(h.source.mul(x, y)) != h.target.mul(h(x), h(y)))
        return CheckResult::fail("h(xy) != h(x)h(y)", {x, y});
  return {};
}

/// Checks that every act(g, .) is an automorphism and that g |-> act(g, .)
/// is a left action.
inline CheckResult check_action(const GroupAction& a) {
  require_shape(a);
  const std::size_t ng = a.actor.order();
  const std::size_t ne = a.space.order();
  for (Elem v : a.table)
    if (v >= ne) return CheckResult::fail("action value out of range", {v});
  for (Elem e = 0; e < ne; ++e)
    if (a.apply(0, e) != e) return CheckResult::fail("identity acts nontrivially", {0, e});
  std::vector<char> seen(ne);
  for (Elem g = 0; g < ng; ++g) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem e = 0; e < ne; ++e) {
      const Elem v = a.apply(g, e);
      if (seen[v]) return CheckResult::fail("act(g, .) not injective", {g, e});
      seen[v] = 1;
    }
    for (Elem e = 0; e < ne; ++e)
      for (Elem f = 0; f < ne; ++f)
        if (a.apply(g, a.space.mul(e, f)) != a.space.mul(a.apply(g, e), a.apply(g, f)))
          return CheckResult::fail("act(g, .) not a homomorphism", {g, e, f});
  }
  for (Elem g1 = 0; g1 < ng; ++g1)
    for (Elem g2 = 0; g2 < ng; ++g2) {
      const Elem g12 = a.actor.mul(g1, g2);
      for (Elem e = 0; e < ne; ++e)
        if (a.apply(g12, e) != a.apply(g1, a.apply(g2, e)))
          return CheckResult::fail("act(g1 g2, e) != act(g1, act(g2, e))", {g1, g2, e});
    }
  return {};
}

// ---------------------------------------------------------------------------
// Subgroups, images, kernels, fibers

inline bool is_subgroup(const FiniteGroup& g, const std::vector<Elem>& sorted_members) {
  if (sorted_members.empty() || sorted_members.front() != FiniteGroup::identity) return false;
  const auto in = [&](Elem x) {
    return std::binary_search(sorted_members.begin(), sorted_members.end(), x);
  };
  for (Elem a : sorted_members) {
    if (a >= g.order() || !in(g.inv(a))) return false;
    for (Elem b : sorted_members)
      if (!in(g.mul(a, b))) return false;
  }
  return true;
}

inline bool is_normal(const FiniteGroup& g, const std::vector<Elem>& sorted_members) {
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem a : sorted_members)
      if (!std::binary_search(sorted_members.begin(), sorted_members.end(), g.conj(x, a)))
        return false;
  return true;
}

inline std::vector<Elem> sorted_unique(std::vector<Elem> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

/// Throws NotSubgroup if the members are not closed under mul/inv.
inline NormalSubgroupData make_subgroup(const FiniteGroup& g, std::vector<Elem> members) {
  members = sorted_unique(std::move(members));
  if (!is_subgroup(g, members)) throw Error(ErrorCode::NotSubgroup, "set is not a subgroup");
  return {g, std::move(members)};
}

/// Throws NotSubgroup / NotNormal.
inline NormalSubgroupData make_normal_subgroup(const FiniteGroup& g, std::vector<Elem> members) {
  auto sub = make_subgroup(g, std::move(members));
  if (!is_normal(g, sub.members)) throw Error(ErrorCode::NotNormal, "subgroup is not normal");
  return sub;
}

/// fibers[t] lists, in increasing order, the source elements mapped to t.
inline Fibers fibers_of(const GroupHom& h) {
  require_shape(h);
  Fibers fibers(h.target.order());
  for (Elem x = 0; x < h.source.order(); ++x) fibers[h(x)].push_back(x);
  return fibers;
}

inline NormalSubgroupData kernel_of(const GroupHom& h) {
  return {h.source, fibers_of(h)[FiniteGroup::identity]};
}

struct ImageData {
  std::vector<Elem> members;  // sorted
  bool normal = false;        // whether the image is normal in the target
};

inline ImageData image_of(const GroupHom& h) {
  require_shape(h);
  ImageData img{sorted_unique(h.image), false};
  img.normal = is_normal(h.target, img.members);
  return img;
}

/// The subgroup as a group in its own right, renumbered in increasing order of
/// parent index, with the inclusion into the parent.
inline std::pair<FiniteGroup, GroupHom> subgroup_as_group(const NormalSubgroupData& sub) {
  const auto& g = sub.parent;
  const std::size_t n = sub.size();
  std::vector<Elem> local(g.order(), 0);
  for (std::size_t i = 0; i < n; ++i) local[sub.members[i]] = static_cast<Elem>(i);
  std::vector<Elem> flat(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      flat[i * n + j] = local[g.mul(sub.members[i], sub.members[j])];
  auto group = FiniteGroup::from_flat(std::move(flat), n);
  GroupHom inclusion{group, g, sub.members};
  return {group, std::move(inclusion)};
}

struct Quotient {
  FiniteGroup group;
  GroupHom projection;
  /// representatives[i] is the least parent index in coset i
  std::vector<Elem> representatives;
};

/// G / N over least-index coset representatives; coset i is ordered by its
/// representative, so the identity coset is 0. Throws NotNormal.
inline Quotient quotient(const FiniteGroup& g, const NormalSubgroupData& normal) {
  if (!is_subgroup(g, normal.members)) throw Error(ErrorCode::NotSubgroup, "not a subgroup");
  if (!is_normal(g, normal.members)) throw Error(ErrorCode::NotNormal, "subgroup is not normal");
  constexpr Elem unset = ~Elem{0};
  std::vector<Elem> coset(g.order(), unset);
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order(); ++x) {
    if (coset[x] != unset) continue;
    const auto id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem n : normal.members) coset[g.mul(x, n)] = id;
  }
  const std::size_t k = reps.size();
  std::vector<Elem> flat(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) flat[i * k + j] = coset[g.mul(reps[i], reps[j])];
  auto q = FiniteGroup::from_flat(std::move(flat), k);
  GroupHom projection{g, q, std::move(coset)};
  return {q, std::move(projection), std::move(reps)};
}

}  // namespace xcomplex

#endif
