/**
 * 1-fold homotopies of morphisms out of a totally free crossed complex.
 *
 * A homotopy with source f is any choice of H_n(c) in A_{n+1} for every
 * n-cell c, 1 <= n <= L-1; there are no compatibility conditions. It is
 * extended to attaching data as an f_1-derivation in degree 1,
 *
 *     s(XY) = (f_1(Y)^-1 |> s(X)) s(Y),
 *
 * and as an f_1-equivariant homomorphism above. Its target g is
 *
 *     g_1(x) = f_1(x) d_2(H_1(x)),
 *     g_n(c) = f_n(c) H_{n-1}(attach(c)) d_{n+1}(H_n(c))   (n >= 2).
 *
 * Connected components of the resulting groupoid are the pointed homotopy
 * classes of maps from the space into the classifying space.
 */
#ifndef XCOMPLEX_HOMOTOPY_HPP
#define XCOMPLEX_HOMOTOPY_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <thread>
#include <utility>
#include <vector>

#include "xcomplex/crossed_complex.hpp"
#include "xcomplex/enumerate.hpp"
#include "xcomplex/evaluate.hpp"
#include "xcomplex/presentation.hpp"
#include "xcomplex/rational.hpp"

namespace xcomplex {

inline constexpr std::uint64_t default_edge_budget = 10'000'000;

struct Homotopy1 {
  Morphism source;
  /// values[n - 1][c] is H_n(c) in A_{n+1}, for n = 1..L-1.
  std::vector<std::vector<Elem>> values;

  std::span<const Elem> at(std::size_t n) const { return values.at(n - 1); }
};

/// The f_1-derivation determined by h1 on generators, evaluated on w.
/// On an inverse letter, s(x^-1) = f_1(x) |> s(x)^-1.
inline Elem eval_derivation(const FiniteCrossedComplex& c, std::span<const Elem> f1,
                            std::span<const Elem> h1, const Word& w) {
  if (c.length() < 2) throw Error(ErrorCode::IndexOutOfRange, "derivations need L >= 2");
  const auto& a1 = c.group(1);
  const auto& a2 = c.group(2);
  const auto& act = c.action(2);
  Elem s = FiniteGroup::identity;
  for (const auto& l : w) {
    const Elem fx = f1[l.gen];
    const Elem phi = l.exp > 0 ? fx : a1.inv(fx);
    const Elem sy = l.exp > 0 ? h1[l.gen] : act.apply(fx, a2.inv(h1[l.gen]));
    s = a2.mul(act.apply(a1.inv(phi), s), sy);
  }
  return s;
}

/// H_2 on a crossed word: prod (f_1(conj) |> H_2(gen))^exp in A_3.
inline Elem eval_H2_on_crossed(const FiniteCrossedComplex& c, std::span<const Elem> f1,
                               std::span<const Elem> h2, const CrossedWord& cw) {
  if (c.length() < 3) throw Error(ErrorCode::IndexOutOfRange, "H_2 needs L >= 3");
  const auto& a1 = c.group(1);
  const auto& a3 = c.group(3);
  const auto& act = c.action(3);
  Elem acc = FiniteGroup::identity;
  for (const auto& t : cw) {
    const Elem v = act.apply(eval_word(a1, f1, t.conj), h2[t.gen]);
    acc = a3.mul(acc, t.exp > 0 ? v : a3.inv(v));
  }
  return acc;
}

/// H_k on a module element (k >= 3): sum coef * (f_1(twist) |> H_k(gen)) in A_{k+1}.
inline Elem eval_Hk_on_module(const FiniteCrossedComplex& c, std::span<const Elem> f1,
                              std::span<const Elem> hk, const ModuleElt& m, std::size_t k) {
  if (k < 3) throw Error(ErrorCode::IndexOutOfRange, "module homotopies start at degree 3");
  if (c.length() < k + 1) throw Error(ErrorCode::IndexOutOfRange, "H_k needs L >= k + 1");
  const auto& a1 = c.group(1);
  const auto& target = c.group(k + 1);
  const auto& act = c.action(k + 1);
  Elem acc = FiniteGroup::identity;
  for (const auto& t : m) {
    const Elem v = act.apply(eval_word(a1, f1, t.twist), hk[t.gen]);
    acc = target.mul(acc, target.power(v, t.coef));
  }
  return acc;
}

/// H_{n-1} applied to the attaching element of the n-cell `cell`, in A_n.
inline Elem eval_homotopy_on_attach(const CWPresentation& p, const FiniteCrossedComplex& c,
                                    const Homotopy1& k, std::size_t n, CellIndex cell) {
  const auto f1 = k.source.at(1);
  switch (n) {
    case 2: return eval_derivation(c, f1, k.at(1), p.attach2[cell]);
    case 3: return eval_H2_on_crossed(c, f1, k.at(2), p.attach3[cell]);
    default: return eval_Hk_on_module(c, f1, k.at(n - 1), p.attach_module(n)[cell], n - 1);
  }
}

/// The morphism g reached from k.source along k. The result is checked
/// against every morphism condition; failure raises TargetNotMorphism.
inline Morphism homotopy_target(const FiniteCrossedComplex& c, const CWPresentation& p,
                                const Homotopy1& k) {
  const std::size_t L = c.length();
  Morphism g = k.source;
  if (L >= 2) {
    const auto& a1 = c.group(1);
    for (CellIndex x = 0; x < p.count(1); ++x)
      g.values[0][x] = a1.mul(k.source.values[0][x], c.boundary(2)(k.values[0][x]));
  }
  for (std::size_t n = 2; n <= L; ++n) {
    const auto& an = c.group(n);
    for (CellIndex cell = 0; cell < p.count(n); ++cell) {
      Elem v = an.mul(k.source.values[n - 1][cell], eval_homotopy_on_attach(p, c, k, n, cell));
      if (n < L) v = an.mul(v, c.boundary(n + 1)(k.values[n - 1][cell]));
      g.values[n - 1][cell] = v;
    }
  }
  const auto defect = morphism_defect(p, c, g);
  if (!defect.empty()) throw Error(ErrorCode::TargetNotMorphism, defect);
  return g;
}

/// Number of L0-fold homotopies with a given source:
/// prod_k |A_{k + L0}|^{l_k}.
inline BigInt count_homotopies_from(const Morphism& /*source*/, const CWPresentation& p,
                                    const FiniteCrossedComplex& c, std::size_t fold) {
  if (fold < 1) throw Error(ErrorCode::IndexOutOfRange, "homotopy fold must be >= 1");
  BigInt total = 1;
  for (std::size_t k = 1; k + fold <= c.length(); ++k) total *= big_pow(c.size_at(k + fold), p.count(k));
  return total;
}

/// Calls fn(const Homotopy1&) for every 1-fold homotopy with source f, in
/// lexicographic order of the generator values.
template <typename Fn>
void for_each_homotopy(const FiniteCrossedComplex& c, const CWPresentation& p, const Morphism& f,
                       Fn&& fn) {
  const std::size_t L = c.length();
  Homotopy1 k{f, {}};
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t n = 1; n + 1 <= L; ++n) {
    k.values.emplace_back(p.count(n), FiniteGroup::identity);
    for (std::size_t i = 0; i < p.count(n); ++i) slots.emplace_back(n, i);
  }
  while (true) {
    fn(std::as_const(k));
    std::size_t s = slots.size();
    while (s > 0) {
      const auto [n, i] = slots[s - 1];
      auto& v = k.values[n - 1][i];
      if (++v < c.group(n + 1).order()) break;
      v = 0;
      --s;
    }
    if (s == 0) return;
  }
}

struct ClassOptions {
  unsigned threads = 1;
  std::uint64_t cap = default_enumeration_cap;
  std::uint64_t edge_budget = default_edge_budget;
};

struct HomotopyClasses {
  /// every morphism, in lexicographic order
  std::vector<Morphism> morphisms;
  /// class id of each morphism; classes are numbered by their least member
  std::vector<std::size_t> class_of;
  /// index (into morphisms) of the least member of each class
  std::vector<std::size_t> representatives;
  std::vector<std::size_t> sizes;

  std::size_t count() const noexcept { return representatives.size(); }
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// The smaller root survives.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

inline std::size_t index_of(const std::vector<Morphism>& sorted, const Morphism& g) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), g);
  if (it == sorted.end() || !(*it == g)) {
    throw Error(ErrorCode::InternalAssertion, "homotopy target missing from the enumeration");
  }
  return static_cast<std::size_t>(it - sorted.begin());
}

}  // namespace detail

/// Partitions Hom(Pi(M), A) into the components of the homotopy groupoid by
/// joining every f with the target of every homotopy out of f.
inline HomotopyClasses homotopy_classes(const CWPresentation& p, const FiniteCrossedComplex& c,
                                        const ClassOptions& options = {}) {
  HomotopyClasses out;
  out.morphisms = enumerate_homs(p, c, {options.threads, options.cap, false});
  const std::size_t N = out.morphisms.size();
  const BigInt per_source = count_homotopies_from({}, p, c, 1);
  if (per_source * N > options.edge_budget) {
    throw Error(ErrorCode::ResultTooLarge, "homotopy edge space " + BigInt(per_source * N).str() +
                                               " exceeds budget " +
                                               std::to_string(options.edge_budget));
  }
  const unsigned threads =
      std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(std::max<std::size_t>(N, 1))));
  std::vector<detail::UnionFind> partial(threads, detail::UnionFind(N));
  const auto work = [&](unsigned t) {
    const std::size_t begin = N * t / threads;
    const std::size_t end = N * (t + 1) / threads;
    for (std::size_t i = begin; i < end; ++i) {
      for_each_homotopy(c, p, out.morphisms[i], [&](const Homotopy1& k) {
        partial[t].unite(i, detail::index_of(out.morphisms, homotopy_target(c, p, k)));
      });
    }
  };
  detail::HomSearch::run_tasks(threads, threads, [&](std::uint64_t t) { work(static_cast<unsigned>(t)); });

  detail::UnionFind merged(N);
  for (auto& uf : partial)
    for (std::size_t i = 0; i < N; ++i) merged.unite(i, uf.find(i));

  out.class_of.assign(N, 0);
  std::vector<std::size_t> class_of_root(N, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < N; ++i) {
    const std::size_t root = merged.find(i);
    if (class_of_root[root] == static_cast<std::size_t>(-1)) {
      class_of_root[root] = out.representatives.size();
      out.representatives.push_back(i);
      out.sizes.push_back(0);
    }
    out.class_of[i] = class_of_root[root];
    ++out.sizes[out.class_of[i]];
  }
  return out;
}

}  // namespace xcomplex

#endif
