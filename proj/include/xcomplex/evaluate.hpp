/**
 * Evaluation of attaching data under a colouring of the lower-dimensional
 * cells, and the morphism conditions built on it.
 */
#ifndef XCOMPLEX_EVALUATE_HPP
#define XCOMPLEX_EVALUATE_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "xcomplex/crossed_complex.hpp"
#include "xcomplex/error.hpp"
#include "xcomplex/presentation.hpp"

namespace xcomplex {

/// A colouring of cells by elements of the coefficient complex:
/// values[n - 1][c] is the element of A_n assigned to the n-cell c, for
/// n = 1..L. Cells above dimension L are implicitly coloured trivially.
/// Ordered lexicographically by (dimension, cell index, element index).
struct Morphism {
  std::vector<std::vector<Elem>> values;

  std::span<const Elem> at(std::size_t n) const { return values.at(n - 1); }

  friend bool operator==(const Morphism&, const Morphism&) = default;
  friend auto operator<=>(const Morphism&, const Morphism&) = default;
};

/// prod f1(gen)^exp over the letters; the empty word gives the identity.
inline Elem eval_word(const FiniteGroup& a1, std::span<const Elem> f1, const Word& w) {
  Elem acc = FiniteGroup::identity;
  for (const Letter& l : w) {
    const Elem v = f1[l.gen];
    acc = a1.mul(acc, l.exp > 0 ? v : a1.inv(v));
  }
  return acc;
}

inline Elem eval_word(const FiniteCrossedComplex& c, std::span<const Elem> f1, const Word& w) {
  for (const auto& l : w)
    if (l.gen >= f1.size()) throw Error(ErrorCode::IndexOutOfRange, "letter outside f1");
  return eval_word(c.group(1), f1, w);
}

/// prod (eval(conj) |> f2(gen))^exp in A_2.
inline Elem eval_crossed(const FiniteCrossedComplex& c, std::span<const Elem> f1,
                         std::span<const Elem> f2, const CrossedWord& cw) {
  if (c.length() < 2) throw Error(ErrorCode::IndexOutOfRange, "crossed words need L >= 2");
  const auto& a1 = c.group(1);
  const auto& a2 = c.group(2);
  const auto& act = c.action(2);
  Elem acc = FiniteGroup::identity;
  for (const auto& t : cw) {
    const Elem twisted = act.apply(eval_word(a1, f1, t.conj), f2[t.gen]);
    acc = a2.mul(acc, t.exp > 0 ? twisted : a2.inv(twisted));
  }
  return acc;
}

/// prod (eval(twist) |> fk(gen))^coef in the abelian group A_k, k >= 3.
inline Elem eval_module(const FiniteCrossedComplex& c, std::span<const Elem> f1,
                        std::span<const Elem> fk, const ModuleElt& m, std::size_t k) {
  if (k < 3) throw Error(ErrorCode::IndexOutOfRange, "module elements live in degree >= 3");
  if (c.length() < k) throw Error(ErrorCode::IndexOutOfRange, "module degree above L");
  const auto& a1 = c.group(1);
  const auto& ak = c.group(k);
  const auto& act = c.action(k);
  Elem acc = FiniteGroup::identity;
  for (const auto& t : m) {
    const Elem twisted = act.apply(eval_word(a1, f1, t.twist), fk[t.gen]);
    acc = ak.mul(acc, ak.power(twisted, t.coef));
  }
  return acc;
}

/// Image of the attaching element of the n-cell `cell` in A_{n-1} under the
/// colouring of the cells of dimension < n. Requires 2 <= n <= L + 1.
inline Elem eval_attach(const CWPresentation& p, const FiniteCrossedComplex& c,
                        const std::vector<std::vector<Elem>>& f, std::size_t n, CellIndex cell) {
  switch (n) {
    case 2: return eval_word(c.group(1), f[0], p.attach2[cell]);
    case 3: return eval_crossed(c, f[0], f[1], p.attach3[cell]);
    default: return eval_module(c, f[0], f[n - 2], p.attach_module(n)[cell], n - 1);
  }
}

/// Checks the morphism conditions: d_n(f_n(c)) = eval of the attaching element
/// of c for 2 <= n <= L, and the attaching elements of (L+1)-cells evaluate
/// to the identity. Returns an empty string on success, otherwise a
/// description of the first failure.
inline std::string morphism_defect(const CWPresentation& p, const FiniteCrossedComplex& c,
                                   const Morphism& f) {
  const std::size_t L = c.length();
  if (f.values.size() != L) return "colouring has wrong number of dimensions";
  for (std::size_t n = 1; n <= L; ++n) {
    if (f.values[n - 1].size() != p.count(n)) return "wrong cell count in dimension " + std::to_string(n);
    for (Elem v : f.values[n - 1])
      if (v >= c.group(n).order()) return "value out of range in dimension " + std::to_string(n);
  }
  for (std::size_t n = 2; n <= L; ++n)
    for (CellIndex cell = 0; cell < p.count(n); ++cell)
      if (c.boundary(n)(f.values[n - 1][cell]) != eval_attach(p, c, f.values, n, cell))
        return "boundary condition fails at " + std::to_string(n) + "-cell " + std::to_string(cell);
  for (CellIndex cell = 0; cell < p.count(L + 1); ++cell)
    if (eval_attach(p, c, f.values, L + 1, cell) != FiniteGroup::identity)
      return "kill condition fails at " + std::to_string(L + 1) + "-cell " + std::to_string(cell);
  return {};
}

inline bool is_morphism(const CWPresentation& p, const FiniteCrossedComplex& c, const Morphism& f) {
  return morphism_defect(p, c, f).empty();
}

}  // namespace xcomplex

#endif
