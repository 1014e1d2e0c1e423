/**
 * Combinatorial presentations of CW-complexes with a single 0-cell.
 *
 * A 2-cell attaches along a word in the free group on the 1-cells, a 3-cell
 * along a product of conjugated 2-cell generators (an element of the free
 * crossed module on the 2-cells), and an n-cell for n >= 4 along an element
 * of the free module on the (n-1)-cells, each term twisted by a word in the
 * 1-cells. These are exactly the data that determine crossed complex
 * morphisms out of the fundamental crossed complex of the skeletal
 * filtration.
 */
#ifndef XCOMPLEX_PRESENTATION_HPP
#define XCOMPLEX_PRESENTATION_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "xcomplex/crossed_complex.hpp"
#include "xcomplex/error.hpp"

namespace xcomplex {

using CellIndex = std::uint32_t;

struct Letter {
  CellIndex gen = 0;
  int exp = 1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

struct CrossedTerm {
  Word conj;
  CellIndex gen = 0;
  int exp = 1;

  friend bool operator==(const CrossedTerm&, const CrossedTerm&) = default;
};

using CrossedWord = std::vector<CrossedTerm>;

struct ModuleTerm {
  long long coef = 1;
  Word twist;
  CellIndex gen = 0;

  friend bool operator==(const ModuleTerm&, const ModuleTerm&) = default;
};

using ModuleElt = std::vector<ModuleTerm>;

struct CWPresentation {
  /// cells[n] is the number of n-cells; cells[0] must be 1.
  std::vector<std::size_t> cells{1};
  std::vector<Word> attach2;
  std::vector<CrossedWord> attach3;
  /// attach_high[n - 4] holds the attaching elements of the n-cells.
  std::vector<std::vector<ModuleElt>> attach_high;
  std::string name;

  std::size_t dimension() const noexcept { return cells.empty() ? 0 : cells.size() - 1; }
  std::size_t count(std::size_t n) const noexcept { return n < cells.size() ? cells[n] : 0; }

  const std::vector<ModuleElt>& attach_module(std::size_t n) const {
    static const std::vector<ModuleElt> none;
    return n - 4 < attach_high.size() ? attach_high[n - 4] : none;
  }

  friend bool operator==(const CWPresentation& a, const CWPresentation& b) {
    return a.cells == b.cells && a.attach2 == b.attach2 && a.attach3 == b.attach3 &&
           a.attach_high == b.attach_high;
  }
};

// ---------------------------------------------------------------------------
// Free group words

inline Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

inline Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& l : out) l.exp = -l.exp;
  return out;
}

inline Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// u w u^-1
inline Word conjugate(const Word& u, const Word& w) { return concat(concat(u, w), inverse(u)); }

/// The image of a crossed word under the boundary into the free group:
/// prod conj * attach2(gen)^exp * conj^-1, freely reduced.
inline Word crossed_boundary(const CWPresentation& p, const CrossedWord& cw) {
  Word out;
  for (const auto& t : cw) {
    const Word& rel = p.attach2.at(t.gen);
    out = concat(std::move(out), conjugate(t.conj, t.exp > 0 ? rel : inverse(rel)));
  }
  return free_reduce(out);
}

// ---------------------------------------------------------------------------
// Validation

namespace presentation_axiom {
inline constexpr std::string_view zero_cells = "single-0-cell";
inline constexpr std::string_view attach_count = "attach-count";
inline constexpr std::string_view generator_range = "generator-range";
inline constexpr std::string_view exponent = "exponent";
inline constexpr std::string_view boundary_square = "boundary-square";
}  // namespace presentation_axiom

/// Checks the single 0-cell, index ranges, and the complex condition for
/// 3-cells (their crossed words must map to the empty word). The condition
/// for cells of dimension >= 4 is not decided here.
inline ValidationReport validate_presentation(const CWPresentation& p) {
  namespace ax = presentation_axiom;
  ValidationReport r;
  if (p.cells.empty() || p.cells[0] != 1) {
    r.add(ax::zero_cells, 0, {}, "expected exactly one 0-cell");
    return r;
  }
  const std::size_t D = p.dimension();
  if (p.attach2.size() != p.count(2)) r.add(ax::attach_count, 2, {}, "attach2 size");
  if (p.attach3.size() != p.count(3)) r.add(ax::attach_count, 3, {}, "attach3 size");
  if (p.attach_high.size() != (D >= 4 ? D - 3 : 0)) {
    r.add(ax::attach_count, 4, {}, "attach_high dimensions");
  } else {
    for (std::size_t n = 4; n <= D; ++n)
      if (p.attach_high[n - 4].size() != p.count(n))
        r.add(ax::attach_count, n, {}, "attach size");
  }
  if (!r.ok()) return r;

  const auto check_word = [&](const Word& w, std::size_t n, CellIndex cell) {
    bool fine = true;
    for (const auto& l : w) {
      if (l.gen >= p.count(1)) {
        r.add(ax::generator_range, n, {cell, l.gen}, "1-cell index");
        fine = false;
      }
      if (l.exp != 1 && l.exp != -1) {
        r.add(ax::exponent, n, {cell}, "word exponent must be +-1");
        fine = false;
      }
    }
    return fine;
  };
  for (CellIndex c = 0; c < p.count(2); ++c) check_word(p.attach2[c], 2, c);
  for (CellIndex c = 0; c < p.count(3); ++c) {
    bool fine = true;
    for (const auto& t : p.attach3[c]) {
      fine = check_word(t.conj, 3, c) && fine;
      if (t.gen >= p.count(2)) {
        r.add(ax::generator_range, 3, {c, t.gen}, "2-cell index");
        fine = false;
      }
      if (t.exp != 1 && t.exp != -1) {
        r.add(ax::exponent, 3, {c}, "crossed exponent must be +-1");
        fine = false;
      }
    }
    if (fine && r.ok() && !crossed_boundary(p, p.attach3[c]).empty()) {
      r.add(ax::boundary_square, 3, {c}, "boundary of the attaching crossed word is not trivial");
    }
  }
  for (std::size_t n = 4; n <= D; ++n)
    for (CellIndex c = 0; c < p.count(n); ++c)
      for (const auto& t : p.attach_high[n - 4][c]) {
        check_word(t.twist, n, c);
        if (t.gen >= p.count(n - 1)) r.add(ax::generator_range, n, {c, t.gen}, "cell index");
      }
  return r;
}

inline void require_valid(const CWPresentation& p) {
  auto report = validate_presentation(p);
  if (!report.ok()) throw ValidationError(std::move(report));
}

// ---------------------------------------------------------------------------
// Constructions

namespace detail {

inline Word shift(Word w, CellIndex by) {
  for (auto& l : w) l.gen += by;
  return w;
}

inline CrossedWord shift(CrossedWord cw, CellIndex by1, CellIndex by2) {
  for (auto& t : cw) {
    t.conj = shift(std::move(t.conj), by1);
    t.gen += by2;
  }
  return cw;
}

inline ModuleElt shift(ModuleElt m, CellIndex by1, CellIndex by_gen) {
  for (auto& t : m) {
    t.twist = shift(std::move(t.twist), by1);
    t.gen += by_gen;
  }
  return m;
}

inline void resize_to(CWPresentation& p, std::size_t dim) {
  if (p.cells.size() < dim + 1) p.cells.resize(dim + 1, 0);
  if (dim >= 4 && p.attach_high.size() < dim - 3) p.attach_high.resize(dim - 3);
}

}  // namespace detail

/// Cells of q are appended after those of p in every dimension; the 0-cell is
/// shared.
inline CWPresentation wedge(const CWPresentation& p, const CWPresentation& q) {
  CWPresentation out = p;
  const std::size_t D = std::max(p.dimension(), q.dimension());
  detail::resize_to(out, D);
  const auto off = [&](std::size_t n) { return static_cast<CellIndex>(p.count(n)); };
  for (std::size_t n = 1; n <= D; ++n) out.cells[n] = p.count(n) + q.count(n);
  for (const auto& w : q.attach2) out.attach2.push_back(detail::shift(w, off(1)));
  for (const auto& cw : q.attach3) out.attach3.push_back(detail::shift(cw, off(1), off(2)));
  for (std::size_t n = 4; n <= q.dimension(); ++n)
    for (const auto& m : q.attach_high[n - 4])
      out.attach_high[n - 4].push_back(detail::shift(m, off(1), off(n - 1)));
  out.name = (p.name.empty() ? "?" : p.name) + " v " + (q.name.empty() ? "?" : q.name);
  return out;
}

inline CWPresentation point() {
  CWPresentation p;
  p.name = "point";
  return p;
}

/// One 0-cell and one n-cell with trivial attaching data.
inline CWPresentation sphere(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::IndexOutOfRange, "sphere dimension must be >= 1");
  CWPresentation p;
  detail::resize_to(p, n);
  p.cells[n] = 1;
  if (n == 2) p.attach2.emplace_back();
  if (n == 3) p.attach3.emplace_back();
  if (n >= 4) p.attach_high[n - 4].emplace_back();
  p.name = "sphere(" + std::to_string(n) + ")";
  return p;
}

/// D^n with cells in dimensions 0, n-1 and n; the n-cell attaches along the
/// (n-1)-cell exactly once.
inline CWPresentation disk(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::IndexOutOfRange, "disk dimension must be >= 2");
  CWPresentation p = sphere(n - 1);
  detail::resize_to(p, n);
  p.cells[n] = 1;
  if (n == 2) p.attach2.push_back({{0, 1}});
  if (n == 3) p.attach3.push_back({{{}, 0, 1}});
  if (n >= 4) p.attach_high[n - 4].push_back({{1, {}, 0}});
  p.name = "disk(" + std::to_string(n) + ")";
  return p;
}

/// Product of g commutators [a_1, b_1] ... [a_g, b_g] over 2g 1-cells
/// ordered a_1, b_1, ..., a_g, b_g.
inline CWPresentation genus_surface(std::size_t g) {
  CWPresentation p;
  p.cells = {1, 2 * g, 1};
  Word w;
  for (std::size_t i = 0; i < g; ++i) {
    const auto a = static_cast<CellIndex>(2 * i);
    const auto b = a + 1;
    w.insert(w.end(), {{a, 1}, {b, 1}, {a, -1}, {b, -1}});
  }
  p.attach2.push_back(std::move(w));
  p.name = "genus_surface(" + std::to_string(g) + ")";
  return p;
}

/// Cells a, b and one 2-cell along a b a^-1 b^-1.
inline CWPresentation torus() {
  auto p = genus_surface(1);
  p.name = "torus";
  return p;
}

inline CWPresentation rp2() {
  CWPresentation p;
  p.cells = {1, 1, 1};
  p.attach2.push_back({{0, 1}, {0, 1}});
  p.name = "rp2";
  return p;
}

inline CWPresentation klein_bottle() {
  CWPresentation p;
  p.cells = {1, 2, 1};
  p.attach2.push_back({{0, 1}, {1, 1}, {0, -1}, {1, 1}});
  p.name = "klein_bottle";
  return p;
}

/// S^2 as two hemispheres attached along x and x^-1.
inline CWPresentation sphere2_two_cells() {
  CWPresentation p;
  p.cells = {1, 1, 2};
  p.attach2.push_back({{0, 1}});
  p.attach2.push_back({{0, -1}});
  p.name = "sphere2_two_cells";
  return p;
}

/// Reverses the order of the cells in every dimension, reindexing all
/// attaching data accordingly.
inline CWPresentation reverse_cells(const CWPresentation& p) {
  CWPresentation out = p;
  const auto flip = [&](CellIndex i, std::size_t n) {
    return static_cast<CellIndex>(p.count(n) - 1 - i);
  };
  const auto flip_word = [&](Word w) {
    for (auto& l : w) l.gen = flip(l.gen, 1);
    return w;
  };
  out.attach2.clear();
  for (auto it = p.attach2.rbegin(); it != p.attach2.rend(); ++it)
    out.attach2.push_back(flip_word(*it));
  out.attach3.clear();
  for (auto it = p.attach3.rbegin(); it != p.attach3.rend(); ++it) {
    CrossedWord cw = *it;
    for (auto& t : cw) {
      t.conj = flip_word(t.conj);
      t.gen = flip(t.gen, 2);
    }
    out.attach3.push_back(std::move(cw));
  }
  for (std::size_t n = 4; n <= p.dimension(); ++n) {
    auto& dst = out.attach_high[n - 4];
    dst.clear();
    for (auto it = p.attach_high[n - 4].rbegin(); it != p.attach_high[n - 4].rend(); ++it) {
      ModuleElt m = *it;
      for (auto& t : m) {
        t.twist = flip_word(t.twist);
        t.gen = flip(t.gen, n - 1);
      }
      dst.push_back(std::move(m));
    }
  }
  out.name = p.name + " (reversed)";
  return out;
}

/// Replaces the attaching word w of 2-cell c by u w u^-1, and rewrites every
/// 3-cell term (v, c, e) as (v u^-1, c, e) so that 3-cell boundaries are
/// unchanged.
inline CWPresentation conjugate_relator(const CWPresentation& p, CellIndex c, const Word& u) {
  if (c >= p.count(2)) throw Error(ErrorCode::IndexOutOfRange, "no such 2-cell");
  CWPresentation out = p;
  out.attach2[c] = conjugate(u, p.attach2[c]);
  const Word u_inv = inverse(u);
  for (auto& cw : out.attach3)
    for (auto& t : cw)
      if (t.gen == c) t.conj = concat(t.conj, u_inv);
  return out;
}

}  // namespace xcomplex

#endif
