/**
 * Finite reduced crossed complexes
 *
 *     A_L --d_L--> ... --d_3--> A_2 --d_2--> A_1
 *
 * with A_1 acting on every A_n (n >= 2). Degree 2 is a crossed module, the
 * groups above degree 2 are abelian A_1-modules on which im d_2 acts
 * trivially, and consecutive boundaries compose to zero.
 */
#ifndef XCOMPLEX_CROSSED_COMPLEX_HPP
#define XCOMPLEX_CROSSED_COMPLEX_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "xcomplex/error.hpp"
#include "xcomplex/group.hpp"

namespace xcomplex {

namespace axiom {
inline constexpr std::string_view boundary_hom = "boundary-hom";
inline constexpr std::string_view action = "action";
inline constexpr std::string_view cm1 = "CM1";
inline constexpr std::string_view peiffer = "Peiffer";
inline constexpr std::string_view equivariance = "equivariance";
inline constexpr std::string_view complex = "complex";
inline constexpr std::string_view abelian = "abelian";
inline constexpr std::string_view factoring = "factoring";
}  // namespace axiom

struct Violation {
  std::string axiom;
  std::size_t degree = 0;
  std::vector<Elem> witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }

  bool has(std::string_view axiom_name) const {
    for (const auto& v : violations)
      if (v.axiom == axiom_name) return true;
    return false;
  }

  void add(std::string_view axiom_name, std::size_t degree, std::vector<Elem> witness,
           std::string detail = {}) {
    violations.push_back({std::string(axiom_name), degree, std::move(witness), std::move(detail)});
  }

  void append(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }

  std::string summary() const {
    if (ok()) return "ok";
    std::string s;
    std::size_t shown = 0;
    for (const auto& v : violations) {
      if (shown++ == 8) {
        s += "; ... " + std::to_string(violations.size() - 8) + " more";
        break;
      }
      if (!s.empty()) s += "; ";
      s += v.axiom + "@" + std::to_string(v.degree);
      if (!v.detail.empty()) s += " (" + v.detail + ")";
    }
    return s;
  }
};

/// Raised when a structure fails validation; carries the full report.
class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report)
      : Error(ErrorCode::ValidationFailed, report.summary()), report_(std::move(report)) {}

  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// Raw, unvalidated tables. boundaries[i] is d_{i+2}, actions[i] is the
/// action of A_1 on A_{i+2}.
struct CrossedComplexData {
  std::vector<FiniteGroup> groups;
  std::vector<GroupHom> boundaries;
  std::vector<GroupAction> actions;
  std::string name;

  std::size_t length() const noexcept { return groups.size(); }
};

namespace detail {

inline void require_dimensions(const CrossedComplexData& d) {
  const std::size_t L = d.length();
  if (L == 0) throw Error(ErrorCode::DimensionMismatch, "crossed complex needs at least A_1");
  if (d.boundaries.size() != L - 1 || d.actions.size() != L - 1) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(L - 1) + " boundaries and actions");
  }
  for (std::size_t n = 2; n <= L; ++n) {
    const auto& b = d.boundaries[n - 2];
    const auto& a = d.actions[n - 2];
    if (!(b.source == d.groups[n - 1]) || !(b.target == d.groups[n - 2])) {
      throw Error(ErrorCode::DimensionMismatch,
                  "boundary " + std::to_string(n) + " does not map A_n to A_{n-1}");
    }
    if (!(a.actor == d.groups[0]) || !(a.space == d.groups[n - 1])) {
      throw Error(ErrorCode::DimensionMismatch,
                  "action " + std::to_string(n) + " is not A_1 acting on A_n");
    }
    require_shape(b);
    require_shape(a);
    for (Elem v : b.image)
      if (v >= b.target.order())
        throw Error(ErrorCode::DimensionMismatch, "boundary entry out of range");
    for (Elem v : a.table)
      if (v >= a.space.order())
        throw Error(ErrorCode::DimensionMismatch, "action entry out of range");
  }
}

inline void validate_boundary_hom(const GroupHom& h, std::size_t n, ValidationReport& r) {
  const auto& s = h.source;
  const auto& t = h.target;
  if (h(0) != 0) r.add(axiom::boundary_hom, n, {0}, "identity not preserved");
  for (Elem x = 0; x < s.order(); ++x)
    for (Elem y = 0; y < s.order(); ++y)
      if (h(s.mul(x, y)) != t.mul(h(x), h(y))) r.add(axiom::boundary_hom, n, {x, y});
}

inline void validate_action(const GroupAction& a, std::size_t n, ValidationReport& r) {
  const auto& g = a.actor;
  const auto& e = a.space;
  for (Elem x = 0; x < e.order(); ++x)
    if (a.apply(0, x) != x) r.add(axiom::action, n, {0, x}, "identity acts nontrivially");
  std::vector<char> seen(e.order());
  for (Elem x = 0; x < g.order(); ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem u = 0; u < e.order(); ++u) {
      const Elem v = a.apply(x, u);
      if (seen[v]) r.add(axiom::action, n, {x, u}, "not injective");
      seen[v] = 1;
    }
    for (Elem u = 0; u < e.order(); ++u)
      for (Elem v = 0; v < e.order(); ++v)
        if (a.apply(x, e.mul(u, v)) != e.mul(a.apply(x, u), a.apply(x, v)))
          r.add(axiom::action, n, {x, u, v}, "not an automorphism");
  }
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y) {
      const Elem xy = g.mul(x, y);
      for (Elem u = 0; u < e.order(); ++u)
        if (a.apply(xy, u) != a.apply(x, a.apply(y, u)))
          r.add(axiom::action, n, {x, y, u}, "not a left action");
    }
}

}  // namespace detail

/// Exhaustively checks every axiom and lists each violation with its witness.
/// Only inconsistent table dimensions are errors (DimensionMismatch).
inline ValidationReport validate(const CrossedComplexData& d) {
  detail::require_dimensions(d);
  ValidationReport r;
  const std::size_t L = d.length();
  const auto& a1 = d.groups[0];

  for (std::size_t n = 2; n <= L; ++n) {
    detail::validate_boundary_hom(d.boundaries[n - 2], n, r);
    detail::validate_action(d.actions[n - 2], n, r);
  }
  if (L >= 2) {
    const auto& d2 = d.boundaries[0];
    const auto& act = d.actions[0];
    const auto& a2 = d.groups[1];
    for (Elem x = 0; x < a1.order(); ++x)
      for (Elem e = 0; e < a2.order(); ++e)
        if (d2(act.apply(x, e)) != a1.conj(x, d2(e))) r.add(axiom::cm1, 2, {x, e});
    for (Elem e = 0; e < a2.order(); ++e)
      for (Elem f = 0; f < a2.order(); ++f)
        if (act.apply(d2(e), f) != a2.conj(e, f)) r.add(axiom::peiffer, 2, {e, f});
  }
  std::vector<char> in_image(a1.order(), 0);
  if (L >= 2)
    for (Elem v : d.boundaries[0].image) in_image[v] = 1;
  for (std::size_t n = 3; n <= L; ++n) {
    const auto& an = d.groups[n - 1];
    const auto& dn = d.boundaries[n - 2];
    const auto& below = d.boundaries[n - 3];
    const auto& act = d.actions[n - 2];
    const auto& act_below = d.actions[n - 3];
    for (Elem x = 0; x < a1.order(); ++x)
      for (Elem a = 0; a < an.order(); ++a)
        if (dn(act.apply(x, a)) != act_below.apply(x, dn(a)))
          r.add(axiom::equivariance, n, {x, a});
    for (Elem a = 0; a < an.order(); ++a)
      if (below(dn(a)) != FiniteGroup::identity) r.add(axiom::complex, n, {a});
    for (Elem a = 0; a < an.order(); ++a)
      for (Elem b = a + 1; b < an.order(); ++b)
        if (an.mul(a, b) != an.mul(b, a)) r.add(axiom::abelian, n, {a, b});
    for (Elem x = 0; x < a1.order(); ++x) {
      if (!in_image[x]) continue;
      for (Elem a = 0; a < an.order(); ++a)
        if (act.apply(x, a) != a) r.add(axiom::factoring, n, {x, a});
    }
  }
  return r;
}

class FiniteCrossedComplex {
 public:
  /// Validates and freezes the tables; throws ValidationError when any axiom
  /// fails.
  static FiniteCrossedComplex create(CrossedComplexData data) {
    auto report = validate(data);
    if (!report.ok()) throw ValidationError(std::move(report));
    return FiniteCrossedComplex(std::move(data));
  }

  std::size_t length() const noexcept { return data_.length(); }
  const std::string& name() const noexcept { return data_.name; }
  const CrossedComplexData& data() const noexcept { return data_; }

  /// A_k, 1 <= k <= L
  const FiniteGroup& group(std::size_t k) const { return data_.groups.at(k - 1); }
  /// d_n, 2 <= n <= L
  const GroupHom& boundary(std::size_t n) const { return data_.boundaries.at(n - 2); }
  /// action of A_1 on A_n, 2 <= n <= L
  const GroupAction& action(std::size_t n) const { return data_.actions.at(n - 2); }
  /// fibers of d_n indexed by A_{n-1} elements, 2 <= n <= L
  const Fibers& fibers(std::size_t n) const { return fibers_.at(n - 2); }

  /// |A_k|, with the truncation convention |A_k| = 1 for k > L.
  std::size_t size_at(std::size_t k) const {
    if (k < 1) throw Error(ErrorCode::IndexOutOfRange, "size_at needs k >= 1");
    return k <= length() ? group(k).order() : 1;
  }

 private:
  explicit FiniteCrossedComplex(CrossedComplexData data) : data_(std::move(data)) {
    for (const auto& b : data_.boundaries) fibers_.push_back(fibers_of(b));
  }

  CrossedComplexData data_;
  std::vector<Fibers> fibers_;
};

inline ValidationReport validate(const FiniteCrossedComplex& c) { return validate(c.data()); }

inline std::size_t size_at(const FiniteCrossedComplex& c, std::size_t k) { return c.size_at(k); }

inline FiniteCrossedComplex from_group(const FiniteGroup& g) {
  return FiniteCrossedComplex::create({{g}, {}, {}, g.name()});
}

inline FiniteCrossedComplex from_crossed_module(const FiniteGroup& base, const FiniteGroup& fibre,
                                                const GroupHom& boundary,
                                                const GroupAction& action, std::string name = {}) {
  return FiniteCrossedComplex::create({{base, fibre}, {boundary}, {action}, std::move(name)});
}

/// pi_1 of the classifying space: A_1 / im d_2.
inline FiniteGroup pi1(const FiniteCrossedComplex& c) {
  if (c.length() == 1) return c.group(1);
  auto image = make_normal_subgroup(c.group(1), c.boundary(2).image);
  return quotient(c.group(1), image).group;
}

/// H_n = ker d_n / im d_{n+1} for 2 <= n <= L (d_{L+1} trivial).
inline FiniteGroup homology(const FiniteCrossedComplex& c, std::size_t n) {
  if (n < 2 || n > c.length()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "homology degree " + std::to_string(n) + " outside 2.." + std::to_string(c.length()));
  }
  const auto kernel = kernel_of(c.boundary(n));
  auto [kernel_group, inclusion] = subgroup_as_group(kernel);
  std::vector<Elem> image_local;
  if (n < c.length()) {
    for (Elem v : sorted_unique(c.boundary(n + 1).image)) {
      const auto it = std::lower_bound(kernel.members.begin(), kernel.members.end(), v);
      if (it == kernel.members.end() || *it != v) {
        throw Error(ErrorCode::ValidationFailed, "image of d_{n+1} is not inside ker d_n");
      }
      image_local.push_back(static_cast<Elem>(it - kernel.members.begin()));
    }
  } else {
    image_local.push_back(FiniteGroup::identity);
  }
  auto normal = make_normal_subgroup(kernel_group, std::move(image_local));
  return quotient(kernel_group, normal).group;
}

}  // namespace xcomplex

#endif
