/**
 * Named spaces and coefficient complexes used by the CLI (`builtin:NAME`)
 * and by the self-check suite.
 */
#ifndef XCOMPLEX_LIBRARY_HPP
#define XCOMPLEX_LIBRARY_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "xcomplex/crossed_complex.hpp"
#include "xcomplex/error.hpp"
#include "xcomplex/group.hpp"
#include "xcomplex/presentation.hpp"

namespace xcomplex {

namespace detail {

inline std::pair<std::string, std::size_t> split_parameter(const std::string& name) {
  const auto colon = name.find(':');
  if (colon == std::string::npos) return {name, 0};
  const std::string arg = name.substr(colon + 1);
  if (arg.empty() || !std::all_of(arg.begin(), arg.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
    throw Error(ErrorCode::ParseError, "bad parameter in builtin name '" + name + "'");
  return {name.substr(0, colon), std::stoul(arg)};
}

}  // namespace detail

/// point, torus, rp2, klein_bottle, sphere2_two_cells, sphere:N, disk:N, genus:G
inline CWPresentation builtin_space(const std::string& name) {
  const auto [base, arg] = detail::split_parameter(name);
  if (base == "point") return point();
  if (base == "torus") return torus();
  if (base == "rp2") return rp2();
  if (base == "klein_bottle") return klein_bottle();
  if (base == "sphere2_two_cells") return sphere2_two_cells();
  if (base == "sphere") return sphere(arg);
  if (base == "disk") return disk(arg);
  if (base == "genus") return genus_surface(arg);
  throw Error(ErrorCode::ParseError, "unknown builtin space '" + name + "'");
}

inline std::vector<std::string> library_space_names() {
  return {"point",  "sphere:1", "sphere:2", "sphere:3", "sphere:4",     "disk:2",
          "disk:3", "disk:4",   "torus",    "genus:2",  "klein_bottle", "rp2",
          "sphere2_two_cells"};
}

inline FiniteCrossedComplex zero_crossed_module(const FiniteGroup& base, const FiniteGroup& fibre,
                                                std::string name) {
  return from_crossed_module(base, fibre, zero_hom(fibre, base), trivial_action(base, fibre),
                             std::move(name));
}

/// Z/2 -> Z/4, 1 |-> 2, trivial action.
inline FiniteCrossedComplex z4_z2_inclusion() {
  const auto z4 = cyclic_group(4);
  const auto z2 = cyclic_group(2);
  return from_crossed_module(z4, z2, GroupHom{z2, z4, {0, 2}}, trivial_action(z4, z2), "Z4Z2incl");
}

/// Z/4 <- Z/2 <- Z/2 with d_2 the inclusion, d_3 zero and trivial actions.
inline FiniteCrossedComplex three_term_complex() {
  const auto z4 = cyclic_group(4);
  const auto z2 = cyclic_group(2);
  const auto a3 = cyclic_group(2);
  CrossedComplexData d;
  d.groups = {z4, z2, a3};
  d.boundaries = {GroupHom{z2, z4, {0, 2}}, zero_hom(a3, z2)};
  d.actions = {trivial_action(z4, z2), trivial_action(z4, a3)};
  d.name = "L3";
  return FiniteCrossedComplex::create(std::move(d));
}

/// The 3-cycles Z/3 inside S_3 with the conjugation action.
inline FiniteCrossedComplex s3_z3_conjugation() {
  const auto s3 = symmetric_group_3();
  const auto z3 = cyclic_group(3);
  const std::vector<Elem> embed = {0, 3, 4};
  std::vector<Elem> table(6 * 3);
  for (Elem x = 0; x < 6; ++x)
    for (Elem e = 0; e < 3; ++e) {
      const Elem img = s3.conj(x, embed[e]);
      table[x * 3 + e] = static_cast<Elem>(std::find(embed.begin(), embed.end(), img) - embed.begin());
    }
  return from_crossed_module(s3, z3, GroupHom{z3, s3, embed}, GroupAction{s3, z3, std::move(table)},
                             "S3Z3conj");
}

/// The identity crossed module on S_3 (contractible classifying space).
inline FiniteCrossedComplex s3_identity() {
  const auto s3 = symmetric_group_3();
  return from_crossed_module(s3, s3, identity_hom(s3), conjugation_action(s3), "S3id");
}

/// Z/2 acting on Z/3 by inversion, zero boundary.
inline FiniteCrossedComplex z2_z3_inversion() {
  const auto z2 = cyclic_group(2);
  const auto z3 = cyclic_group(3);
  GroupAction act{z2, z3, {0, 1, 2, 0, 2, 1}};
  return from_crossed_module(z2, z3, zero_hom(z3, z2), act, "Z2Z3inv");
}

/// Z:N, S3, Z2Z2zero, Z4Z2incl, L3, S3Z3conj, S3id, Z2Z3inv
inline FiniteCrossedComplex builtin_complex(const std::string& name) {
  const auto [base, arg] = detail::split_parameter(name);
  if (base == "Z") return from_group(cyclic_group(arg));
  if (base == "S3") return from_group(symmetric_group_3());
  if (base == "Z2Z2zero") return zero_crossed_module(cyclic_group(2), cyclic_group(2), "Z2Z2zero");
  if (base == "Z4Z2incl") return z4_z2_inclusion();
  if (base == "L3") return three_term_complex();
  if (base == "S3Z3conj") return s3_z3_conjugation();
  if (base == "S3id") return s3_identity();
  if (base == "Z2Z3inv") return z2_z3_inversion();
  throw Error(ErrorCode::ParseError, "unknown builtin complex '" + name + "'");
}

inline std::vector<std::string> library_complex_names() {
  return {"Z:2", "Z:3", "Z:5", "S3", "Z2Z2zero", "Z4Z2incl", "L3", "S3Z3conj", "S3id", "Z2Z3inv"};
}

/// The standard coefficient suite: Z/2, Z/3, S_3 as groups, the crossed
/// modules (Z/2, Z/2, zero) and (Z/4, Z/2, incl), and a 3-term complex.
inline std::vector<FiniteCrossedComplex> standard_suite() {
  return {builtin_complex("Z:2"),      builtin_complex("Z:3"),      builtin_complex("S3"),
          builtin_complex("Z2Z2zero"), builtin_complex("Z4Z2incl"), builtin_complex("L3")};
}

/// Spaces paired with every suite complex in the self-check.
inline std::vector<CWPresentation> suite_spaces() {
  std::vector<CWPresentation> out;
  for (const char* name : {"point", "sphere:1", "sphere:2", "sphere:3", "disk:2", "disk:3", "torus",
                           "rp2", "klein_bottle", "sphere2_two_cells"})
    out.push_back(builtin_space(name));
  return out;
}

}  // namespace xcomplex

#endif
