#include <catch_amalgamated.hpp>

#include "xcomplex/crossed_complex.hpp"
#include "xcomplex/library.hpp"
#include "xcomplex/random.hpp"
#include "xcomplex/selfcheck.hpp"

using namespace xcomplex;

namespace {

CrossedComplexData crossed_module_data(const FiniteGroup& base, const FiniteGroup& fibre, std::vector<Elem> d,
                                       std::vector<Elem> act) {
  return {{base, fibre}, {GroupHom{fibre, base, std::move(d)}}, {GroupAction{base, fibre, std::move(act)}}, "test"};
}

/// A_1 = Z/2, A_2 = Z/3 with Z/2 acting by inversion, zero d_2, then A_3.
CrossedComplexData inversion_tower(const FiniteGroup& a3, std::vector<Elem> d3, std::vector<Elem> act3) {
  const auto z2 = cyclic_group(2);
  const auto z3 = cyclic_group(3);
  return {{z2, z3, a3},
          {GroupHom{z3, z2, {0, 0, 0}}, GroupHom{a3, z3, std::move(d3)}},
          {GroupAction{z2, z3, {0, 1, 2, 0, 2, 1}}, GroupAction{z2, a3, std::move(act3)}},
          "tower"};
}

}  // namespace

TEST_CASE("valid crossed modules") {
  const auto z2 = cyclic_group(2);
  const auto z4 = cyclic_group(4);
  CHECK(validate(crossed_module_data(z2, z2, {0, 0}, {0, 1, 0, 1})).ok());
  CHECK(validate(crossed_module_data(z4, z2, {0, 2}, {0, 1, 0, 1, 0, 1, 0, 1})).ok());
  for (const auto& name : library_complex_names()) CHECK(validate(builtin_complex(name)).ok());
}

TEST_CASE("planted defects are reported with the axiom name") {
  const auto z2 = cyclic_group(2);
  const auto z4 = cyclic_group(4);
  const auto bad_boundary = validate(crossed_module_data(z4, z2, {0, 1}, {0, 1, 0, 1, 0, 1, 0, 1}));
  CHECK(bad_boundary.has("boundary-hom"));
  CHECK_FALSE(bad_boundary.ok());

  // no automorphism of Z/2 other than the identity, so any claimed
  // nontrivial action of Z/3 fails
  const auto z3 = cyclic_group(3);
  const auto bad_action = validate(crossed_module_data(z3, z2, {0, 0}, {0, 1, 1, 0, 0, 1}));
  CHECK(bad_action.has("action"));
  CHECK_THROWS_AS(from_crossed_module(z3, z2, zero_hom(z2, z3), GroupAction{z3, z2, {0, 1, 1, 0, 0, 1}}),
                  ValidationError);

  const auto s3 = symmetric_group_3();
  const auto peiffer = validate(crossed_module_data(trivial_group(), s3, {0, 0, 0, 0, 0, 0}, {0, 1, 2, 3, 4, 5}));
  CHECK(peiffer.has("Peiffer"));
  CHECK_FALSE(peiffer.has("CM1"));
  for (const auto& v : peiffer.violations) CHECK(v.witness.size() == 2);

  const auto cm1 = validate(crossed_module_data(s3, s3, identity_hom(s3).image, trivial_action(s3, s3).table));
  CHECK(cm1.has("CM1"));

  CHECK(validate(inversion_tower(s3, {0, 0, 0, 0, 0, 0}, trivial_action(z2, s3).table)).has("abelian"));
  CHECK(validate(inversion_tower(z3, {0, 1, 2}, {0, 1, 2, 0, 1, 2})).has("equivariance"));
  CHECK(validate(inversion_tower(z3, {0, 0, 0}, {0, 1, 2, 0, 2, 1})).ok());

  // d_2 d_3 nonzero
  CrossedComplexData complex{{z4, z2, z2},
                             {GroupHom{z2, z4, {0, 2}}, identity_hom(z2)},
                             {trivial_action(z4, z2), trivial_action(z4, z2)},
                             "complex"};
  CHECK(validate(complex).has("complex"));

  // im d_2 = Z/2 acts nontrivially on A_3
  CrossedComplexData factoring{{z2, z2, z3},
                               {identity_hom(z2), zero_hom(z3, z2)},
                               {trivial_action(z2, z2), GroupAction{z2, z3, {0, 1, 2, 0, 2, 1}}},
                               "factoring"};
  const auto fr = validate(factoring);
  CHECK(fr.has("factoring"));
  CHECK(fr.violations.size() == 2);
}

TEST_CASE("inconsistent dimensions are errors, not violations") {
  CrossedComplexData d{{cyclic_group(2), cyclic_group(2)}, {}, {}, "short"};
  CHECK_THROWS_AS(validate(d), Error);
  d.boundaries.push_back(GroupHom{cyclic_group(3), cyclic_group(2), {0, 0, 0}});
  d.actions.push_back(trivial_action(cyclic_group(2), cyclic_group(2)));
  try {
    validate(d);
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
}

TEST_CASE("groups as length-one complexes") {
  const auto t = from_group(trivial_group());
  CHECK(t.length() == 1);
  CHECK(t.group(1).order() == 1);
  CHECK(from_group(symmetric_group_3()).length() == 1);
  CHECK(validate(from_group(cyclic_group(5))).ok());
  CHECK(pi1(from_group(symmetric_group_3())) == symmetric_group_3());
}

TEST_CASE("homotopy groups of the builtin crossed modules") {
  const auto incl = builtin_complex("Z4Z2incl");
  CHECK(pi1(incl).order() == 2);
  CHECK(homology(incl, 2).order() == 1);
  const auto zero = builtin_complex("Z2Z2zero");
  CHECK(pi1(zero).order() == 2);
  CHECK(homology(zero, 2).order() == 2);
  const auto l3 = builtin_complex("L3");
  CHECK(homology(l3, 2).order() == 1);
  CHECK(homology(l3, 3).order() == 2);
  CHECK(pi1(builtin_complex("S3Z3conj")).order() == 2);
  CHECK(pi1(builtin_complex("S3id")).order() == 1);
  CHECK(homology(builtin_complex("S3id"), 2).order() == 1);
  CHECK_THROWS_AS(homology(l3, 1), Error);
  CHECK_THROWS_AS(homology(l3, 4), Error);
}

TEST_CASE("size_at follows the truncation convention") {
  CHECK(size_at(from_group(symmetric_group_3()), 1) == 6);
  for (const auto& name : library_complex_names()) {
    const auto c = builtin_complex(name);
    CHECK(size_at(c, c.length() + 7) == 1);
  }
  CHECK(size_at(builtin_complex("Z4Z2incl"), 2) == 2);
  CHECK_THROWS_AS(size_at(builtin_complex("L3"), 0), Error);
}

TEST_CASE("homology orders divide group orders on random complexes") {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const auto c = random_crossed_complex(rng, 3);
    CHECK(c.group(1).order() % pi1(c).order() == 0);
    for (std::size_t n = 2; n <= c.length(); ++n) {
      const std::size_t an = c.group(n).order();
      CHECK(an % homology(c, n).order() == 0);
      CHECK(kernel_of(c.boundary(n)).size() * image_of(c.boundary(n)).members.size() == an);
    }
    // the action above degree 2 is trivial on im d_2
    for (std::size_t n = 3; n <= c.length(); ++n)
      for (Elem x : c.boundary(2).image)
        for (Elem a = 0; a < c.group(n).order(); ++a) CHECK(c.action(n).apply(x, a) == a);
  }
}

TEST_CASE("every single-entry action change is detected") {
  std::vector<FiniteCrossedComplex> bases;
  for (const auto& name : library_complex_names()) bases.push_back(builtin_complex(name));
  Rng rng(5);
  for (int i = 0; i < 10; ++i) bases.push_back(random_crossed_complex(rng, 3));
  std::size_t mutations = 0;
  for (const auto& c : bases)
    for (std::size_t n = 2; n <= c.length(); ++n) {
      const std::size_t order = c.group(n).order();
      for (std::size_t i = 0; i < c.action(n).table.size(); ++i)
        for (Elem v = 0; v < order; ++v) {
          auto data = c.data();
          if (data.actions[n - 2].table[i] == v) continue;
          data.actions[n - 2].table[i] = v;
          ++mutations;
          REQUIRE(validate(data).has("action"));
        }
    }
  CHECK(mutations > 100);
}

TEST_CASE("boundary changes that cannot give a homomorphism are detected") {
  std::vector<FiniteCrossedComplex> bases;
  for (const auto& name : library_complex_names()) bases.push_back(builtin_complex(name));
  for (const auto& c : bases)
    for (std::size_t n = 2; n <= c.length(); ++n) {
      const auto& image = c.boundary(n).image;
      for (std::size_t i = 0; i < image.size(); ++i) {
        if (i != 0 && image.size() < 3) continue;
        for (Elem v = 0; v < c.group(n - 1).order(); ++v) {
          if (v == image[i]) continue;
          auto data = c.data();
          data.boundaries[n - 2].image[i] = v;
          REQUIRE(validate(data).has("boundary-hom"));
        }
      }
    }
}

TEST_CASE("fuzzed mutations name the planted axiom") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto r = selfcheck::axiom_fuzzing(seed, 100);
    INFO(r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("report summary is bounded") {
  const auto s3 = symmetric_group_3();
  const auto r = validate(crossed_module_data(s3, s3, identity_hom(s3).image, trivial_action(s3, s3).table));
  CHECK(r.violations.size() > 8);
  CHECK(r.summary().find("more") != std::string::npos);
}
