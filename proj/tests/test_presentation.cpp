#include <catch_amalgamated.hpp>

#include "xcomplex/library.hpp"
#include "xcomplex/presentation.hpp"
#include "xcomplex/random.hpp"

using namespace xcomplex;

namespace {

Word w(std::initializer_list<std::pair<CellIndex, int>> letters) {
  Word out;
  for (const auto& [g, e] : letters) out.push_back({g, e});
  return out;
}

bool is_reduced(const Word& word) {
  for (std::size_t i = 1; i < word.size(); ++i)
    if (word[i].gen == word[i - 1].gen && word[i].exp == -word[i - 1].exp) return false;
  return true;
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(free_reduce(w({{0, 1}, {0, -1}})).empty());
  CHECK(free_reduce(w({{0, 1}, {1, 1}, {1, -1}, {0, 1}})) == w({{0, 1}, {0, 1}}));
  CHECK(free_reduce({}).empty());
  CHECK(free_reduce(w({{0, 1}, {1, 1}, {1, -1}, {0, -1}, {2, 1}})) == w({{2, 1}}));
  CHECK(free_reduce(concat(w({{0, 1}, {1, -1}}), inverse(w({{0, 1}, {1, -1}})))).empty());
}

TEST_CASE("free reduction is idempotent and never lengthens") {
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    const auto word = random_word(rng, 3, 12);
    const auto r = free_reduce(word);
    CHECK(r.size() <= word.size());
    CHECK(r.size() % 2 == word.size() % 2);
    CHECK(is_reduced(r));
    CHECK(free_reduce(r) == r);
    CHECK(free_reduce(concat(word, inverse(word))).empty());
  }
}

TEST_CASE("presentation validation") {
  CHECK(validate_presentation(torus()).ok());
  CHECK(validate_presentation(disk(3)).ok());

  CWPresentation bad;
  bad.cells = {1, 1, 1, 1};
  bad.attach2 = {w({{0, 1}})};
  bad.attach3 = {{{{}, 0, 1}}};
  const auto r = validate_presentation(bad);
  CHECK(r.has("boundary-square"));
  CHECK_THROWS_AS(require_valid(bad), ValidationError);

  CWPresentation two_points;
  two_points.cells = {2, 1};
  CHECK(validate_presentation(two_points).has("single-0-cell"));

  CWPresentation out_of_range;
  out_of_range.cells = {1, 1, 1};
  out_of_range.attach2 = {w({{1, 1}})};
  CHECK(validate_presentation(out_of_range).has("generator-range"));

  CWPresentation exponent;
  exponent.cells = {1, 1, 1};
  exponent.attach2 = {w({{0, 2}})};
  CHECK(validate_presentation(exponent).has("exponent"));

  CWPresentation missing;
  missing.cells = {1, 1, 2};
  missing.attach2 = {w({{0, 1}})};
  CHECK(validate_presentation(missing).has("attach-count"));

  CWPresentation high;
  high.cells = {1, 0, 0, 1, 1};
  high.attach3 = {{}};
  high.attach_high = {{{{1, {}, 3}}}};
  CHECK(validate_presentation(high).has("generator-range"));
}

TEST_CASE("builders") {
  CHECK(disk(2).cells == std::vector<std::size_t>{1, 1, 1});
  CHECK(torus().cells == std::vector<std::size_t>{1, 2, 1});
  CHECK(genus_surface(2).cells == std::vector<std::size_t>{1, 4, 1});
  CHECK(genus_surface(2).attach2[0].size() == 8);
  CHECK(sphere(4).cells == std::vector<std::size_t>{1, 0, 0, 0, 1});
  CHECK(sphere(4).attach_high[0].size() == 1);
  CHECK(sphere(4).attach_high[0][0].empty());
  CHECK(disk(4).attach_high[0][0] == ModuleElt{{1, {}, 0}});
  CHECK(disk(3).attach3[0] == CrossedWord{{{}, 0, 1}});
  CHECK(rp2().attach2[0] == w({{0, 1}, {0, 1}}));
  CHECK(sphere2_two_cells().attach2 == std::vector<Word>{w({{0, 1}}), w({{0, -1}})});
  CHECK_THROWS_AS(disk(1), Error);
  CHECK_THROWS_AS(sphere(0), Error);
  for (const auto& name : library_space_names()) {
    INFO(name);
    CHECK(validate_presentation(builtin_space(name)).ok());
  }
  for (std::size_t n = 1; n <= 6; ++n) CHECK(validate_presentation(sphere(n)).ok());
  for (std::size_t n = 2; n <= 6; ++n) CHECK(validate_presentation(disk(n)).ok());
}

TEST_CASE("wedge sums") {
  const auto t = torus();
  CHECK(wedge(point(), t) == t);
  CHECK(wedge(t, point()) == t);
  const auto two_circles = wedge(sphere(1), sphere(1));
  CHECK(two_circles.cells == std::vector<std::size_t>{1, 2});

  Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_presentation(rng);
    const auto q = random_presentation(rng);
    const auto r = random_presentation(rng);
    const auto pq = wedge(p, q);
    CHECK(validate_presentation(pq).ok());
    for (std::size_t n = 1; n <= 5; ++n) CHECK(pq.count(n) == p.count(n) + q.count(n));
    CHECK(wedge(wedge(p, q), r) == wedge(p, wedge(q, r)));
    CHECK(wedge(point(), p).count(1) == p.count(1));
  }
}

TEST_CASE("random presentations are valid") {
  Rng rng(23);
  for (int i = 0; i < 300; ++i) {
    const auto p = random_presentation(rng);
    INFO(i);
    REQUIRE(validate_presentation(p).ok());
    CHECK(validate_presentation(reverse_cells(p)).ok());
    CHECK(reverse_cells(reverse_cells(p)) == p);
    for (CellIndex c = 0; c < p.count(2); ++c)
      CHECK(validate_presentation(conjugate_relator(p, c, random_word(rng, p.count(1), 3))).ok());
  }
}

TEST_CASE("3-cell boundaries") {
  auto p = torus();
  p.cells.push_back(1);
  const auto& rel = p.attach2[0];
  // x |> r . r^-1 reduces to x r x^-1 r^-1, which is not trivial
  p.attach3 = {{{w({{0, 1}}), 0, 1}, {{}, 0, -1}}};
  CHECK(crossed_boundary(p, p.attach3[0]) == free_reduce(concat(conjugate(w({{0, 1}}), rel), inverse(rel))));
  CHECK(validate_presentation(p).has("boundary-square"));
  // Peiffer element of a 2-cell with itself
  p.attach3 = {{{{}, 0, 1}, {{}, 0, 1}, {{}, 0, -1}, {rel, 0, -1}}};
  CHECK(crossed_boundary(p, p.attach3[0]).empty());
  CHECK(validate_presentation(p).ok());
}
