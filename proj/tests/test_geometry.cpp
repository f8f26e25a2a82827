#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "reekit/geometry.hpp"

using namespace reekit;

namespace {

OvoidPoint pt(const Field& f, int a, int b, int c) {
  return OvoidPoint::triple(f.from_int(a), f.from_int(b), f.from_int(c));
}

std::vector<OvoidPoint> sorted(std::vector<OvoidPoint> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("circle and sphere examples") {
  const auto f = Field::standard(0);
  const auto inf = OvoidPoint::infinity();
  CHECK(circle(*f, inf, pt(*f, 0, 0, 0)).points ==
        sorted({inf, pt(*f, 0, 0, 0), pt(*f, 0, 0, 1), pt(*f, 0, 0, 2)}));
  CHECK(circle(*f, pt(*f, 0, 0, 0), inf).points ==
        sorted({inf, pt(*f, 0, 0, 0), pt(*f, 1, 0, 2), pt(*f, 2, 0, 1)}));
  std::vector<OvoidPoint> s{inf};
  for (int b = 0; b < 3; ++b) {
    for (int c = 0; c < 3; ++c) s.push_back(pt(*f, 0, b, c));
  }
  CHECK(sphere(*f, inf, pt(*f, 0, 0, 0)).points == sorted(s));
  CHECK(sphere(*f, pt(*f, 0, 0, 0), inf).points ==
        sorted([&] {
          auto p = ordinary_plane({f->zero(), f->zero(), f->zero()}).points;
          p.push_back(inf);
          return p;
        }()));
  CHECK_THROWS_AS(circle(*f, inf, inf), std::invalid_argument);
  CHECK_THROWS_AS(sphere(*f, pt(*f, 1, 1, 1), pt(*f, 1, 1, 1)), std::invalid_argument);
}

TEST_CASE("gnarls") {
  const auto f = Field::standard(0);
  const auto inf = OvoidPoint::infinity();
  Block c = circle(*f, inf, pt(*f, 0, 0, 0));
  CHECK(gnarl_of(*f, c) == inf);
  c.gnarl = pt(*f, 0, 0, 1);
  CHECK_THROWS_AS(validate_block(*f, c), DataError);
  const Block s = sphere(*f, pt(*f, 1, 2, 0), pt(*f, 2, 2, 2));
  CHECK(gnarl_of(*f, s) == pt(*f, 1, 2, 0));
  Block small{BlockKind::circle, inf, {inf, pt(*f, 0, 0, 0)}};
  CHECK_THROWS_AS(validate_block(*f, small), DataError);
}

TEST_CASE("block families at q=3") {
  const auto f = Field::standard(0);
  const auto circles = all_blocks(*f, BlockKind::circle);
  const auto spheres = all_blocks(*f, BlockKind::sphere);
  CHECK(circles.size() == 252);
  CHECK(spheres.size() == 84);
  for (const auto& b : circles) CHECK(b.points.size() == 4);
  for (const auto& b : spheres) CHECK(b.points.size() == 10);
  // every two points lie on exactly q circles with the first as gnarl
  std::set<std::vector<OvoidPoint>> sets;
  for (const auto& b : circles) sets.insert(b.points);
  CHECK(sets.size() == 252);
}

TEST_CASE("sphere with gnarl inf contains circles with other gnarls") {
  const auto f = Field::standard(0);
  const auto s = sphere(*f, OvoidPoint::infinity(), pt(*f, 0, 0, 0));
  const auto inside = contained_circles(*f, s.points);
  CHECK(inside.size() == 12);
  const auto own = std::count_if(inside.begin(), inside.end(),
                                 [](const Block& b) { return b.gnarl.is_infinity(); });
  CHECK(own == 3);
  const Block k = circle(*f, pt(*f, 0, 0, 0), pt(*f, 0, 1, 1));
  CHECK(k.points == sorted({pt(*f, 0, 0, 0), pt(*f, 0, 1, 1), pt(*f, 0, 1, 2), pt(*f, 0, 2, 0)}));
}

TEST_CASE("hexagon description of blocks") {
  const auto f = Field::standard(0);
  const HexagonGraph g(*f);
  CHECK_FALSE(circle_from_line(g, HexElement::line({})).has_value());
  CHECK_FALSE(sphere_from_point(g, HexElement::point({})).has_value());
  std::size_t lines = 0, points = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto& e = g.element(v);
    if (e.is_line()) {
      if (auto b = circle_from_line(g, e)) {
        ++lines;
        CHECK(circle(*f, b->gnarl, b->points[b->points[0] == b->gnarl ? 1 : 0]).points == b->points);
      }
    } else if (auto b = sphere_from_point(g, e)) {
      ++points;
      CHECK(b->points.size() == 10);
    }
  }
  CHECK(lines == 252);
  CHECK(points == 84);
}

TEST_CASE("derived geometry") {
  const auto f = Field::standard(0);
  const auto z = f->zero();
  CHECK(vertical_line(z, z).points == sorted({pt(*f, 0, 0, 0), pt(*f, 0, 0, 1), pt(*f, 0, 0, 2)}));
  CHECK(ordinary_line({z, z, z}).points == sorted({pt(*f, 0, 0, 0), pt(*f, 1, 0, 2), pt(*f, 2, 0, 1)}));
  CHECK(vertical_plane(z).points.size() == 9);
  CHECK(ordinary_plane({z, z, z}).points.size() == 9);
  const auto c0 = ordinary_line({z, z, z});
  CHECK(are_parallel(c0, ordinary_line({z, f->one(), f->from_int(2)})));
  CHECK_FALSE(are_parallel(c0, ordinary_line({f->one(), z, z})));
  CHECK(are_parallel(c0, c0));
  CHECK_THROWS_AS(are_parallel(c0, vertical_line(z, z)), std::invalid_argument);
  CHECK(derived_objects(*f).size() == 9 + 27 + 3 + 27);
}

TEST_CASE("unital") {
  const auto f = Field::standard(0);
  const auto inf = OvoidPoint::infinity();
  CHECK(unital_block(*f, inf, pt(*f, 1, 0, 2)) == sorted({inf, pt(*f, 1, 0, 2), pt(*f, 1, 1, 1), pt(*f, 1, 2, 0)}));
  CHECK_THROWS_AS(unital_block(*f, inf, inf), std::invalid_argument);
  const auto blocks = unital_blocks(*f);
  CHECK(blocks.size() == 63);
  const auto z = f->zero();
  CHECK(w_set({z, z, z}) ==
        sorted({pt(*f, 0, 0, 0), pt(*f, 0, 1, 0), pt(*f, 0, 2, 0), pt(*f, 0, 1, 1), pt(*f, 0, 1, 2)}));
}

TEST_CASE("automorphism search on small designs") {
  // Fano plane: 168 automorphisms
  const std::vector<std::vector<std::uint32_t>> fano{{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5},
                                                     {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
  const auto g = automorphism_group(7, fano);
  CHECK(g.order == 168);
  CHECK(g.elements.size() == 168);
  CHECK(std::is_sorted(g.elements.begin(), g.elements.end()));
  // the family of all 2-subsets of 5 points: the full symmetric group
  std::vector<std::vector<std::uint32_t>> pairs;
  for (std::uint32_t i = 0; i < 5; ++i) {
    for (std::uint32_t j = i + 1; j < 5; ++j) pairs.push_back({i, j});
  }
  CHECK(automorphism_group(5, pairs).order == factorial(5));
  // a 4-cycle graph: dihedral of order 8
  const std::vector<std::vector<std::uint32_t>> square{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  const auto d = automorphism_group(4, square);
  CHECK(d.order == 8);
  // greedy generators generate the group
  std::set<Permutation> closure{Permutation{0, 1, 2, 3}};
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto x : std::vector<Permutation>(closure.begin(), closure.end())) {
      for (const auto& s : greedy_generators(d.elements)) {
        Permutation y(4);
        for (int i = 0; i < 4; ++i) y[i] = s[x[i]];
        grew = closure.insert(y).second || grew;
      }
    }
  }
  CHECK(closure.size() == 8);
}
