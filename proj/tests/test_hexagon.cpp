#include <doctest.h>

#include <queue>
#include <random>
#include <set>
#include <stdexcept>

#include "reekit/hexagon.hpp"

using namespace reekit;

namespace {

std::vector<FieldElement> ints(const Field& f, std::initializer_list<int> v) {
  std::vector<FieldElement> out;
  for (int x : v) out.push_back(f.from_int(x));
  return out;
}

// Plain BFS over the neighbour function, independent of HexagonGraph.
int oracle_distance(const Field& f, const HexElement& x, const HexElement& y) {
  std::set<HexElement> seen{x};
  std::queue<std::pair<HexElement, int>> q;
  q.push({x, 0});
  while (!q.empty()) {
    auto [e, d] = q.front();
    q.pop();
    if (e == y) return d;
    for (auto& n : neighbors(f, e)) {
      if (seen.insert(n).second) q.push({n, d + 1});
    }
  }
  return -1;
}

}  // namespace

TEST_CASE("coordinatizing polynomials") {
  const auto f = Field::standard(0);
  const auto z = f->zero(), o = f->one();
  CHECK(psi(z, z, z, z, z, z) == std::array{z, z, z, z});
  CHECK(psi(o, o, o, z, z, z)[0] == f->from_int(2));
  CHECK(psi(o, o, z, z, z, o)[3].is_zero());
}

TEST_CASE("incidence examples") {
  const auto f = Field::standard(0);
  const auto P = [&](std::initializer_list<int> v) { return HexElement::point(ints(*f, v)); };
  const auto L = [&](std::initializer_list<int> v) { return HexElement::line(ints(*f, v)); };
  CHECK(incident(P({}), L({})));
  CHECK(incident(P({0}), L({})));
  CHECK(incident(P({0, 0, 0, 0, 0}), L({0, 0, 0, 0, 0})));
  CHECK_FALSE(incident(P({1, 2, 0, 1, 0}), L({1})));
  CHECK_FALSE(incident(P({1}), L({2})));
  CHECK(incident(P({1, 2}), L({1})));
  CHECK_THROWS_AS(incident(L({}), L({})), std::invalid_argument);
}

TEST_CASE("line_through and point_on are incident") {
  const auto f = Field::standard(1);
  std::mt19937_64 rng(3);
  const auto el = f->elements();
  std::uniform_int_distribution<std::size_t> pick(0, el.size() - 1);
  for (int t = 0; t < 300; ++t) {
    std::vector<FieldElement> c;
    for (int i = 0; i < 5; ++i) c.push_back(el[pick(rng)]);
    const auto p = HexElement::point(c);
    const auto L = line_through(p, el[pick(rng)]);
    CHECK(incident(p, L));
    CHECK(point_on(L, c[0]) == p);
  }
}

TEST_CASE("projective embedding") {
  const auto f = Field::standard(0);
  const auto z = f->zero(), o = f->one();
  CHECK(project_point(*f, HexElement::point({})).coords() == std::array{o, z, z, z, z, z, z});
  CHECK(project_point(*f, HexElement::point({o})).coords() == std::array{o, z, z, z, z, z, o});
  const auto [a, b] = project_line(*f, HexElement::line({}));
  CHECK(a.coords() == std::array{o, z, z, z, z, z, z});
  CHECK(b.coords() == std::array{z, z, z, z, z, z, o});
  CHECK_THROWS_AS(ProjPoint::normalized({z, z, z, z, z, z, z}), std::invalid_argument);
  const ProjPoint r = ProjPoint::normalized({z, f->from_int(2), o, z, z, z, z});
  CHECK(r.coords() == std::array{z, o, f->from_int(2), z, z, z, z});
}

TEST_CASE("element counts and canonical order") {
  const auto f3 = Field::standard(0);
  const auto f27 = Field::standard(1);
  CHECK(element_count(*f3) == 364);
  CHECK(element_count(*f27) == 1 + 27 + 729 + 19683 + 531441 + 14348907);
  CHECK(element_count(*f27) == 14900788);
  const auto all = enumerate_elements(*f3);
  REQUIRE(all.size() == 728);
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(index_of(all[i]) == i % 364);
    CHECK(all[i] == element_at(*f3, all[i].kind, i % 364));
  }
  CHECK_THROWS_AS(enumerate_elements(*f27), std::length_error);
}

TEST_CASE("each element has q+1 distinct neighbours") {
  const auto f = Field::standard(0);
  for (const auto& e : enumerate_elements(*f)) {
    const auto n = neighbors(*f, e);
    CHECK(std::set<HexElement>(n.begin(), n.end()).size() == 4);
    for (const auto& m : n) CHECK(m.kind != e.kind);
  }
}

TEST_CASE("graph distances") {
  const auto f = Field::standard(0);
  const HexagonGraph g(*f);
  const auto inf = HexElement::point({});
  const auto far = HexElement::point(ints(*f, {0, 0, 0, 0, 0}));
  CHECK(g.distance(inf, HexElement::line({})) == 1);
  CHECK(g.distance(inf, far) == 6);
  CHECK(g.distance(far, far) == 0);
  CHECK(graph_distance(*f, inf, far) == 6);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, g.vertex_count() - 1);
  for (int t = 0; t < 40; ++t) {
    const auto& x = g.element(pick(rng));
    const auto& y = g.element(pick(rng));
    const int d = oracle_distance(*f, x, y);
    CHECK(g.distance(x, y) == d);
    CHECK(graph_distance(*f, x, y) == d);
  }
}

TEST_CASE("hexagon axioms at q=3") {
  const auto f = Field::standard(0);
  const auto r = check_hexagon_axioms(HexagonGraph(*f));
  CHECK(r.ok);
  CHECK(r.points == 364);
  CHECK(r.lines == 364);
  CHECK(r.bipartite);
  CHECK(r.min_degree == 4);
  CHECK(r.max_degree == 4);
  CHECK(r.girth == 12);
  CHECK(r.diameter == 6);
}

TEST_CASE("incidence matches the projective span at q=3") {
  const auto f = Field::standard(0);
  const auto all = enumerate_elements(*f);
  for (const auto& p : all) {
    if (!p.is_point()) continue;
    for (const auto& L : all) {
      if (L.is_line()) CHECK(incident(p, L) == in_projective_span(*f, p, L));
    }
  }
}
