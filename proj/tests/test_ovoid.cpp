#include <doctest.h>

#include <set>
#include <stdexcept>

#include "reekit/ovoid.hpp"

using namespace reekit;

namespace {

OvoidPoint pt(const Field& f, int a, int b, int c) {
  return OvoidPoint::triple(f.from_int(a), f.from_int(b), f.from_int(c));
}

Triple tr(const Field& f, int a, int b, int c) { return {f.from_int(a), f.from_int(b), f.from_int(c)}; }

HexElement hp(const Field& f, std::initializer_list<int> v) {
  std::vector<FieldElement> c;
  for (int x : v) c.push_back(f.from_int(x));
  return HexElement::point(c);
}

// Hexagon points incident with their polarity image, by brute force.
std::size_t oracle_absolute_count(const Field& f) {
  std::size_t n = 0;
  for (const auto& e : enumerate_elements(f)) n += e.is_point() && incident(e, polarity(e));
  return n;
}

}  // namespace

TEST_CASE("polarity examples") {
  const auto f = Field::standard(0);
  CHECK(polarity(hp(*f, {0, 0, 0, 0, 0})) == HexElement::line({f->zero(), f->zero(), f->zero(), f->zero(), f->zero()}));
  const auto ones = hp(*f, {1, 1, 1, 1, 1});
  CHECK(polarity(ones) == HexElement::line(ones.coords));
  CHECK(polarity(HexElement::point({})) == HexElement::line({}));

  const auto g = Field::standard(1);
  const auto t = g->generator(), z = g->zero();
  CHECK(polarity(HexElement::point({t, z, z, z, z})) == HexElement::line({t + g->from_int(2), z, z, z, z}));
}

TEST_CASE("absolute points") {
  const auto f = Field::standard(0);
  CHECK(is_absolute(hp(*f, {0, 0, 0, 0, 0})));
  CHECK(is_absolute(hp(*f, {1, 2, 0, 1, 0})));
  CHECK_FALSE(is_absolute(hp(*f, {1, 0, 0, 0, 0})));
  CHECK(is_absolute(HexElement::point({})));
  CHECK_FALSE(is_absolute(hp(*f, {0, 0})));
  CHECK(oracle_absolute_count(*f) == 28);
}

TEST_CASE("compact notation") {
  const auto f = Field::standard(0);
  CHECK(compact_to_hex(pt(*f, 0, 0, 0)) == hp(*f, {0, 0, 0, 0, 0}));
  CHECK(compact_to_hex(pt(*f, 1, 0, 0)) == hp(*f, {1, 2, 0, 1, 0}));
  CHECK(compact_to_hex(OvoidPoint::infinity()) == HexElement::point({}));
  CHECK(hex_to_compact(hp(*f, {1, 2, 0, 1, 0})) == pt(*f, 1, 0, 0));
  CHECK_FALSE(hex_to_compact(hp(*f, {1, 0, 0, 0, 0})).has_value());
  CHECK(pt(*f, 1, 0, 2).to_string() == "1,0,2");
  CHECK(OvoidPoint::infinity().to_string() == "inf");
  CHECK_THROWS_AS(OvoidPoint::infinity().coords(), std::logic_error);
}

TEST_CASE("projective coordinates of Omega") {
  const auto f = Field::standard(0);
  const auto z = f->zero(), o = f->one(), two = f->from_int(2);
  CHECK(compact_to_proj(*f, pt(*f, 0, 0, 0)).coords() == std::array{z, z, z, z, o, z, z});
  CHECK(compact_to_proj(*f, OvoidPoint::infinity()).coords() == std::array{o, z, z, z, z, z, z});
  CHECK(compact_to_proj(*f, pt(*f, 1, 0, 0)).coords() == std::array{o, z, o, z, two, o, o});
  CHECK(compact_to_proj(*f, pt(*f, 1, 0, 0)) == project_point(*f, compact_to_hex(pt(*f, 1, 0, 0))));
  for (const auto& p : ovoid(*f)) CHECK(proj_to_compact(compact_to_proj(*f, p)) == p);
  CHECK_FALSE(proj_to_compact(ProjPoint::normalized({z, o, z, z, z, z, z})).has_value());
}

TEST_CASE("Omega enumeration") {
  const auto f = Field::standard(0);
  const auto om = ovoid(*f);
  CHECK(om.size() == 28);
  CHECK(om.front().is_infinity());
  CHECK(std::set<OvoidPoint>(om.begin(), om.end()).size() == 28);
  for (std::size_t i = 0; i < om.size(); ++i) {
    CHECK(ovoid_index(om[i]) == i);
    CHECK(ovoid_at(*f, i) == om[i]);
  }
  CHECK(ovoid(*Field::standard(1)).size() == 19684);
}

TEST_CASE("U_infinity law") {
  const auto f = Field::standard(0);
  CHECK(u_infty_mul(tr(*f, 0, 0, 0), tr(*f, 1, 2, 0)) == tr(*f, 1, 2, 0));
  CHECK(u_infty_mul(tr(*f, 1, 0, 0), tr(*f, 1, 0, 0)) == tr(*f, 2, 1, 2));
  CHECK(u_infty_commutator(tr(*f, 1, 0, 0), tr(*f, 0, 1, 0)) == tr(*f, 0, 0, 2));
  const Triple g = tr(*f, 2, 1, 1);
  CHECK(u_infty_mul(u_infty_mul(g, g), g) == tr(*f, 0, 0, 1));  // (0,0,-a^(2+theta)) with a=2
  CHECK(u_infty_apply(OvoidPoint::infinity(), g).is_infinity());
}

TEST_CASE("U_0 matrices") {
  const auto f = Field::standard(0);
  const auto z = f->zero(), o = f->one();
  CHECK(is_identity(u_zero_matrix(z, z, z)));
  for (const auto& x : f->elements()) {
    for (const auto& y : f->elements()) {
      for (const auto& w : f->elements()) {
        const auto m = u_zero_matrix(x, y, w);
        CHECK(m[4] == std::array{z, z, z, z, o, z, z});
        CHECK(u_zero_apply(*f, pt(*f, 0, 0, 0), {x, y, w}) == pt(*f, 0, 0, 0));
      }
    }
  }
  // (0,0,x'') moves (1,0,...,0) to (1,0,-x''^theta,x'',x''^2,0,0)
  for (const auto& x2 : f->elements()) {
    const auto img = apply_matrix(compact_to_proj(*f, OvoidPoint::infinity()), u_zero_matrix(z, z, x2));
    CHECK(img == ProjPoint::normalized({o, z, -x2.theta(), x2, x2 * x2, z, z}));
  }
  const auto target = proj_to_compact(ProjPoint::normalized({o, z, f->from_int(2), o, o, z, z}));
  REQUIRE(target.has_value());
  CHECK(u_zero_apply(*f, OvoidPoint::infinity(), tr(*f, 0, 0, 1)) == *target);
}

TEST_CASE("U_0 transporter") {
  for (int e : {0, 1}) {
    const auto f = Field::standard(e);
    const auto om = ovoid(*f);
    for (std::size_t i = 2; i < om.size(); i += (e == 0 ? 1 : 97)) {
      CHECK(u_zero_apply(*f, OvoidPoint::infinity(), u_zero_transporter(om[i])) == om[i]);
    }
  }
}

TEST_CASE("subgroups") {
  const auto f = Field::standard(0);
  const auto base = OvoidPoint::infinity();
  CHECK(subgroup_elements(*f, base, Subgroup::center).size() == 3);
  CHECK(subgroup_elements(*f, base, Subgroup::derived).size() == 9);
  CHECK(subgroup_elements(*f, base, Subgroup::full).size() == 27);
  for (const auto& p : ovoid(*f)) {
    for (const auto& g : subgroup_elements(*f, p, Subgroup::full)) CHECK(root_group_apply(*f, g, p) == p);
  }
}

TEST_CASE("known collineations") {
  const auto f = Field::standard(0);
  CHECK_THROWS_AS(KnownCollineation(f->zero(), 0), std::domain_error);
  const KnownCollineation id(f->one(), 0);
  const KnownCollineation two(f->from_int(2), 0);
  for (const auto& p : ovoid(*f)) {
    CHECK(id.apply(p) == p);
    if (p.is_infinity()) continue;
    CHECK(two.apply(p) == OvoidPoint::triple(f->from_int(2) * p[0], p[1], f->from_int(2) * p[2]));
    CHECK(two.apply(compact_to_hex(p)) == compact_to_hex(two.apply(p)));
  }
}
