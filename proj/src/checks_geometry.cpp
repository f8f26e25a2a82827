#include <algorithm>
#include <map>
#include <set>

#include "checks.hpp"

namespace reekit::checks {

namespace {

std::string kind_name(BlockKind k) { return k == BlockKind::circle ? "circle" : "sphere"; }

std::string block_string(const Block& b) {
  return kind_name(b.kind) + " " + b.gnarl.to_string() + " " + join_points(b.points);
}

bool subset(const std::vector<OvoidPoint>& small, const std::vector<OvoidPoint>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<OvoidPoint> with_infinity(std::vector<OvoidPoint> pts) {
  pts.insert(pts.begin(), OvoidPoint::infinity());
  return pts;
}

OvoidPoint random_other(Context& c, const std::vector<OvoidPoint>& pts, const OvoidPoint& not_this) {
  while (true) {
    const auto& p = pts[std::uniform_int_distribution<std::size_t>(0, pts.size() - 1)(c.rng)];
    if (p != not_this) return p;
  }
}

OvoidPoint random_point(Context& c) {
  return std::uniform_int_distribution<int>(0, 30)(c.rng) == 0 ? OvoidPoint::infinity()
                                                                 : c.random_finite_point();
}

// ---------------------------------------------------------------------------
// Blocks

Outcome blocks_check(Context& c, BlockKind kind) {
  const std::size_t q = c.field.order();
  const std::size_t size = kind == BlockKind::circle ? q + 1 : q * q + 1;
  if (c.exhaustive()) {
    const auto& blocks = kind == BlockKind::circle ? c.data.circles() : c.data.spheres();
    const std::size_t per_gnarl = kind == BlockKind::circle ? q * q : q;
    if (blocks.size() != (q * q * q + 1) * per_gnarl) {
      return Outcome::fail("count " + std::to_string(blocks.size()));
    }
    for (const auto& b : blocks) {
      if (b.points.size() != size) return Outcome::fail(block_string(b), "size");
      try {
        validate_block(c.field, b);
      } catch (const DataError& e) {
        return Outcome::fail(block_string(b), e.what());
      }
    }
    return Outcome::ok(std::to_string(blocks.size()) + " " + kind_name(kind) +
                       "s of size " + std::to_string(size) + " with unique gnarls");
  }
  const std::uint64_t n = std::min<std::uint64_t>(c.trials, kind == BlockKind::circle ? c.trials : 20);
  for (std::uint64_t t = 0; t < n; ++t) {
    const OvoidPoint g = random_point(c);
    OvoidPoint y = random_point(c);
    if (y == g) continue;
    const Block b = kind == BlockKind::circle ? circle(c.field, g, y) : sphere(c.field, g, y);
    if (b.points.size() != size) return Outcome::fail(block_string(b), "size");
    try {
      validate_block(c.field, b);
    } catch (const DataError& e) {
      return Outcome::fail(block_string(b), e.what());
    }
    const OvoidPoint z = random_other(c, b.points, g);
    const Block b2 = kind == BlockKind::circle ? circle(c.field, g, z) : sphere(c.field, g, z);
    if (b2.points != b.points) return Outcome::fail(block_string(b), "seed dependence");
  }
  return Outcome::ok().with_trials(n);
}

Outcome samegnarl_literal_check(Context& c) {
  if (c.exhaustive()) {
    for (const auto& s : c.data.spheres()) {
      for (const auto& k : contained_circles(c.field, s.points)) {
        if (k.gnarl != s.gnarl) {
          return Outcome::fail(block_string(s) + " contains " + block_string(k),
                               "contained circle with another gnarl");
        }
      }
    }
    return Outcome::ok(std::to_string(c.data.spheres().size()) + " spheres");
  }
  // Every circle through a point y of a sphere and lying inside it has the sphere's gnarl.
  const std::uint64_t n = std::min<std::uint64_t>(c.trials, 100);
  for (std::uint64_t t = 0; t < n; ++t) {
    const OvoidPoint g = random_point(c);
    OvoidPoint y = random_point(c);
    if (y == g) continue;
    const Block s = sphere(c.field, g, y);
    const OvoidPoint z = random_other(c, s.points, g);
    std::size_t own = 0;
    for (const auto& x : s.points) {
      if (x == z) continue;
      const Block k = circle(c.field, x, z);
      if (!subset(k.points, s.points)) continue;
      if (x != g) {
        return Outcome::fail(block_string(s) + " contains " + block_string(k),
                             "contained circle with another gnarl");
      }
      ++own;
    }
    if (own != 1) return Outcome::fail(block_string(s), "no circle with the sphere's gnarl");
  }
  return Outcome::ok().with_trials(n);
}

// The circles with the sphere's own gnarl partition the rest of the sphere into q parts.
Outcome samegnarl_partition_check(Context& c) {
  const std::size_t q = c.field.order();
  auto partition = [&](const Block& s) -> bool {
    std::set<OvoidPoint> covered;
    std::size_t parts = 0;
    for (const auto& y : s.points) {
      if (y == s.gnarl || covered.contains(y)) continue;
      const Block k = circle(c.field, s.gnarl, y);
      if (!subset(k.points, s.points)) return false;
      for (const auto& p : k.points) {
        if (p != s.gnarl && !covered.insert(p).second) return false;
      }
      ++parts;
    }
    return parts == q && covered.size() + 1 == s.points.size();
  };
  if (c.exhaustive()) {
    std::size_t other = 0;
    for (const auto& s : c.data.spheres()) {
      if (!partition(s)) return Outcome::fail(block_string(s));
      for (const auto& k : contained_circles(c.field, s.points)) other += k.gnarl != s.gnarl;
    }
    return Outcome::ok(std::to_string(c.data.spheres().size()) + " spheres, " +
                       std::to_string(other) + " contained circles with a foreign gnarl");
  }
  const std::uint64_t n = std::min<std::uint64_t>(c.trials, 100);
  for (std::uint64_t t = 0; t < n; ++t) {
    const OvoidPoint g = random_point(c);
    const OvoidPoint y = random_point(c);
    if (y == g) continue;
    const Block s = sphere(c.field, g, y);
    if (!partition(s)) return Outcome::fail(block_string(s));
  }
  return Outcome::ok().with_trials(n);
}

std::vector<std::pair<std::vector<OvoidPoint>, OvoidPoint>> keyed(const std::vector<Block>& blocks) {
  std::vector<std::pair<std::vector<OvoidPoint>, OvoidPoint>> out;
  for (const auto& b : blocks) out.emplace_back(b.points, b.gnarl);
  std::sort(out.begin(), out.end());
  return out;
}

Outcome hexagon_blocks_check(Context& c, BlockKind kind) {
  const auto& g = c.data.graph();
  std::vector<Block> found;
  std::size_t candidates = 0;
  const std::size_t first = kind == BlockKind::circle ? g.points_count() : 0;
  for (std::size_t v = first; v < first + g.points_count(); ++v) {
    const auto b = kind == BlockKind::circle ? circle_from_line(g, g.element(v))
                                             : sphere_from_point(g, g.element(v));
    if (!b) continue;
    ++candidates;
    found.push_back(*b);
  }
  const auto& blocks = kind == BlockKind::circle ? c.data.circles() : c.data.spheres();
  const auto a = keyed(found);
  const auto e = keyed(blocks);
  if (a != e) {
    for (const auto& b : found) {
      if (!std::binary_search(e.begin(), e.end(), std::make_pair(b.points, b.gnarl))) {
        return Outcome::fail(block_string(b), "not an algebraic " + kind_name(kind));
      }
    }
    return Outcome::fail(std::to_string(found.size()) + " hexagon " + kind_name(kind) + "s",
                         "families differ");
  }
  return Outcome::ok(std::to_string(candidates) + (kind == BlockKind::circle ? " lines" : " points") +
                     " give all " + std::to_string(blocks.size()) + " " + kind_name(kind) + "s");
}

Outcome imported_blocks_check(Context& c) {
  const auto& blocks = *c.imported;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Block& b = blocks[i];
    const std::string where = "block " + std::to_string(i + 1) + ": " + block_string(b);
    try {
      validate_block(c.field, b);
    } catch (const DataError& e) {
      return Outcome::fail(where, e.what());
    }
    const OvoidPoint& y = b.points[b.points[0] == b.gnarl ? 1 : 0];
    const Block built = b.kind == BlockKind::circle ? circle(c.field, b.gnarl, y) : sphere(c.field, b.gnarl, y);
    if (built.points != b.points) return Outcome::fail(where, "not an orbit");
  }
  return Outcome::ok(std::to_string(blocks.size()) + " blocks");
}

// ---------------------------------------------------------------------------
// Derived geometry

std::string derived_string(const DerivedObject& d) {
  static const char* names[] = {"L", "C", "P", "S"};
  return std::string(names[static_cast<int>(d.kind)]) + " " + OvoidPoint::triple(d.params).to_string();
}

// The derived object together with (inf) as a block of the geometry.
Block derived_block(const Field& f, const DerivedObject& d) {
  const OvoidPoint inf = OvoidPoint::infinity();
  const OvoidPoint g = OvoidPoint::triple(d.params);
  switch (d.kind) {
    case DerivedKind::vertical_line: return circle(f, inf, g);
    case DerivedKind::ordinary_line: return circle(f, g, inf);
    case DerivedKind::vertical_plane: return sphere(f, inf, g);
    case DerivedKind::ordinary_plane: return sphere(f, g, inf);
  }
  return {};
}

Outcome derived_objects_check(Context& c) {
  const std::size_t q = c.field.order();
  auto test = [&](const DerivedObject& d) -> std::optional<std::string> {
    const bool line = d.kind == DerivedKind::vertical_line || d.kind == DerivedKind::ordinary_line;
    if (d.points.size() != (line ? q : q * q)) return "size " + std::to_string(d.points.size());
    if (derived_block(c.field, d).points != with_infinity(d.points)) return "differs from the orbit";
    return std::nullopt;
  };
  if (c.exhaustive()) {
    const auto all = derived_objects(c.field);
    for (const auto& d : all) {
      if (auto w = test(d)) return Outcome::fail(derived_string(d), *w);
    }
    const auto f = [&](int i) { return c.field.from_int(i); };
    const auto z = f(0);
    auto pts = [&](std::initializer_list<std::array<int, 3>> l) {
      std::vector<OvoidPoint> v;
      for (const auto& t : l) v.push_back(OvoidPoint::triple(f(t[0]), f(t[1]), f(t[2])));
      std::sort(v.begin(), v.end());
      return v;
    };
    if (vertical_line(z, z).points != pts({{0, 0, 0}, {0, 0, 1}, {0, 0, 2}})) return Outcome::fail("L 0,0");
    if (ordinary_line({z, z, z}).points != pts({{0, 0, 0}, {1, 0, 2}, {2, 0, 1}})) return Outcome::fail("C 0,0,0");
    return Outcome::ok(std::to_string(all.size()) + " objects");
  }
  for (std::uint64_t t = 0; t < std::min<std::uint64_t>(c.trials, 100); ++t) {
    const Triple g = c.random_triple();
    for (const auto& d : {vertical_line(g[0], g[1]), ordinary_line(g), vertical_plane(g[0]), ordinary_plane(g)}) {
      if (auto w = test(d)) return Outcome::fail(derived_string(d), *w);
    }
  }
  return Outcome::ok().with_trials(std::min<std::uint64_t>(c.trials, 100));
}

Outcome parallelism_check(Context& c) {
  auto test = [](const DerivedObject& x, const DerivedObject& y) {
    return are_parallel(x, y) == are_parallel_by_vertical_lines(x, y);
  };
  if (c.exhaustive()) {
    std::vector<DerivedObject> lines;
    for (const auto& d : derived_objects(c.field)) {
      if (d.kind == DerivedKind::ordinary_line) lines.push_back(d);
    }
    std::size_t parallel = 0;
    for (const auto& x : lines) {
      for (const auto& y : lines) {
        if (!test(x, y)) return Outcome::fail(derived_string(x) + " / " + derived_string(y));
        parallel += are_parallel(x, y);
      }
    }
    return Outcome::ok(std::to_string(lines.size() * lines.size()) + " pairs, " +
                       std::to_string(parallel) + " parallel");
  }
  for (std::uint64_t t = 0; t < c.trials; ++t) {
    const Triple g = c.random_triple();
    Triple h = c.random_triple();
    if (t % 2 == 0) h[0] = g[0];
    const auto x = ordinary_line(g), y = ordinary_line(h);
    if (!test(x, y)) return Outcome::fail(derived_string(x) + " / " + derived_string(y));
  }
  return Outcome::ok();
}

Outcome parallel_class_check(Context& c) {
  if (c.exhaustive()) {
    std::vector<DerivedObject> lines;
    for (const auto& d : derived_objects(c.field)) {
      if (d.kind == DerivedKind::ordinary_line) lines.push_back(d);
    }
    for (const auto& x : lines) {
      std::vector<OvoidPoint> gnarls;
      for (const auto& y : lines) {
        if (are_parallel_by_vertical_lines(x, y)) gnarls.push_back(OvoidPoint::triple(y.params));
      }
      std::sort(gnarls.begin(), gnarls.end());
      if (gnarls != vertical_plane(x.params[0]).points) return Outcome::fail(derived_string(x));
    }
    return Outcome::ok(std::to_string(lines.size()) + " parallel classes");
  }
  for (std::uint64_t t = 0; t < c.trials; ++t) {
    const Triple g = c.random_triple();
    Triple h = c.random_triple();
    if (t % 2 == 0) h[0] = g[0];
    const bool parallel = are_parallel_by_vertical_lines(ordinary_line(g), ordinary_line(h));
    const auto plane = vertical_plane(g[0]);
    if (parallel != std::binary_search(plane.points.begin(), plane.points.end(), OvoidPoint::triple(h))) {
      return Outcome::fail(derived_string(ordinary_line(g)) + " / " + derived_string(ordinary_line(h)));
    }
  }
  return Outcome::ok();
}

Outcome intersect_check(Context& c) {
  if (c.exhaustive()) {
    std::vector<DerivedObject> vp, op;
    for (const auto& d : derived_objects(c.field)) {
      if (d.kind == DerivedKind::vertical_plane) vp.push_back(d);
      if (d.kind == DerivedKind::ordinary_plane) op.push_back(d);
    }
    for (const auto& v : vp) {
      for (const auto& s : op) {
        if (!intersects(v, s)) return Outcome::fail(derived_string(v) + " / " + derived_string(s));
      }
    }
    return Outcome::ok(std::to_string(vp.size() * op.size()) + " pairs");
  }
  for (std::uint64_t t = 0; t < c.trials; ++t) {
    const auto v = vertical_plane(c.random_element());
    const auto s = ordinary_plane(c.random_triple());
    if (!intersects(v, s)) return Outcome::fail(derived_string(v) + " / " + derived_string(s));
  }
  return Outcome::ok();
}

Outcome intersect2_check(Context& c) {
  const FieldElement z = c.field.zero();
  const auto s0 = ordinary_plane({z, z, z});
  if (c.exhaustive()) {
    for (const auto& a1 : c.elements) {
      for (const auto& a2 : c.elements) {
        const auto s = ordinary_plane({z, a1, a2});
        if (!intersects(s0, s)) return Outcome::fail(derived_string(s));
      }
    }
    return Outcome::ok(std::to_string(c.elements.size() * c.elements.size()) + " planes");
  }
  for (std::uint64_t t = 0; t < c.trials; ++t) {
    const auto s = ordinary_plane({z, c.random_element(), c.random_element()});
    if (!intersects(s0, s)) return Outcome::fail(derived_string(s));
  }
  return Outcome::ok();
}

std::vector<OvoidPoint> w_zero_formula(const Field& f) {
  const FieldElement z = f.zero();
  std::vector<OvoidPoint> w;
  for (const auto& t : f.elements()) {
    w.push_back(OvoidPoint::triple(z, t, z));
    if (!t.is_zero()) w.push_back(OvoidPoint::triple(z, t.theta() / t, t));
  }
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  return w;
}

Outcome intersect3_check(Context& c) {
  const FieldElement z = c.field.zero();
  const auto w0 = w_set({z, z, z});
  if (w0 != w_zero_formula(c.field)) return Outcome::fail(join_points(w0), "W_0 differs from the closed form");
  if (c.exhaustive()) {
    std::vector<OvoidPoint> lit;
    for (auto [b, d] : {std::pair{0, 0}, {1, 0}, {1, 1}, {1, 2}, {2, 0}}) {
      lit.push_back(OvoidPoint::triple(z, c.field.from_int(b), c.field.from_int(d)));
    }
    if (w0 != lit) return Outcome::fail(join_points(w0), "explicit W_0");
  }
  auto translated = [&](const Triple& p) {
    std::vector<OvoidPoint> w;
    for (const auto& x : w0) w.push_back(u_infty_apply(x, p));
    std::sort(w.begin(), w.end());
    return w;
  };
  if (c.exhaustive()) {
    for (const auto& p : c.omega()) {
      if (p.is_infinity()) continue;
      if (w_set(p.coords()) != translated(p.coords())) return Outcome::fail(p.to_string(), "W_p");
    }
    return Outcome::ok("|W_0| = " + std::to_string(w0.size()));
  }
  for (std::uint64_t t = 0; t < c.trials; ++t) {
    const Triple p = c.random_triple();
    if (w_set(p) != translated(p)) return Outcome::fail(OvoidPoint::triple(p).to_string(), "W_p");
  }
  return Outcome::ok("|W_0| = " + std::to_string(w0.size()));
}

// ---------------------------------------------------------------------------
// Unital

Outcome unital_design_check(Context& c) {
  const std::size_t q = c.field.order();
  if (c.exhaustive()) {
    const auto blocks = unital_blocks(c.field);
    const auto om = c.omega();
    const std::size_t n = om.size();
    std::vector<std::vector<int>> cover(n, std::vector<int>(n, 0));
    for (const auto& b : blocks) {
      if (b.size() != q + 1) return Outcome::fail(join_points(b), "size");
      for (const auto& x : b) {
        for (const auto& y : b) {
          if (x != y) ++cover[ovoid_index(x)][ovoid_index(y)];
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && cover[i][j] != 1) {
          return Outcome::fail(om[i].to_string() + " / " + om[j].to_string(),
                               "on " + std::to_string(cover[i][j]) + " blocks");
        }
      }
    }
    for (const auto& b : blocks) {
      for (std::size_t i = 1; i < b.size(); ++i) {
        if (unital_block(c.field, b[0], b[i]) != b) return Outcome::fail(join_points(b), "join");
      }
    }
    return Outcome::ok("2-(" + std::to_string(n) + "," + std::to_string(q + 1) + ",1) design, " +
                       std::to_string(blocks.size()) + " blocks");
  }
  for (std::uint64_t t = 0; t < c.trials; ++t) {
    const OvoidPoint x = random_point(c);
    const OvoidPoint y = random_point(c);
    if (x == y) continue;
    const auto b = unital_block(c.field, x, y);
    if (b.size() != q + 1 || !std::binary_search(b.begin(), b.end(), x) ||
        !std::binary_search(b.begin(), b.end(), y)) {
      return Outcome::fail(x.to_string() + " / " + y.to_string(), "size or membership");
    }
    const OvoidPoint u = random_other(c, b, OvoidPoint{});
    const OvoidPoint v = random_other(c, b, u);
    if (unital_block(c.field, u, v) != b) return Outcome::fail(x.to_string() + " / " + y.to_string(), "join");
  }
  return Outcome::ok();
}

Outcome unital_base_check(Context& c) {
  auto test = [&](const FieldElement& a, const FieldElement& a2) {
    std::vector<OvoidPoint> want{OvoidPoint::infinity()};
    for (const auto& t : c.elements) want.push_back(OvoidPoint::triple(a, t, a2 - a * t));
    std::sort(want.begin(), want.end());
    return unital_block(c.field, OvoidPoint::infinity(), OvoidPoint::triple(a, c.field.zero(), a2)) == want;
  };
  if (c.exhaustive()) {
    for (const auto& a : c.elements) {
      for (const auto& a2 : c.elements) {
        if (!test(a, a2)) return Outcome::fail("inf / " + OvoidPoint::triple(a, c.field.zero(), a2).to_string());
      }
    }
    return Outcome::ok();
  }
  for (std::uint64_t t = 0; t < c.trials; ++t) {
    const auto a = c.random_element(), a2 = c.random_element();
    if (!test(a, a2)) return Outcome::fail("inf / " + OvoidPoint::triple(a, c.field.zero(), a2).to_string());
  }
  return Outcome::ok();
}

Outcome w_sets_check(Context& c) {
  const FieldElement z = c.field.zero();
  const auto w0 = w_set({z, z, z});
  auto affine = [&](const OvoidPoint& p) {
    auto b = unital_block(c.field, OvoidPoint::infinity(), p);
    b.erase(b.begin());
    return b;
  };
  std::vector<OvoidPoint> large;
  for (const auto& p : w0) {
    const auto wp = w_set(p.coords());
    std::vector<OvoidPoint> both;
    std::set_intersection(w0.begin(), w0.end(), wp.begin(), wp.end(), std::back_inserter(both));
    if (both.size() > 2) {
      large.push_back(p);
    } else if (both.size() != 2) {
      return Outcome::fail(p.to_string(), "|W_0 & W_p| = " + std::to_string(both.size()));
    }
  }
  const auto block = affine(OvoidPoint::triple(z, z, z));
  if (large != block) return Outcome::fail(join_points(large), "does not recover the unital block");
  auto contained = [&](const Triple& p) { return subset(affine(OvoidPoint::triple(p)), w_set(p)); };
  if (c.exhaustive()) {
    for (const auto& p : c.omega()) {
      if (!p.is_infinity() && !contained(p.coords())) return Outcome::fail(p.to_string(), "affine block outside W_p");
    }
  } else {
    for (std::uint64_t t = 0; t < c.trials; ++t) {
      const Triple p = c.random_triple();
      if (!contained(p)) return Outcome::fail(OvoidPoint::triple(p).to_string(), "affine block outside W_p");
    }
  }
  const std::string shown = block.size() <= 4 ? join_points(block) : "of " + std::to_string(block.size()) + " points";
  return Outcome::ok("block " + shown + " recovered from " + std::to_string(w0.size()) + " points");
}

// ---------------------------------------------------------------------------
// Automorphisms

std::string perm_string(const Permutation& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + std::to_string(p[i]);
  return s + "]";
}

Outcome aut_order_check(Context& c) {
  const auto& g = c.data.group(Structure::G);
  const auto& gc = c.data.group(Structure::GC);
  const auto& gs = c.data.group(Structure::GS);
  const std::uint64_t q = c.field.order();
  const std::uint64_t expected = q * q * q * (q * q * q + 1) * (q - 1);
  for (const auto* h : {&g, &gc, &gs}) {
    if (h->order != expected || h->elements.size() != expected) {
      return Outcome::fail("orders " + std::to_string(g.order) + " " + std::to_string(gc.order) + " " +
                           std::to_string(gs.order));
    }
  }
  if (g.elements != gc.elements) return Outcome::fail("Aut(G) != Aut(G_C)");
  if (g.elements != gs.elements) return Outcome::fail("Aut(G) != Aut(G_S)");
  return Outcome::ok("|Aut(G)| = |Aut(G_C)| = |Aut(G_S)| = " + std::to_string(expected) + ", equal groups, " +
                     std::to_string(g.generators.size()) + " generators");
}

Outcome aut_gnarls_check(Context& c) {
  std::map<std::vector<std::uint32_t>, std::pair<BlockKind, std::uint32_t>> index;
  std::vector<Block> blocks = c.data.circles();
  blocks.insert(blocks.end(), c.data.spheres().begin(), c.data.spheres().end());
  const auto idx = block_indices(blocks);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    index[idx[i]] = {blocks[i].kind, static_cast<std::uint32_t>(ovoid_index(blocks[i].gnarl))};
  }
  const auto& group = c.data.group(Structure::G);
  for (const auto& g : group.elements) {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      std::vector<std::uint32_t> img;
      for (auto p : idx[i]) img.push_back(g[p]);
      std::sort(img.begin(), img.end());
      const auto it = index.find(img);
      if (it == index.end()) return Outcome::fail(perm_string(g), "image of " + block_string(blocks[i]) + " is no block");
      if (it->second.first != blocks[i].kind) return Outcome::fail(perm_string(g), "kind of " + block_string(blocks[i]));
      if (it->second.second != g[ovoid_index(blocks[i].gnarl)]) {
        return Outcome::fail(perm_string(g), "gnarl of " + block_string(blocks[i]));
      }
    }
  }
  return Outcome::ok(std::to_string(group.elements.size()) + " automorphisms, " + std::to_string(blocks.size()) + " blocks");
}

Outcome aut_derived_check(Context& c) {
  std::map<std::vector<std::uint32_t>, DerivedKind> kinds;
  const auto objects = derived_objects(c.field);
  std::vector<std::vector<std::uint32_t>> sets;
  for (const auto& d : objects) {
    std::vector<std::uint32_t> s;
    for (const auto& p : d.points) s.push_back(static_cast<std::uint32_t>(ovoid_index(p)));
    kinds[s] = d.kind;
    sets.push_back(std::move(s));
  }
  std::size_t fixing = 0;
  for (const auto& g : c.data.group(Structure::G).elements) {
    if (g[0] != 0) continue;
    ++fixing;
    for (std::size_t i = 0; i < objects.size(); ++i) {
      std::vector<std::uint32_t> img;
      for (auto p : sets[i]) img.push_back(g[p]);
      std::sort(img.begin(), img.end());
      const auto it = kinds.find(img);
      if (it == kinds.end() || it->second != objects[i].kind) {
        return Outcome::fail(perm_string(g), "type of " + derived_string(objects[i]));
      }
    }
  }
  return Outcome::ok(std::to_string(fixing) + " automorphisms fixing inf");
}

Outcome aut_stabilizer_check(Context& c) {
  const FieldElement z = c.field.zero();
  const OvoidPoint inf = OvoidPoint::infinity();
  const Block s = sphere(c.field, inf, OvoidPoint::triple(z, z, z));
  std::vector<std::vector<std::uint32_t>> fixed;
  for (const auto& b : unital_blocks(c.field)) {
    if (b.front() == inf && subset(b, s.points)) {
      std::vector<std::uint32_t> v;
      for (const auto& p : b) v.push_back(static_cast<std::uint32_t>(ovoid_index(p)));
      fixed.push_back(std::move(v));
    }
  }
  std::vector<Permutation> stab;
  for (const auto& g : c.data.group(Structure::GS).elements) {
    if (g[0] != 0) continue;
    bool ok = true;
    for (const auto& b : fixed) {
      std::vector<std::uint32_t> img;
      for (auto p : b) img.push_back(g[p]);
      std::sort(img.begin(), img.end());
      ok = ok && img == b;
    }
    if (ok) stab.push_back(g);
  }
  std::vector<Permutation> expected;
  for (const auto& t : c.elements) {
    expected.push_back(induced_permutation(c.field, [&](const OvoidPoint& p) {
      return u_infty_apply(p, {z, t, z});
    }));
  }
  std::sort(expected.begin(), expected.end());
  if (stab != expected) {
    return Outcome::fail("order " + std::to_string(stab.size()), std::to_string(fixed.size()) + " blocks fixed");
  }
  return Outcome::ok("order " + std::to_string(stab.size()) + " fixing " + std::to_string(fixed.size()) +
                     " unital blocks");
}

Outcome aut_membership_check(Context& c) {
  const PermutationGroup* groups[] = {&c.data.group(Structure::G), &c.data.group(Structure::GC),
                                      &c.data.group(Structure::GS)};
  std::size_t checked = 0;
  auto member = [&](const Permutation& p) {
    ++checked;
    return std::all_of(std::begin(groups), std::end(groups), [&](const auto* g) { return g->contains(p); });
  };
  for (const auto& l : c.elements) {
    if (l.is_zero()) continue;
    for (int s = 0; s < c.field.degree(); ++s) {
      const KnownCollineation k(l, s);
      const auto p = induced_permutation(c.field, [&](const OvoidPoint& x) { return k.apply(x); });
      if (!member(p)) return Outcome::fail("collineation l=" + l.to_string() + " s=" + std::to_string(s));
    }
  }
  for (const auto& base : c.omega()) {
    for (const auto& g : subgroup_elements(c.field, base, Subgroup::full)) {
      const auto p = induced_permutation(c.field, [&](const OvoidPoint& x) { return root_group_apply(c.field, g, x); });
      if (!member(p)) {
        return Outcome::fail("root group " + base.to_string() + " " + OvoidPoint::triple(g.params).to_string());
      }
    }
  }
  return Outcome::ok(std::to_string(checked) + " maps");
}

// Each automorphism extends to the points on absolute lines: a non-absolute point p
// on an absolute line goes to the point whose sphere is the image of p's sphere.
// The extension must preserve hexagon distances and carry x^rho to (x^g)^rho.
Outcome aut_polarity_check(Context& c) {
  const auto& graph = c.data.graph();
  const auto om = c.omega();
  std::vector<HexElement> pts;
  for (const auto& x : om) pts.push_back(compact_to_hex(x));
  std::vector<std::vector<std::uint32_t>> line_points(om.size());
  std::map<std::vector<std::uint32_t>, std::uint32_t> by_sphere;
  for (std::size_t i = 0; i < om.size(); ++i) {
    line_points[i].push_back(static_cast<std::uint32_t>(i));
    for (const auto& p : neighbors(c.field, polarity(compact_to_hex(om[i])))) {
      if (is_absolute(p)) continue;
      const auto s = sphere_from_point(graph, p);
      if (!s || s->gnarl != om[i]) return Outcome::fail(p.to_string(), "sphere of a point on an absolute line");
      std::vector<std::uint32_t> key;
      for (const auto& x : s->points) key.push_back(static_cast<std::uint32_t>(ovoid_index(x)));
      if (by_sphere.contains(key)) return Outcome::fail(p.to_string(), "two points with one sphere");
      const auto id = static_cast<std::uint32_t>(pts.size());
      by_sphere[key] = id;
      pts.push_back(p);
      line_points[i].push_back(id);
    }
  }
  if (by_sphere.size() != c.data.spheres().size()) return Outcome::fail("sphere count", "not a bijection");
  std::vector<std::vector<std::uint32_t>> sphere_of(pts.size());
  for (const auto& [key, id] : by_sphere) sphere_of[id] = key;
  std::vector<std::vector<int>> dist(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto d = graph.distances_from(graph.vertex_of(pts[i]));
    for (const auto& p : pts) dist[i].push_back(d[graph.vertex_of(p)]);
  }
  for (auto& l : line_points) std::sort(l.begin(), l.end());
  for (const auto& g : c.data.group(Structure::G).elements) {
    std::vector<std::uint32_t> ext(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i < om.size()) {
        ext[i] = g[i];
        continue;
      }
      std::vector<std::uint32_t> img;
      for (auto x : sphere_of[i]) img.push_back(g[x]);
      std::sort(img.begin(), img.end());
      const auto it = by_sphere.find(img);
      if (it == by_sphere.end()) return Outcome::fail(perm_string(g), "sphere image");
      ext[i] = it->second;
    }
    for (std::size_t i = 0; i < om.size(); ++i) {
      std::vector<std::uint32_t> img;
      for (auto x : line_points[i]) img.push_back(ext[x]);
      std::sort(img.begin(), img.end());
      if (img != line_points[g[i]]) return Outcome::fail(perm_string(g), "absolute line of " + om[i].to_string());
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = 0; j < pts.size(); ++j) {
        if (dist[ext[i]][ext[j]] != dist[i][j]) {
          return Outcome::fail(perm_string(g), "distance " + pts[i].to_string() + " / " + pts[j].to_string());
        }
      }
    }
  }
  return Outcome::ok(std::to_string(pts.size()) + " points on absolute lines");
}

bool has_imported(const Field&, const SuiteOptions& o) { return o.imported_blocks != nullptr; }

}  // namespace

void add_geometry_checks(std::vector<CheckDef>& out) {
  const auto G = SuiteName::geometry;
  out.push_back({"geometry.circles", G, any_field, [](Context& c) { return blocks_check(c, BlockKind::circle); }});
  out.push_back({"geometry.spheres", G, any_field, [](Context& c) { return blocks_check(c, BlockKind::sphere); }});
  out.push_back({"geometry.samegnarl", G, any_field, samegnarl_literal_check});
  out.push_back({"geometry.samegnarl-own-gnarl-partition", G, any_field, samegnarl_partition_check});
  out.push_back({"geometry.hexagon-circles", G, small_field,
                 [](Context& c) { return hexagon_blocks_check(c, BlockKind::circle); }});
  out.push_back({"geometry.hexagon-spheres", G, small_field,
                 [](Context& c) { return hexagon_blocks_check(c, BlockKind::sphere); }});
  out.push_back({"geometry.derived-objects", G, any_field, derived_objects_check});
  out.push_back({"geometry.parallelism", G, any_field, parallelism_check});
  out.push_back({"geometry.parallel-class-gnarls", G, any_field, parallel_class_check});
  out.push_back({"geometry.intersect", G, any_field, intersect_check});
  out.push_back({"geometry.intersect2", G, any_field, intersect2_check});
  out.push_back({"geometry.intersect3", G, any_field, intersect3_check});
  out.push_back({"unital.design", G, any_field, unital_design_check});
  out.push_back({"unital.base-display", G, any_field, unital_base_check});
  out.push_back({"unital.w-sets", G, any_field, w_sets_check});
  out.push_back({"geometry.aut-order", G, small_field, aut_order_check});
  out.push_back({"geometry.aut-gnarls-kinds", G, small_field, aut_gnarls_check});
  out.push_back({"geometry.aut-derived-types", G, small_field, aut_derived_check});
  out.push_back({"geometry.aut-stabilizer", G, small_field, aut_stabilizer_check});
  out.push_back({"geometry.aut-membership", G, small_field, aut_membership_check});
  out.push_back({"geometry.aut-polarity", G, small_field, aut_polarity_check});
  out.push_back({"geometry.imported-blocks", G, has_imported, imported_blocks_check});
}

}  // namespace reekit::checks
