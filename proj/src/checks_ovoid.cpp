#include <algorithm>
#include <set>

#include "checks.hpp"

namespace reekit::checks {

namespace {

using TripleKey = std::array<std::uint32_t, 3>;

TripleKey key(const Triple& t) { return {t[0].index(), t[1].index(), t[2].index()}; }

bool is_zero_triple(const Triple& t) { return t[0].is_zero() && t[1].is_zero() && t[2].is_zero(); }

std::vector<Triple> all_triples(const Context& c) {
  std::vector<Triple> out;
  for (const auto& a : c.elements) {
    for (const auto& b : c.elements) {
      for (const auto& d : c.elements) out.push_back({a, b, d});
    }
  }
  return out;
}

using MatrixKey = std::array<std::uint32_t, 49>;

MatrixKey key(const Matrix7& m) {
  MatrixKey k{};
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = 0; j < 7; ++j) k[7 * i + j] = m[i][j].index();
  }
  return k;
}

std::string triple_string(const Triple& t) { return OvoidPoint::triple(t).to_string(); }

// ---------------------------------------------------------------------------
// Polarity

Outcome polarity_involution_check(Context& c) {
  auto test = [](const HexElement& el) { return polarity(polarity(el)) == el; };
  if (c.exhaustive()) {
    for (const auto& el : enumerate_elements(c.field)) {
      if (polarity(el).kind == el.kind) return Outcome::fail(el.to_string(), "kind kept");
      if (!test(el)) return Outcome::fail(el.to_string());
    }
    return Outcome::ok(std::to_string(2 * element_count(c.field)) + " elements");
  }
  for (std::uint64_t t = 0; t < c.trials; ++t) {
    const HexElement el = c.random_hex(t % 2 ? ElementKind::line : ElementKind::point);
    if (!test(el)) return Outcome::fail(el.to_string());
  }
  return Outcome::ok();
}

Outcome polarity_incidence_check(Context& c) {
  auto test = [](const HexElement& p, const HexElement& L) {
    return incident(polarity(L), polarity(p));
  };
  if (c.exhaustive()) {
    const auto& g = c.data.graph();
    std::size_t pairs = 0;
    for (std::size_t v = 0; v < g.points_count(); ++v) {
      for (auto w : g.adjacent(v)) {
        ++pairs;
        if (!test(g.element(v), g.element(w))) {
          return Outcome::fail(g.element(v).to_string() + " / " + g.element(w).to_string());
        }
      }
    }
    return Outcome::ok(std::to_string(pairs) + " flags");
  }
  for (std::uint64_t t = 0; t < c.trials; ++t) {
    const HexElement p = c.random_hex(ElementKind::point);
    const auto nb = neighbors(c.field, p);
    const HexElement& L = nb[std::uniform_int_distribution<std::size_t>(0, nb.size() - 1)(c.rng)];
    if (!test(p, L)) return Outcome::fail(p.to_string() + " / " + L.to_string());
    const HexElement M = c.random_hex(ElementKind::line);
    if (incident(p, M) != test(p, M)) return Outcome::fail(p.to_string() + " / " + M.to_string());
  }
  return Outcome::ok();
}

Outcome absolute_points_check(Context& c) {
  const auto om = c.omega();
  const std::uint64_t q = c.field.order();
  if (om.size() != q * q * q + 1) return Outcome::fail("size " + std::to_string(om.size()));
  for (std::size_t i = 0; i < om.size(); ++i) {
    const HexElement h = compact_to_hex(om[i]);
    if (!is_absolute(h) || !incident(h, polarity(h))) return Outcome::fail(om[i].to_string());
    if (hex_to_compact(h) != om[i]) return Outcome::fail(om[i].to_string(), "dictionary round trip");
    if (ovoid_index(om[i]) != i || ovoid_at(c.field, i) != om[i]) {
      return Outcome::fail(om[i].to_string(), "index");
    }
  }
  if (c.exhaustive()) {
    std::size_t count = 0;
    const auto& g = c.data.graph();
    for (std::size_t v = 0; v < g.points_count(); ++v) {
      const HexElement& p = g.element(v);
      const bool abs = incident(p, polarity(p));
      if (abs != is_absolute(p)) return Outcome::fail(p.to_string(), "criterion mismatch");
      if (abs != hex_to_compact(p).has_value()) return Outcome::fail(p.to_string(), "dictionary");
      count += abs;
    }
    if (count != om.size()) return Outcome::fail("absolute count " + std::to_string(count));
    return Outcome::ok(std::to_string(count) + " absolute points");
  }
  for (std::uint64_t t = 0; t < c.trials; ++t) {
    const HexElement p = c.random_hex(ElementKind::point);
    if (incident(p, polarity(p)) != is_absolute(p)) return Outcome::fail(p.to_string());
  }
  return Outcome::ok(std::to_string(om.size()) + " absolute points");
}

Outcome opposite_check(Context& c) {
  if (c.exhaustive()) {
    const auto& g = c.data.graph();
    const auto om = c.omega();
    for (std::size_t i = 0; i < om.size(); ++i) {
      const auto d = g.distances_from(g.vertex_of(compact_to_hex(om[i])));
      for (std::size_t j = i + 1; j < om.size(); ++j) {
        if (d[g.vertex_of(compact_to_hex(om[j]))] != 6) {
          return Outcome::fail(om[i].to_string() + " / " + om[j].to_string());
        }
      }
    }
    return Outcome::ok(std::to_string(om.size() * (om.size() - 1) / 2) + " pairs");
  }
  const std::uint64_t n = std::min<std::uint64_t>(c.trials, 200);
  for (std::uint64_t t = 0; t < n; ++t) {
    const OvoidPoint x = t == 0 ? OvoidPoint::infinity() : c.random_finite_point();
    OvoidPoint y = c.random_finite_point();
    if (x == y) continue;
    if (graph_distance(c.field, compact_to_hex(x), compact_to_hex(y)) != 6) {
      return Outcome::fail(x.to_string() + " / " + y.to_string());
    }
  }
  return Outcome::ok().with_trials(n);
}

// Absolute points at distance 2, found through the q+1 lines on p.
std::size_t absolute_collinear(const Field& f, const HexElement& p) {
  std::set<HexElement> found;
  for (const auto& L : neighbors(f, p)) {
    for (const auto& r : neighbors(f, L)) {
      if (r != p && is_absolute(r)) found.insert(r);
    }
  }
  return found.size();
}

Outcome unique_collinear_check(Context& c) {
  if (c.exhaustive()) {
    std::size_t count = 0;
    const auto& g = c.data.graph();
    for (std::size_t v = 0; v < g.points_count(); ++v) {
      const HexElement& p = g.element(v);
      if (is_absolute(p)) continue;
      ++count;
      const auto k = absolute_collinear(c.field, p);
      if (k != 1) return Outcome::fail(p.to_string(), std::to_string(k) + " absolute neighbours");
    }
    return Outcome::ok(std::to_string(count) + " non-absolute points");
  }
  for (std::uint64_t t = 0; t < c.trials; ++t) {
    const HexElement p = c.random_hex(ElementKind::point);
    if (is_absolute(p)) continue;
    const auto k = absolute_collinear(c.field, p);
    if (k != 1) return Outcome::fail(p.to_string(), std::to_string(k) + " absolute neighbours");
  }
  return Outcome::ok();
}

// ---------------------------------------------------------------------------
// Dictionaries

template <class F>
Outcome over_omega(Context& c, F&& test) {
  if (c.exhaustive()) {
    for (const auto& p : c.omega()) {
      if (!test(p)) return Outcome::fail(p.to_string());
    }
    return Outcome::ok();
  }
  if (!test(OvoidPoint::infinity())) return Outcome::fail("inf");
  for (std::uint64_t t = 0; t < c.trials; ++t) {
    const OvoidPoint p = c.random_finite_point();
    if (!test(p)) return Outcome::fail(p.to_string());
  }
  return Outcome::ok();
}

Outcome dictionary_check(Context& c) {
  return over_omega(c, [&](const OvoidPoint& p) {
    return compact_to_proj(c.field, p) == project_point(c.field, compact_to_hex(p));
  });
}

Outcome proj_roundtrip_check(Context& c) {
  return over_omega(c, [&](const OvoidPoint& p) {
    return proj_to_compact(compact_to_proj(c.field, p)) == p;
  });
}

// ---------------------------------------------------------------------------
// Root groups

Outcome u_infty_group_check(Context& c) {
  const Triple id{c.field.zero(), c.field.zero(), c.field.zero()};
  auto axioms = [&](const Triple& x, const Triple& y, const Triple& z) -> std::string {
    if (u_infty_mul(u_infty_mul(x, y), z) != u_infty_mul(x, u_infty_mul(y, z))) return "associativity";
    if (u_infty_mul(x, id) != x || u_infty_mul(id, x) != x) return "identity";
    if (u_infty_mul(x, u_infty_inverse(x)) != id) return "inverse";
    return {};
  };
  if (c.exhaustive()) {
    const auto all = all_triples(c);
    for (const auto& x : all) {
      for (const auto& y : all) {
        for (const auto& z : all) {
          if (auto w = axioms(x, y, z); !w.empty()) {
            return Outcome::fail(triple_string(x) + " " + triple_string(y) + " " + triple_string(z), w);
          }
        }
      }
    }
    // Sharp transitivity: for each point, g -> p^g is a bijection onto the finite points.
    for (const auto& x : all) {
      std::set<TripleKey> images;
      for (const auto& g : all) {
        const OvoidPoint img = u_infty_apply(OvoidPoint::triple(x), g);
        if (img.is_infinity()) return Outcome::fail(triple_string(x), "left the finite points");
        images.insert(key(img.coords()));
      }
      if (images.size() != all.size()) return Outcome::fail(triple_string(x), "not sharply transitive");
    }
    return Outcome::ok("order " + std::to_string(all.size()) + ", sharply transitive on " +
                       std::to_string(all.size()) + " points");
  }
  for (std::uint64_t t = 0; t < c.trials; ++t) {
    const Triple x = c.random_triple(), y = c.random_triple(), z = c.random_triple();
    if (auto w = axioms(x, y, z); !w.empty()) {
      return Outcome::fail(triple_string(x) + " " + triple_string(y) + " " + triple_string(z), w);
    }
    // the unique element carrying x to y is x^-1 y
    const Triple g = u_infty_mul(u_infty_inverse(x), y);
    if (u_infty_apply(OvoidPoint::triple(x), g) != OvoidPoint::triple(y)) {
      return Outcome::fail(triple_string(x) + " -> " + triple_string(y), "transitivity");
    }
    if (!is_zero_triple(z) && u_infty_apply(OvoidPoint::triple(x), z) == OvoidPoint::triple(x)) {
      return Outcome::fail(triple_string(x) + " " + triple_string(z), "fixed point");
    }
  }
  return Outcome::ok();
}

Outcome u_zero_group_check(Context& c) {
  const OvoidPoint origin = OvoidPoint::triple(c.field.zero(), c.field.zero(), c.field.zero());
  auto matrix = [](const Triple& t) { return u_zero_matrix(t[0], t[1], t[2]); };
  // The element of U_0 with the same image of (inf) as m.
  auto params_of = [&](const Matrix7& m) -> std::optional<Triple> {
    const auto img = proj_to_compact(apply_matrix(compact_to_proj(c.field, OvoidPoint::infinity()), m));
    if (!img) return std::nullopt;
    if (*img == origin) return std::nullopt;
    return u_zero_transporter(*img);
  };
  auto closed = [&](const Triple& x, const Triple& y) {
    const Matrix7 prod = matrix_mul(matrix(x), matrix(y));
    if (is_identity(prod)) return true;
    const auto p = params_of(prod);
    return p && matrix(*p) == prod;
  };
  if (!is_identity(matrix({c.field.zero(), c.field.zero(), c.field.zero()}))) {
    return Outcome::fail("0,0,0", "identity");
  }
  if (c.exhaustive()) {
    const auto all = all_triples(c);
    std::set<MatrixKey> mats;
    for (const auto& x : all) mats.insert(key(matrix(x)));
    if (mats.size() != all.size()) return Outcome::fail("matrices not distinct");
    for (const auto& x : all) {
      bool has_inverse = false;
      for (const auto& y : all) {
        const Matrix7 prod = matrix_mul(matrix(x), matrix(y));
        if (!mats.contains(key(prod))) return Outcome::fail(triple_string(x) + " " + triple_string(y), "closure");
        has_inverse = has_inverse || is_identity(prod);
      }
      if (!has_inverse) return Outcome::fail(triple_string(x), "inverse");
    }
    const auto om = c.omega();
    for (const auto& p : om) {
      if (p == origin) continue;
      std::set<OvoidPoint> images;
      for (const auto& g : all) images.insert(u_zero_apply(c.field, p, g));
      if (images.size() != all.size() || images.contains(origin)) {
        return Outcome::fail(p.to_string(), "not sharply transitive");
      }
    }
    return Outcome::ok("order " + std::to_string(mats.size()) + ", sharply transitive on " +
                       std::to_string(om.size() - 1) + " points");
  }
  for (std::uint64_t t = 0; t < c.trials; ++t) {
    const Triple x = c.random_triple(), y = c.random_triple();
    if (!closed(x, y)) return Outcome::fail(triple_string(x) + " " + triple_string(y), "closure");
    const OvoidPoint target = c.random_finite_point();
    if (target == origin) continue;
    const Triple g = u_zero_transporter(target);
    if (u_zero_apply(c.field, OvoidPoint::infinity(), g) != target) {
      return Outcome::fail(target.to_string(), "transporter");
    }
    if (u_zero_apply(c.field, origin, x) != origin) return Outcome::fail(triple_string(x), "moves 0,0,0");
  }
  return Outcome::ok();
}

Outcome u_zero_omega_check(Context& c) {
  const auto om = c.omega();
  auto preserves = [&](const Triple& g) -> std::optional<std::string> {
    std::vector<bool> hit(om.size(), false);
    const Matrix7 m = u_zero_matrix(g[0], g[1], g[2]);
    for (const auto& p : om) {
      const auto img = proj_to_compact(apply_matrix(compact_to_proj(c.field, p), m));
      if (!img) return p.to_string();
      const auto i = ovoid_index(*img);
      if (hit[i]) return p.to_string() + " collides";
      hit[i] = true;
    }
    return std::nullopt;
  };
  if (c.exhaustive()) {
    for (const auto& g : all_triples(c)) {
      if (auto w = preserves(g)) return Outcome::fail(triple_string(g) + " at " + *w);
    }
    return Outcome::ok(std::to_string(om.size()) + " points per matrix");
  }
  for (std::uint64_t t = 0; t < c.trials; ++t) {
    const Triple g = c.random_triple();
    if (auto w = preserves(g)) return Outcome::fail(triple_string(g) + " at " + *w);
  }
  return Outcome::ok(std::to_string(om.size()) + " points per matrix");
}

Outcome root_groups_check(Context& c) {
  auto check_base = [&](const OvoidPoint& base, const std::vector<OvoidPoint>& others,
                        const std::vector<Triple>& params) -> std::optional<std::string> {
    for (const auto& p : others) {
      std::set<OvoidPoint> images;
      for (const auto& t : params) {
        const RootGroupElt g{base, t};
        if (root_group_apply(c.field, g, base) != base) return "moves its base by " + triple_string(t);
        images.insert(root_group_apply(c.field, g, p));
      }
      if (images.contains(base) || images.size() != params.size()) return "orbit of " + p.to_string();
    }
    return std::nullopt;
  };
  if (c.exhaustive()) {
    const auto om = c.omega();
    const auto params = all_triples(c);
    for (const auto& base : om) {
      std::vector<OvoidPoint> others;
      for (const auto& p : om) {
        if (p != base) others.push_back(p);
      }
      if (auto w = check_base(base, others, params)) return Outcome::fail(base.to_string(), *w);
    }
    for (const auto& target : om) {
      if (target.is_infinity() || is_zero_triple(target.coords())) continue;
      if (u_zero_apply(c.field, OvoidPoint::infinity(), u_zero_transporter(target)) != target) {
        return Outcome::fail(target.to_string(), "transporter");
      }
    }
    return Outcome::ok(std::to_string(om.size()) + " bases");
  }
  for (std::uint64_t t = 0; t < c.trials; ++t) {
    const OvoidPoint base = t == 0 ? OvoidPoint::infinity() : c.random_finite_point();
    const Triple g = c.random_triple();
    const OvoidPoint p = c.random_finite_point();
    if (p == base) continue;
    const RootGroupElt e{base, g};
    if (root_group_apply(c.field, e, base) != base) return Outcome::fail(base.to_string() + " " + triple_string(g), "moves base");
    const OvoidPoint img = root_group_apply(c.field, e, p);
    if (img == base) return Outcome::fail(base.to_string() + " " + triple_string(g), "hits base");
    if (!is_zero_triple(g) && img == p) return Outcome::fail(base.to_string() + " " + triple_string(g), "fixed point");
    if (!base.is_infinity()) {
      // transitivity through the transporter of p x^-1
      const OvoidPoint moved = u_infty_apply(p, u_infty_inverse(base.coords()));
      if (is_zero_triple(moved.coords())) continue;
      const RootGroupElt h{base, u_zero_transporter(moved)};
      if (root_group_apply(c.field, h, OvoidPoint::infinity()) != p) {
        return Outcome::fail(base.to_string() + " -> " + p.to_string(), "transitivity");
      }
    }
  }
  return Outcome::ok();
}

// Closure of a set of U_inf elements under multiplication.
std::set<TripleKey> generated(const Field& f, std::vector<Triple> gens) {
  const Triple id{f.zero(), f.zero(), f.zero()};
  std::set<TripleKey> seen{key(id)};
  std::vector<Triple> frontier{id};
  std::vector<Triple> uniq;
  {
    std::set<TripleKey> gk;
    for (const auto& g : gens) {
      if (gk.insert(key(g)).second) uniq.push_back(g);
    }
  }
  while (!frontier.empty()) {
    std::vector<Triple> next;
    for (const auto& x : frontier) {
      for (const auto& g : uniq) {
        const Triple y = u_infty_mul(x, g);
        if (seen.insert(key(y)).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

Outcome second_derived_check(Context& c) {
  const std::size_t q = c.elements.size();
  const FieldElement z = c.field.zero();
  std::set<TripleKey> center;
  for (const auto& t : c.elements) center.insert(key(Triple{z, z, t}));

  std::vector<Triple> gens;
  if (c.exhaustive()) {
    const auto all = all_triples(c);
    for (const auto& d : all) {
      if (!d[0].is_zero()) continue;
      for (const auto& g : all) gens.push_back(u_infty_commutator(d, g));
    }
  } else {
    for (std::uint64_t t = 0; t < c.trials; ++t) {
      const Triple d{z, c.random_element(), c.random_element()};
      const Triple g = c.random_triple();
      const Triple k = u_infty_commutator(d, g);
      if (!center.contains(key(k))) return Outcome::fail(triple_string(d) + " " + triple_string(g));
      gens.push_back(k);
    }
    for (const auto& a : c.elements) gens.push_back(u_infty_commutator({z, c.field.one(), z}, {a, z, z}));
  }
  const auto sub = generated(c.field, gens);
  if (sub != center) return Outcome::fail("order " + std::to_string(sub.size()), "generated subgroup");

  std::string detail = "[U',U] = center of order " + std::to_string(q);
  if (q > 3) {
    // the commutator subgroup is {(0,u',u'')}
    std::vector<Triple> comm;
    for (const auto& a : c.elements) {
      for (const auto& b : c.elements) comm.push_back(u_infty_commutator({a, z, z}, {b, z, z}));
    }
    for (const auto& t : c.elements) comm.push_back({z, z, t});
    for (std::uint64_t t = 0; t < std::min<std::uint64_t>(c.trials, 200); ++t) {
      comm.push_back(u_infty_commutator(c.random_triple(), c.random_triple()));
    }
    const auto derived = generated(c.field, comm);
    for (const auto& k : derived) {
      if (k[0] != 0) return Outcome::fail("commutator with nonzero first coordinate");
    }
    if (derived.size() != q * q) return Outcome::fail("order " + std::to_string(derived.size()), "commutator subgroup");
    detail += ", [U,U] of order " + std::to_string(q * q);
  }
  return Outcome::ok(detail);
}

Outcome known_collineation_check(Context& c) {
  const int degree = c.field.degree();
  std::vector<KnownCollineation> maps;
  if (c.exhaustive()) {
    for (const auto& l : c.elements) {
      if (l.is_zero()) continue;
      for (int s = 0; s < degree; ++s) maps.emplace_back(l, s);
    }
  } else {
    const std::uint64_t n = std::min<std::uint64_t>(c.trials, 50);
    for (std::uint64_t t = 0; t < n; ++t) {
      maps.emplace_back(c.random_nonzero(), std::uniform_int_distribution<int>(0, degree - 1)(c.rng));
    }
  }
  const auto om = c.omega();
  for (const auto& m : maps) {
    const std::string name = "l=" + m.ell().to_string() + " s=" + std::to_string(m.sigma());
    std::vector<bool> hit(om.size(), false);
    for (const auto& p : om) {
      const OvoidPoint img = m.apply(p);
      const auto i = ovoid_index(img);
      if (hit[i]) return Outcome::fail(name, "not injective on Omega");
      hit[i] = true;
      if (m.apply(compact_to_hex(p)) != compact_to_hex(img)) return Outcome::fail(name + " at " + p.to_string(), "extension");
    }
    auto flag = [&](const HexElement& p, const HexElement& L) {
      const HexElement mp = m.apply(p), mL = m.apply(L);
      return incident(mp, mL) && m.apply(polarity(p)) == polarity(mp);
    };
    if (c.exhaustive()) {
      const auto& g = c.data.graph();
      for (std::size_t v = 0; v < g.points_count(); ++v) {
        for (auto w : g.adjacent(v)) {
          if (!flag(g.element(v), g.element(w))) return Outcome::fail(name + " at " + g.element(v).to_string() + " / " + g.element(w).to_string());
        }
      }
    } else {
      for (int t = 0; t < 20; ++t) {
        const HexElement p = c.random_hex(ElementKind::point);
        for (const auto& L : neighbors(c.field, p)) {
          if (!flag(p, L)) return Outcome::fail(name + " at " + p.to_string() + " / " + L.to_string());
        }
      }
    }
  }
  return Outcome::ok(std::to_string(maps.size()) + " maps").with_trials(maps.size());
}

}  // namespace

void add_ovoid_checks(std::vector<CheckDef>& out) {
  out.push_back({"ovoid.polarity-involution", SuiteName::ovoid, any_field, polarity_involution_check});
  out.push_back({"ovoid.polarity-incidence", SuiteName::ovoid, any_field, polarity_incidence_check});
  out.push_back({"ovoid.absolute-points", SuiteName::ovoid, any_field, absolute_points_check});
  out.push_back({"ovoid.opposite", SuiteName::ovoid, any_field, opposite_check});
  out.push_back({"ovoid.unique-collinear", SuiteName::ovoid, any_field, unique_collinear_check});
  out.push_back({"ovoid.dictionary", SuiteName::ovoid, any_field, dictionary_check});
  out.push_back({"ovoid.proj-roundtrip", SuiteName::ovoid, any_field, proj_roundtrip_check});
  out.push_back({"ovoid.u-infty-group", SuiteName::ovoid, any_field, u_infty_group_check});
  out.push_back({"ovoid.u-zero-group", SuiteName::ovoid, any_field, u_zero_group_check});
  out.push_back({"ovoid.u-zero-omega", SuiteName::ovoid, any_field, u_zero_omega_check});
  out.push_back({"ovoid.root-groups", SuiteName::ovoid, any_field, root_groups_check});
  out.push_back({"ovoid.second-derived-center", SuiteName::ovoid, any_field, second_derived_check});
  out.push_back({"ovoid.known-collineation", SuiteName::ovoid, any_field, known_collineation_check});
}

}  // namespace reekit::checks
