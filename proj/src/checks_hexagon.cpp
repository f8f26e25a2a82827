#include <algorithm>
#include <sstream>

#include "checks.hpp"

namespace reekit::checks {

namespace {

std::string pair_witness(const HexElement& p, const HexElement& L) {
  return p.to_string() + " / " + L.to_string();
}

Outcome element_count_check(Context& c) {
  const std::uint64_t q = c.field.order();
  std::uint64_t closed = 1;
  for (int i = 0; i < 6; ++i) closed *= q;
  closed = (closed - 1) / (q - 1);
  if (element_count(c.field) != closed) {
    return Outcome::fail("count " + std::to_string(element_count(c.field)) + " != " +
                         std::to_string(closed));
  }
  if (c.exhaustive()) {
    const auto all = enumerate_elements(c.field);
    if (all.size() != 2 * closed) return Outcome::fail("enumerated " + std::to_string(all.size()));
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (index_of(all[i]) != i % closed) return Outcome::fail(all[i].to_string());
    }
    return Outcome::ok(std::to_string(closed) + " points, " + std::to_string(closed) + " lines");
  }
  for (std::uint64_t t = 0; t < c.trials; ++t) {
    const auto i = std::uniform_int_distribution<std::uint64_t>(0, closed - 1)(c.rng);
    const HexElement el = element_at(c.field, ElementKind::point, i);
    if (index_of(el) != i) return Outcome::fail(el.to_string());
  }
  return Outcome::ok(std::to_string(closed) + " points, " + std::to_string(closed) + " lines");
}

Outcome axioms_check(Context& c) {
  const auto r = check_hexagon_axioms(c.data.graph());
  std::ostringstream d;
  d << r.points << " points, " << r.lines << " lines, degree " << r.min_degree << ".."
    << r.max_degree << ", girth " << r.girth << ", diameter " << r.diameter;
  if (!r.ok) return Outcome::fail(r.witness, d.str());
  return Outcome::ok(d.str());
}

// Random pairs have distance at most 6 with the right parity, and random
// elements have q+1 distinct incident neighbours.
Outcome sampled_axioms_check(Context& c) {
  const std::uint64_t n = std::min<std::uint64_t>(c.trials, 200);
  const std::size_t q1 = c.field.order() + 1;
  for (std::uint64_t t = 0; t < n; ++t) {
    const HexElement x = c.random_hex(ElementKind::point);
    const HexElement y = c.random_hex(t % 2 ? ElementKind::line : ElementKind::point);
    const int d = graph_distance(c.field, x, y);
    if (d < 0 || d > 6 || (d % 2 == 1) != y.is_line()) {
      return Outcome::fail(x.to_string() + " / " + y.to_string() + " at distance " + std::to_string(d));
    }
    auto nb = neighbors(c.field, x);
    std::sort(nb.begin(), nb.end());
    if (std::unique(nb.begin(), nb.end()) != nb.end() || nb.size() != q1) {
      return Outcome::fail(x.to_string() + " has a repeated neighbour");
    }
    for (const auto& L : nb) {
      if (!incident(x, L)) return Outcome::fail(pair_witness(x, L));
    }
  }
  return Outcome::ok().with_trials(n);
}

Outcome embedding_check(Context& c) {
  if (c.exhaustive()) {
    const auto& g = c.data.graph();
    std::size_t pairs = 0;
    for (std::size_t v = g.points_count(); v < g.vertex_count(); ++v) {
      const HexElement& L = g.element(v);
      for (auto w : g.adjacent(v)) {
        ++pairs;
        if (!in_projective_span(c.field, g.element(w), L)) return Outcome::fail(pair_witness(g.element(w), L));
      }
    }
    return Outcome::ok(std::to_string(pairs) + " incident pairs");
  }
  for (std::uint64_t t = 0; t < c.trials; ++t) {
    const HexElement p = c.random_hex(ElementKind::point);
    const auto nb = neighbors(c.field, p);
    const HexElement& L = nb[std::uniform_int_distribution<std::size_t>(0, nb.size() - 1)(c.rng)];
    if (!in_projective_span(c.field, p, L)) return Outcome::fail(pair_witness(p, L));
  }
  return Outcome::ok();
}

Outcome five_coordinate_span_check(Context& c) {
  auto check = [&](const HexElement& p, const HexElement& L) {
    return incident(p, L) == in_projective_span(c.field, p, L);
  };
  if (c.exhaustive()) {
    std::vector<HexElement> pts, lines;
    const std::uint64_t n = element_count(c.field);
    const std::uint64_t first5 = n - c.field.order() * c.field.order() * c.field.order() *
                                         c.field.order() * c.field.order();
    for (std::uint64_t i = first5; i < n; ++i) {
      pts.push_back(element_at(c.field, ElementKind::point, i));
      lines.push_back(element_at(c.field, ElementKind::line, i));
    }
    std::size_t inc = 0;
    for (const auto& p : pts) {
      for (const auto& L : lines) {
        if (!check(p, L)) return Outcome::fail(pair_witness(p, L));
        inc += incident(p, L);
      }
    }
    return Outcome::ok(std::to_string(pts.size() * lines.size()) + " pairs, " +
                       std::to_string(inc) + " incident");
  }
  for (std::uint64_t t = 0; t < c.trials; ++t) {
    std::vector<FieldElement> pc, lc;
    for (int i = 0; i < 5; ++i) {
      pc.push_back(c.random_element());
      lc.push_back(c.random_element());
    }
    const HexElement p = HexElement::point(pc);
    const HexElement L = t % 2 ? line_through(p, lc[0]) : HexElement::line(lc);
    if (!check(p, L)) return Outcome::fail(pair_witness(p, L));
  }
  return Outcome::ok();
}

}  // namespace

void add_hexagon_checks(std::vector<CheckDef>& out) {
  out.push_back({"hexagon.element-count", SuiteName::hexagon, any_field, element_count_check});
  out.push_back({"hexagon.axioms", SuiteName::hexagon, small_field, axioms_check});
  out.push_back({"hexagon.sampled-axioms", SuiteName::hexagon,
                 [](const Field& f, const SuiteOptions& o) { return !small_field(f, o); },
                 sampled_axioms_check});
  out.push_back({"hexagon.embedding", SuiteName::hexagon, any_field, embedding_check});
  out.push_back({"hexagon.five-coordinate-span", SuiteName::hexagon, any_field,
                 five_coordinate_span_check});
}

}  // namespace reekit::checks
