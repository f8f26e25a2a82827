#include "reekit/geometry.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <unordered_set>

namespace reekit {

namespace {

using FE = FieldElement;

std::vector<OvoidPoint> sorted_unique(std::vector<OvoidPoint> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Block orbit_block(const Field& field, BlockKind kind, const OvoidPoint& gnarl,
                  const OvoidPoint& through) {
  if (gnarl == through) throw std::invalid_argument("block needs two distinct points");
  const Subgroup which = kind == BlockKind::circle ? Subgroup::center : Subgroup::derived;
  std::vector<OvoidPoint> pts{gnarl};
  for (const auto& g : subgroup_elements(field, gnarl, which)) {
    pts.push_back(root_group_apply(field, g, through));
  }
  return {kind, gnarl, sorted_unique(std::move(pts))};
}

std::size_t expected_size(const Field& field, BlockKind kind) {
  const std::size_t q = field.order();
  return kind == BlockKind::circle ? q + 1 : q * q + 1;
}

const char* kind_name(BlockKind k) { return k == BlockKind::circle ? "circle" : "sphere"; }

}  // namespace

bool Block::contains(const OvoidPoint& p) const {
  return std::binary_search(points.begin(), points.end(), p);
}

Block circle(const Field& field, const OvoidPoint& gnarl, const OvoidPoint& through) {
  return orbit_block(field, BlockKind::circle, gnarl, through);
}

Block sphere(const Field& field, const OvoidPoint& gnarl, const OvoidPoint& through) {
  return orbit_block(field, BlockKind::sphere, gnarl, through);
}

std::vector<Block> contained_circles(const Field& field, const std::vector<OvoidPoint>& points) {
  std::set<std::vector<OvoidPoint>> seen;
  std::vector<Block> out;
  for (const auto& x : points) {
    for (const auto& y : points) {
      if (x == y) continue;
      Block c = circle(field, x, y);
      if (!std::includes(points.begin(), points.end(), c.points.begin(), c.points.end())) continue;
      if (seen.insert(c.points).second) out.push_back(std::move(c));
    }
  }
  return out;
}

OvoidPoint gnarl_of(const Field& field, const Block& b) {
  if (b.points.size() < 2) throw DataError("block with fewer than two points");
  std::vector<OvoidPoint> found;
  for (const auto& x : b.points) {
    const OvoidPoint& y = b.points[b.points[0] == x ? 1 : 0];
    if (orbit_block(field, b.kind, x, y).points == b.points) found.push_back(x);
  }
  if (found.size() != 1) {
    throw DataError(std::string(kind_name(b.kind)) + " has " + std::to_string(found.size()) +
                    " gnarl candidates");
  }
  return found.front();
}

void validate_block(const Field& field, const Block& b) {
  if (b.points.size() != expected_size(field, b.kind)) {
    throw DataError(std::string(kind_name(b.kind)) + " of size " +
                    std::to_string(b.points.size()));
  }
  if (!std::is_sorted(b.points.begin(), b.points.end()) ||
      std::adjacent_find(b.points.begin(), b.points.end()) != b.points.end()) {
    throw DataError("block points not in canonical order");
  }
  const OvoidPoint g = gnarl_of(field, b);
  if (!(g == b.gnarl)) {
    throw DataError(std::string(kind_name(b.kind)) + " marked with gnarl " + b.gnarl.to_string() +
                    " but its gnarl is " + g.to_string());
  }
}

std::vector<Block> all_blocks(const Field& field, BlockKind kind) {
  const auto om = ovoid(field);
  std::vector<Block> out;
  std::set<std::vector<OvoidPoint>> seen;
  for (const auto& x : om) {
    std::vector<bool> covered(om.size(), false);
    covered[ovoid_index(x)] = true;
    std::vector<Block> here;
    for (const auto& y : om) {
      if (covered[ovoid_index(y)]) continue;
      Block b = orbit_block(field, kind, x, y);
      for (const auto& p : b.points) covered[ovoid_index(p)] = true;
      if (seen.insert(b.points).second) here.push_back(std::move(b));
    }
    std::sort(here.begin(), here.end(),
              [](const Block& u, const Block& v) { return u.points < v.points; });
    for (auto& b : here) out.push_back(std::move(b));
  }
  return out;
}

std::optional<Block> circle_from_line(const HexagonGraph& graph, const HexElement& line) {
  const Field& f = graph.field();
  if (!line.is_line()) throw std::invalid_argument("circle_from_line: expected a line");
  if (is_absolute(polarity(line))) return std::nullopt;
  for (const auto& p : neighbors(f, line)) {
    if (is_absolute(p)) return std::nullopt;
  }
  const auto d = graph.distances_from(graph.vertex_of(line));
  std::vector<OvoidPoint> pts;
  std::vector<OvoidPoint> gnarls;
  for (const auto& x : ovoid(f)) {
    const HexElement h = compact_to_hex(x);
    if (d[graph.vertex_of(h)] == 3) pts.push_back(x);
    if (d[graph.vertex_of(polarity(h))] == 2) gnarls.push_back(x);
  }
  if (gnarls.size() != 1) {
    throw DataError("line " + line.to_string() + " meets " + std::to_string(gnarls.size()) +
                    " absolute lines");
  }
  return Block{BlockKind::circle, gnarls.front(), std::move(pts)};
}

std::optional<Block> sphere_from_point(const HexagonGraph& graph, const HexElement& point) {
  const Field& f = graph.field();
  if (!point.is_point()) throw std::invalid_argument("sphere_from_point: expected a point");
  if (is_absolute(point)) return std::nullopt;
  bool on_absolute_line = false;
  for (const auto& L : neighbors(f, point)) {
    if (is_absolute(polarity(L))) on_absolute_line = true;
  }
  if (!on_absolute_line) return std::nullopt;
  const auto d = graph.distances_from(graph.vertex_of(point));
  std::vector<OvoidPoint> pts;
  std::vector<OvoidPoint> gnarls;
  for (const auto& x : ovoid(f)) {
    const int dx = d[graph.vertex_of(compact_to_hex(x))];
    if (dx < 6) pts.push_back(x);
    if (dx == 2) gnarls.push_back(x);
  }
  if (gnarls.size() != 1) {
    throw DataError("point " + point.to_string() + " is collinear with " +
                    std::to_string(gnarls.size()) + " absolute points");
  }
  return Block{BlockKind::sphere, gnarls.front(), std::move(pts)};
}

// ---------------------------------------------------------------------------

DerivedObject vertical_line(const FieldElement& a, const FieldElement& a1) {
  const Field& f = a.field();
  DerivedObject d{DerivedKind::vertical_line, {a, a1, f.zero()}, {}};
  for (const auto& t : f.elements()) d.points.push_back(OvoidPoint::triple(a, a1, t));
  d.points = sorted_unique(std::move(d.points));
  return d;
}

DerivedObject ordinary_line(const Triple& g) {
  const Field& f = g[0].field();
  const FE &a = g[0], &a1 = g[1], &a2 = g[2];
  const FE at = a.theta();
  DerivedObject d{DerivedKind::ordinary_line, g, {}};
  for (const auto& x : f.elements()) {
    d.points.push_back(OvoidPoint::triple(a + x, a1 + at * x,
                                          a2 + (a1 - a * at) * x - theta_power(x, 2, 1)));
  }
  d.points = sorted_unique(std::move(d.points));
  return d;
}

DerivedObject vertical_plane(const FieldElement& a) {
  const Field& f = a.field();
  DerivedObject d{DerivedKind::vertical_plane, {a, f.zero(), f.zero()}, {}};
  for (const auto& t1 : f.elements()) {
    for (const auto& t2 : f.elements()) d.points.push_back(OvoidPoint::triple(a, t1, t2));
  }
  d.points = sorted_unique(std::move(d.points));
  return d;
}

DerivedObject ordinary_plane(const Triple& g) {
  const Field& f = g[0].field();
  DerivedObject d{DerivedKind::ordinary_plane, g, {OvoidPoint::triple(g)}};
  for (const auto& x1 : f.elements()) {
    for (const auto& x2 : f.elements()) {
      if (x1.is_zero() && x2.is_zero()) continue;
      const FE den = (x2 * x2 + theta_power(x1, 1, 1)).inv();
      const Triple frac{(x2.theta() - x1 * x2) * den, -(x1.theta() * den), -(x2 * den)};
      d.points.push_back(OvoidPoint::triple(u_infty_mul(frac, g)));
    }
  }
  d.points = sorted_unique(std::move(d.points));
  return d;
}

std::vector<DerivedObject> derived_objects(const Field& field) {
  const auto el = field.elements();
  std::vector<DerivedObject> out;
  for (const auto& a : el) {
    for (const auto& b : el) out.push_back(vertical_line(a, b));
  }
  for (const auto& a : el) {
    for (const auto& b : el) {
      for (const auto& c : el) out.push_back(ordinary_line({a, b, c}));
    }
  }
  for (const auto& a : el) out.push_back(vertical_plane(a));
  for (const auto& a : el) {
    for (const auto& b : el) {
      for (const auto& c : el) out.push_back(ordinary_plane({a, b, c}));
    }
  }
  return out;
}

bool are_parallel(const DerivedObject& c1, const DerivedObject& c2) {
  if (c1.kind != DerivedKind::ordinary_line || c2.kind != DerivedKind::ordinary_line) {
    throw std::invalid_argument("are_parallel: expected ordinary lines");
  }
  return c1.params[0] == c2.params[0];
}

bool are_parallel_by_vertical_lines(const DerivedObject& c1, const DerivedObject& c2) {
  auto verticals = [](const DerivedObject& c) {
    std::set<std::pair<FE, FE>> s;
    for (const auto& p : c.points) s.emplace(p[0], p[1]);
    return s;
  };
  const auto v1 = verticals(c1);
  const auto v2 = verticals(c2);
  if (v1 == v2) return true;
  return std::none_of(v1.begin(), v1.end(), [&](const auto& v) { return v2.contains(v); });
}

bool intersects(const DerivedObject& x, const DerivedObject& y) {
  auto i = x.points.begin();
  auto j = y.points.begin();
  while (i != x.points.end() && j != y.points.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------

std::vector<OvoidPoint> unital_block(const Field& field, const OvoidPoint& p, const OvoidPoint& q) {
  if (p == q) throw std::invalid_argument("unital_block needs two distinct points");
  if (q.is_infinity()) return unital_block(field, q, p);
  const auto el = field.elements();
  if (p.is_infinity()) {
    const FE &a = q[0], &a1 = q[1], &a2 = q[2];
    std::vector<OvoidPoint> pts{p};
    for (const auto& t : el) pts.push_back(OvoidPoint::triple(a, t, a2 + a * a1 - a * t));
    return sorted_unique(std::move(pts));
  }
  const Triple& t = p.coords();
  const OvoidPoint r = u_infty_apply(q, u_infty_inverse(t));
  const Triple h = u_zero_transporter(r);
  std::vector<OvoidPoint> pts{p, u_infty_apply(r, t)};
  for (const auto& s : el) {
    const OvoidPoint b = u_zero_apply(field, OvoidPoint::triple(field.zero(), s, field.zero()), h);
    pts.push_back(u_infty_apply(b, t));
  }
  return sorted_unique(std::move(pts));
}

std::vector<std::vector<OvoidPoint>> unital_blocks(const Field& field) {
  const auto om = ovoid(field);
  std::set<std::vector<OvoidPoint>> blocks;
  const std::size_t n = om.size();
  std::vector<std::vector<bool>> joined(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (joined[i][j]) continue;
      auto b = unital_block(field, om[i], om[j]);
      for (const auto& x : b) {
        for (const auto& y : b) joined[ovoid_index(x)][ovoid_index(y)] = true;
      }
      blocks.insert(std::move(b));
    }
  }
  return {blocks.begin(), blocks.end()};
}

std::vector<OvoidPoint> w_set(const Triple& p) {
  const DerivedObject v = vertical_plane(p[0]);
  const DerivedObject s = ordinary_plane(p);
  std::vector<OvoidPoint> out;
  std::set_intersection(v.points.begin(), v.points.end(), s.points.begin(), s.points.end(),
                        std::back_inserter(out));
  return out;
}

// ---------------------------------------------------------------------------

bool PermutationGroup::contains(const Permutation& g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

namespace {

// Backtracking over point images. A partial map phi on A = {0..i} survives
// iff the multiset of traces B & A, carried over by phi, equals the multiset
// of traces B & phi(A); at i = n-1 this says phi permutes the blocks. A
// cheaper test, that each partial block image lies in some block, runs first.
class BlockSearch {
 public:
  BlockSearch(std::size_t n, std::span<const std::vector<std::uint32_t>> blocks)
      : n_(n), img_(n, 0), used_(0) {
    for (const auto& b : blocks) {
      std::uint64_t m = 0;
      for (auto x : b) m |= std::uint64_t{1} << x;
      masks_.push_back(m);
      for (std::uint64_t t = m; t != 0; t = (t - 1) & m) {
        if (std::popcount(t) >= 2) partial_.insert(t);
      }
    }
    by_point_.resize(n);
    for (std::size_t b = 0; b < masks_.size(); ++b) {
      for (std::size_t x = 0; x < n; ++x) {
        if (masks_[b] >> x & 1) by_point_[x].push_back(b);
      }
    }
    mapped_.resize(masks_.size());
    target_.resize(masks_.size());
  }

  std::vector<Permutation> run() {
    out_.clear();
    recurse(0);
    return std::move(out_);
  }

 private:
  std::uint64_t image_of(std::uint64_t m) const {
    std::uint64_t image = 0;
    for (std::uint64_t s = m; s != 0; s &= s - 1) image |= std::uint64_t{1} << img_[std::countr_zero(s)];
    return image;
  }

  bool consistent(std::size_t i) {
    const std::uint64_t domain = i + 1 >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << (i + 1)) - 1;
    for (auto b : by_point_[i]) {
      const std::uint64_t m = masks_[b] & domain;
      if (std::popcount(m) >= 2 && !partial_.contains(image_of(m))) return false;
    }
    for (std::size_t b = 0; b < masks_.size(); ++b) {
      mapped_[b] = image_of(masks_[b] & domain);
      target_[b] = masks_[b] & used_;
    }
    std::sort(mapped_.begin(), mapped_.end());
    std::sort(target_.begin(), target_.end());
    return mapped_ == target_;
  }

  void recurse(std::size_t i) {
    if (i == n_) {
      out_.emplace_back(img_.begin(), img_.end());
      return;
    }
    for (std::uint32_t v = 0; v < n_; ++v) {
      if (used_ >> v & 1) continue;
      img_[i] = v;
      used_ |= std::uint64_t{1} << v;
      if (consistent(i)) recurse(i + 1);
      used_ &= ~(std::uint64_t{1} << v);
    }
  }

  std::size_t n_;
  std::vector<std::uint32_t> img_;
  std::uint64_t used_;
  std::vector<std::uint64_t> masks_;
  std::unordered_set<std::uint64_t> partial_;
  std::vector<std::vector<std::size_t>> by_point_;
  std::vector<std::uint64_t> mapped_;
  std::vector<std::uint64_t> target_;
  std::vector<Permutation> out_;
};

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

}  // namespace

std::vector<Permutation> greedy_generators(const std::vector<Permutation>& sorted_elements) {
  std::vector<Permutation> gens;
  if (sorted_elements.empty()) return gens;
  const std::size_t n = sorted_elements.front().size();
  Permutation id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<std::uint32_t>(i);
  std::set<Permutation> generated{id};
  for (const auto& g : sorted_elements) {
    if (generated.contains(g)) continue;
    gens.push_back(g);
    std::vector<Permutation> frontier(generated.begin(), generated.end());
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& x : frontier) {
        for (const auto& s : gens) {
          auto y = compose(x, s);
          if (generated.insert(y).second) next.push_back(std::move(y));
        }
      }
      frontier = std::move(next);
    }
    if (generated.size() == sorted_elements.size()) break;
  }
  return gens;
}

PermutationGroup automorphism_group(std::size_t n, std::span<const std::vector<std::uint32_t>> blocks) {
  if (n > 64) throw std::invalid_argument("automorphism search supports at most 64 points");
  PermutationGroup g;
  g.elements = BlockSearch(n, blocks).run();
  std::sort(g.elements.begin(), g.elements.end());
  g.order = g.elements.size();
  g.generators = greedy_generators(g.elements);
  return g;
}

std::vector<std::vector<std::uint32_t>> block_indices(const std::vector<Block>& blocks) {
  std::vector<std::vector<std::uint32_t>> out;
  out.reserve(blocks.size());
  for (const auto& b : blocks) {
    std::vector<std::uint32_t> idx;
    for (const auto& p : b.points) idx.push_back(static_cast<std::uint32_t>(ovoid_index(p)));
    out.push_back(std::move(idx));
  }
  return out;
}

PermutationGroup automorphism_group(const Field& field, Structure structure) {
  std::vector<Block> blocks;
  if (structure != Structure::GS) blocks = all_blocks(field, BlockKind::circle);
  if (structure != Structure::GC) {
    auto s = all_blocks(field, BlockKind::sphere);
    blocks.insert(blocks.end(), s.begin(), s.end());
  }
  const auto idx = block_indices(blocks);
  const std::size_t q = field.order();
  return automorphism_group(q * q * q + 1, idx);
}

}  // namespace reekit
