#include "reekit/hexagon.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace reekit {

namespace {

using FE = FieldElement;

void require_length(const HexElement& el, std::size_t n, const char* what) {
  if (el.length() != n) {
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(n) +
                                " coordinates, got " + el.to_string());
  }
}


}  // namespace

HexElement HexElement::point(std::vector<FieldElement> c) {
  if (c.size() > 5) throw std::invalid_argument("hexagon point has at most 5 coordinates");
  return {ElementKind::point, std::move(c)};
}

HexElement HexElement::line(std::vector<FieldElement> c) {
  if (c.size() > 5) throw std::invalid_argument("hexagon line has at most 5 coordinates");
  return {ElementKind::line, std::move(c)};
}

std::string HexElement::to_string() const {
  std::string s = is_point() ? "P " : "L ";
  if (coords.empty()) return s + "inf";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i > 0) s += ',';
    s += coords[i].to_string();
  }
  return s;
}

std::strong_ordering HexElement::operator<=>(const HexElement& o) const {
  if (auto c = kind <=> o.kind; c != 0) return c;
  if (auto c = coords.size() <=> o.coords.size(); c != 0) return c;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (auto c = coords[i] <=> o.coords[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

ProjPoint ProjPoint::normalized(std::array<FieldElement, 7> raw) {
  auto it = std::find_if(raw.begin(), raw.end(), [](const FE& x) { return !x.is_zero(); });
  if (it == raw.end()) throw std::invalid_argument("projective point with all coordinates zero");
  const FE s = it->inv();
  ProjPoint p;
  for (std::size_t i = 0; i < 7; ++i) p.coords_[i] = raw[i] * s;
  return p;
}

std::string ProjPoint::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < 7; ++i) {
    if (i > 0) s += ',';
    s += coords_[i].to_string();
  }
  return s + ")";
}

// ---------------------------------------------------------------------------

std::array<FieldElement, 4> psi(const FE& k, const FE& a, const FE& l, const FE& a1,
                                const FE& l1, const FE& a2) {
  const FE a3 = a * a * a;
  return {a3 * k + l, a * a * k + a1 + a * a2, a3 * k * k + l1 + k * l, -(a * k) + a2};
}

HexElement line_through(const HexElement& point5, const FieldElement& k) {
  require_length(point5, 5, "line_through");
  const auto& c = point5.coords;
  const auto r = psi(k, c[0], c[1], c[2], c[3], c[4]);
  const FE kl = k * c[1];
  return HexElement::line({k, r[3], r[2] - kl - kl, r[1], r[0]});
}

HexElement point_on(const HexElement& line5, const FieldElement& a) {
  require_length(line5, 5, "point_on");
  const auto& c = line5.coords;  // k, b, k', b', k''
  const FE& k = c[0];
  const FE a3k = a * a * a * k;
  const FE l = c[4] - a3k;
  const FE a2 = c[1] + a * k;
  const FE a1 = c[3] - a * a * k - a * a2;
  const FE l1 = c[2] - a3k * k + k * l;
  return HexElement::point({a, l, a1, l1, a2});
}

bool incident(const HexElement& p, const HexElement& L) {
  if (!p.is_point() || !L.is_line()) {
    throw std::invalid_argument("incident: expected a point and a line");
  }
  const std::size_t ip = p.length();
  const std::size_t il = L.length();
  const std::size_t diff = ip > il ? ip - il : il - ip;
  if (diff >= 2) return false;
  if (diff == 1) {
    const std::size_t m = std::min(ip, il);
    return std::equal(p.coords.begin(), p.coords.begin() + m, L.coords.begin());
  }
  if (ip != 5) return ip == 0;
  return line_through(p, L.coords[0]) == L;
}

ProjPoint project_point(const Field& f, const HexElement& p) {
  if (!p.is_point()) throw std::invalid_argument("project_point: expected a point");
  const auto& c = p.coords;
  const FE z = f.zero();
  const FE one = f.one();
  switch (c.size()) {
    case 0:
      return ProjPoint::normalized({one, z, z, z, z, z, z});
    case 1:
      return ProjPoint::normalized({c[0], z, z, z, z, z, one});
    case 2: {  // (k, b)
      return ProjPoint::normalized({c[1], z, z, z, z, one, -c[0]});
    }
    case 3: {  // (a, l, a')
      const FE &a = c[0], &l = c[1], &a1 = c[2];
      return ProjPoint::normalized({-(l + a * a1), one, z, -a, z, a * a, -a1});
    }
    case 4: {  // (k, b, k', b')
      const FE &k = c[0], &b = c[1], &k1 = c[2], &b1 = c[3];
      return ProjPoint::normalized({k1 + b * b1, k, one, b, z, b1, b * b - b1 * k});
    }
    default: {  // (a, l, a', l', a'')
      const FE &a = c[0], &l = c[1], &a1 = c[2], &l1 = c[3], &a2 = c[4];
      const FE alpha = -(a * l1) + a1 * a1 + a2 * l + a * a1 * a2;
      const FE beta = l - a * a1 - a * a * a2;
      return ProjPoint::normalized({alpha, -a2, -a, -a1 + a * a2, one, beta, -l1 + a1 * a2});
    }
  }
}

std::pair<HexElement, HexElement> line_generator_points(const Field& f, const HexElement& L) {
  if (!L.is_line()) throw std::invalid_argument("line_generator_points: expected a line");
  const auto& c = L.coords;
  const FE z = f.zero();
  auto P = [](std::vector<FE> v) { return HexElement::point(std::move(v)); };
  switch (c.size()) {
    case 0:
      return {P({}), P({z})};
    case 1:
      return {P({}), P({c[0], z})};
    case 2:
      return {P({c[0]}), P({c[0], c[1], z})};
    case 3:
      return {P({c[0], c[1]}), P({c[0], c[1], c[2], z})};
    case 4:
      return {P({c[0], c[1], c[2]}), P({c[0], c[1], c[2], c[3], z})};
    default: {
      const FE &k = c[0], &b = c[1], &k1 = c[2], &b1 = c[3], &k2 = c[4];
      return {P({k, b, k1, b1}), P({z, k2, b1, k1 + k * k2, b})};
    }
  }
}

std::pair<ProjPoint, ProjPoint> project_line(const Field& f, const HexElement& L) {
  auto [g1, g2] = line_generator_points(f, L);
  return {project_point(f, g1), project_point(f, g2)};
}

std::variant<ProjPoint, std::pair<ProjPoint, ProjPoint>> to_projective(const Field& f,
                                                                       const HexElement& el) {
  if (el.is_point()) return project_point(f, el);
  return project_line(f, el);
}

int projective_rank(std::span<const ProjPoint> rows_in) {
  std::vector<std::array<FE, 7>> rows;
  for (const auto& r : rows_in) rows.push_back(r.coords());
  int rank = 0;
  for (int col = 0; col < 7 && rank < static_cast<int>(rows.size()); ++col) {
    auto piv = std::find_if(rows.begin() + rank, rows.end(),
                            [col](const auto& r) { return !r[col].is_zero(); });
    if (piv == rows.end()) continue;
    std::swap(*piv, rows[rank]);
    const FE s = rows[rank][col].inv();
    for (auto& x : rows[rank]) x = x * s;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == rank || rows[i][col].is_zero()) continue;
      const FE m = rows[i][col];
      for (int j = 0; j < 7; ++j) rows[i][j] = rows[i][j] - m * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

bool in_projective_span(const Field& f, const HexElement& p, const HexElement& L) {
  auto [g1, g2] = project_line(f, L);
  const std::array<ProjPoint, 3> rows{project_point(f, p), g1, g2};
  return projective_rank(rows) == 2;
}

// ---------------------------------------------------------------------------

std::vector<HexElement> neighbors(const Field& field, const HexElement& el) {
  const auto elems = field.elements();
  const ElementKind other = el.is_point() ? ElementKind::line : ElementKind::point;
  std::vector<HexElement> out;
  out.reserve(elems.size() + 1);
  const std::size_t n = el.length();
  if (n == 0) {
    out.push_back({other, {}});
  } else {
    out.push_back({other, {el.coords.begin(), el.coords.end() - 1}});
  }
  if (n < 5) {
    for (const auto& x : elems) {
      auto c = el.coords;
      c.push_back(x);
      out.push_back({other, std::move(c)});
    }
  } else if (el.is_point()) {
    for (const auto& k : elems) out.push_back(line_through(el, k));
  } else {
    for (const auto& a : elems) out.push_back(point_on(el, a));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t element_count(const Field& field) {
  std::uint64_t total = 0, p = 1;
  for (int i = 0; i <= 5; ++i) {
    total += p;
    p *= field.order();
  }
  return total;
}

HexElement element_at(const Field& field, ElementKind kind, std::uint64_t index) {
  const std::uint64_t q = field.order();
  std::uint64_t block = 1;
  for (std::size_t len = 0; len <= 5; ++len) {
    if (index < block) {
      std::vector<FE> c(len);
      for (std::size_t i = len; i-- > 0;) {
        c[i] = field.element(static_cast<std::uint32_t>(index % q));
        index /= q;
      }
      return {kind, std::move(c)};
    }
    index -= block;
    block *= q;
  }
  throw std::out_of_range("hexagon element index out of range");
}

std::uint64_t index_of(const HexElement& el) {
  if (el.coords.empty()) return 0;
  const std::uint64_t q = el.coords.front().field().order();
  std::uint64_t offset = 0, block = 1;
  for (std::size_t len = 0; len < el.length(); ++len) {
    offset += block;
    block *= q;
  }
  std::uint64_t v = 0;
  for (const auto& x : el.coords) v = v * q + x.index();
  return offset + v;
}

std::vector<HexElement> enumerate_elements(const Field& field, std::uint64_t limit) {
  const std::uint64_t n = element_count(field);
  if (n > limit) {
    throw std::length_error("hexagon has " + std::to_string(n) +
                            " elements of each kind; enumeration limit is " +
                            std::to_string(limit));
  }
  std::vector<HexElement> out;
  out.reserve(2 * n);
  for (auto kind : {ElementKind::point, ElementKind::line}) {
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(element_at(field, kind, i));
  }
  return out;
}

namespace {
struct ElementHash {
  std::size_t operator()(const HexElement& e) const {
    return std::hash<std::uint64_t>()(index_of(e) * 2 + (e.is_line() ? 1 : 0));
  }
};
}  // namespace

int graph_distance(const Field& field, const HexElement& x, const HexElement& y) {
  if (x == y) return 0;
  // Layers up to radius 3 around each end; a generalized hexagon has diameter 6.
  std::unordered_map<HexElement, int, ElementHash> from_x{{x, 0}}, from_y{{y, 0}};
  std::vector<HexElement> fx{x}, fy{y};
  int best = -1;
  auto expand = [&](std::vector<HexElement>& frontier,
                    std::unordered_map<HexElement, int, ElementHash>& seen,
                    const std::unordered_map<HexElement, int, ElementHash>& other, int depth) {
    std::vector<HexElement> next;
    for (const auto& v : frontier) {
      for (auto& w : neighbors(field, v)) {
        if (seen.contains(w)) continue;
        seen.emplace(w, depth);
        if (auto it = other.find(w); it != other.end()) {
          const int d = depth + it->second;
          if (best < 0 || d < best) best = d;
        }
        next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  };
  for (int depth = 1; depth <= 3; ++depth) {
    expand(fx, from_x, from_y, depth);
    if (best >= 0 && best <= 2 * depth - 1) return best;
    expand(fy, from_y, from_x, depth);
    if (best >= 0) return best;
  }
  return best;
}

// ---------------------------------------------------------------------------

HexagonGraph::HexagonGraph(const Field& field, std::uint64_t limit) : field_(&field) {
  elements_ = enumerate_elements(field, limit);
  per_kind_ = elements_.size() / 2;
  degree_ = static_cast<std::size_t>(field.order()) + 1;
  adj_.resize(elements_.size() * degree_);
  for (std::size_t v = 0; v < elements_.size(); ++v) {
    const auto nb = neighbors(field, elements_[v]);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      adj_[v * degree_ + i] = static_cast<std::uint32_t>(vertex_of(nb[i]));
    }
  }
}

std::size_t HexagonGraph::vertex_of(const HexElement& el) const {
  return static_cast<std::size_t>(index_of(el)) + (el.is_line() ? per_kind_ : 0);
}

std::span<const std::uint32_t> HexagonGraph::adjacent(std::size_t v) const {
  return {adj_.data() + v * degree_, degree_};
}

std::vector<int> HexagonGraph::distances_from(std::size_t v) const {
  std::vector<int> d(elements_.size(), -1);
  std::deque<std::size_t> queue{v};
  d[v] = 0;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (auto w : adjacent(u)) {
      if (d[w] < 0) {
        d[w] = d[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return d;
}

int HexagonGraph::distance(const HexElement& x, const HexElement& y) const {
  return distances_from(vertex_of(x))[vertex_of(y)];
}

HexagonAxiomsReport check_hexagon_axioms(const HexagonGraph& g) {
  HexagonAxiomsReport r;
  r.points = g.points_count();
  r.lines = g.vertex_count() - g.points_count();
  const std::size_t n = g.vertex_count();
  r.min_degree = n ? g.adjacent(0).size() : 0;
  r.max_degree = r.min_degree;
  r.bipartite = true;
  for (std::size_t v = 0; v < n; ++v) {
    // every stored neighbour must actually be incident and of the other kind
    std::vector<std::uint32_t> nb(g.adjacent(v).begin(), g.adjacent(v).end());
    std::sort(nb.begin(), nb.end());
    const auto distinct = static_cast<std::size_t>(std::unique(nb.begin(), nb.end()) - nb.begin());
    r.min_degree = std::min(r.min_degree, distinct);
    r.max_degree = std::max(r.max_degree, distinct);
    for (std::size_t i = 0; i < distinct; ++i) {
      const bool v_point = v < g.points_count();
      const bool w_point = nb[i] < g.points_count();
      if (v_point == w_point) {
        r.bipartite = false;
        if (r.witness.empty()) {
          r.witness = "same-kind edge " + g.element(v).to_string() + " -- " +
                      g.element(nb[i]).to_string();
        }
      }
    }
  }
  int girth = 0;
  int diameter = 0;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<int> d(n, -1);
    std::vector<std::uint32_t> parent(n, UINT32_MAX);
    std::deque<std::size_t> queue{s};
    d[s] = 0;
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (auto w : g.adjacent(u)) {
        if (d[w] < 0) {
          d[w] = d[u] + 1;
          parent[w] = static_cast<std::uint32_t>(u);
          queue.push_back(w);
        } else if (parent[u] != w) {
          const int cyc = d[u] + d[w] + 1;
          if (girth == 0 || cyc < girth) {
            girth = cyc;
            if (cyc < 12) {
              r.witness = "cycle of length " + std::to_string(cyc) + " through " +
                          g.element(s).to_string();
            }
          }
        }
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (d[v] < 0) {
        diameter = -1;
        if (r.witness.empty()) {
          r.witness = "disconnected: " + g.element(s).to_string() + " / " + g.element(v).to_string();
        }
      } else if (diameter >= 0 && d[v] > diameter) {
        diameter = d[v];
        if (d[v] > 6 && r.witness.empty()) {
          r.witness = "distance " + std::to_string(d[v]) + " between " +
                      g.element(s).to_string() + " and " + g.element(v).to_string();
        }
      }
    }
  }
  r.girth = girth;
  r.diameter = diameter;
  const std::size_t q1 = static_cast<std::size_t>(g.field().order()) + 1;
  r.ok = r.bipartite && r.min_degree == q1 && r.max_degree == q1 && girth == 12 && diameter == 6;
  if (!r.ok && r.witness.empty()) {
    r.witness = "degree range [" + std::to_string(r.min_degree) + "," +
                std::to_string(r.max_degree) + "], girth " + std::to_string(girth) +
                ", diameter " + std::to_string(diameter);
  }
  return r;
}

}  // namespace reekit
