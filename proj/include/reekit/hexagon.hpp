#pragma once

// The coordinatized Ree hexagon H(K, K^theta) over a finite field.
//
// Points are tuples (a, l, a', l', a'') of length 0..5 and lines are tuples
// [k, b, k', b', k''] of length 0..5; length 0 is (inf) / [inf]. Over a
// finite field K^theta = K, so entries are plain field elements.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "reekit/field.hpp"

namespace reekit {

enum class ElementKind : std::uint8_t { point, line };

struct HexElement {
  ElementKind kind = ElementKind::point;
  std::vector<FieldElement> coords;

  static HexElement point(std::vector<FieldElement> c);
  static HexElement line(std::vector<FieldElement> c);

  bool is_point() const { return kind == ElementKind::point; }
  bool is_line() const { return kind == ElementKind::line; }
  std::size_t length() const { return coords.size(); }

  /// `P inf`, `P 1,2,0,1,0`, `L 0,0` with little-endian digit coordinates.
  std::string to_string() const;

  bool operator==(const HexElement&) const = default;
  std::strong_ordering operator<=>(const HexElement& o) const;
};

/// Homogeneous 7-tuple, first nonzero coordinate equal to 1.
class ProjPoint {
 public:
  /// Throws std::invalid_argument on the zero vector.
  static ProjPoint normalized(std::array<FieldElement, 7> raw);

  const std::array<FieldElement, 7>& coords() const { return coords_; }
  const FieldElement& operator[](std::size_t i) const { return coords_[i]; }
  std::string to_string() const;

  bool operator==(const ProjPoint&) const = default;

 private:
  std::array<FieldElement, 7> coords_;
};

/// The four coordinatizing polynomials as displayed:
/// (a^3 k + l, a^2 k + a' + a a'', a^3 k^2 + l' + k l, -a k + a'').
std::array<FieldElement, 4> psi(const FieldElement& k, const FieldElement& a,
                                const FieldElement& l, const FieldElement& a1,
                                const FieldElement& l1, const FieldElement& a2);

/// Line [k, b, k', b', k''] through the 5-coordinate point (a,l,a',l',a'')
/// with first coordinate k. Incidence for five coordinates is
///   k'' = psi1, b' = psi2, k' = psi3 - 2kl, b = psi4,
/// the correspondence consistent with the PG(6,K) embedding.
HexElement line_through(const HexElement& point5, const FieldElement& k);
/// Point (a, l, a', l', a'') on the 5-coordinate line with first coordinate a.
HexElement point_on(const HexElement& line5, const FieldElement& a);

/// Throws std::invalid_argument unless p is a point and L is a line.
bool incident(const HexElement& p, const HexElement& L);

ProjPoint project_point(const Field& field, const HexElement& p);
/// The two table generators of a line.
std::pair<HexElement, HexElement> line_generator_points(const Field& field, const HexElement& L);
std::pair<ProjPoint, ProjPoint> project_line(const Field& field, const HexElement& L);
std::variant<ProjPoint, std::pair<ProjPoint, ProjPoint>> to_projective(const Field& field,
                                                                       const HexElement& el);

/// Rank over K of the matrix whose rows are the given points.
int projective_rank(std::span<const ProjPoint> rows);
/// True iff p lies on the projective line spanned by L's generators.
bool in_projective_span(const Field& field, const HexElement& p, const HexElement& L);

/// The q+1 elements incident with `el`, in deterministic order.
std::vector<HexElement> neighbors(const Field& field, const HexElement& el);

/// 1 + q + ... + q^5.
std::uint64_t element_count(const Field& field);
/// Element at a position of the canonical order (by length, then
/// lexicographic on coordinate indices).
HexElement element_at(const Field& field, ElementKind kind, std::uint64_t index);
std::uint64_t index_of(const HexElement& el);

/// All points then all lines. Throws std::length_error for fields whose
/// element count exceeds `limit`.
std::vector<HexElement> enumerate_elements(const Field& field, std::uint64_t limit = 2'000'000);

/// Distance in the incidence graph via a bidirectional search over
/// algebraically generated neighbourhoods; works for any supported field.
int graph_distance(const Field& field, const HexElement& x, const HexElement& y);

/// Explicit incidence graph, built once. Vertices 0..N-1 are points and
/// N..2N-1 are lines, each block in canonical order.
class HexagonGraph {
 public:
  explicit HexagonGraph(const Field& field, std::uint64_t limit = 2'000'000);

  const Field& field() const { return *field_; }
  std::size_t vertex_count() const { return elements_.size(); }
  std::size_t points_count() const { return per_kind_; }
  const HexElement& element(std::size_t v) const { return elements_[v]; }
  std::size_t vertex_of(const HexElement& el) const;
  std::span<const std::uint32_t> adjacent(std::size_t v) const;

  /// BFS distances from v; unreachable = -1.
  std::vector<int> distances_from(std::size_t v) const;
  int distance(const HexElement& x, const HexElement& y) const;

 private:
  const Field* field_;
  std::size_t per_kind_ = 0;
  std::vector<HexElement> elements_;
  std::vector<std::uint32_t> adj_;  // (q+1) per vertex
  std::size_t degree_ = 0;
};

struct HexagonAxiomsReport {
  std::size_t points = 0;
  std::size_t lines = 0;
  bool bipartite = false;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  int girth = 0;
  int diameter = 0;
  bool ok = false;
  std::string witness;
};

/// Bipartite, girth 12, diameter 6, every vertex of degree q+1.
HexagonAxiomsReport check_hexagon_axioms(const HexagonGraph& graph);

}  // namespace reekit
