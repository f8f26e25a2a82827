#pragma once

// The Ree geometry on Omega: circles (gnarl plus a Z(U_x)-orbit) and
// spheres (gnarl plus a U'_x-orbit), the derived geometry at (inf), the
// Ree unital, and automorphism groups of the block families.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "reekit/field.hpp"
#include "reekit/hexagon.hpp"
#include "reekit/ovoid.hpp"

namespace reekit {

enum class BlockKind { circle, sphere };

struct Block {
  BlockKind kind = BlockKind::circle;
  OvoidPoint gnarl;
  std::vector<OvoidPoint> points;  // sorted, gnarl included

  bool contains(const OvoidPoint& p) const;
  bool operator==(const Block&) const = default;
};

/// Inconsistent block data, e.g. a stored gnarl that is not the gnarl.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws std::invalid_argument if gnarl == through.
Block circle(const Field& field, const OvoidPoint& gnarl, const OvoidPoint& through);
Block sphere(const Field& field, const OvoidPoint& gnarl, const OvoidPoint& through);

/// Recomputes the gnarl from the point set alone: the unique x such that the
/// rest is a single Z(U_x)-orbit (circle) or U'_x-orbit (sphere). Throws
/// DataError if there is no unique one.
OvoidPoint gnarl_of(const Field& field, const Block& b);
/// Distinct circles whose point sets lie inside the sorted point set.
std::vector<Block> contained_circles(const Field& field, const std::vector<OvoidPoint>& points);
/// Size check plus gnarl_of(b) == b.gnarl; throws DataError otherwise.
void validate_block(const Field& field, const Block& b);

/// Every block of one kind, ordered by gnarl and then by point set.
std::vector<Block> all_blocks(const Field& field, BlockKind kind);

/// Absolute points at distance 3 from a line meeting no absolute point and
/// not itself absolute; nullopt for other lines.
std::optional<Block> circle_from_line(const HexagonGraph& graph, const HexElement& line);
/// Absolute points not opposite a non-absolute point on an absolute line;
/// nullopt for other points.
std::optional<Block> sphere_from_point(const HexagonGraph& graph, const HexElement& point);

// ---------------------------------------------------------------------------
// Derived geometry at (inf)

enum class DerivedKind { vertical_line, ordinary_line, vertical_plane, ordinary_plane };

struct DerivedObject {
  DerivedKind kind = DerivedKind::vertical_line;
  /// (a, a', 0), (a, a', a''), (a, 0, 0) or (a, a', a'') by kind.
  Triple params;
  std::vector<OvoidPoint> points;  // sorted, (inf) excluded
};

/// L_{a,a'} = {(a, a', t)}.
DerivedObject vertical_line(const FieldElement& a, const FieldElement& a1);
/// C_g = {(a+x, a'+a^theta x, a''+(a'-a^(1+theta))x-x^(2+theta))}.
DerivedObject ordinary_line(const Triple& g);
/// P_a = {(a, t', t'')}.
DerivedObject vertical_plane(const FieldElement& a);
/// S_g = {g} and the U_inf-translates by g of the points
/// ((x''^theta - x'x'')/D, -x'^theta/D, -x''/D), D = x''^2 + x'^(1+theta),
/// over (x', x'') != (0, 0).
DerivedObject ordinary_plane(const Triple& g);

std::vector<DerivedObject> derived_objects(const Field& field);

/// Equal first gnarl coordinates. Throws std::invalid_argument unless both
/// are ordinary lines.
bool are_parallel(const DerivedObject& c1, const DerivedObject& c2);
/// The vertical lines meeting c1 and c2 coincide or are disjoint.
bool are_parallel_by_vertical_lines(const DerivedObject& c1, const DerivedObject& c2);

bool intersects(const DerivedObject& x, const DerivedObject& y);

// ---------------------------------------------------------------------------
// Ree unital

/// The unital block through p and q, sorted. Throws std::invalid_argument if p == q.
std::vector<OvoidPoint> unital_block(const Field& field, const OvoidPoint& p, const OvoidPoint& q);
std::vector<std::vector<OvoidPoint>> unital_blocks(const Field& field);

/// The vertical plane through p meets the ordinary plane with gnarl p.
std::vector<OvoidPoint> w_set(const Triple& p);

// ---------------------------------------------------------------------------
// Automorphisms

using Permutation = std::vector<std::uint32_t>;

struct PermutationGroup {
  std::uint64_t order = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;  // sorted

  bool contains(const Permutation& g) const;
};

/// All permutations of 0..n-1 (n <= 64) mapping the block family onto itself,
/// by backtracking over point images with partial-block pruning.
PermutationGroup automorphism_group(std::size_t n, std::span<const std::vector<std::uint32_t>> blocks);

/// Lexicographically least greedy generating set of a group given by its elements.
std::vector<Permutation> greedy_generators(const std::vector<Permutation>& sorted_elements);

enum class Structure { G, GC, GS };

/// Block families as sorted index lists into ovoid(field).
std::vector<std::vector<std::uint32_t>> block_indices(const std::vector<Block>& blocks);
PermutationGroup automorphism_group(const Field& field, Structure structure);

/// The permutation of ovoid(field) induced by a point map.
template <class F>
Permutation induced_permutation(const Field& field, F&& map) {
  const auto om = ovoid(field);
  Permutation p(om.size());
  for (std::size_t i = 0; i < om.size(); ++i) p[i] = static_cast<std::uint32_t>(ovoid_index(map(om[i])));
  return p;
}

}  // namespace reekit
