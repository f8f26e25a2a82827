#pragma once

// The polarity rho of the Ree hexagon, the Ree-Tits ovoid Omega of its
// absolute points, and the root groups of the Moufang set on Omega.
//
// Omega points are written in compact notation: (inf) or a triple
// (a, a', a''). The finite point (a, a', a'') corresponds to the hexagon
// point with a = c1, a'' = c2 and a' = c3 + c1 c2.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reekit/field.hpp"
#include "reekit/hexagon.hpp"

namespace reekit {

using Triple = std::array<FieldElement, 3>;

class OvoidPoint {
 public:
  OvoidPoint() = default;
  static OvoidPoint infinity() { return {}; }
  static OvoidPoint triple(Triple c) { return OvoidPoint(c); }
  static OvoidPoint triple(FieldElement a, FieldElement a1, FieldElement a2) {
    return OvoidPoint(Triple{a, a1, a2});
  }

  bool is_infinity() const { return !finite_; }
  /// Throws std::logic_error on (inf).
  const Triple& coords() const;
  const FieldElement& operator[](std::size_t i) const { return coords()[i]; }

  /// `inf` or `a,a',a''` with little-endian digit strings.
  std::string to_string() const;

  bool operator==(const OvoidPoint&) const = default;
  /// (inf) first, then triples lexicographically.
  std::strong_ordering operator<=>(const OvoidPoint& o) const;

 private:
  explicit OvoidPoint(Triple c) : finite_(true), c_(c) {}
  bool finite_ = false;
  Triple c_{};
};

/// x^(m + n theta).
FieldElement theta_power(const FieldElement& x, unsigned m, unsigned n);

// ---------------------------------------------------------------------------
// Polarity and absolute points

/// Coordinates of type (a, l, a', l', a'') receive theta, theta^-1, ... and
/// coordinates of type (k, b, k', b', k'') receive theta^-1, theta, ...
/// A point has type a when its length is odd, a line when its length is even.
HexElement polarity(const HexElement& el);

/// Point incident with its image under rho. For five coordinates this is
///   l = a''^theta - a^(theta+3),  l' = a^(2theta+3) + a'^theta + a^theta a''^theta;
/// (inf) is absolute and no point of length 1..4 is.
bool is_absolute(const HexElement& p);

// ---------------------------------------------------------------------------
// Coordinate dictionaries

FieldElement f1(const Triple& c);
FieldElement f2(const Triple& c);
FieldElement f3(const Triple& c);

HexElement compact_to_hex(const OvoidPoint& c);
/// Inverse of compact_to_hex on absolute points; nullopt for other points.
std::optional<OvoidPoint> hex_to_compact(const HexElement& p);

/// (inf) -> (1,0,...,0); (a,a',a'') -> (f1, -a', -a, -a'', 1, f2, f3).
ProjPoint compact_to_proj(const Field& field, const OvoidPoint& c);
/// nullopt unless the projective point lies on Omega.
std::optional<OvoidPoint> proj_to_compact(const ProjPoint& v);

/// Omega in canonical order: (inf) first, then triples by coordinate index.
std::vector<OvoidPoint> ovoid(const Field& field);
std::size_t ovoid_index(const OvoidPoint& p);
OvoidPoint ovoid_at(const Field& field, std::size_t index);

// ---------------------------------------------------------------------------
// Root groups

/// (x,x',x'')(y,y',y'') = (x+y, x'+y'+x y^theta, x''+y''+x y'-x' y-x y^(theta+1)).
Triple u_infty_mul(const Triple& x, const Triple& y);
Triple u_infty_inverse(const Triple& x);
/// [g,h] = g^-1 h^-1 g h.
Triple u_infty_commutator(const Triple& g, const Triple& h);
/// Right action; fixes (inf).
OvoidPoint u_infty_apply(const OvoidPoint& p, const Triple& g);

using Matrix7 = std::array<std::array<FieldElement, 7>, 7>;

/// The unipotent element fixing (0,0,0) and mapping (inf) to the point
/// read off its first row, as a matrix acting on row vectors.
Matrix7 u_zero_matrix(const FieldElement& x, const FieldElement& x1, const FieldElement& x2);
Matrix7 matrix_mul(const Matrix7& a, const Matrix7& b);
bool is_identity(const Matrix7& m);
ProjPoint apply_matrix(const ProjPoint& v, const Matrix7& m);
/// Throws std::logic_error if the image leaves Omega.
OvoidPoint u_zero_apply(const Field& field, const OvoidPoint& p, const Triple& g);
/// Parameters of the element of U_0 mapping (inf) to `target` != (0,0,0).
Triple u_zero_transporter(const OvoidPoint& target);

/// An element of the root group U_base. For base (inf) the parameters are a
/// U_inf triple; otherwise they are U_0 parameters conjugated by the
/// translation (0,0,0) -> base.
struct RootGroupElt {
  OvoidPoint base;
  Triple params;
};

enum class Subgroup { full, derived, center };

OvoidPoint root_group_apply(const Field& field, const RootGroupElt& g, const OvoidPoint& p);
/// full: all q^3 triples; derived: (0,u',u''); center: (0,0,u'').
std::vector<RootGroupElt> subgroup_elements(const Field& field, const OvoidPoint& base,
                                            Subgroup which);

// ---------------------------------------------------------------------------

/// (x,y,z) -> (l x^s, l^(1+theta) y^s, l^(2+theta) z^s) with s = 3^sigma, and
/// its extension to the hexagon.
class KnownCollineation {
 public:
  /// Throws std::domain_error if ell is zero.
  KnownCollineation(FieldElement ell, int sigma);

  OvoidPoint apply(const OvoidPoint& p) const;
  HexElement apply(const HexElement& el) const;

  const FieldElement& ell() const { return ell_; }
  int sigma() const { return sigma_; }

 private:
  FieldElement ell_;
  int sigma_;
};

}  // namespace reekit
