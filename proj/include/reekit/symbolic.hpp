#pragma once

// Polynomials over F_3 whose exponents live in the monoid N[theta] with
// theta^2 = 3. A monomial x^(m + n*theta) stands for x^m * theta(x)^n in any
// field of characteristic 3 with a Tits endomorphism, so an identity that
// holds formally here holds in every such field.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "reekit/field.hpp"

namespace reekit::symbolic {

/// m + n*theta.
struct ThetaExponent {
  std::uint32_t m = 0;
  std::uint32_t n = 0;

  ThetaExponent operator+(const ThetaExponent& o) const { return {m + o.m, n + o.n}; }
  /// theta * (m + n theta) = 3n + m theta.
  ThetaExponent theta() const { return {3 * n, m}; }
  bool is_zero() const { return m == 0 && n == 0; }

  auto operator<=>(const ThetaExponent&) const = default;
};

/// Sorted by variable name; no zero exponents.
using Monomial = std::vector<std::pair<std::string, ThetaExponent>>;

class FormalPoly {
 public:
  FormalPoly() = default;
  static FormalPoly constant(int c);
  static FormalPoly variable(const std::string& name);
  /// c * name^(m + n theta)
  static FormalPoly monomial(const std::string& name, ThetaExponent exp, int c = 1);

  FormalPoly operator+(const FormalPoly& o) const;
  FormalPoly operator-(const FormalPoly& o) const;
  FormalPoly operator-() const;
  FormalPoly operator*(const FormalPoly& o) const;
  FormalPoly& operator+=(const FormalPoly& o) { return *this = *this + o; }
  FormalPoly& operator*=(const FormalPoly& o) { return *this = *this * o; }

  FormalPoly pow(std::uint32_t k) const;
  /// Ring endomorphism: coefficients fixed (c^3 = c), exponents (m,n) -> (3n,m).
  FormalPoly apply_theta() const;
  /// x^(m + n theta) -> b^m * theta(b)^n for every bound variable x.
  /// Unbound variables are left in place.
  FormalPoly substitute(const std::map<std::string, FormalPoly>& bindings) const;

  FieldElement evaluate(const Field& field,
                        const std::map<std::string, FieldElement>& values) const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  std::vector<std::string> variables() const;
  const std::map<Monomial, int>& terms() const { return terms_; }

  std::string to_string() const;

  bool operator==(const FormalPoly&) const = default;

 private:
  void add_term(const Monomial& mono, int c);

  std::map<Monomial, int> terms_;  // coefficients in {1,2}
};

bool verify_identity(const FormalPoly& lhs, const FormalPoly& rhs);

/// An element of U_infinity with symbolic coordinates.
using SymTriple = std::array<FormalPoly, 3>;

SymTriple sym_triple(const std::string& a, const std::string& a1, const std::string& a2);
/// (x,x',x'')(y,y',y'') = (x+y, x'+y'+x y^theta, x''+y''+x y'-x' y-x y^(theta+1)).
SymTriple u_infty_mul(const SymTriple& x, const SymTriple& y);
/// (x,x',x'')^-1 = (-x, -x' + x^(1+theta), -x'').
SymTriple u_infty_inverse(const SymTriple& x);
/// [g,h] = g^-1 h^-1 g h.
SymTriple u_infty_commutator(const SymTriple& g, const SymTriple& h);

/// A named identity between triples or scalars.
struct Identity {
  std::string name;
  std::vector<FormalPoly> lhs;
  std::vector<FormalPoly> rhs;
};

struct IdentityResult {
  std::string name;
  bool pass = false;
  std::size_t lhs_terms = 0;
  std::size_t rhs_terms = 0;
};

/// The identities behind the root-group computations.
std::vector<Identity> builtin_identities();

IdentityResult check_identity(const Identity& id);

}  // namespace reekit::symbolic
