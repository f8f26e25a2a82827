#pragma once

// Arithmetic in GF(3^(2e+1)) together with the Tits endomorphism
// theta : x -> x^(3^(e+1)), which satisfies theta(theta(x)) = x^3.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace reekit {

class Field;

/// Field selection: GF(3^(2e+1)) = F_3[t]/(modulus).
/// `modulus` is little-endian over {0,1,2}, monic, of degree 2e+1.
struct FieldParams {
  int e = 0;
  std::vector<int> modulus;

  /// Built-in moduli: e=0 -> t, e=1 -> t^3 - t - 1.
  static FieldParams standard(int e);

  /// Parses "e" or "e:c0,c1,...". Throws std::invalid_argument.
  static FieldParams parse(std::string_view text);

  bool operator==(const FieldParams&) const = default;
};

/// An element of a Field. Value type; the owning Field must outlive it.
///
/// The stored index is the coefficient vector (c0, c1, ..., c_{n-1}) read as a
/// base-3 number with c0 most significant, so index order is lexicographic
/// order on coefficient vectors and equality is structural.
class FieldElement {
 public:
  FieldElement() = default;

  const Field& field() const;
  bool has_field() const { return field_ != nullptr; }
  std::uint32_t index() const { return index_; }
  bool is_zero() const { return index_ == 0; }
  bool is_one() const;

  /// Polynomial-basis coordinates, little-endian.
  std::vector<int> coeffs() const;

  FieldElement operator+(const FieldElement& y) const;
  FieldElement operator-(const FieldElement& y) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& y) const;
  FieldElement operator/(const FieldElement& y) const;
  FieldElement& operator+=(const FieldElement& y) { return *this = *this + y; }
  FieldElement& operator-=(const FieldElement& y) { return *this = *this - y; }
  FieldElement& operator*=(const FieldElement& y) { return *this = *this * y; }

  /// Throws std::domain_error on zero.
  FieldElement inv() const;
  FieldElement pow(std::uint64_t k) const;
  FieldElement theta() const;
  FieldElement theta_inv() const;
  /// x^(3^s).
  FieldElement frobenius(int s) const;

  /// Little-endian digit string, e.g. "210" for 2 + t in GF(27).
  std::string to_string() const;

  bool operator==(const FieldElement& o) const {
    return field_ == o.field_ && index_ == o.index_;
  }
  std::strong_ordering operator<=>(const FieldElement& o) const {
    return index_ <=> o.index_;
  }

 private:
  friend class Field;
  FieldElement(const Field* f, std::uint32_t i) : field_(f), index_(i) {}

  const Field* field_ = nullptr;
  std::uint32_t index_ = 0;
};

class Field {
 public:
  /// Validates the modulus (monic, degree 2e+1, irreducible over F_3).
  /// Throws std::invalid_argument.
  static std::shared_ptr<const Field> create(const FieldParams& params);
  static std::shared_ptr<const Field> standard(int e) {
    return create(FieldParams::standard(e));
  }

  const FieldParams& params() const { return params_; }
  int e() const { return params_.e; }
  int degree() const { return degree_; }
  std::uint32_t order() const { return order_; }

  FieldElement zero() const { return {this, 0}; }
  FieldElement one() const { return one_; }
  /// The residue class of t.
  FieldElement generator() const { return t_; }
  FieldElement from_int(int v) const;
  FieldElement element(std::uint32_t index) const;
  FieldElement from_coeffs(std::span<const int> coeffs) const;
  /// Inverse of FieldElement::to_string. Throws std::invalid_argument.
  FieldElement parse(std::string_view digits) const;

  /// All elements in index order.
  std::vector<FieldElement> elements() const;

  std::vector<int> digits(std::uint32_t index) const;
  std::uint32_t index_of(std::span<const int> coeffs) const;

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  friend class FieldElement;
  explicit Field(FieldParams params);

  std::uint32_t add_idx(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul_idx(std::uint32_t a, std::uint32_t b) const;
  std::vector<int> poly_mulmod(const std::vector<int>& a,
                               const std::vector<int>& b) const;

  FieldParams params_;
  int degree_ = 1;
  std::uint32_t order_ = 3;
  std::vector<std::uint32_t> pow3_;       // 3^(n-1-i) weights
  std::vector<std::uint16_t> add_table_;  // only for small fields
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> theta_;
  std::vector<std::uint32_t> theta_inv_;
  std::vector<std::uint32_t> frob_;
  FieldElement one_;
  FieldElement t_;
};

/// True iff the monic polynomial (little-endian over F_3) has no factor of
/// degree 1..deg/2. Exhaustive trial division.
bool is_irreducible_f3(const std::vector<int>& poly);

}  // namespace reekit
