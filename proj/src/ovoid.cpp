#include "reekit/ovoid.hpp"

#include <stdexcept>

namespace reekit {

namespace {

using FE = FieldElement;

FE tp(const FE& x, unsigned m, unsigned n) { return theta_power(x, m, n); }

// Per-position theta-exponent pairs (m, n) for the two coordinate types.
constexpr std::array<std::array<unsigned, 2>, 5> kScaleA{{{1, 0}, {3, 1}, {2, 1}, {3, 2}, {1, 1}}};
constexpr std::array<std::array<unsigned, 2>, 5> kScaleK{{{0, 1}, {1, 1}, {3, 2}, {2, 1}, {3, 1}}};

bool is_a_type(const HexElement& el) { return (el.length() % 2 == 1) == el.is_point(); }

}  // namespace

const Triple& OvoidPoint::coords() const {
  if (!finite_) throw std::logic_error("(inf) has no compact coordinates");
  return c_;
}

std::string OvoidPoint::to_string() const {
  if (!finite_) return "inf";
  return c_[0].to_string() + "," + c_[1].to_string() + "," + c_[2].to_string();
}

std::strong_ordering OvoidPoint::operator<=>(const OvoidPoint& o) const {
  if (finite_ != o.finite_) return finite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  if (!finite_) return std::strong_ordering::equal;
  for (std::size_t i = 0; i < 3; ++i) {
    if (auto c = c_[i] <=> o.c_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

FieldElement theta_power(const FieldElement& x, unsigned m, unsigned n) {
  FE r = x.pow(m);
  if (n > 0) r = r * x.theta().pow(n);
  return r;
}

// ---------------------------------------------------------------------------

HexElement polarity(const HexElement& el) {
  std::vector<FE> c = el.coords;
  const bool a_type = is_a_type(el);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const bool use_theta = (i % 2 == 0) == a_type;
    c[i] = use_theta ? c[i].theta() : c[i].theta_inv();
  }
  return el.is_point() ? HexElement::line(std::move(c)) : HexElement::point(std::move(c));
}

bool is_absolute(const HexElement& p) {
  if (!p.is_point()) throw std::invalid_argument("is_absolute: expected a point");
  if (p.length() == 0) return true;
  if (p.length() != 5) return false;
  const auto& c = p.coords;
  const FE &a = c[0], &l = c[1], &a1 = c[2], &l1 = c[3], &a2 = c[4];
  const FE at = a.theta();
  return l == a2.theta() - tp(a, 3, 1) && l1 == tp(a, 3, 2) + a1.theta() + at * a2.theta();
}

// ---------------------------------------------------------------------------

FieldElement f1(const Triple& c) {
  const FE &a = c[0], &a1 = c[1], &a2 = c[2];
  return -tp(a, 4, 2) - a * a2.theta() + tp(a, 1, 1) * a1.theta() + a2 * a2 + tp(a1, 1, 1) -
         a1 * tp(a, 3, 1) - a * a * a1 * a1;
}

FieldElement f2(const Triple& c) {
  const FE &a = c[0], &a1 = c[1], &a2 = c[2];
  return -tp(a, 3, 1) + a1.theta() - a * a2 + a * a * a1;
}

FieldElement f3(const Triple& c) {
  const FE &a = c[0], &a1 = c[1], &a2 = c[2];
  return -tp(a, 3, 2) - a2.theta() + a.theta() * a1.theta() + a1 * a2 + a * a1 * a1;
}

HexElement compact_to_hex(const OvoidPoint& c) {
  if (c.is_infinity()) return HexElement::point({});
  const FE& a = c[0];
  const FE& a2 = c[1];
  const FE a1 = c[2] + c[0] * c[1];
  return HexElement::point({a, a2.theta() - tp(a, 3, 1), a1,
                            tp(a, 3, 2) + a1.theta() + a.theta() * a2.theta(), a2});
}

std::optional<OvoidPoint> hex_to_compact(const HexElement& p) {
  if (!is_absolute(p)) return std::nullopt;
  if (p.length() == 0) return OvoidPoint::infinity();
  const auto& c = p.coords;
  return OvoidPoint::triple(c[0], c[4], c[2] - c[0] * c[4]);
}

ProjPoint compact_to_proj(const Field& field, const OvoidPoint& c) {
  const FE z = field.zero();
  if (c.is_infinity()) return ProjPoint::normalized({field.one(), z, z, z, z, z, z});
  const Triple& t = c.coords();
  return ProjPoint::normalized({f1(t), -t[1], -t[0], -t[2], field.one(), f2(t), f3(t)});
}

std::optional<OvoidPoint> proj_to_compact(const ProjPoint& v) {
  const Field& field = v[0].field();
  if (v == compact_to_proj(field, OvoidPoint::infinity())) return OvoidPoint::infinity();
  if (v[4].is_zero()) return std::nullopt;
  const FE s = v[4].inv();
  const OvoidPoint c = OvoidPoint::triple(-(v[2] * s), -(v[1] * s), -(v[3] * s));
  if (compact_to_proj(field, c) != v) return std::nullopt;
  return c;
}

std::vector<OvoidPoint> ovoid(const Field& field) {
  const auto el = field.elements();
  std::vector<OvoidPoint> out;
  out.reserve(el.size() * el.size() * el.size() + 1);
  out.push_back(OvoidPoint::infinity());
  for (const auto& a : el) {
    for (const auto& b : el) {
      for (const auto& c : el) out.push_back(OvoidPoint::triple(a, b, c));
    }
  }
  return out;
}

std::size_t ovoid_index(const OvoidPoint& p) {
  if (p.is_infinity()) return 0;
  const std::size_t q = p[0].field().order();
  return 1 + (p[0].index() * q + p[1].index()) * q + p[2].index();
}

OvoidPoint ovoid_at(const Field& field, std::size_t index) {
  if (index == 0) return OvoidPoint::infinity();
  const std::size_t q = field.order();
  std::size_t i = index - 1;
  if (i >= q * q * q) throw std::out_of_range("ovoid index out of range");
  const auto c = static_cast<std::uint32_t>(i % q);
  const auto b = static_cast<std::uint32_t>((i / q) % q);
  const auto a = static_cast<std::uint32_t>(i / (q * q));
  return OvoidPoint::triple(field.element(a), field.element(b), field.element(c));
}

// ---------------------------------------------------------------------------

Triple u_infty_mul(const Triple& x, const Triple& y) {
  const FE yt = y[0].theta();
  return {x[0] + y[0], x[1] + y[1] + x[0] * yt,
          x[2] + y[2] + x[0] * y[1] - x[1] * y[0] - x[0] * yt * y[0]};
}

Triple u_infty_inverse(const Triple& x) {
  return {-x[0], -x[1] + tp(x[0], 1, 1), -x[2]};
}

Triple u_infty_commutator(const Triple& g, const Triple& h) {
  return u_infty_mul(u_infty_mul(u_infty_inverse(g), u_infty_inverse(h)), u_infty_mul(g, h));
}

OvoidPoint u_infty_apply(const OvoidPoint& p, const Triple& g) {
  if (p.is_infinity()) return p;
  return OvoidPoint::triple(u_infty_mul(p.coords(), g));
}

Matrix7 u_zero_matrix(const FieldElement& x, const FieldElement& x1, const FieldElement& x2) {
  const Field& f = x.field();
  const FE z = f.zero();
  const FE o = f.one();
  const Triple t{x, x1, x2};
  const FE xt = x.theta();
  const FE p = tp(x, 3, 1) - x1.theta() - x * x2 - x * x * x1;
  const FE q = x2.theta() + xt * x1.theta() - x * x1 * x1 - x * x * xt * x1 - x * xt * x2 -
               tp(x, 3, 2) + x1 * x2;
  const FE r = x2 - x * x1 + tp(x, 2, 1);
  const FE s = x1 * x1 - x * xt * x1 - xt * x2;
  return {{{o, f2(t), f3(t), x2, f1(t), -x1, -x},
           {z, o, -xt, z, x1 - x * xt, z, z},
           {z, z, o, z, x, z, z},
           {z, -x, x1, o, -x2, z, z},
           {z, z, z, z, o, z, z},
           {z, x * x, -x2 - x * x1, x, p, o, z},
           {z, r, s, -x1 + x * xt, q, xt, o}}};
}

Matrix7 matrix_mul(const Matrix7& a, const Matrix7& b) {
  Matrix7 c;
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = 0; j < 7; ++j) {
      FE s = a[i][0] * b[0][j];
      for (std::size_t k = 1; k < 7; ++k) s += a[i][k] * b[k][j];
      c[i][j] = s;
    }
  }
  return c;
}

bool is_identity(const Matrix7& m) {
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = 0; j < 7; ++j) {
      if (m[i][j].index() != (i == j ? m[i][j].field().one().index() : 0U)) return false;
    }
  }
  return true;
}

ProjPoint apply_matrix(const ProjPoint& v, const Matrix7& m) {
  std::array<FE, 7> out;
  for (std::size_t j = 0; j < 7; ++j) {
    FE s = v[0] * m[0][j];
    for (std::size_t i = 1; i < 7; ++i) s += v[i] * m[i][j];
    out[j] = s;
  }
  return ProjPoint::normalized(out);
}

OvoidPoint u_zero_apply(const Field& field, const OvoidPoint& p, const Triple& g) {
  const ProjPoint img = apply_matrix(compact_to_proj(field, p), u_zero_matrix(g[0], g[1], g[2]));
  auto c = proj_to_compact(img);
  if (!c) {
    throw std::logic_error("U_0 element (" + OvoidPoint::triple(g).to_string() + ") maps " +
                           p.to_string() + " outside Omega: " + img.to_string());
  }
  return *c;
}

Triple u_zero_transporter(const OvoidPoint& target) {
  if (target.is_infinity()) throw std::invalid_argument("u_zero_transporter: target is (inf)");
  const Triple& c = target.coords();
  const FE d = f1(c);
  if (d.is_zero()) throw std::invalid_argument("u_zero_transporter: target is (0,0,0)");
  const FE s = -d.inv();
  return {f3(c) * s, f2(c) * s, c[2] * s};
}

OvoidPoint root_group_apply(const Field& field, const RootGroupElt& g, const OvoidPoint& p) {
  if (g.base.is_infinity()) return u_infty_apply(p, g.params);
  const Triple& t = g.base.coords();
  const OvoidPoint moved = u_infty_apply(p, u_infty_inverse(t));
  return u_infty_apply(u_zero_apply(field, moved, g.params), t);
}

std::vector<RootGroupElt> subgroup_elements(const Field& field, const OvoidPoint& base,
                                            Subgroup which) {
  const auto el = field.elements();
  std::vector<RootGroupElt> out;
  for (const auto& a : el) {
    if (which != Subgroup::full && !a.is_zero()) continue;
    for (const auto& b : el) {
      if (which == Subgroup::center && !b.is_zero()) continue;
      for (const auto& c : el) out.push_back({base, {a, b, c}});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

KnownCollineation::KnownCollineation(FieldElement ell, int sigma) : ell_(ell), sigma_(sigma) {
  if (ell_.is_zero()) throw std::domain_error("known collineation needs a nonzero scalar");
  if (sigma_ < 0) throw std::domain_error("known collineation needs sigma >= 0");
}

OvoidPoint KnownCollineation::apply(const OvoidPoint& p) const {
  if (p.is_infinity()) return p;
  const Triple& c = p.coords();
  return OvoidPoint::triple(ell_ * c[0].frobenius(sigma_), tp(ell_, 1, 1) * c[1].frobenius(sigma_),
                            tp(ell_, 2, 1) * c[2].frobenius(sigma_));
}

HexElement KnownCollineation::apply(const HexElement& el) const {
  const auto& scale = is_a_type(el) ? kScaleA : kScaleK;
  std::vector<FE> c = el.coords;
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = tp(ell_, scale[i][0], scale[i][1]) * c[i].frobenius(sigma_);
  }
  return {el.kind, std::move(c)};
}

}  // namespace reekit
