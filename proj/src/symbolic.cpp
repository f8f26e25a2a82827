#include "reekit/symbolic.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace reekit::symbolic {

namespace {

int mod3(int c) { return ((c % 3) + 3) % 3; }

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

void FormalPoly::add_term(const Monomial& mono, int c) {
  c = mod3(c);
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(mono, c);
  if (!inserted) {
    it->second = mod3(it->second + c);
    if (it->second == 0) terms_.erase(it);
  }
}

FormalPoly FormalPoly::constant(int c) {
  FormalPoly p;
  p.add_term({}, c);
  return p;
}

FormalPoly FormalPoly::variable(const std::string& name) {
  return monomial(name, {1, 0});
}

FormalPoly FormalPoly::monomial(const std::string& name, ThetaExponent exp, int c) {
  FormalPoly p;
  if (exp.is_zero()) {
    p.add_term({}, c);
  } else {
    p.add_term({{name, exp}}, c);
  }
  return p;
}

FormalPoly FormalPoly::operator+(const FormalPoly& o) const {
  FormalPoly r = *this;
  for (const auto& [mono, c] : o.terms_) r.add_term(mono, c);
  return r;
}

FormalPoly FormalPoly::operator-() const {
  FormalPoly r;
  for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, 3 - c);
  return r;
}

FormalPoly FormalPoly::operator-(const FormalPoly& o) const { return *this + (-o); }

FormalPoly FormalPoly::operator*(const FormalPoly& o) const {
  FormalPoly r;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
  }
  return r;
}

FormalPoly FormalPoly::pow(std::uint32_t k) const {
  FormalPoly result = constant(1);
  FormalPoly base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

FormalPoly FormalPoly::apply_theta() const {
  FormalPoly r;
  for (const auto& [mono, c] : terms_) {
    Monomial m = mono;
    for (auto& [var, exp] : m) exp = exp.theta();
    r.add_term(m, c);
  }
  return r;
}

FormalPoly FormalPoly::substitute(const std::map<std::string, FormalPoly>& bindings) const {
  // theta-images of bindings are reused across terms
  std::map<std::string, std::pair<FormalPoly, FormalPoly>> cache;
  for (const auto& [var, b] : bindings) cache.emplace(var, std::pair{b, b.apply_theta()});

  FormalPoly r;
  for (const auto& [mono, c] : terms_) {
    FormalPoly term = constant(c);
    Monomial kept;
    for (const auto& [var, exp] : mono) {
      auto it = cache.find(var);
      if (it == cache.end()) {
        kept.emplace_back(var, exp);
        continue;
      }
      term = term * it->second.first.pow(exp.m) * it->second.second.pow(exp.n);
    }
    if (!kept.empty()) {
      FormalPoly rest;
      rest.add_term(kept, 1);
      term = term * rest;
    }
    r = r + term;
  }
  return r;
}

FieldElement FormalPoly::evaluate(const Field& field,
                                  const std::map<std::string, FieldElement>& values) const {
  FieldElement sum = field.zero();
  for (const auto& [mono, c] : terms_) {
    FieldElement t = field.from_int(c);
    for (const auto& [var, exp] : mono) {
      auto it = values.find(var);
      if (it == values.end()) {
        throw std::invalid_argument("evaluate: no value for variable " + var);
      }
      t = t * it->second.pow(exp.m) * it->second.theta().pow(exp.n);
    }
    sum = sum + t;
  }
  return sum;
}

std::vector<std::string> FormalPoly::variables() const {
  std::set<std::string> vars;
  for (const auto& [mono, c] : terms_) {
    for (const auto& [var, exp] : mono) vars.insert(var);
  }
  return {vars.begin(), vars.end()};
}

std::string FormalPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    os << (c == 2 ? (first ? "-" : " - ") : (first ? "" : " + "));
    first = false;
    if (mono.empty()) {
      os << "1";
      continue;
    }
    bool first_factor = true;
    for (const auto& [var, exp] : mono) {
      if (!first_factor) os << "*";
      first_factor = false;
      os << var;
      if (exp.m == 1 && exp.n == 0) continue;
      os << "^(";
      if (exp.m != 0) os << exp.m;
      if (exp.n != 0) {
        if (exp.m != 0) os << "+";
        if (exp.n != 1) os << exp.n;
        os << "t";
      }
      os << ")";
    }
  }
  return os.str();
}

bool verify_identity(const FormalPoly& lhs, const FormalPoly& rhs) { return lhs == rhs; }

// ---------------------------------------------------------------------------

SymTriple sym_triple(const std::string& a, const std::string& a1, const std::string& a2) {
  return {FormalPoly::variable(a), FormalPoly::variable(a1), FormalPoly::variable(a2)};
}

SymTriple u_infty_mul(const SymTriple& x, const SymTriple& y) {
  const FormalPoly yt = y[0].apply_theta();
  return {x[0] + y[0],
          x[1] + y[1] + x[0] * yt,
          x[2] + y[2] + x[0] * y[1] - x[1] * y[0] - x[0] * yt * y[0]};
}

SymTriple u_infty_inverse(const SymTriple& x) {
  return {-x[0], -x[1] + x[0] * x[0].apply_theta(), -x[2]};
}

SymTriple u_infty_commutator(const SymTriple& g, const SymTriple& h) {
  return u_infty_mul(u_infty_mul(u_infty_inverse(g), u_infty_inverse(h)), u_infty_mul(g, h));
}

std::vector<Identity> builtin_identities() {
  using P = FormalPoly;
  std::vector<Identity> ids;
  const P zero;
  auto triple = [](const SymTriple& t) { return std::vector<P>(t.begin(), t.end()); };

  const SymTriple x = sym_triple("x", "x'", "x''");
  const SymTriple y = sym_triple("y", "y'", "y''");
  const SymTriple z = sym_triple("z", "z'", "z''");
  const SymTriple id{zero, zero, zero};

  ids.push_back({"theta-twice-is-cube",
                 {P::variable("x").apply_theta().apply_theta()},
                 {P::variable("x").pow(3)}});
  ids.push_back({"u-infty-associativity",
                 triple(u_infty_mul(u_infty_mul(x, y), z)),
                 triple(u_infty_mul(x, u_infty_mul(y, z)))});
  ids.push_back({"u-infty-identity", triple(u_infty_mul(x, id)), triple(x)});
  ids.push_back({"u-infty-right-inverse", triple(u_infty_mul(x, u_infty_inverse(x))),
                 triple(id)});
  ids.push_back({"u-infty-left-inverse", triple(u_infty_mul(u_infty_inverse(x), x)),
                 triple(id)});

  {
    const SymTriple u1 = sym_triple("u1", "u1'", "u1''");
    const SymTriple u2 = sym_triple("u2", "u2'", "u2''");
    const P a1 = u1[0], b1 = u1[1], a2 = u2[0], b2 = u2[1];
    const P expected1 = a1 * a2.apply_theta() - a2 * a1.apply_theta();
    const P expected2 = b1 * a2 - a1 * b2 - a1 * a2 * a2.apply_theta() + a2 * a1 * a1.apply_theta();
    ids.push_back({"commutator-display", triple(u_infty_commutator(u1, u2)),
                   {zero, expected1, expected2}});
    const P computed2 = b1 * a2 - a1 * b2 + a1 * a2 * a2.apply_theta() - a2 * a1 * a1.apply_theta() +
                        a1.apply_theta() * a2 * a2 - a1 * a1 * a2.apply_theta();
    ids.push_back({"commutator-closed-form", triple(u_infty_commutator(u1, u2)),
                   {zero, expected1, computed2}});

    const SymTriple d1{zero, u1[1], u1[2]};
    ids.push_back({"derived-commutator", triple(u_infty_commutator(d1, u2)),
                   {zero, zero, b1 * a2}});

    // (0,0,u1'') is central
    const SymTriple c1{zero, zero, u1[2]};
    ids.push_back({"center-commutes", triple(u_infty_mul(c1, u2)),
                   triple(u_infty_mul(u2, c1))});
  }
  {
    const SymTriple g = sym_triple("a", "a'", "a''");
    const P a = g[0];
    ids.push_back({"cube-formula", triple(u_infty_mul(u_infty_mul(g, g), g)),
                   {zero, zero, -(a * a * a.apply_theta())}});
  }
  {
    // (0,x',0)(0,0,x'') = (0,x',x'')
    const SymTriple p{zero, x[1], zero};
    const SymTriple c{zero, zero, x[2]};
    ids.push_back({"derived-decomposition", triple(u_infty_mul(p, c)), {zero, x[1], x[2]}});
  }
  return ids;
}

IdentityResult check_identity(const Identity& id) {
  IdentityResult r{id.name, id.lhs.size() == id.rhs.size(), 0, 0};
  for (std::size_t i = 0; i < id.lhs.size(); ++i) {
    r.lhs_terms += id.lhs[i].term_count();
    if (i < id.rhs.size()) {
      r.rhs_terms += id.rhs[i].term_count();
      r.pass = r.pass && verify_identity(id.lhs[i], id.rhs[i]);
    }
  }
  return r;
}

}  // namespace reekit::symbolic
