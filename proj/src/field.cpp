#include "reekit/field.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace reekit {

namespace {

constexpr int kMaxE = 6;
constexpr std::uint32_t kAddTableLimit = 729;

std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& m) {
  // m need not be monic here; its leading coefficient is 1 or 2 (self-inverse).
  const int dm = static_cast<int>(m.size()) - 1;
  const int lead_inv = m.back();  // 1*1 = 2*2 = 1 mod 3
  for (int k = static_cast<int>(a.size()) - 1; k >= dm; --k) {
    const int c = (a[k] * lead_inv) % 3;
    if (c == 0) continue;
    for (int i = 0; i <= dm; ++i) {
      a[k - dm + i] = ((a[k - dm + i] - c * m[i]) % 3 + 3) % 3;
    }
  }
  a.resize(std::max(dm, 0));
  return a;
}

bool all_zero(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int c) { return c == 0; });
}

}  // namespace

bool is_irreducible_f3(const std::vector<int>& poly) {
  const int deg = static_cast<int>(poly.size()) - 1;
  if (deg < 1) return false;
  for (int d = 1; d <= deg / 2; ++d) {
    // monic divisors of degree d
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= 3;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<int> div(d + 1, 0);
      std::uint64_t c = code;
      for (int i = 0; i < d; ++i) {
        div[i] = static_cast<int>(c % 3);
        c /= 3;
      }
      div[d] = 1;
      if (all_zero(poly_rem(poly, div))) return false;
    }
  }
  return true;
}

FieldParams FieldParams::standard(int e) {
  switch (e) {
    case 0:
      return {0, {0, 1}};
    case 1:
      return {1, {2, 2, 0, 1}};
    default:
      throw std::invalid_argument("no built-in modulus for e=" +
                                  std::to_string(e) +
                                  "; supply one as e:c0,c1,...");
  }
}

FieldParams FieldParams::parse(std::string_view text) {
  auto parse_int = [](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw std::invalid_argument("bad integer '" + std::string(s) +
                                  "' in field parameter");
    }
    return v;
  };
  const auto colon = text.find(':');
  const int e = parse_int(text.substr(0, colon));
  if (e < 0) throw std::invalid_argument("field parameter: e must be >= 0");
  if (colon == std::string_view::npos) return standard(e);

  FieldParams p{e, {}};
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    p.modulus.push_back(parse_int(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return p;
}

// ---------------------------------------------------------------------------

std::shared_ptr<const Field> Field::create(const FieldParams& params) {
  if (params.e < 0 || params.e > kMaxE) {
    throw std::invalid_argument("field: e must be in [0," +
                                std::to_string(kMaxE) + "]");
  }
  const int n = 2 * params.e + 1;
  if (static_cast<int>(params.modulus.size()) != n + 1) {
    throw std::invalid_argument("field: modulus must have degree 2e+1 = " +
                                std::to_string(n));
  }
  for (int c : params.modulus) {
    if (c < 0 || c > 2) {
      throw std::invalid_argument("field: modulus coefficients must be in {0,1,2}");
    }
  }
  if (params.modulus.back() != 1) {
    throw std::invalid_argument("field: modulus must be monic");
  }
  if (!is_irreducible_f3(params.modulus)) {
    throw std::invalid_argument("field: modulus is reducible over F_3");
  }
  return std::shared_ptr<const Field>(new Field(params));
}

Field::Field(FieldParams params) : params_(std::move(params)) {
  degree_ = 2 * params_.e + 1;
  order_ = 1;
  for (int i = 0; i < degree_; ++i) order_ *= 3;
  pow3_.assign(degree_, 1);
  for (int i = degree_ - 2; i >= 0; --i) pow3_[i] = pow3_[i + 1] * 3;

  const std::uint32_t q = order_;
  neg_.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    auto d = digits(a);
    for (int& c : d) c = (3 - c) % 3;
    neg_[a] = index_of(d);
  }
  if (q <= kAddTableLimit) {
    add_table_.resize(static_cast<std::size_t>(q) * q);
    for (std::uint32_t a = 0; a < q; ++a) {
      const auto da = digits(a);
      for (std::uint32_t b = 0; b < q; ++b) {
        auto db = digits(b);
        for (int i = 0; i < degree_; ++i) db[i] = (db[i] + da[i]) % 3;
        add_table_[static_cast<std::size_t>(a) * q + b] =
            static_cast<std::uint16_t>(index_of(db));
      }
    }
  }

  // Discrete log tables from a primitive element found by search.
  std::vector<std::uint32_t> prime_factors;
  {
    std::uint32_t m = q - 1;
    for (std::uint32_t p = 2; p * p <= m; ++p) {
      if (m % p == 0) {
        prime_factors.push_back(p);
        while (m % p == 0) m /= p;
      }
    }
    if (m > 1) prime_factors.push_back(m);
  }
  auto slow_pow = [&](const std::vector<int>& base, std::uint64_t k) {
    std::vector<int> result(degree_, 0);
    result[0] = 1;
    std::vector<int> b = base;
    while (k > 0) {
      if (k & 1) result = poly_mulmod(result, b);
      b = poly_mulmod(b, b);
      k >>= 1;
    }
    return result;
  };
  std::vector<int> one_digits(degree_, 0);
  one_digits[0] = 1;
  std::uint32_t gen = 0;
  for (std::uint32_t cand = 1; cand < q && gen == 0; ++cand) {
    const auto d = digits(cand);
    if (slow_pow(d, q - 1) != one_digits) continue;
    bool primitive = true;
    for (auto p : prime_factors) {
      if (slow_pow(d, (q - 1) / p) == one_digits) {
        primitive = false;
        break;
      }
    }
    if (primitive) gen = cand;
  }
  if (gen == 0) throw std::logic_error("field: no primitive element found");
  exp_.resize(q - 1);
  log_.assign(q, 0);
  {
    std::vector<int> cur = one_digits;
    const auto g = digits(gen);
    for (std::uint32_t k = 0; k + 1 < q; ++k) {
      const auto idx = index_of(cur);
      exp_[k] = idx;
      log_[idx] = k;
      cur = poly_mulmod(cur, g);
    }
  }

  one_ = FieldElement(this, index_of(one_digits));
  {
    std::vector<int> td(degree_, 0);
    if (degree_ > 1) {
      td[1] = 1;
    } else {
      // GF(3) = F_3[t]/(t - c): t is the constant c = -modulus[0].
      td[0] = (3 - params_.modulus[0]) % 3;
    }
    t_ = FieldElement(this, index_of(td));
  }

  frob_.resize(q);
  theta_.resize(q);
  theta_inv_.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) frob_[a] = mul_idx(mul_idx(a, a), a);
  for (std::uint32_t a = 0; a < q; ++a) {
    std::uint32_t x = a;
    for (int i = 0; i <= params_.e; ++i) x = frob_[x];  // (e+1)-fold cubing
    theta_[a] = x;
  }
  for (std::uint32_t a = 0; a < q; ++a) theta_inv_[theta_[a]] = a;
}

std::vector<int> Field::digits(std::uint32_t index) const {
  std::vector<int> d(degree_);
  for (int i = 0; i < degree_; ++i) d[i] = static_cast<int>((index / pow3_[i]) % 3);
  return d;
}

std::uint32_t Field::index_of(std::span<const int> coeffs) const {
  std::uint32_t idx = 0;
  for (int i = 0; i < degree_; ++i) idx += static_cast<std::uint32_t>(coeffs[i]) * pow3_[i];
  return idx;
}

std::vector<int> Field::poly_mulmod(const std::vector<int>& a,
                                    const std::vector<int>& b) const {
  std::vector<int> prod(2 * degree_ - 1, 0);
  for (int i = 0; i < degree_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < degree_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % 3;
  }
  prod.resize(std::max<std::size_t>(prod.size(), params_.modulus.size() - 1), 0);
  return poly_rem(std::move(prod), params_.modulus);
}

std::uint32_t Field::add_idx(std::uint32_t a, std::uint32_t b) const {
  if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * order_ + b];
  std::uint32_t r = 0;
  for (int i = 0; i < degree_; ++i) {
    const auto da = (a / pow3_[i]) % 3;
    const auto db = (b / pow3_[i]) % 3;
    r += ((da + db) % 3) * pow3_[i];
  }
  return r;
}

std::uint32_t Field::mul_idx(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (order_ - 1)];
}

FieldElement Field::from_int(int v) const {
  const int r = ((v % 3) + 3) % 3;
  if (r == 0) return zero();
  return r == 1 ? one_ : FieldElement(this, neg_[one_.index_]);
}

FieldElement Field::element(std::uint32_t index) const {
  if (index >= order_) throw std::out_of_range("field element index out of range");
  return {this, index};
}

FieldElement Field::from_coeffs(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) != degree_) {
    throw std::invalid_argument("field element needs exactly 2e+1 coefficients");
  }
  for (int c : coeffs) {
    if (c < 0 || c > 2) throw std::invalid_argument("coefficients must be in {0,1,2}");
  }
  return {this, index_of(coeffs)};
}

FieldElement Field::parse(std::string_view text) const {
  if (static_cast<int>(text.size()) != degree_) {
    throw std::invalid_argument("field element '" + std::string(text) + "' must have " +
                                std::to_string(degree_) + " digits");
  }
  std::vector<int> c(degree_);
  for (int i = 0; i < degree_; ++i) {
    if (text[i] < '0' || text[i] > '2') {
      throw std::invalid_argument("field element '" + std::string(text) +
                                  "' has a digit outside {0,1,2}");
    }
    c[i] = text[i] - '0';
  }
  return from_coeffs(c);
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(order_);
  for (std::uint32_t i = 0; i < order_; ++i) out.push_back({this, i});
  return out;
}

// ---------------------------------------------------------------------------

namespace {
const Field& same_field(const FieldElement& x, const FieldElement& y) {
  if (!x.has_field() || !y.has_field() || &x.field() != &y.field()) {
    throw std::invalid_argument("field elements belong to different fields");
  }
  return x.field();
}
}  // namespace

const Field& FieldElement::field() const {
  if (field_ == nullptr) throw std::invalid_argument("field element has no field");
  return *field_;
}

bool FieldElement::is_one() const { return field_ && index_ == field_->one_.index_; }

std::vector<int> FieldElement::coeffs() const { return field().digits(index_); }

FieldElement FieldElement::operator+(const FieldElement& y) const {
  const Field& f = same_field(*this, y);
  return {&f, f.add_idx(index_, y.index_)};
}

FieldElement FieldElement::operator-(const FieldElement& y) const {
  const Field& f = same_field(*this, y);
  return {&f, f.add_idx(index_, f.neg_[y.index_])};
}

FieldElement FieldElement::operator-() const {
  const Field& f = field();
  return {&f, f.neg_[index_]};
}

FieldElement FieldElement::operator*(const FieldElement& y) const {
  const Field& f = same_field(*this, y);
  return {&f, f.mul_idx(index_, y.index_)};
}

FieldElement FieldElement::operator/(const FieldElement& y) const {
  return *this * y.inv();
}

FieldElement FieldElement::inv() const {
  const Field& f = field();
  if (index_ == 0) throw std::domain_error("inverse of zero");
  const auto m = f.order_ - 1;
  return {&f, f.exp_[(m - f.log_[index_]) % m]};
}

FieldElement FieldElement::pow(std::uint64_t k) const {
  const Field& f = field();
  if (k == 0) return f.one();
  if (index_ == 0) return f.zero();
  const std::uint64_t m = f.order_ - 1;
  return {&f, f.exp_[(static_cast<std::uint64_t>(f.log_[index_]) * (k % m)) % m]};
}

FieldElement FieldElement::theta() const {
  const Field& f = field();
  return {&f, f.theta_[index_]};
}

FieldElement FieldElement::theta_inv() const {
  const Field& f = field();
  return {&f, f.theta_inv_[index_]};
}

FieldElement FieldElement::frobenius(int s) const {
  const Field& f = field();
  const int n = f.degree_;
  s = ((s % n) + n) % n;
  std::uint32_t x = index_;
  for (int i = 0; i < s; ++i) x = f.frob_[x];
  return {&f, x};
}

std::string FieldElement::to_string() const {
  std::string s;
  for (int c : coeffs()) s.push_back(static_cast<char>('0' + c));
  return s;
}

}  // namespace reekit
