#include "modrep/field.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>
#include <unordered_map>

namespace modrep {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::NoConwayPolynomialStored: return "NoConwayPolynomialStored";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::OrderDoesNotDivide: return "OrderDoesNotDivide";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::IncompatibleFields: return "IncompatibleFields";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::SingularGenerator: return "SingularGenerator";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::DoesNotNormalize: return "DoesNotNormalize";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::QuotientMismatch: return "QuotientMismatch";
    case ErrorKind::InconclusiveAfterBudget: return "InconclusiveAfterBudget";
    case ErrorKind::NotAbsolutelyIrreducible: return "NotAbsolutelyIrreducible";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::SplittingFieldNotFoundInLadder: return "SplittingFieldNotFoundInLadder";
    case ErrorKind::NotSemisimple: return "NotSemisimple";
    case ErrorKind::ClosureStalled: return "ClosureStalled";
    case ErrorKind::OrbitMismatch: return "OrbitMismatch";
    case ErrorKind::PaperCheckFailure: return "PaperCheckFailure";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::KOutOfRange: return "KOutOfRange";
    case ErrorKind::ROutOfRange: return "ROutOfRange";
    case ErrorKind::TableMismatch: return "TableMismatch";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Polynomials over Z/p, low-to-high. Only what modulus validation and the
// Conway search need.
using ZpPoly = std::vector<std::uint64_t>;

void trim(ZpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a % p);
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::tie(t, newt) = std::make_tuple(newt, t - q * newt);
    std::tie(r, newr) = std::make_tuple(newr, r - q * newr);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

ZpPoly poly_mod(ZpPoly a, const ZpPoly& f, std::uint64_t p) {
  trim(a);
  const std::size_t n = f.size() - 1;
  const std::uint64_t lead_inv = inv_mod(f.back(), p);
  while (a.size() > n) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - n;
    for (std::size_t i = 0; i <= n; ++i) {
      a[shift + i] = (a[shift + i] + p - c * f[i] % p) % p;
    }
    trim(a);
  }
  return a;
}

ZpPoly poly_mulmod(const ZpPoly& a, const ZpPoly& b, const ZpPoly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ZpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(r), f, p);
}

ZpPoly poly_powmod(ZpPoly base, std::uint64_t e, const ZpPoly& f, std::uint64_t p) {
  ZpPoly result{1};
  base = poly_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return poly_mod(std::move(result), f, p);
}

ZpPoly poly_gcd(ZpPoly a, ZpPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ZpPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

ZpPoly sub_x(ZpPoly a, std::uint64_t p) {
  if (a.size() < 2) a.resize(2, 0);
  a[1] = (a[1] + p - 1) % p;
  trim(a);
  return a;
}

// Rabin's test.
bool zp_irreducible(const ZpPoly& f, std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  if (k == 1) return true;
  const ZpPoly x{0, 1};
  auto x_pow_p_pow = [&](std::size_t times) {
    ZpPoly y = x;
    for (std::size_t i = 0; i < times; ++i) y = poly_powmod(y, p, f, p);
    return y;
  };
  if (!sub_x(x_pow_p_pow(k), p).empty()) return false;
  for (std::uint64_t r : prime_factors(k)) {
    ZpPoly g = poly_gcd(f, sub_x(x_pow_p_pow(k / r), p), p);
    if (g.size() > 1) return false;
  }
  return true;
}

ZpPoly root_poly(const ZpPoly& f, std::uint64_t p) {
  if (f.size() == 2) return {(p - f[0] % p) % p};
  return {0, 1};
}

bool zp_primitive(const ZpPoly& f, std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  std::uint64_t q1 = 1;
  for (std::size_t i = 0; i < k; ++i) q1 *= p;
  --q1;
  const ZpPoly x = root_poly(f, p);
  const ZpPoly one{1};
  if (poly_powmod(x, q1, f, p) != one) return false;
  for (std::uint64_t r : prime_factors(q1)) {
    if (poly_powmod(x, q1 / r, f, p) == one) return false;
  }
  return true;
}

ZpPoly eval_at(const std::vector<std::uint32_t>& g, const ZpPoly& y, const ZpPoly& f, std::uint64_t p) {
  ZpPoly acc;
  for (auto it = g.rbegin(); it != g.rend(); ++it) {
    acc = poly_mulmod(acc, y, f, p);
    if (acc.empty()) acc.push_back(0);
    acc[0] = (acc[0] + *it) % p;
    trim(acc);
  }
  return acc;
}

}  // namespace

std::vector<std::uint32_t> search_conway_polynomial(std::uint32_t p, unsigned k) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p));
  if (k == 0) throw Error(ErrorKind::InvalidInput, "degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) q *= p;
  // Candidates are enumerated in the standard Conway order: the digits
  // a_{k-1},...,a_0 lexicographically, where the x^i coefficient is
  // (-1)^(k-i) a_i.
  std::vector<std::uint32_t> digits(k, 0);
  std::vector<std::vector<std::uint32_t>> subfield_polys;
  std::vector<unsigned> subfield_degrees;
  for (unsigned m = 1; m < k; ++m) {
    if (k % m) continue;
    auto stored = conway_polynomial(p, m);
    subfield_polys.push_back(stored ? *stored : search_conway_polynomial(p, m));
    subfield_degrees.push_back(m);
  }
  while (true) {
    ZpPoly f(k + 1, 0);
    f[k] = 1;
    for (unsigned idx = 0; idx < k; ++idx) {
      const unsigned i = k - 1 - idx;
      const std::uint64_t a = digits[idx];
      f[i] = ((k - i) % 2 == 0) ? a : (p - a) % p;
    }
    if (f[0] != 0 && zp_primitive(f, p)) {
      bool ok = true;
      const ZpPoly x = root_poly(f, p);
      for (std::size_t s = 0; s < subfield_polys.size() && ok; ++s) {
        std::uint64_t qm = 1;
        for (unsigned i = 0; i < subfield_degrees[s]; ++i) qm *= p;
        const ZpPoly y = poly_powmod(x, (q - 1) / (qm - 1), f, p);
        ok = eval_at(subfield_polys[s], y, f, p).empty();
      }
      if (ok) return {f.begin(), f.end()};
    }
    int pos = static_cast<int>(k) - 1;
    while (pos >= 0 && ++digits[pos] == p) {
      digits[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  throw Error(ErrorKind::NoConwayPolynomialStored, "search exhausted");
}

// ---------------------------------------------------------------------------

Field::Field(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < k; ++i) q_ *= p;

  const ZpPoly f(modulus_.begin(), modulus_.end());
  const std::uint64_t q1 = q_ - 1;
  const auto factors = prime_factors(q1);
  auto has_full_order = [&](Elem x) {
    if (x == 0) return false;
    if (pow(x, q1) != 1) return false;
    for (auto r : factors) {
      if (pow(x, q1 / r) == 1) return false;
    }
    return true;
  };
  // pow() only needs mul_poly at this stage, since no table exists yet.
  const Elem root = k_ == 1 ? static_cast<Elem>((p_ - modulus_[0] % p_) % p_) : static_cast<Elem>(p_);
  if (q_ == 2) {
    primitive_ = 1;
  } else if (has_full_order(root)) {
    primitive_ = root;
  } else {
    for (Elem x = 1; x < q_; ++x) {
      if (has_full_order(x)) {
        primitive_ = x;
        break;
      }
    }
  }

  if (q_ <= kLogTableLimit) {
    log_.assign(q_, 0);
    exp_.assign(2 * q1, 0);
    Elem cur = 1;
    for (std::uint64_t i = 0; i < q1; ++i) {
      exp_[i] = cur;
      exp_[i + q1] = cur;
      log_[cur] = static_cast<std::uint32_t>(i);
      cur = mul_poly(cur, primitive_);
    }
  }
}

FieldPtr Field::make(std::uint32_t p, unsigned k, const std::optional<std::vector<std::uint32_t>>& modulus,
                     std::uint64_t bound) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (k == 0) throw Error(ErrorKind::InvalidInput, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > bound || q >= (std::uint64_t{1} << 31)) {
      throw Error(ErrorKind::FieldTooLarge,
                  std::to_string(p) + "^" + std::to_string(k) + " exceeds bound " + std::to_string(bound));
    }
  }

  std::vector<std::uint32_t> mod;
  if (modulus) {
    mod = *modulus;
    for (auto& c : mod) c %= p;
    if (mod.size() != k + 1 || mod.back() != 1) {
      throw Error(ErrorKind::InvalidInput, "override modulus must be monic of degree " + std::to_string(k));
    }
    if (!zp_irreducible(ZpPoly(mod.begin(), mod.end()), p)) {
      throw Error(ErrorKind::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
    }
  } else {
    auto stored = conway_polynomial(p, k);
    if (!stored) {
      throw Error(ErrorKind::NoConwayPolynomialStored,
                  "no Conway polynomial stored for (" + std::to_string(p) + "," + std::to_string(k) + ")");
    }
    mod = *stored;
  }

  static std::mutex mu;
  static std::map<std::tuple<std::uint32_t, unsigned, std::vector<std::uint32_t>>, FieldPtr> cache;
  std::lock_guard lock(mu);
  auto key = std::make_tuple(p, k, mod);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  auto field = std::make_shared<const Field>(p, k, mod);
  cache.emplace(std::move(key), field);
  return field;
}

Elem Field::add_digits(Elem a, Elem b) const noexcept {
  Elem out = 0, place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    Elem s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    out += s * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return out;
}

Elem Field::neg_digits(Elem a) const noexcept {
  Elem out = 0, place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    Elem d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * place;
    a /= p_;
    place *= p_;
  }
  return out;
}

Elem Field::mul_poly(Elem a, Elem b) const noexcept {
  if (k_ == 1) return static_cast<Elem>((std::uint64_t{a} * b) % p_);
  std::vector<std::uint64_t> x(k_), y(k_), r(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    x[i] = a % p_;
    y[i] = b % p_;
    a /= p_;
    b /= p_;
  }
  for (unsigned i = 0; i < k_; ++i) {
    if (!x[i]) continue;
    for (unsigned j = 0; j < k_; ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % p_;
  }
  for (unsigned d = 2 * k_ - 2; d >= k_; --d) {
    const std::uint64_t c = r[d];
    if (!c) continue;
    for (unsigned i = 0; i <= k_; ++i) {
      r[d - k_ + i] = (r[d - k_ + i] + p_ - c * modulus_[i] % p_) % p_;
    }
  }
  Elem out = 0, place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    out += static_cast<Elem>(r[i]) * place;
    place *= p_;
  }
  return out;
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (!log_.empty()) {
    const std::uint64_t q1 = q_ - 1;
    return exp_[(static_cast<unsigned __int128>(log_[a]) * e) % q1];
  }
  Elem result = 1;
  Elem base = a;
  while (e) {
    if (e & 1) result = mul_poly(result, base);
    base = mul_poly(base, base);
    e >>= 1;
  }
  return result;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::ZeroElement, "inverse of zero");
  if (!log_.empty()) {
    const std::uint64_t q1 = q_ - 1;
    return exp_[(q1 - log_[a]) % q1];
  }
  return pow(a, q_ - 2);
}

Elem Field::exp(std::int64_t e) const noexcept {
  const auto q1 = static_cast<std::int64_t>(q_ - 1);
  std::int64_t r = e % q1;
  if (r < 0) r += q1;
  if (!exp_.empty()) return exp_[static_cast<std::size_t>(r)];
  return pow(primitive_, static_cast<std::uint64_t>(r));
}

Elem Field::root_of_unity(std::uint64_t m) const {
  if (m == 0 || (q_ - 1) % m != 0) {
    throw Error(ErrorKind::OrderDoesNotDivide,
                std::to_string(m) + " does not divide " + std::to_string(q_ - 1) + " in " + name());
  }
  return exp(static_cast<std::int64_t>((q_ - 1) / m));
}

std::uint64_t Field::discrete_log(Elem x) const {
  if (x == 0) throw Error(ErrorKind::ZeroElement, "discrete log of zero");
  if (!log_.empty()) return log_[x];
  // Baby-step giant-step.
  const std::uint64_t n = q_ - 1;
  const auto m = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  std::unordered_map<Elem, std::uint64_t> baby;
  baby.reserve(m);
  Elem cur = 1;
  for (std::uint64_t j = 0; j < m; ++j) {
    baby.emplace(cur, j);
    cur = mul_poly(cur, primitive_);
  }
  const Elem giant = inv(pow(primitive_, m));
  Elem gamma = x;
  for (std::uint64_t i = 0; i <= m; ++i) {
    if (auto it = baby.find(gamma); it != baby.end()) return (i * m + it->second) % n;
    gamma = mul_poly(gamma, giant);
  }
  throw Error(ErrorKind::InvalidInput, "discrete log not found");
}

std::uint64_t Field::multiplicative_order(Elem x) const {
  if (x == 0) throw Error(ErrorKind::ZeroElement, "order of zero");
  const std::uint64_t e = discrete_log(x);
  const std::uint64_t n = q_ - 1;
  return n / std::gcd(n, e == 0 ? n : e);
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const {
  std::vector<std::uint32_t> c(k_);
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Elem Field::from_coeffs(std::span<const std::uint32_t> c) const {
  Elem out = 0, place = 1;
  for (unsigned i = 0; i < k_; ++i) {
    out += (i < c.size() ? c[i] % p_ : 0) * place;
    place *= p_;
  }
  return out;
}

void Field::axpy(std::span<Elem> y, Elem c, std::span<const Elem> x) const noexcept {
  if (c == 0) return;
  const std::size_t n = std::min(y.size(), x.size());
  if (k_ == 1) {
    const std::uint64_t cc = c;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i]) y[i] = static_cast<Elem>((y[i] + cc * x[i]) % p_);
    }
    return;
  }
  if (!log_.empty()) {
    const std::uint32_t lc = log_[c];
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i]) y[i] = add(y[i], exp_[lc + log_[x[i]]]);
    }
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i]) y[i] = add(y[i], mul_poly(c, x[i]));
  }
}

void Field::scale(std::span<Elem> y, Elem c) const noexcept {
  for (auto& v : y) v = mul(v, c);
}

std::string Field::to_string(Elem a) const {
  const auto c = coeffs(a);
  std::ostringstream os;
  os << c[0];
  for (unsigned i = 1; i < k_; ++i) {
    os << '+' << c[i] << "*t";
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::string Field::modulus_string() const {
  std::ostringstream os;
  os << modulus_[0];
  for (std::size_t i = 1; i < modulus_.size(); ++i) {
    os << '+' << modulus_[i] << "*t";
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::string Field::name() const {
  return k_ == 1 ? "GF(" + std::to_string(p_) + ")" : "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
}

// ---------------------------------------------------------------------------

FieldPtr make_field(std::uint32_t p, unsigned k, const std::optional<std::vector<std::uint32_t>>& override_modulus,
                    std::uint64_t bound) {
  return Field::make(p, k, override_modulus, bound);
}

FieldElement root_of_unity(const FieldPtr& ctx, std::uint64_t m) {
  const Elem z = ctx->root_of_unity(m);  // before the aggregate: GCC 11 leaks members on a throwing initializer
  return {ctx, z};
}

std::uint64_t discrete_log(const FieldPtr& ctx, Elem x) { return ctx->discrete_log(x); }

FieldEmbedding::FieldEmbedding(FieldPtr src, FieldPtr dst) : src_(std::move(src)), dst_(std::move(dst)) {
  if (src_->p() != dst_->p() || dst_->k() % src_->k() != 0) {
    throw Error(ErrorKind::IncompatibleFields, "cannot embed " + src_->name() + " into " + dst_->name());
  }
  const std::uint64_t q1 = src_->order() - 1;
  const std::uint64_t Q1 = dst_->order() - 1;
  const std::uint64_t step = Q1 / q1;
  const auto& f = src_->modulus();
  auto is_root = [&](Elem y) {
    Elem acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = dst_->add(dst_->mul(acc, y), dst_->from_int(*it));
    return acc == 0;
  };
  bool found = false;
  for (std::uint64_t c = 1; c <= q1 && !found; ++c) {
    if (std::gcd(c, q1) != 1 && q1 > 1) continue;
    const Elem y = dst_->exp(static_cast<std::int64_t>(c * step));
    if (is_root(y)) {
      image_primitive_ = y;
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::IncompatibleFields, "no root of source modulus in destination");
  if (src_->order() <= 4096) {
    table_.resize(src_->order());
    for (Elem x = 0; x < src_->order(); ++x) {
      table_[x] = x == 0 ? 0 : dst_->pow(image_primitive_, src_->discrete_log(x));
    }
  }
}

Elem FieldEmbedding::operator()(Elem x) const {
  if (!table_.empty()) return table_[x];
  if (x == 0) return 0;
  return dst_->pow(image_primitive_, src_->discrete_log(x));
}

FieldElement embed(const FieldPtr& src, const FieldPtr& dst, Elem x) {
  FieldEmbedding e(src, dst);
  return {dst, e(x)};
}

}  // namespace modrep
