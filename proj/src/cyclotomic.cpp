#include "modrep/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "modrep/error.hpp"

namespace modrep {

namespace {

// a / b for monic b, exact over Z.
std::vector<std::int64_t> exact_divide(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {0};
  std::vector<std::int64_t> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const std::int64_t c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

}  // namespace

std::uint64_t euler_phi(std::uint64_t m) {
  std::uint64_t r = m;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d) continue;
    while (m % d == 0) m /= d;
    r -= r / d;
  }
  if (m > 1) r -= r / m;
  return r;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint64_t m) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::vector<std::int64_t>> cache;
  if (m == 0) throw Error(ErrorKind::InvalidInput, "conductor must be positive");
  {
    std::lock_guard lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  // x^m - 1 divided by Phi_d for every proper divisor d.
  std::vector<std::int64_t> f(m + 1, 0);
  f[0] = -1;
  f[m] = 1;
  for (std::uint64_t d = 1; d < m; ++d) {
    if (m % d == 0) f = exact_divide(f, cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mu);
  return cache.emplace(m, std::move(f)).first->second;
}

CyclotomicInt::CyclotomicInt(std::uint64_t conductor) : m_(conductor), c_(euler_phi(conductor), 0) {
  if (conductor == 0) throw Error(ErrorKind::InvalidInput, "conductor must be positive");
}

CyclotomicInt CyclotomicInt::integer(std::int64_t v, std::uint64_t conductor) {
  CyclotomicInt z(conductor);
  z.c_[0] = v;
  return z;
}

CyclotomicInt CyclotomicInt::root(std::uint64_t conductor, std::int64_t e) {
  CyclotomicInt z(conductor);
  const auto m = static_cast<std::int64_t>(conductor);
  std::vector<std::int64_t> full(conductor, 0);
  full[static_cast<std::size_t>(((e % m) + m) % m)] = 1;
  z.reduce_from(full);
  return z;
}

void CyclotomicInt::reduce_from(const std::vector<std::int64_t>& full) {
  // Fold exponents modulo m, then reduce modulo Phi_m.
  std::vector<std::int64_t> a(m_, 0);
  for (std::size_t i = 0; i < full.size(); ++i) a[i % m_] += full[i];
  const auto& phi = cyclotomic_polynomial(m_);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = a.size(); i-- > deg;) {
    const std::int64_t c = a[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) a[i - deg + j] -= c * phi[j];
  }
  a.resize(deg);
  c_ = std::move(a);
}

CyclotomicInt CyclotomicInt::lifted(std::uint64_t conductor) const {
  if (conductor % m_ != 0) throw Error(ErrorKind::InvalidInput, "conductor is not a multiple");
  if (conductor == m_) return *this;
  const std::uint64_t step = conductor / m_;
  std::vector<std::int64_t> full(conductor, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) full[i * step] = c_[i];
  CyclotomicInt z(conductor);
  z.reduce_from(full);
  return z;
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const {
  const std::uint64_t m = std::lcm(m_, o.m_);
  CyclotomicInt a = lifted(m);
  const CyclotomicInt b = o.lifted(m);
  for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

CyclotomicInt CyclotomicInt::operator-() const {
  CyclotomicInt a = *this;
  for (auto& x : a.c_) x = -x;
  return a;
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const { return *this + (-o); }

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
  const std::uint64_t m = std::lcm(m_, o.m_);
  const CyclotomicInt a = lifted(m);
  const CyclotomicInt b = o.lifted(m);
  std::vector<std::int64_t> full(m, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) full[(i + j) % m] += a.c_[i] * b.c_[j];
  }
  CyclotomicInt z(m);
  z.reduce_from(full);
  return z;
}

bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) {
  const std::uint64_t m = std::lcm(a.m_, b.m_);
  return a.lifted(m).c_ == b.lifted(m).c_;
}

std::optional<std::int64_t> CyclotomicInt::as_integer() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return std::nullopt;
  }
  return c_[0];
}

std::complex<double> CyclotomicInt::to_complex() const {
  std::complex<double> s = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    s += static_cast<double>(c_[i]) * std::polar(1.0, 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(m_));
  }
  return s;
}

std::string CyclotomicInt::zeta_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const std::int64_t c = c_[i];
    if (c == 0) continue;
    if (c < 0) out << "-";
    else if (!first) out << "+";
    const std::int64_t a = c < 0 ? -c : c;
    if (i == 0) {
      out << a;
    } else {
      if (a != 1) out << a << "*";
      out << "z" << m_ << "^" << i;
    }
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

namespace {

// Recognizes x as an integer or c*sqrt(d) with small squarefree d.
std::optional<std::string> real_form(double x) {
  constexpr double eps = 1e-9;
  const double r = std::round(x);
  if (std::abs(x - r) < eps) return std::to_string(static_cast<long long>(r));
  for (int d = 2; d <= 50; ++d) {
    bool squarefree = true;
    for (int s = 2; s * s <= d; ++s) {
      if (d % (s * s) == 0) squarefree = false;
    }
    if (!squarefree) continue;
    const double c = x / std::sqrt(static_cast<double>(d));
    const double rc = std::round(c);
    if (rc != 0 && std::abs(c - rc) < eps) {
      std::string s = rc < 0 ? "-" : "";
      const long long a = static_cast<long long>(std::abs(rc));
      if (a != 1) s += std::to_string(a);
      return s + "√" + std::to_string(d);
    }
  }
  return std::nullopt;
}

}  // namespace

std::string CyclotomicInt::display() const {
  if (auto v = as_integer()) return std::to_string(*v);
  const auto z = to_complex();
  constexpr double eps = 1e-9;
  const bool has_re = std::abs(z.real()) > eps;
  const bool has_im = std::abs(z.imag()) > eps;
  auto re = has_re ? real_form(z.real()) : std::optional<std::string>("0");
  auto im = has_im ? real_form(z.imag()) : std::optional<std::string>("0");
  if (!re || !im) return zeta_string();
  std::string out;
  if (has_re) out = *re;
  if (has_im) {
    std::string s = *im;
    if (s == "1") s = "";
    else if (s == "-1") s = "-";
    if (has_re && s.rfind('-', 0) != 0) out += "+";
    out += s.empty() || s == "-" ? s + "i" : s + "·i";
  }
  return out;
}

}  // namespace modrep
