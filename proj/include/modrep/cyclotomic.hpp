#pragma once

// Exact elements of Z[zeta_M] in the power basis reduced modulo the M-th
// cyclotomic polynomial.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace modrep {

/// Integer coefficients of the M-th cyclotomic polynomial, low-to-high.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint64_t m);
std::uint64_t euler_phi(std::uint64_t m);

class CyclotomicInt {
 public:
  CyclotomicInt() : CyclotomicInt(1) {}
  explicit CyclotomicInt(std::uint64_t conductor);

  static CyclotomicInt integer(std::int64_t v, std::uint64_t conductor = 1);
  /// zeta_M^e.
  static CyclotomicInt root(std::uint64_t conductor, std::int64_t e);

  std::uint64_t conductor() const noexcept { return m_; }
  const std::vector<std::int64_t>& coeffs() const noexcept { return c_; }

  /// Same value with conductor a multiple of the current one.
  CyclotomicInt lifted(std::uint64_t conductor) const;

  CyclotomicInt operator+(const CyclotomicInt& o) const;
  CyclotomicInt operator-(const CyclotomicInt& o) const;
  CyclotomicInt operator*(const CyclotomicInt& o) const;
  CyclotomicInt operator-() const;
  CyclotomicInt& operator+=(const CyclotomicInt& o) { return *this = *this + o; }

  friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b);

  /// The value when it is a rational integer.
  std::optional<std::int64_t> as_integer() const;
  std::complex<double> to_complex() const;
  /// Human-readable form: integers plainly, square-root forms such as
  /// "√2·i" or "-1+√5" when recognizable, otherwise a zeta expansion.
  std::string display() const;
  /// "z8^1+z8^3" style exact expansion.
  std::string zeta_string() const;

 private:
  void reduce_from(const std::vector<std::int64_t>& full);

  std::uint64_t m_;
  std::vector<std::int64_t> c_;  // length phi(m)
};

}  // namespace modrep
