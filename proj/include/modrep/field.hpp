#pragma once

// Finite fields F_{p^k} in the power basis of a fixed (Conway by default)
// modulus. Elements are packed as sum_i c_i p^i, which keeps the
// coordinate-vector layout while letting matrices store plain integers.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "modrep/error.hpp"

namespace modrep {

using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

inline constexpr std::uint64_t kDefaultFieldBound = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kLogTableLimit = std::uint64_t{1} << 20;

bool is_prime(std::uint64_t n);

/// Stored Conway polynomial (low-to-high, monic) or nullopt.
std::optional<std::vector<std::uint32_t>> conway_polynomial(std::uint32_t p, unsigned k);

/// Searches for the Conway polynomial directly from its definition
/// (lexicographically least primitive polynomial compatible with all
/// subfields). Slow for large p^k; used beyond the stored table and to
/// cross-check it.
std::vector<std::uint32_t> search_conway_polynomial(std::uint32_t p, unsigned k);

class Field {
 public:
  /// Creates (or fetches from the process-wide cache) the field F_{p^k}.
  /// `modulus` is low-to-high including the leading 1.
  static FieldPtr make(std::uint32_t p, unsigned k,
                       const std::optional<std::vector<std::uint32_t>>& modulus = std::nullopt,
                       std::uint64_t bound = kDefaultFieldBound);

  std::uint32_t p() const noexcept { return p_; }
  unsigned k() const noexcept { return k_; }
  std::uint64_t order() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  Elem primitive() const noexcept { return primitive_; }
  bool has_log_table() const noexcept { return !log_.empty(); }
  bool is_prime_field() const noexcept { return k_ == 1; }

  /// Fields are identified by (p, k, modulus).
  bool same_as(const Field& other) const noexcept {
    return this == &other || (p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_);
  }

  Elem from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }

  Elem add(Elem a, Elem b) const noexcept {
    if (k_ == 1) {
      Elem s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (p_ == 2) return a ^ b;
    return add_digits(a, b);
  }
  Elem neg(Elem a) const noexcept {
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    if (p_ == 2) return a;
    return neg_digits(a);
  }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (k_ == 1) return static_cast<Elem>((std::uint64_t{a} * b) % p_);
    if (!log_.empty()) return exp_[log_[a] + log_[b]];
    return mul_poly(a, b);
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  Elem frobenius(Elem a) const noexcept { return pow(a, p_); }

  /// primitive^e for any integer exponent (reduced mod q-1).
  Elem exp(std::int64_t e) const noexcept;
  /// The canonical primitive m-th root of unity primitive^((q-1)/m).
  Elem root_of_unity(std::uint64_t m) const;
  /// Exponent e in [0, q-1) with primitive^e = x.
  std::uint64_t discrete_log(Elem x) const;
  std::uint64_t multiplicative_order(Elem x) const;

  std::vector<std::uint32_t> coeffs(Elem a) const;
  Elem from_coeffs(std::span<const std::uint32_t> c) const;

  /// y += c * x, elementwise.
  void axpy(std::span<Elem> y, Elem c, std::span<const Elem> x) const noexcept;
  void scale(std::span<Elem> y, Elem c) const noexcept;

  /// "a0+a1*t+..." (just "a0" over a prime field).
  std::string to_string(Elem a) const;
  /// Modulus in the same notation, e.g. "2+2*t+1*t^2".
  std::string modulus_string() const;
  /// "GF(3^2)" style label.
  std::string name() const;

  Field(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus);

 private:
  Elem add_digits(Elem a, Elem b) const noexcept;
  Elem neg_digits(Elem a) const noexcept;
  Elem mul_poly(Elem a, Elem b) const noexcept;

  std::uint32_t p_;
  unsigned k_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  Elem primitive_ = 0;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> exp_;  // length 2(q-1) so log sums need no reduction
};

/// Element with an attached field, for API boundaries and tests; bulk data
/// (matrices) store raw `Elem` values instead.
struct FieldElement {
  FieldPtr field;
  Elem value = 0;

  std::vector<std::uint32_t> coeffs() const { return field->coeffs(value); }
  std::string to_string() const { return field->to_string(value); }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field->same_as(*b.field) && a.value == b.value;
  }
  FieldElement operator+(const FieldElement& o) const { return {field, field->add(value, o.value)}; }
  FieldElement operator-(const FieldElement& o) const { return {field, field->sub(value, o.value)}; }
  FieldElement operator*(const FieldElement& o) const { return {field, field->mul(value, o.value)}; }
  FieldElement inverse() const { return {field, field->inv(value)}; }
  FieldElement pow(std::uint64_t e) const { return {field, field->pow(value, e)}; }
};

FieldPtr make_field(std::uint32_t p, unsigned k,
                    const std::optional<std::vector<std::uint32_t>>& override_modulus = std::nullopt,
                    std::uint64_t bound = kDefaultFieldBound);
FieldElement root_of_unity(const FieldPtr& ctx, std::uint64_t m);
std::uint64_t discrete_log(const FieldPtr& ctx, Elem x);

/// Canonical embedding F_{p^k} -> F_{p^K} (k | K) sending the source
/// primitive element to a root of the source modulus of the form
/// dst.primitive^(c (Q-1)/(q-1)), with the smallest such c. For Conway
/// moduli c = 1.
class FieldEmbedding {
 public:
  FieldEmbedding(FieldPtr src, FieldPtr dst);

  Elem operator()(Elem x) const;
  const FieldPtr& src() const noexcept { return src_; }
  const FieldPtr& dst() const noexcept { return dst_; }
  Elem image_of_primitive() const noexcept { return image_primitive_; }

 private:
  FieldPtr src_;
  FieldPtr dst_;
  Elem image_primitive_ = 0;
  std::vector<Elem> table_;  // full map when the source is small
};

FieldElement embed(const FieldPtr& src, const FieldPtr& dst, Elem x);

}  // namespace modrep
