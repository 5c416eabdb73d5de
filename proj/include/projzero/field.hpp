#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace projzero {

class Scalar;

/// Ground field: the rationals or a prime field GF(p) with p < 2^31.
class Field {
 public:
  enum class Kind { rationals, prime };

  Field() = default;
  static Field rationals() { return Field{}; }
  /// Throws projzero::Error (input) unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);
  /// Accepts "Q", "QQ", "GF(p)", "Z_p", "Zp", "F_p".
  static Field parse(std::string_view text);

  Kind kind() const noexcept { return modulus_ == 0 ? Kind::rationals : Kind::prime; }
  bool is_finite() const noexcept { return modulus_ != 0; }
  /// 0 for Q.
  std::uint32_t characteristic() const noexcept { return modulus_; }
  /// Number of elements, or nullopt for Q.
  std::optional<std::uint64_t> size() const noexcept {
    if (modulus_ == 0) return std::nullopt;
    return modulus_;
  }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long value) const;
  Scalar from_integer(const mpz_class& value) const;
  /// Throws projzero::Error (input) if den vanishes in the field.
  Scalar from_rational(const mpz_class& num, const mpz_class& den) const;
  Scalar from_rational(const mpq_class& value) const;
  /// Integer or a/b literal, optionally signed.
  Scalar parse_element(std::string_view text) const;

  /// Fixed enumeration of field elements: GF(p) gives 0,1,...,p-1; Q gives 0,1,-1,2,-2,...
  Scalar element(std::uint64_t index) const;

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint32_t modulus) : modulus_(modulus) {}
  std::uint32_t modulus_ = 0;
};

bool is_prime(std::uint64_t n);

/// Exact field element. Rationals live in lowest terms (mpq canonical form);
/// prime-field residues are kept in [0, p).
class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;

  Field field() const;
  bool is_zero() const noexcept { return modulus_ != 0 ? residue_ == 0 : sgn(q_) == 0; }
  bool is_one() const noexcept { return modulus_ != 0 ? residue_ == 1 : q_ == 1; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  /// Throws std::domain_error on zero.
  Scalar inverse() const;
  Scalar pow(std::uint64_t exponent) const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.modulus_ == b.modulus_ && (a.modulus_ != 0 ? a.residue_ == b.residue_ : a.q_ == b.q_);
  }
  /// Total order used for deterministic sorting: numeric for Q, by residue for GF(p).
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  /// Underlying rational (only meaningful over Q).
  const mpq_class& rational() const noexcept { return q_; }
  /// Underlying residue (only meaningful over GF(p)).
  std::uint32_t residue() const noexcept { return residue_; }

  std::string to_string() const;

 private:
  friend class Field;
  std::uint32_t modulus_ = 0;
  std::uint32_t residue_ = 0;
  mpq_class q_;

  void check_same(const Scalar& o) const;
};

}  // namespace projzero
