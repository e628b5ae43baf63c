#pragma once

// Coefficient fields: prime fields F_p with a runtime modulus, and the
// rationals (GMP). Elements carry enough information to do arithmetic on
// their own, so they compose with ordinary operators.

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "gtrim/errors.hpp"

namespace gtrim {

inline constexpr std::uint32_t kDefaultCharacteristic = 32003;

bool is_prime(std::uint64_t n);

/// Runtime description of a coefficient field: 0 means the rationals,
/// anything else is the prime p of F_p.
struct FieldSpec {
  std::uint32_t characteristic = kDefaultCharacteristic;

  static FieldSpec rationals() { return FieldSpec{0}; }
  /// Throws InvalidArgument unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);
  /// 0 -> rationals, otherwise prime(c).
  static FieldSpec from_characteristic(std::uint64_t c);

  bool is_rational() const { return characteristic == 0; }
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline void require_same_field(const FieldSpec& a, const FieldSpec& b) {
  if (!(a == b)) {
    throw FieldMismatch("coefficient fields differ: " + a.to_string() + " vs " + b.to_string());
  }
}

class Zp {
 public:
  static Zp zero(const FieldSpec& f) { return Zp(0, check(f)); }
  static Zp one(const FieldSpec& f) { return Zp(1, check(f)); }
  static Zp from_integer(long long n, const FieldSpec& f) {
    const std::uint32_t p = check(f);
    long long r = n % static_cast<long long>(p);
    if (r < 0) r += p;
    return Zp(static_cast<std::uint32_t>(r), p);
  }
  /// Decimal integer literal, optionally signed.
  static Zp from_decimal(std::string_view text, const FieldSpec& f);
  static bool accepts(const FieldSpec& f) { return !f.is_rational(); }
  static FieldSpec default_field() { return FieldSpec{kDefaultCharacteristic}; }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  FieldSpec field() const { return FieldSpec{p_}; }

  Zp operator+(const Zp& o) const {
    same(o);
    std::uint32_t s = v_ + o.v_;
    if (s >= p_) s -= p_;
    return Zp(s, p_);
  }
  Zp operator-(const Zp& o) const {
    same(o);
    return Zp(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_);
  }
  Zp operator-() const { return Zp(v_ == 0 ? 0 : p_ - v_, p_); }
  Zp operator*(const Zp& o) const {
    same(o);
    return Zp(static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % p_), p_);
  }
  Zp& operator+=(const Zp& o) { return *this = *this + o; }
  Zp& operator-=(const Zp& o) { return *this = *this - o; }
  Zp& operator*=(const Zp& o) { return *this = *this * o; }
  /// Throws std::domain_error on zero.
  Zp inverse() const;
  Zp operator/(const Zp& o) const { return *this * o.inverse(); }

  friend bool operator==(const Zp& a, const Zp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

  /// Symmetric representative in (-p/2, p/2].
  std::string to_string() const;

 private:
  Zp(std::uint32_t v, std::uint32_t p) : v_(v), p_(p) {}
  static std::uint32_t check(const FieldSpec& f) {
    if (f.is_rational()) throw FieldMismatch("Zp requires a prime characteristic");
    return f.characteristic;
  }
  void same(const Zp& o) const {
    if (p_ != o.p_) throw FieldMismatch("arithmetic across different prime fields");
  }

  std::uint32_t v_;
  std::uint32_t p_;
};

class Rational {
 public:
  Rational() = default;
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  static Rational zero(const FieldSpec& f) { check(f); return Rational(); }
  static Rational one(const FieldSpec& f) { check(f); return Rational(mpq_class(1)); }
  static Rational from_integer(long long n, const FieldSpec& f) {
    check(f);
    return Rational(mpq_class(static_cast<long>(n)));
  }
  /// "a" or "a/b" with optional sign.
  static Rational from_decimal(std::string_view text, const FieldSpec& f);
  static bool accepts(const FieldSpec& f) { return f.is_rational(); }
  static FieldSpec default_field() { return FieldSpec::rationals(); }

  const mpq_class& value() const { return q_; }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  FieldSpec field() const { return FieldSpec::rationals(); }

  Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_)); }
  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational inverse() const;
  Rational operator/(const Rational& o) const { return *this * o.inverse(); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }

  std::string to_string() const { return q_.get_str(); }

 private:
  static void check(const FieldSpec& f) {
    if (!f.is_rational()) throw FieldMismatch("Rational requires characteristic 0");
  }

  mpq_class q_;
};

template <class K>
concept CoefficientField =
    std::copy_constructible<K> &&
    requires(const K a, const K b, const FieldSpec f, long long n, std::string_view s) {
      { a + b } -> std::convertible_to<K>;
      { a - b } -> std::convertible_to<K>;
      { a * b } -> std::convertible_to<K>;
      { -a } -> std::convertible_to<K>;
      { a.inverse() } -> std::convertible_to<K>;
      { a.is_zero() } -> std::convertible_to<bool>;
      { a.is_one() } -> std::convertible_to<bool>;
      { a == b } -> std::convertible_to<bool>;
      { a.to_string() } -> std::convertible_to<std::string>;
      { a.field() } -> std::convertible_to<FieldSpec>;
      { K::zero(f) } -> std::convertible_to<K>;
      { K::one(f) } -> std::convertible_to<K>;
      { K::from_integer(n, f) } -> std::convertible_to<K>;
      { K::from_decimal(s, f) } -> std::convertible_to<K>;
      { K::accepts(f) } -> std::convertible_to<bool>;
      { K::default_field() } -> std::convertible_to<FieldSpec>;
    };

static_assert(CoefficientField<Zp>);
static_assert(CoefficientField<Rational>);

}  // namespace gtrim
