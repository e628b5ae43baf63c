#include "gtrim/field.hpp"

#include <cctype>
#include <limits>

namespace gtrim {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw InvalidArgument("characteristic must be 0 or a prime below 2^31, got " +
                          std::to_string(p));
  }
  return FieldSpec{static_cast<std::uint32_t>(p)};
}

FieldSpec FieldSpec::from_characteristic(std::uint64_t c) {
  return c == 0 ? rationals() : prime(c);
}

std::string FieldSpec::to_string() const {
  return is_rational() ? std::string("QQ") : "GF(" + std::to_string(characteristic) + ")";
}

namespace {

std::string_view trim_spaces(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Zp Zp::from_decimal(std::string_view text, const FieldSpec& f) {
  const std::uint32_t p = check(f);
  text = trim_spaces(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (!all_digits(text)) throw ParseError("bad integer literal '" + std::string(text) + "'");
  std::uint64_t r = 0;
  for (char c : text) r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % p;
  Zp out(static_cast<std::uint32_t>(r), p);
  return negative ? -out : out;
}

Zp Zp::inverse() const {
  if (v_ == 0) throw std::domain_error("inverse of zero in " + field().to_string());
  // Extended Euclid on (v, p).
  long long a = v_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    const long long q = a / b;
    long long t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  long long inv = x0 % static_cast<long long>(p_);
  if (inv < 0) inv += p_;
  return Zp(static_cast<std::uint32_t>(inv), p_);
}

std::string Zp::to_string() const {
  if (v_ > p_ / 2) return "-" + std::to_string(p_ - v_);
  return std::to_string(v_);
}

Rational Rational::from_decimal(std::string_view text, const FieldSpec& f) {
  check(f);
  text = trim_spaces(text);
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("bad rational literal '" + std::string(text) + "'");
  }
  const mpz_class n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  mpq_class q(n, d);
  if (!text.empty() && text.front() == '-') q = -q;
  return Rational(std::move(q));
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in QQ");
  return Rational(mpq_class(mpq_class(1) / q_));
}

}  // namespace gtrim
