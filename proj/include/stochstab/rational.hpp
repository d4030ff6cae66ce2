#pragma once

// Exact rational numbers with an inline 64-bit fast path.
//
// Values whose reduced numerator and denominator fit in int64 are stored
// inline; anything larger is promoted to a GMP rational, shared immutably.
// The representation is canonical: a value that fits inline is never held
// in the big form, so equality of small values is field equality.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace stochstab {

class Rational {
 public:
  constexpr Rational() noexcept = default;
  constexpr Rational(std::int64_t value) noexcept : num_(value) {}  // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(const mpq_class& value);

  /// Accepts "p", "p/q", and finite decimals such as "-0.25" or "1e-3".
  static Rational parse(std::string_view text);

  bool is_small() const noexcept { return big_ == nullptr; }
  int sign() const noexcept;
  bool is_zero() const noexcept { return is_small() && num_ == 0; }
  bool is_integer() const;

  mpq_class to_mpq() const;
  double to_double() const;
  /// Canonical text: "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

  std::size_t hash() const noexcept;

 private:
  static Rational from_wide(__int128 num, __int128 den);
  static Rational from_mpq(mpq_class value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace stochstab

template <>
struct std::hash<stochstab::Rational> {
  std::size_t operator()(const stochstab::Rational& r) const noexcept { return r.hash(); }
};
