#pragma once

// The tropical-monomial ordered-division semiring.
//
// An element is either Zero (the class of the null map) or Exp(alpha) with
// alpha >= 0, the class of eps -> c * eps^alpha for any c > 0. Coefficients
// are forgotten: all of them land in the same class.
//
//   mul(Exp(a), Exp(b)) = Exp(a + b)
//   le(Exp(a), Exp(b))  iff  b <= a          (smaller exponent is larger)
//   div(Exp(a), Exp(b)) = Exp(a - b)         for b <= a

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "stochstab/rational.hpp"
#include "stochstab/semiring.hpp"

namespace stochstab {

class MonomialClass {
 public:
  /// Default-constructed value is Zero.
  MonomialClass() = default;

  static MonomialClass zero() { return MonomialClass(); }
  static MonomialClass one() { return MonomialClass(Rational(0)); }
  /// Throws std::invalid_argument for a negative exponent.
  static MonomialClass exp(Rational alpha) { return MonomialClass(std::move(alpha)); }

  /// Parses a weight literal: "0" is Zero, "1" is Exp(0); other text is
  /// read with parse_exponent as an exponent.
  static MonomialClass parse_weight(std::string_view text);
  /// Exponent text ("3", "3/2", "0.5") as Exp(alpha).
  static MonomialClass parse_exponent(std::string_view text);

  bool is_zero() const noexcept { return !alpha_.has_value(); }
  /// Precondition: !is_zero().
  const Rational& exponent() const;

  friend bool operator==(const MonomialClass&, const MonomialClass&) = default;

  friend MonomialClass mul(const MonomialClass& a, const MonomialClass& b);
  friend bool le(const MonomialClass& a, const MonomialClass& b);
  friend MonomialClass div(const MonomialClass& a, const MonomialClass& b);

 private:
  explicit MonomialClass(Rational alpha);

  std::optional<Rational> alpha_;
};

/// "0" for Zero, "e^<alpha>" otherwise.
std::string to_string(const MonomialClass& m);

/// Signed exponent of the formal inverse product of the given divisors,
/// i.e. the time scale eps^(-sum alpha_i). Zero divisors are rejected.
Rational inverse_product_exponent(std::span<const MonomialClass> divisors);

static_assert(OrderedDivisionSemiring<MonomialClass>);

}  // namespace stochstab
