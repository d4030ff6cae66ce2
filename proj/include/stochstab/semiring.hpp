#pragma once

// Ordered-division semirings.
//
// A carrier F with zero and one, a commutative multiplication, a total
// order `le` with maximum one and minimum zero, and a division defined for
// f le g such that mul(div(f, g), g) == f. Addition of the underlying
// semiring is the le-maximum.
//
// Every graph algorithm in this library is generic over this concept.
// Implementations provide the operations as free functions found by ADL
// plus static zero()/one().

#include <concepts>
#include <stdexcept>
#include <string>

namespace stochstab {

/// Raised when an operation's precondition does not hold (a caller bug).
class PreconditionViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

template <class F>
concept OrderedDivisionSemiring = std::regular<F> && requires(const F a, const F b) {
  { F::zero() } -> std::same_as<F>;
  { F::one() } -> std::same_as<F>;
  { mul(a, b) } -> std::same_as<F>;
  { le(a, b) } -> std::convertible_to<bool>;
  { div(a, b) } -> std::same_as<F>;
  { to_string(a) } -> std::convertible_to<std::string>;
};

template <OrderedDivisionSemiring F>
F semiring_max(const F& a, const F& b) {
  return le(a, b) ? b : a;
}

template <OrderedDivisionSemiring F>
bool is_zero(const F& a) {
  return a == F::zero();
}

template <OrderedDivisionSemiring F>
bool is_one(const F& a) {
  return a == F::one();
}

/// Strict order induced by le.
template <OrderedDivisionSemiring F>
bool lt(const F& a, const F& b) {
  return !le(b, a);
}

}  // namespace stochstab
