#include "stochstab/monomial.hpp"

#include <stdexcept>

namespace stochstab {

MonomialClass::MonomialClass(Rational alpha) : alpha_(std::move(alpha)) {
  if (alpha_->sign() < 0)
    throw std::invalid_argument("monomial exponent must be non-negative, got " + alpha_->to_string());
}

MonomialClass MonomialClass::parse_exponent(std::string_view text) {
  return MonomialClass(Rational::parse(text));
}

MonomialClass MonomialClass::parse_weight(std::string_view text) {
  if (text == "0") return zero();
  if (text == "1") return one();
  if (text.starts_with("e^")) text.remove_prefix(2);
  return parse_exponent(text);
}

const Rational& MonomialClass::exponent() const {
  if (!alpha_) throw PreconditionViolation("exponent() of the Zero class");
  return *alpha_;
}

MonomialClass mul(const MonomialClass& a, const MonomialClass& b) {
  if (a.is_zero() || b.is_zero()) return MonomialClass::zero();
  return MonomialClass(*a.alpha_ + *b.alpha_);
}

bool le(const MonomialClass& a, const MonomialClass& b) {
  if (a.is_zero()) return true;
  if (b.is_zero()) return false;
  return *b.alpha_ <= *a.alpha_;
}

MonomialClass div(const MonomialClass& a, const MonomialClass& b) {
  if (!le(a, b)) throw PreconditionViolation("div(a, b) requires a le b");
  if (b.is_zero()) return MonomialClass::one();  // a is Zero too; any value satisfies the law
  if (a.is_zero()) return MonomialClass::zero();
  return MonomialClass(*a.alpha_ - *b.alpha_);
}

std::string to_string(const MonomialClass& m) {
  if (m.is_zero()) return "0";
  if (m.exponent().is_zero()) return "1";
  return "e^" + m.exponent().to_string();
}

Rational inverse_product_exponent(std::span<const MonomialClass> divisors) {
  Rational sum;
  for (const auto& d : divisors) {
    if (d.is_zero()) throw PreconditionViolation("time scale of a Zero divisor");
    sum += d.exponent();
  }
  return -sum;
}

}  // namespace stochstab
