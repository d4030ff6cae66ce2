#include "stochstab/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace stochstab {
namespace {

using u128 = unsigned __int128;

constexpr __int128 kMin64 = std::numeric_limits<std::int64_t>::min();
constexpr __int128 kMax64 = std::numeric_limits<std::int64_t>::max();

u128 uabs(__int128 v) { return v < 0 ? u128(0) - u128(v) : u128(v); }

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  if (a == 0) return b;
  if (b == 0) return a;
  const int shift = __builtin_ctzll(a | b);
  a >>= __builtin_ctzll(a);
  do {
    b >>= __builtin_ctzll(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) return gcd64(std::uint64_t(a), std::uint64_t(b));
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class mpz_from(__int128 v) {
  const bool neg = v < 0;
  u128 m = uabs(v);
  mpz_class hi(static_cast<unsigned long>(std::uint64_t(m >> 64)));
  mpz_class lo(static_cast<unsigned long>(std::uint64_t(m)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool fits64(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0; }

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational::Rational(const mpq_class& value) { *this = from_mpq(value); }

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const u128 g = gcd128(uabs(num), u128(den));
  if (g > 1) {
    num /= static_cast<__int128>(g);
    den /= static_cast<__int128>(g);
  }
  Rational r;
  if (num >= kMin64 && num <= kMax64 && den <= kMax64) {
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  mpq_class q(mpz_from(num), mpz_from(den));
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::from_mpq(mpq_class value) {
  value.canonicalize();
  Rational r;
  if (fits64(value.get_num()) && fits64(value.get_den())) {
    r.num_ = value.get_num().get_si();
    r.den_ = value.get_den().get_si();
    return r;
  }
  r.big_ = std::make_shared<const mpq_class>(std::move(value));
  return r;
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  };
  if (text.empty()) return fail();

  auto parse_int = [&](std::string_view s, bool allow_sign) -> mpz_class {
    std::size_t i = 0;
    bool neg = false;
    if (allow_sign && i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
    if (i == s.size()) fail();
    for (std::size_t j = i; j < s.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(s[j]))) fail();
    mpz_class z(std::string(s.substr(i)), 10);
    return neg ? mpz_class(-z) : z;
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_int(text.substr(0, slash), true);
    mpz_class den = parse_int(text.substr(slash + 1), false);
    if (den == 0) fail();
    return from_mpq(mpq_class(num, den));
  }

  // Decimal: [sign] digits [. digits] [(e|E) [sign] digits]
  std::size_t i = 0;
  bool neg = false;
  if (text[i] == '+' || text[i] == '-') neg = text[i++] == '-';
  std::string mantissa;
  long frac_digits = 0;
  bool seen_point = false;
  bool seen_digit = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa.push_back(c);
      seen_digit = true;
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) return fail();
  long exponent = 0;
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') return fail();
    mpz_class e = parse_int(text.substr(i + 1), true);
    if (!fits64(e) || e.get_si() > 100000 || e.get_si() < -100000) return fail();
    exponent = e.get_si();
  }
  mpz_class m(mantissa, 10);
  if (neg) m = -m;
  const long shift = exponent - frac_digits;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  return shift >= 0 ? from_mpq(mpq_class(m * scale)) : from_mpq(mpq_class(m, scale));
}

int Rational::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const {
  if (big_) return big_->get_den() == 1;
  return den_ == 1;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str(10);
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (!big_ && num_ != std::numeric_limits<std::int64_t>::min()) {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  return from_mpq(-to_mpq());
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.is_small() && b.is_small()) {
    if (a.den_ == b.den_) {
      const __int128 n = __int128(a.num_) + b.num_;
      if (a.den_ == 1 && n >= kMin64 && n <= kMax64) return Rational(static_cast<std::int64_t>(n));
      return Rational::from_wide(n, a.den_);
    }
    return Rational::from_wide(__int128(a.num_) * b.den_ + __int128(b.num_) * a.den_,
                               __int128(a.den_) * b.den_);
  }
  return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) {
  if (a.is_small() && b.is_small()) {
    if (a.den_ == b.den_) {
      const __int128 n = __int128(a.num_) - b.num_;
      if (a.den_ == 1 && n >= kMin64 && n <= kMax64) return Rational(static_cast<std::int64_t>(n));
      return Rational::from_wide(n, a.den_);
    }
    return Rational::from_wide(__int128(a.num_) * b.den_ - __int128(b.num_) * a.den_,
                               __int128(a.den_) * b.den_);
  }
  return Rational::from_mpq(a.to_mpq() - b.to_mpq());
}

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_small() && b.is_small())
    return Rational::from_wide(__int128(a.num_) * b.num_, __int128(a.den_) * b.den_);
  return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

bool operator==(const Rational& a, const Rational& b) noexcept {
  if (a.is_small() != b.is_small()) return false;  // canonical form
  if (a.is_small()) return a.num_ == b.num_ && a.den_ == b.den_;
  return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
  if (a.is_small() && b.is_small()) {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    const __int128 l = __int128(a.num_) * b.den_;
    const __int128 r = __int128(b.num_) * a.den_;
    return l < r ? std::strong_ordering::less
                 : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::size_t Rational::hash() const noexcept {
  if (big_) return std::hash<std::string>{}(big_->get_str(16));
  return std::hash<std::int64_t>{}(num_) * 31u + std::hash<std::int64_t>{}(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace stochstab
