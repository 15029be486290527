#include "toricvb/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>

#include "toricvb/error.hpp"

namespace toricvb {

namespace {

using i128 = __int128;

constexpr i128 kMin = std::numeric_limits<std::int64_t>::min();
constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();

bool fits(i128 v) { return v > kMin && v <= kMax; }

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class out = (hi << 64) + lo;
  return neg ? mpz_class(-out) : out;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational::Rational(const mpq_class& value) { *this = from_big(value); }

Rational Rational::from_wide(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  Rational out;
  if (fits(num) && fits(den)) {
    out.num_ = static_cast<std::int64_t>(num);
    out.den_ = num == 0 ? 1 : static_cast<std::int64_t>(den);
    return out;
  }
  mpq_class q(to_mpz(num), to_mpz(den));
  q.canonicalize();
  out.big_ = std::make_shared<const mpq_class>(std::move(q));
  return out;
}

Rational Rational::from_big(mpq_class value) {
  value.canonicalize();
  const mpz_class& n = value.get_num();
  const mpz_class& d = value.get_den();
  Rational out;
  if (n.fits_slong_p() && d.fits_slong_p() && n != mpz_class(std::numeric_limits<long>::min())) {
    out.num_ = n.get_si();
    out.den_ = d.get_si();
    return out;
  }
  out.big_ = std::make_shared<const mpq_class>(std::move(value));
  return out;
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    if (part.empty()) throw ParseError("", "malformed rational '" + std::string(text) + "'");
    std::string_view digits = part;
    if (digits.front() == '+' || digits.front() == '-') digits.remove_prefix(1);
    if (digits.empty()) throw ParseError("", "malformed rational '" + std::string(text) + "'");
    for (char c : digits) {
      if (c < '0' || c > '9') throw ParseError("", "malformed rational '" + std::string(text) + "'");
    }
    std::string s(part.front() == '+' ? part.substr(1) : part);
    return mpz_class(s, 10);
  };
  const auto slash = text.find('/');
  mpz_class num = parse_int(text.substr(0, slash));
  mpz_class den = slash == std::string_view::npos ? mpz_class(1) : parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("", "zero denominator in '" + std::string(text) + "'");
  return from_big(mpq_class(num, den));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (big_) return from_big(-*big_);
  return from_wide(-static_cast<i128>(num_), den_);
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == rhs.den_) return *this = from_wide(static_cast<i128>(num_) + rhs.num_, den_);
    return *this = from_wide(static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_,
                             static_cast<i128>(den_) * rhs.den_);
  }
  return *this = from_big(to_mpq() + rhs.to_mpq());
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == rhs.den_) return *this = from_wide(static_cast<i128>(num_) - rhs.num_, den_);
    return *this = from_wide(static_cast<i128>(num_) * rhs.den_ - static_cast<i128>(rhs.num_) * den_,
                             static_cast<i128>(den_) * rhs.den_);
  }
  return *this = from_big(to_mpq() - rhs.to_mpq());
}

Rational& Rational::operator*=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    return *this = from_wide(static_cast<i128>(num_) * rhs.num_, static_cast<i128>(den_) * rhs.den_);
  }
  return *this = from_big(to_mpq() * rhs.to_mpq());
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  if (!big_ && !rhs.big_) {
    return *this = from_wide(static_cast<i128>(num_) * rhs.den_, static_cast<i128>(den_) * rhs.num_);
  }
  return *this = from_big(to_mpq() / rhs.to_mpq());
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // normalized: a big value never equals an inline one
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    const i128 lhs = static_cast<i128>(a.num_) * b.den_;
    const i128 rhs = static_cast<i128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace toricvb
