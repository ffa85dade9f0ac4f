#include "qweyl/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace qweyl {

namespace {

bool fits_int64(const mpz_class &z) { return mpz_fits_slong_p(z.get_mpz_t()) && sizeof(long) == 8; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

} // namespace

BigRational::BigRational(const BigInt &value) : rep_(mpq_class(value)) { demote(); }

BigRational::BigRational(const BigInt &num, const BigInt &den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  rep_ = std::move(q);
  demote();
}

BigRational::BigRational(mpq_class value) : rep_(std::move(value)) { demote(); }

BigRational BigRational::parse(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  std::string_view num = trim(text.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : trim(text.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  mpz_class d = parse_integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return BigRational(parse_integer(num), d);
}

void BigRational::demote() {
  if (auto *q = std::get_if<mpq_class>(&rep_)) {
    if (q->get_den() == 1 && fits_int64(q->get_num())) {
      std::int64_t v = q->get_num().get_si();
      rep_ = v;
    }
  }
}

mpq_class BigRational::to_mpq() const {
  if (small()) return mpq_class(mpz_class(static_cast<long>(std::get<std::int64_t>(rep_))));
  return std::get<mpq_class>(rep_);
}

BigInt BigRational::numerator() const {
  if (small()) return BigInt(static_cast<long>(std::get<std::int64_t>(rep_)));
  return std::get<mpq_class>(rep_).get_num();
}

BigInt BigRational::denominator() const {
  if (small()) return BigInt(1);
  return std::get<mpq_class>(rep_).get_den();
}

bool BigRational::is_zero() const noexcept { return small() && std::get<std::int64_t>(rep_) == 0; }

bool BigRational::is_one() const noexcept { return small() && std::get<std::int64_t>(rep_) == 1; }

bool BigRational::is_integer() const noexcept {
  // demote() keeps every fitting integer inline, so a stored mpq may still be a
  // large integer.
  if (small()) return true;
  return std::get<mpq_class>(rep_).get_den() == 1;
}

int BigRational::sign() const noexcept {
  if (small()) {
    auto v = std::get<std::int64_t>(rep_);
    return (v > 0) - (v < 0);
  }
  return sgn(std::get<mpq_class>(rep_));
}

std::string BigRational::to_string() const {
  if (small()) return std::to_string(std::get<std::int64_t>(rep_));
  const auto &q = std::get<mpq_class>(rep_);
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigRational &BigRational::operator+=(const BigRational &rhs) {
  if (small() && rhs.small()) {
    std::int64_t out;
    if (!__builtin_add_overflow(std::get<std::int64_t>(rep_), std::get<std::int64_t>(rhs.rep_), &out)) {
      rep_ = out;
      return *this;
    }
  }
  rep_ = mpq_class(to_mpq() + rhs.to_mpq());
  demote();
  return *this;
}

BigRational &BigRational::operator-=(const BigRational &rhs) {
  if (small() && rhs.small()) {
    std::int64_t out;
    if (!__builtin_sub_overflow(std::get<std::int64_t>(rep_), std::get<std::int64_t>(rhs.rep_), &out)) {
      rep_ = out;
      return *this;
    }
  }
  rep_ = mpq_class(to_mpq() - rhs.to_mpq());
  demote();
  return *this;
}

BigRational &BigRational::operator*=(const BigRational &rhs) {
  if (small() && rhs.small()) {
    std::int64_t out;
    if (!__builtin_mul_overflow(std::get<std::int64_t>(rep_), std::get<std::int64_t>(rhs.rep_), &out)) {
      rep_ = out;
      return *this;
    }
  }
  rep_ = mpq_class(to_mpq() * rhs.to_mpq());
  demote();
  return *this;
}

BigRational &BigRational::operator/=(const BigRational &rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  if (small() && rhs.small()) {
    auto a = std::get<std::int64_t>(rep_);
    auto b = std::get<std::int64_t>(rhs.rep_);
    if (b != -1 && a % b == 0) {
      rep_ = a / b;
      return *this;
    }
  }
  rep_ = mpq_class(to_mpq() / rhs.to_mpq());
  demote();
  return *this;
}

BigRational BigRational::operator-() const {
  BigRational out;
  return out -= *this;
}

bool operator==(const BigRational &lhs, const BigRational &rhs) {
  if (lhs.small() && rhs.small()) return std::get<std::int64_t>(lhs.rep_) == std::get<std::int64_t>(rhs.rep_);
  // Canonical storage: a small value never equals a stored mpq.
  if (lhs.small() != rhs.small()) return false;
  return std::get<mpq_class>(lhs.rep_) == std::get<mpq_class>(rhs.rep_);
}

std::strong_ordering operator<=>(const BigRational &lhs, const BigRational &rhs) {
  if (lhs.small() && rhs.small()) return std::get<std::int64_t>(lhs.rep_) <=> std::get<std::int64_t>(rhs.rep_);
  int c = cmp(lhs.to_mpq(), rhs.to_mpq());
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

BigRational BigRational::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw std::domain_error("zero raised to a negative power");
    return BigRational(1) / pow(-exponent);
  }
  BigRational base = *this;
  BigRational out = 1;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1u) out *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return out;
}

std::ostream &operator<<(std::ostream &os, const BigRational &value) { return os << value.to_string(); }

} // namespace qweyl
