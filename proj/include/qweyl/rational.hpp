#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace qweyl {

using BigInt = mpz_class;

/**
 * Exact rational number, always kept in lowest terms with a positive
 * denominator.
 *
 * Integers that fit in 64 bits are stored inline; everything else lives in
 * a GMP mpq.  Almost every coefficient produced by the normal-ordering
 * machinery is a small natural number, so the inline path carries the bulk
 * of the arithmetic.
 */
class BigRational {
public:
  BigRational() noexcept : rep_(std::int64_t{0}) {}

  template <std::integral T>
  BigRational(T value) { // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      rep_ = static_cast<std::int64_t>(value);
    } else if (static_cast<std::uint64_t>(value) <= static_cast<std::uint64_t>(INT64_MAX)) {
      rep_ = static_cast<std::int64_t>(value);
    } else {
      mpz_class z;
      mpz_import(z.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &value);
      rep_ = mpq_class(z);
    }
  }

  explicit BigRational(const BigInt &value);

  /// Throws std::domain_error when den == 0.
  BigRational(const BigInt &num, const BigInt &den);

  /// Accepts "n", "-n", "n/d", "-n/d" with optional surrounding blanks.
  /// Throws std::invalid_argument on malformed input or a zero denominator.
  static BigRational parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;
  mpq_class to_mpq() const;

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  bool is_integer() const noexcept;
  int sign() const noexcept;

  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const;

  BigRational &operator+=(const BigRational &rhs);
  BigRational &operator-=(const BigRational &rhs);
  BigRational &operator*=(const BigRational &rhs);
  /// Throws std::domain_error on division by zero.
  BigRational &operator/=(const BigRational &rhs);

  friend BigRational operator+(BigRational lhs, const BigRational &rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational &rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational &rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational &rhs) { return lhs /= rhs; }
  BigRational operator-() const;

  friend bool operator==(const BigRational &lhs, const BigRational &rhs);
  friend std::strong_ordering operator<=>(const BigRational &lhs, const BigRational &rhs);

  /// Integer power; negative exponents invert (throws on 0^-n).
  BigRational pow(long exponent) const;

private:
  explicit BigRational(mpq_class value);
  void demote();
  bool small() const noexcept { return std::holds_alternative<std::int64_t>(rep_); }

  std::variant<std::int64_t, mpq_class> rep_;
};

std::ostream &operator<<(std::ostream &os, const BigRational &value);

} // namespace qweyl
