#pragma once

#include "qweyl/limits.hpp"
#include "qweyl/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace qweyl {

/**
 * Polynomial in the formal variable q with exact rational coefficients.
 *
 * Dense, ascending degree, no trailing zeros.  The zero polynomial has no
 * coefficients, so structural equality is polynomial equality.
 */
class QPoly {
public:
  QPoly() = default;
  QPoly(BigRational constant); // NOLINT(google-explicit-constructor)
  template <std::integral T>
  QPoly(T constant) : QPoly(BigRational(constant)) {} // NOLINT(google-explicit-constructor)
  explicit QPoly(std::vector<BigRational> coeffs);

  /// c * q^degree
  static QPoly monomial(std::size_t degree, BigRational c = 1);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of q^k; zero beyond the degree.
  const BigRational &operator[](std::size_t k) const;
  std::span<const BigRational> coefficients() const noexcept { return coeffs_; }

  /// All coefficients are nonnegative integers (membership in N[q]).
  bool is_natural() const;

  /// Multiply by q^k.
  QPoly shifted(std::size_t k) const;

  QPoly &operator+=(const QPoly &rhs);
  QPoly &operator-=(const QPoly &rhs);
  QPoly &operator*=(const QPoly &rhs);
  QPoly &operator*=(const BigRational &scalar);
  /// Exact division by a nonzero rational scalar.
  QPoly &operator/=(const BigRational &scalar);

  friend QPoly operator+(QPoly lhs, const QPoly &rhs) { return lhs += rhs; }
  friend QPoly operator-(QPoly lhs, const QPoly &rhs) { return lhs -= rhs; }
  friend QPoly operator*(const QPoly &lhs, const QPoly &rhs);
  friend QPoly operator*(QPoly lhs, const BigRational &rhs) { return lhs *= rhs; }
  friend QPoly operator*(const BigRational &lhs, QPoly rhs) { return rhs *= lhs; }
  friend QPoly operator/(QPoly lhs, const BigRational &rhs) { return lhs /= rhs; }
  QPoly operator-() const;

  friend bool operator==(const QPoly &, const QPoly &) = default;

private:
  void trim();
  std::vector<BigRational> coeffs_;
};

/// Exact Horner evaluation at q = at.
BigRational eval_at(const QPoly &p, const BigRational &at);

/// [n] = 1 + q + ... + q^(n-1); [0] = 0.
QPoly qbracket(unsigned n);

/// [n]! = [1][2]...[n]; [0]! = 1.
QPoly qfactorial(unsigned n);

/// [b]^(a) = [b][b+1]...[b+a-1]; 1 when a = 0.
QPoly qrising(unsigned b, unsigned a);

/// n^(k) = n(n+1)...(n+k-1); 1 when k = 0.
BigInt rising(unsigned long n, unsigned long k);

/// n!
BigInt factorial(unsigned long n);

/// A bijection of {1..n}, stored as its list of images.
class Permutation {
public:
  /// Throws std::invalid_argument if images is not a permutation of 1..n.
  explicit Permutation(std::vector<unsigned> images);
  static Permutation identity(unsigned n);

  unsigned size() const noexcept { return static_cast<unsigned>(images_.size()); }
  unsigned operator()(unsigned i) const { return images_.at(i - 1); }
  std::span<const unsigned> images() const noexcept { return images_; }

  /// Pairs i < j with sigma(i) > sigma(j).
  unsigned inversions() const;

  /// Advance to the lexicographically next permutation; false after the last.
  bool next();

private:
  std::vector<unsigned> images_;
};

/// Sum over S_n of q^inv(sigma), by enumeration.  Throws GuardError when
/// n exceeds limits.inversion_n.
QPoly inversion_gf(unsigned n, const Limits &limits = default_limits());

} // namespace qweyl
