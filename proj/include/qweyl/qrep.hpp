#pragma once

#include "qweyl/freealg.hpp"

#include <map>
#include <span>
#include <stdexcept>
#include <string_view>

namespace qweyl {

/// Finite Laurent sum  sum_t c_t x^t  with exact rational coefficients.
class LaurentFn {
public:
  using Terms = std::map<long, BigRational>;

  LaurentFn() = default;
  static LaurentFn monomial(long exponent, BigRational c = 1);
  static LaurentFn constant(BigRational c) { return monomial(0, std::move(c)); }
  /// "c*x^t" terms joined by + / -, e.g. "3*x^2 - x^-3", "1/2*x", "5".
  /// Throws ParseError.
  static LaurentFn parse(std::string_view text);

  const Terms &terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigRational coefficient(long exponent) const;
  long min_exponent() const; // requires nonzero
  /// Value at x = 0; throws std::domain_error if a negative power is present.
  BigRational at_zero() const;

  void add(long exponent, const BigRational &c);
  LaurentFn &operator+=(const LaurentFn &rhs);
  LaurentFn &operator-=(const LaurentFn &rhs);
  LaurentFn &operator*=(const BigRational &scalar);
  friend LaurentFn operator+(LaurentFn lhs, const LaurentFn &rhs) { return lhs += rhs; }
  friend LaurentFn operator-(LaurentFn lhs, const LaurentFn &rhs) { return lhs -= rhs; }
  friend LaurentFn operator*(LaurentFn lhs, const BigRational &rhs) { return lhs *= rhs; }
  friend LaurentFn operator*(const BigRational &lhs, LaurentFn rhs) { return rhs *= lhs; }
  /// Pointwise product.
  friend LaurentFn operator*(const LaurentFn &lhs, const LaurentFn &rhs);
  friend bool operator==(const LaurentFn &, const LaurentFn &) = default;

private:
  Terms terms_;
};

/// Rational value substituted for q.  Never 0 or 1.
class QPoint {
public:
  /// Throws std::domain_error for q0 in {0, 1}.
  explicit QPoint(BigRational q0);
  const BigRational &value() const noexcept { return q0_; }
  /// 0 < q0 < 1, where the Jackson series converges.
  bool in_unit_interval() const;
  QPoint inverse() const { return QPoint(BigRational(1) / q0_); }

private:
  BigRational q0_;
};

/// The exact sample points used by the representation sweeps.
std::vector<QPoint> standard_sample_points();

/// [n] at q0 for any integer n, as (q0^n - 1)/(q0 - 1).
BigRational bracket_at(long n, const QPoint &at);
/// [b]^(a) at q0.
BigRational rising_bracket_at(long b, unsigned a, const QPoint &at);

/// (f(q x) - f(x)) / ((q - 1) x), termwise x^t -> [t] x^(t-1).
LaurentFn q_derivative(const LaurentFn &f, const QPoint &at);
/// f(q x), termwise x^t -> q^t x^t.
LaurentFn q_shift(const LaurentFn &f, const QPoint &at);
/// Jackson integral from 0 to x, termwise x^t -> x^(t+1) / [t+1].
/// Throws std::domain_error if q0 is outside (0, 1) or any exponent is <= -1.
LaurentFn jackson_integral(const LaurentFn &f, const QPoint &at);

// Representations of MW_q on Laurent sums, q specialized to at.
//   rho(x) f = x^-1 f,  rho(y) f = -q^-1 d_{1/q} f
//   iota(x) f = int_0^x f d_q t,  iota(y) f = x f
LaurentFn rho_x(const LaurentFn &f, const QPoint &at);
LaurentFn rho_y(const LaurentFn &f, const QPoint &at);
LaurentFn iota_x(const LaurentFn &f, const QPoint &at);
LaurentFn iota_y(const LaurentFn &f, const QPoint &at);

enum class Representation { Rho, Iota };

/// Applies the word letter by letter, rightmost letter first.
LaurentFn apply(Representation rep, const Word &w, const LaurentFn &f, const QPoint &at);
/// Applies a normal-form element, q-coefficients evaluated at the point.
LaurentFn apply(Representation rep, const MWElement &u, const LaurentFn &f, const QPoint &at);

/// rho(y) rho(x) f == q rho(x) rho(y) f + rho(x)^2 f
bool check_rho_relation(const LaurentFn &f, const QPoint &at);
/// iota(y) iota(x) f == q iota(x) iota(y) f + iota(x)^2 f
bool check_iota_relation(const LaurentFn &f, const QPoint &at);
/// d_q(f g) == f d_q g + I_q g d_q f
bool check_q_leibnitz(const LaurentFn &f, const LaurentFn &g, const QPoint &at);
/// (int f)(int g) == int (int f) g + int f I_q(int g)
bool check_rota_baxter(const LaurentFn &f, const LaurentFn &g, const QPoint &at);
/// int I_q f d_q g == f g - f(0) g(0) - int g d_q f.  Exponents must be >= 0.
bool check_q_int_by_parts(const LaurentFn &f, const LaurentFn &g, const QPoint &at);
/// d_q int f == f
bool check_fundamental_theorem(const LaurentFn &f, const QPoint &at);

enum class NormalFormula { Primary, Alternative };

struct BracketVariant {
  NormalFormula formula = NormalFormula::Primary;
  Representation rep = Representation::Rho;
};

/**
 * Both readings of the bracket identity obtained by feeding x^-t (rho) or
 * x^t (iota) through prod_i x^ai y^bi and through its normal form.
 *
 * derived:  rho:  prod_i [t + |a_{>i}| + |b_{>i}|]^(b_i) = sum_k N(A,k) [t]^(|b|-k)
 *           iota: prod_i 1/[t + |a_{>i}| + |b_{>=i}| + 1]^(a_i)
 *                   = sum_k N(A,k) / [t + |b| - k + 1]^(|a|+k)
 * printed:  rho:  prod_i [t + |b_{>=i}| + |a_{>i}| - 1] = sum_k N(A,k) [t + |b| - k - 1]
 *           iota: prod_i 1/[t + |a_{>=i}| + |b_{>=i}| + 1]^(a_i)
 *                   = sum_k N(A,k) / [t + |a| + |b|]^(|a|+k)
 *
 * `letterwise` is the coefficient obtained by applying the representation to
 * the word itself; it certifies the derived left side independently.
 */
struct BracketReport {
  BigRational letterwise;
  BigRational derived_lhs, derived_rhs;
  bool printed_defined = true; // false when a printed denominator vanishes
  BigRational printed_lhs, printed_rhs;

  bool derived_holds() const { return derived_lhs == derived_rhs && letterwise == derived_lhs; }
  bool printed_holds() const { return printed_defined && printed_lhs == printed_rhs; }
};

/// a and b must have the same nonzero length.  rho needs t >= 1; iota needs
/// 0 < q0 < 1.  Throws std::invalid_argument / std::domain_error.
BracketReport bracket_identity_report(std::span<const unsigned> a, std::span<const unsigned> b, unsigned t,
                                      BracketVariant variant, const QPoint &at);

/// The derived identity (the one the representation actually validates).
bool check_bracket_identity(std::span<const unsigned> a, std::span<const unsigned> b, unsigned t,
                            BracketVariant variant, const QPoint &at);

} // namespace qweyl
