#pragma once

#include "qweyl/limits.hpp"
#include "qweyl/qpoly.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <initializer_list>
#include <span>
#include <vector>

namespace qweyl {

/// A word in the free monoid on {x, y}; the empty word is the unit.
class Word {
public:
  Word() = default;
  /// Throws ParseError unless text matches [xy]*.
  static Word parse(std::string_view text);
  /// x^a y^b
  static Word normal(unsigned xexp, unsigned yexp);

  const std::string &letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  unsigned count_x() const;
  unsigned count_y() const;

  Word &operator+=(const Word &rhs) {
    letters_ += rhs.letters_;
    return *this;
  }
  friend Word operator+(Word lhs, const Word &rhs) { return lhs += rhs; }
  friend auto operator<=>(const Word &, const Word &) = default;

private:
  explicit Word(std::string letters) : letters_(std::move(letters)) {}
  std::string letters_;
};

/// Exponent pair (a, b) naming the factor x^a y^b.
struct ExpPair {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  friend auto operator<=>(const ExpPair &, const ExpPair &) = default;
};

/// A = ((a1,b1),...,(an,bn)), naming the monomial x^a1 y^b1 ... x^an y^bn.
class MonomialSeq {
public:
  MonomialSeq() = default;
  MonomialSeq(std::initializer_list<ExpPair> pairs) : pairs_(pairs) {}
  explicit MonomialSeq(std::vector<ExpPair> pairs) : pairs_(std::move(pairs)) {}
  /// Text form "(a1,b1)(a2,b2)..."; throws ParseError.
  static MonomialSeq parse(std::string_view text);

  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  const ExpPair &operator[](std::size_t i) const { return pairs_[i]; }
  std::span<const ExpPair> pairs() const noexcept { return pairs_; }
  unsigned total_a() const;
  unsigned total_b() const;
  /// The concatenated word x^a1 y^b1 ... x^an y^bn.
  Word word() const;

  friend auto operator<=>(const MonomialSeq &, const MonomialSeq &) = default;

private:
  std::vector<ExpPair> pairs_;
};

/// Exponents of a normal-form monomial x^x y^y.
struct NormalMonomial {
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  friend auto operator<=>(const NormalMonomial &, const NormalMonomial &) = default;
};

/**
 * Element of MW_q = Q<x,y>[q] / (yx - q xy - x^2) in the normal basis
 * x^b y^c, with coefficients in Q[q].  Zero coefficients are never stored;
 * iteration is in lexicographic (b, c) order.
 */
class MWElement {
public:
  using Terms = std::map<NormalMonomial, QPoly>;

  MWElement() = default;
  static MWElement one();
  static MWElement term(NormalMonomial m, QPoly coeff = 1);

  bool is_zero() const noexcept { return terms_.empty(); }
  const Terms &terms() const noexcept { return terms_; }
  /// Coefficient of x^b y^c (zero when absent).
  QPoly coefficient(NormalMonomial m) const;

  void add(NormalMonomial m, const QPoly &coeff);

  MWElement &operator+=(const MWElement &rhs);
  friend MWElement operator+(MWElement lhs, const MWElement &rhs) { return lhs += rhs; }
  MWElement &operator*=(const QPoly &scalar);
  friend bool operator==(const MWElement &, const MWElement &) = default;

  /// All coefficients lie in N[q].
  bool is_natural() const;

private:
  Terms terms_;
};

enum class RewriteStrategy { Leftmost, Rightmost };

/// Rewrites every yx factor to q xy + xx until no y precedes an x.  Throws
/// GuardError when the word is longer than limits.word_length.
MWElement normal_order(const Word &w, RewriteStrategy strategy = RewriteStrategy::Leftmost,
                       const Limits &limits = default_limits());

/// Product in MW_q.
MWElement multiply(const MWElement &u, const MWElement &v, const Limits &limits = default_limits());

/// Normal form of x^a1 y^b1 ... x^an y^bn, built with multiply.
MWElement monomial(const MonomialSeq &seq, const Limits &limits = default_limits());

/// Coefficients evaluated at q = at; zero results dropped.
std::map<NormalMonomial, BigRational> specialize_q(const MWElement &u, const BigRational &at);

} // namespace qweyl
