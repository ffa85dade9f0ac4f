#pragma once

#include "qweyl/freealg.hpp"

#include <map>
#include <span>
#include <vector>

namespace qweyl {

/// m x n grid of exponent pairs; row i is the element
/// overline(prod_j x_j^a_ij y_j^b_ij) of Sym^n(MW_q).
class FactorGrid {
public:
  /// rows must be nonempty and all of one nonzero length (std::invalid_argument).
  explicit FactorGrid(std::vector<std::vector<ExpPair>> rows);
  /// "(a,b)(a,b);(a,b)(a,b)" — rows separated by ';'.  Throws ParseError.
  static FactorGrid parse(std::string_view text);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return rows_.front().size(); }
  const ExpPair &at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  std::span<const ExpPair> row(std::size_t i) const { return rows_[i]; }

private:
  std::vector<std::vector<ExpPair>> rows_;
};

/// The n tensor factors of a Sym^n monomial, sorted lexicographically.
class SymMonomial {
public:
  explicit SymMonomial(std::vector<NormalMonomial> factors);
  std::span<const NormalMonomial> factors() const noexcept { return factors_; }
  std::size_t size() const noexcept { return factors_.size(); }
  friend auto operator<=>(const SymMonomial &, const SymMonomial &) = default;

private:
  std::vector<NormalMonomial> factors_;
};

/// Finite sum of Sym^n monomials with nonzero coefficients of type Coeff.
template <typename Coeff>
class BasicSymElement {
public:
  using Terms = std::map<SymMonomial, Coeff>;

  const Terms &terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Coeff coefficient(const SymMonomial &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff{} : it->second;
  }
  void add(const SymMonomial &m, const Coeff &c) {
    if (c == Coeff{}) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Coeff{}) terms_.erase(it);
    }
  }
  friend bool operator==(const BasicSymElement &, const BasicSymElement &) = default;

private:
  Terms terms_;
};

using SymElement = BasicSymElement<QPoly>;
using SymElementQ1 = BasicSymElement<BigRational>;

/// (n!)^(m-1) times the product of the grid's rows, from the closed formula
/// in the normal coordinates c(a,b,k).  Guards: n <= limits.sym_n,
/// m <= limits.sym_m, and each column word within limits.word_length.
SymElement scaled_product_formula(const FactorGrid &grid, const Limits &limits = default_limits());

/// The same quantity by symmetrization: sum over sigma in {1} x S_n^(m-1) of
/// the tensor product of the rewritten column words.
SymElement scaled_product_oracle(const FactorGrid &grid, const Limits &limits = default_limits());

/// scaled_product_formula divided by (n!)^(m-1).
SymElement product(const FactorGrid &grid, const Limits &limits = default_limits());

/// Scaled product at q = 1, straight from the binomial / rising-factorial
/// formula for MW.
SymElementQ1 specialize_q1_product(const FactorGrid &grid, const Limits &limits = default_limits());

/// Coefficientwise evaluation, zero results dropped.
SymElementQ1 eval_at(const SymElement &element, const BigRational &at);

/// Column-wise expansions memoized across many grids; used by the sweeps.
/// One instance per product path.
class ColumnMemo {
public:
  using Expansion = std::vector<std::pair<NormalMonomial, QPoly>>;
  const Expansion *find(const std::vector<ExpPair> &column) const;
  const Expansion &insert(std::vector<ExpPair> column, Expansion value);

private:
  std::map<std::vector<ExpPair>, Expansion> table_;
};

SymElement scaled_product_formula(const FactorGrid &grid, ColumnMemo &memo, const Limits &limits = default_limits());
SymElement scaled_product_oracle(const FactorGrid &grid, ColumnMemo &memo, const Limits &limits = default_limits());

} // namespace qweyl
