#include "qweyl/sympow.hpp"

#include "qweyl/normal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qweyl {

FactorGrid::FactorGrid(std::vector<std::vector<ExpPair>> rows) : rows_(std::move(rows)) {
  if (rows_.empty() || rows_.front().empty()) throw std::invalid_argument("factor grid needs m >= 1 rows and n >= 1 columns");
  for (const auto &r : rows_)
    if (r.size() != rows_.front().size()) throw std::invalid_argument("factor grid rows differ in length");
}

FactorGrid FactorGrid::parse(std::string_view text) {
  std::vector<std::vector<ExpPair>> rows;
  std::size_t start = 0;
  for (;;) {
    auto end = text.find(';', start);
    auto chunk = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    auto seq = MonomialSeq::parse(chunk);
    rows.emplace_back(seq.pairs().begin(), seq.pairs().end());
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  try {
    return FactorGrid(std::move(rows));
  } catch (const std::invalid_argument &e) {
    throw ParseError(e.what());
  }
}

SymMonomial::SymMonomial(std::vector<NormalMonomial> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
}

const ColumnMemo::Expansion *ColumnMemo::find(const std::vector<ExpPair> &column) const {
  auto it = table_.find(column);
  return it == table_.end() ? nullptr : &it->second;
}

const ColumnMemo::Expansion &ColumnMemo::insert(std::vector<ExpPair> column, Expansion value) {
  return table_.insert_or_assign(std::move(column), std::move(value)).first->second;
}

namespace {

using Column = std::vector<ExpPair>;

void check_guards(const FactorGrid &grid, const Limits &limits) {
  require_within("Sym^n factor count n", grid.cols(), limits.sym_n);
  require_within("Sym^n product length m", grid.rows(), limits.sym_m);
  unsigned long longest = 0;
  for (std::size_t i = 0; i < grid.rows(); ++i) {
    unsigned long widest = 0;
    for (const auto &p : grid.row(i)) widest = std::max<unsigned long>(widest, p.a + p.b);
    longest += widest;
  }
  require_within("column word length", longest, limits.word_length);
}

// Calls visit(columns) once per sigma in {1} x S_n^(m-1), where
// columns[j][i] = grid(i, sigma_i^{-1}(j)).
template <typename Visit>
void for_each_symmetrization(const FactorGrid &grid, Visit &&visit) {
  const std::size_t m = grid.rows();
  const std::size_t n = grid.cols();
  std::vector<std::vector<std::size_t>> inverse(m, std::vector<std::size_t>(n));
  for (auto &perm : inverse) std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<Column> columns(n, Column(m));

  auto emit = [&] {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < m; ++i) columns[j][i] = grid.at(i, inverse[i][j]);
    visit(std::as_const(columns));
  };

  // Odometer over rows 1..m-1, each cycling through S_n.
  for (;;) {
    emit();
    std::size_t i = 1;
    for (; i < m; ++i) {
      if (std::next_permutation(inverse[i].begin(), inverse[i].end())) break;
      // next_permutation wrapped back to the identity; carry.
    }
    if (i >= m) break;
  }
}

template <typename Coeff, typename Expansion, typename Sink>
void tensor(const std::vector<const Expansion *> &per_column, std::size_t j, std::vector<NormalMonomial> &factors,
            const Coeff &coeff, Sink &sink) {
  if (j == per_column.size()) {
    sink.add(SymMonomial(factors), coeff);
    return;
  }
  for (const auto &[mono, c] : *per_column[j]) {
    factors[j] = mono;
    tensor<Coeff>(per_column, j + 1, factors, Coeff(coeff * c), sink);
  }
}

ColumnMemo::Expansion formula_column(const Column &column) {
  MonomialSeq seq(column);
  const unsigned ta = seq.total_a();
  const unsigned tb = seq.total_b();
  ColumnMemo::Expansion out;
  for (unsigned k = 0; k <= tb; ++k) {
    QPoly c = npoly_q(seq, k);
    if (!c.is_zero()) out.emplace_back(NormalMonomial{ta + k, tb - k}, std::move(c));
  }
  return out;
}

ColumnMemo::Expansion oracle_column(const Column &column, const Limits &limits) {
  Word w;
  for (const auto &p : column) w += Word::normal(p.a, p.b);
  auto element = normal_order(w, RewriteStrategy::Leftmost, limits);
  return {element.terms().begin(), element.terms().end()};
}

template <typename Expand>
SymElement symmetrized_product(const FactorGrid &grid, ColumnMemo &memo, Expand expand) {
  SymElement out;
  std::vector<NormalMonomial> factors(grid.cols());
  std::vector<const ColumnMemo::Expansion *> per_column(grid.cols());
  for_each_symmetrization(grid, [&](const std::vector<Column> &columns) {
    for (std::size_t j = 0; j < columns.size(); ++j) {
      const auto *hit = memo.find(columns[j]);
      per_column[j] = hit ? hit : &memo.insert(columns[j], expand(columns[j]));
    }
    tensor<QPoly>(per_column, 0, factors, QPoly(1), out);
  });
  return out;
}

} // namespace

SymElement scaled_product_formula(const FactorGrid &grid, ColumnMemo &memo, const Limits &limits) {
  check_guards(grid, limits);
  return symmetrized_product(grid, memo, formula_column);
}

SymElement scaled_product_oracle(const FactorGrid &grid, ColumnMemo &memo, const Limits &limits) {
  check_guards(grid, limits);
  return symmetrized_product(grid, memo, [&](const Column &c) { return oracle_column(c, limits); });
}

SymElement scaled_product_formula(const FactorGrid &grid, const Limits &limits) {
  ColumnMemo memo;
  return scaled_product_formula(grid, memo, limits);
}

SymElement scaled_product_oracle(const FactorGrid &grid, const Limits &limits) {
  ColumnMemo memo;
  return scaled_product_oracle(grid, memo, limits);
}

SymElement product(const FactorGrid &grid, const Limits &limits) {
  BigInt scale_int;
  mpz_pow_ui(scale_int.get_mpz_t(), factorial(grid.cols()).get_mpz_t(), grid.rows() - 1);
  const BigRational scale(scale_int);
  SymElement out;
  const SymElement scaled = scaled_product_formula(grid, limits);
  for (const auto &[mono, c] : scaled.terms()) out.add(mono, c / scale);
  return out;
}

SymElementQ1 specialize_q1_product(const FactorGrid &grid, const Limits &limits) {
  check_guards(grid, limits);
  using Expansion = std::vector<std::pair<NormalMonomial, BigRational>>;
  std::map<Column, Expansion> memo;
  SymElementQ1 out;
  std::vector<NormalMonomial> factors(grid.cols());
  std::vector<const Expansion *> per_column(grid.cols());
  for_each_symmetrization(grid, [&](const std::vector<Column> &columns) {
    for (std::size_t j = 0; j < columns.size(); ++j) {
      auto it = memo.find(columns[j]);
      if (it == memo.end()) {
        MonomialSeq seq(columns[j]);
        Expansion e;
        for (unsigned k = 0; k <= seq.total_b(); ++k) {
          BigInt v = npoly_q1(seq, k);
          if (v != 0) e.emplace_back(NormalMonomial{seq.total_a() + k, seq.total_b() - k}, BigRational(v));
        }
        it = memo.emplace(columns[j], std::move(e)).first;
      }
      per_column[j] = &it->second;
    }
    tensor<BigRational>(per_column, 0, factors, BigRational(1), out);
  });
  return out;
}

SymElementQ1 eval_at(const SymElement &element, const BigRational &at) {
  SymElementQ1 out;
  for (const auto &[mono, c] : element.terms()) out.add(mono, eval_at(c, at));
  return out;
}

} // namespace qweyl
