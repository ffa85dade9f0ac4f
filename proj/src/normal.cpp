#include "qweyl/normal.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace qweyl {

namespace {

void compose(std::size_t index, unsigned remaining, unsigned prefix, Composition &p,
             const std::function<unsigned(std::size_t, unsigned)> &bound,
             const std::function<void(const Composition &)> &visit) {
  const unsigned cap = bound(index, prefix);
  if (index + 1 == p.size()) {
    if (remaining <= cap) {
      p[index] = remaining;
      visit(p);
    }
    return;
  }
  for (unsigned v = 0; v <= std::min(cap, remaining); ++v) {
    p[index] = v;
    compose(index + 1, remaining - v, prefix + v, p, bound, visit);
  }
}

// Rows c(a, b, 0..a) for a fixed b, grown on demand.
class CoordinateTable {
public:
  const QPoly &get(unsigned a, unsigned b, unsigned k) {
    auto &rows = by_b_[b];
    if (rows.empty()) rows.push_back({QPoly(1)});
    while (rows.size() <= a) {
      const auto &prev = rows.back();
      const unsigned prev_a = static_cast<unsigned>(rows.size()) - 1;
      std::vector<QPoly> next(prev_a + 2);
      for (unsigned j = 0; j <= prev_a + 1; ++j) {
        if (j <= prev_a) next[j] += prev[j].shifted(b + j);
        if (j >= 1) next[j] += prev[j - 1] * qbracket(b + j - 1);
      }
      rows.push_back(std::move(next));
    }
    return rows[a][k];
  }

private:
  std::unordered_map<unsigned, std::deque<std::vector<QPoly>>> by_b_;
};

const QPoly &coordinate(unsigned a, unsigned b, unsigned k) {
  static const QPoly zero;
  if (k > a) return zero;
  thread_local CoordinateTable table;
  return table.get(a, b, k);
}

void require_nonempty(const MonomialSeq &seq) {
  if (seq.empty()) throw std::invalid_argument("normal polynomial of an empty exponent sequence");
}

void require_positive_b(unsigned b) {
  if (b == 0) throw std::invalid_argument("subset and chain forms of c(a,b,k) require b >= 1");
}

// suffix[i] = sum of values[i+1..]
template <typename F>
std::vector<unsigned> suffix_sums(std::size_t n, F value) {
  std::vector<unsigned> out(n, 0);
  for (std::size_t i = n; i-- > 1;) out[i - 1] = out[i] + value(i);
  return out;
}

} // namespace

void for_each_bounded_composition(std::size_t parts, unsigned total,
                                  const std::function<unsigned(std::size_t, unsigned)> &bound,
                                  const std::function<void(const Composition &)> &visit) {
  Composition p(parts, 0);
  if (parts == 0) {
    if (total == 0) visit(p);
    return;
  }
  compose(0, total, 0, p, bound, visit);
}

QPoly c_recursive(unsigned a, unsigned b, unsigned k) { return coordinate(a, b, k); }

QPoly c_subsets(unsigned a, unsigned b, unsigned k, const Limits &limits) {
  require_positive_b(b);
  require_within("c_subsets a", a, limits.subset_a);
  if (k > a) return {};

  std::vector<BigRational> histogram(static_cast<std::size_t>(k) * (a - k) + 1);
  std::vector<bool> in_subset(a, false);
  std::fill(in_subset.begin(), in_subset.begin() + k, true);
  do {
    unsigned seen = 0;
    unsigned statistic = 0;
    for (bool member : in_subset) {
      if (member)
        ++seen;
      else
        statistic += seen;
    }
    histogram[statistic] += 1;
  } while (std::prev_permutation(in_subset.begin(), in_subset.end()));

  return qrising(b, k) * QPoly(std::move(histogram)).shifted(static_cast<std::size_t>(a - k) * b);
}

QPoly c_tform(unsigned a, unsigned b, unsigned k, TFormPrefactor prefactor, const Limits &limits) {
  require_positive_b(b);
  require_within("c_tform a", a, limits.subset_a);
  if (k > a) return {};

  std::vector<BigRational> histogram(static_cast<std::size_t>(k) * (a - k) + 1);
  std::vector<unsigned> chain(k + 1);
  chain[k] = a + 1;
  std::function<void(unsigned, unsigned)> extend = [&](unsigned s, unsigned lowest) {
    if (s == k) {
      unsigned weight = 0;
      for (unsigned i = 1; i <= k; ++i) weight += i * (chain[i] - chain[i - 1] - 1);
      histogram[weight] += 1;
      return;
    }
    for (unsigned t = lowest; t + (k - s - 1) <= a; ++t) {
      chain[s] = t;
      extend(s + 1, t + 1);
    }
  };
  extend(0, 1);

  const QPoly front = prefactor == TFormPrefactor::Rising ? qrising(b, k) : qrising(b - 1, k);
  return front * QPoly(std::move(histogram)).shifted(static_cast<std::size_t>(a - k) * b);
}

QPoly c_oracle(unsigned a, unsigned b, unsigned k, const Limits &limits) {
  if (k > a) return {};
  Word w = Word::parse(std::string(a, 'y') + std::string(b, 'x'));
  return normal_order(w, RewriteStrategy::Leftmost, limits).coefficient({b + k, a - k});
}

QPoly npoly_q(const MonomialSeq &seq, unsigned k) {
  require_nonempty(seq);
  const std::size_t n = seq.size();
  if (k > seq.total_b()) return {};
  const auto a_after = suffix_sums(n, [&](std::size_t i) { return seq[i].a; });

  QPoly sum;
  for_each_bounded_composition(
      n - 1, k, [&](std::size_t i, unsigned) { return seq[i].b; },
      [&](const Composition &p) {
        const auto p_after = suffix_sums(p.size(), [&](std::size_t i) { return p[i]; });
        QPoly term = 1;
        for (std::size_t i = 0; i < p.size() && !term.is_zero(); ++i)
          term *= coordinate(seq[i].b, a_after[i] + p_after[i], p[i]);
        sum += term;
      });
  return sum;
}

QPoly npoly_q_alt(const MonomialSeq &seq, unsigned k) {
  require_nonempty(seq);
  const std::size_t n = seq.size();
  if (k > seq.total_b()) return {};
  std::vector<unsigned> b_upto(n);
  for (std::size_t i = 0; i < n; ++i) b_upto[i] = (i ? b_upto[i - 1] : 0) + seq[i].b;

  QPoly sum;
  for_each_bounded_composition(
      n - 1, k, [&](std::size_t i, unsigned prefix) { return b_upto[i] - prefix; },
      [&](const Composition &p) {
        QPoly term = 1;
        unsigned prefix = 0;
        for (std::size_t i = 0; i < p.size() && !term.is_zero(); ++i) {
          term *= coordinate(b_upto[i] - prefix, seq[i + 1].a, p[i]);
          prefix += p[i];
        }
        sum += term;
      });
  return sum;
}

QPoly npoly_oracle(const MonomialSeq &seq, unsigned k, const Limits &limits) {
  require_nonempty(seq);
  if (k > seq.total_b()) return {};
  require_within("word length", seq.word().size(), limits.word_length);
  return monomial(seq, limits).coefficient({seq.total_a() + k, seq.total_b() - k});
}

BigInt npoly_q1(const MonomialSeq &seq, unsigned k) {
  require_nonempty(seq);
  const std::size_t n = seq.size();
  if (k > seq.total_b()) return 0;
  const auto a_after = suffix_sums(n, [&](std::size_t i) { return seq[i].a; });

  BigInt sum = 0;
  for_each_bounded_composition(
      n - 1, k, [&](std::size_t i, unsigned) { return seq[i].b; },
      [&](const Composition &p) {
        const auto p_after = suffix_sums(p.size(), [&](std::size_t i) { return p[i]; });
        BigInt term = 1;
        for (std::size_t i = 0; i < p.size(); ++i) {
          BigInt binom;
          mpz_bin_uiui(binom.get_mpz_t(), seq[i].b, p[i]);
          term *= binom * rising(a_after[i] + p_after[i], p[i]);
        }
        sum += term;
      });
  return sum;
}

std::vector<BigInt> mk_counts(const MonomialSeq &seq, const Limits &limits) {
  require_nonempty(seq);
  require_within("mk_count |a|+|b|", static_cast<unsigned long>(seq.total_a()) + seq.total_b(), limits.map_total);

  // One digit per element of E: 0 = unassigned, otherwise which admissible
  // element of F receives it.  Elements with no admissible target are fixed
  // at 0 and left out of the odometer.
  const std::size_t n = seq.size();
  std::vector<std::uint32_t> radix;
  for (std::size_t j = 0; j < n; ++j) {
    std::uint32_t targets = 0;
    for (std::size_t i = j + 1; i < n; ++i) targets += seq[i].a;
    if (targets > 0) radix.insert(radix.end(), seq[j].b, targets + 1);
  }

  std::vector<unsigned long long> tally(seq.total_b() + 1, 0);
  std::vector<std::uint32_t> digit(radix.size(), 0);
  std::size_t assigned = 0;
  for (;;) {
    ++tally[assigned];
    std::size_t i = 0;
    for (; i < digit.size(); ++i) {
      if (digit[i] + 1 < radix[i]) {
        if (digit[i] == 0) ++assigned;
        ++digit[i];
        break;
      }
      if (digit[i] != 0) --assigned;
      digit[i] = 0;
    }
    if (i == digit.size()) break;
  }

  std::vector<BigInt> out;
  out.reserve(tally.size());
  for (auto c : tally) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

BigInt mk_count(const MonomialSeq &seq, unsigned k, const Limits &limits) {
  auto counts = mk_counts(seq, limits);
  return k < counts.size() ? counts[k] : BigInt(0);
}

} // namespace qweyl
