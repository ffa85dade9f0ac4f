// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include "qweyl/normal.hpp"
#include "qweyl/qrep.hpp"
#include "qweyl/render.hpp"
#include "qweyl/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

using namespace qweyl;

namespace {

// Every comparison below is exact.  The only tolerances are wall-clock budgets.
constexpr double kBudget1 = 1.0;
constexpr double kBudget2 = 5.0;
constexpr double kBudget3 = 30.0;
constexpr double kBudget4 = 120.0;
constexpr double kBudget5 = 1.0;
constexpr double kBudget6 = 1.0;
constexpr double kBudget7 = 120.0;
constexpr double kBudget8 = 30.0;
constexpr double kBudget9 = 5.0;
constexpr double kBudget10 = 5.0;

constexpr unsigned kMapTotal = 14;
constexpr unsigned long kFigureOneValue = 59400; // frozen from the rewriting oracle
constexpr std::uint64_t kSeed = 20071017;

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char *title, double budget, const std::function<Outcome(const Clock::time_point &)> &body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body(start);
  } catch (const std::exception &e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  const bool in_time = secs <= budget;
  const bool ok = o.ok && in_time;
  if (!ok) ++failures;
  std::printf("[%s] %2d %s | %s | %.2f s (budget %.0f s)%s\n", ok ? "PASS" : "FAIL", id, title, o.detail.c_str(), secs,
              budget, in_time ? "" : " OVER BUDGET");
  std::fflush(stdout);
}

std::string n(unsigned long long v) { return std::to_string(v); }

struct PrintedTerm {
  QPoly coeff;
  NormalMonomial f1, f2;
};

// Compares printed Sym^2 terms with a computed element.  Returns matches and
// a description of the first discrepancy.
template <typename Elem, typename Coeff>
std::pair<unsigned, std::string> compare_printed(const std::vector<PrintedTerm> &printed, const Elem &computed,
                                                 const std::function<Coeff(const QPoly &)> &convert,
                                                 unsigned &extra) {
  unsigned matches = 0;
  std::string first;
  std::set<SymMonomial> mentioned;
  for (const auto &t : printed) {
    SymMonomial m({t.f1, t.f2});
    mentioned.insert(m);
    const Coeff want = convert(t.coeff), got = computed.coefficient(m);
    if (want == got)
      ++matches;
    else if (first.empty())
      first = "x1^" + n(t.f1.x) + "y1^" + n(t.f1.y) + "x2^" + n(t.f2.x) + "y2^" + n(t.f2.y) + " printed " + to_text(want) +
              ", computed " + to_text(got);
  }
  extra = 0;
  for (const auto &[m, c] : computed.terms()) extra += !mentioned.count(m);
  return {matches, first};
}

} // namespace

int main() {
  const QPoly q = QPoly::monomial(1);
  const auto points = standard_sample_points();

  criterion(1, "closed forms c(a,b,0) = q^(ab), c(a,b,a) = [b]^(a)", kBudget1, [&](auto &) {
    unsigned cases = 0, bad = 0;
    for (unsigned a = 0; a <= 8; ++a)
      for (unsigned b = 1; b <= 8; ++b) {
        cases += 2;
        bad += c_recursive(a, b, 0) != QPoly::monomial(a * b);
        bad += c_recursive(a, b, a) != qrising(b, a);
      }
    return Outcome{bad == 0, n(cases) + " identities, " + n(bad) + " failures"};
  });

  criterion(2, "c(a,b,k): recursion = subsets = chains = rewriting", kBudget2, [&](auto &) {
    unsigned cases = 0, bad = 0;
    for (unsigned a = 0; a <= 6; ++a)
      for (unsigned b = 1; b <= 6; ++b)
        for (unsigned k = 0; k <= a; ++k) {
          ++cases;
          const QPoly c = c_recursive(a, b, k);
          bad += !(c_subsets(a, b, k) == c && c_tform(a, b, k) == c && c_oracle(a, b, k) == c);
        }
    return Outcome{bad == 0, n(cases) + " triples, " + n(bad) + " disagreements"};
  });

  criterion(3, "N(A,k,q): formula = alternative = rewriting", kBudget3, [&](auto &) {
    unsigned long cases = 0, bad = 0;
    auto one = [&](const MonomialSeq &s) {
      const MWElement nf = monomial(s);
      for (unsigned k = 0; k <= s.total_b(); ++k) {
        ++cases;
        const QPoly v = npoly_q(s, k);
        bad += !(npoly_q_alt(s, k) == v && nf.coefficient({s.total_a() + k, s.total_b() - k}) == v);
      }
    };
    for_each_sequence(3, 2, one);
    std::mt19937_64 rng(kSeed);
    std::uniform_int_distribution<unsigned> len(1, 3), e(0, 3);
    for (int i = 0; i < 200; ++i) {
      std::vector<ExpPair> pairs(len(rng));
      for (auto &p : pairs) p = {e(rng), e(rng)};
      one(MonomialSeq(pairs));
    }
    return Outcome{bad == 0, n(cases) + " (A,k) cases incl. 200 random A, " + n(bad) + " disagreements"};
  });

  criterion(4, "q=1 bridge: N(A,k,1) = binomial formula = map count M_k", kBudget4, [&](auto &) {
    unsigned long instances = 0, cases = 0, formula_bad = 0, mk_bad = 0;
    std::string first_mk;
    for (unsigned len = 1; len <= 3; ++len) {
      std::vector<unsigned> e(2 * len, 0);
      while (true) {
        unsigned total = 0;
        for (auto v : e) total += v;
        if (total <= kMapTotal) {
          std::vector<ExpPair> pairs;
          for (unsigned i = 0; i < len; ++i) pairs.push_back({e[2 * i], e[2 * i + 1]});
          const MonomialSeq s(pairs);
          ++instances;
          const auto mk = mk_counts(s);
          for (unsigned k = 0; k <= s.total_b(); ++k) {
            ++cases;
            const BigInt q1 = npoly_q1(s, k);
            formula_bad += eval_at(npoly_q(s, k), 1) != BigRational(q1);
            if (mk[k] != q1 && mk_bad++ == 0)
              first_mk = "A=" + to_text(s) + " k=" + n(k) + ": M_k " + mk[k].get_str() + " vs N " + q1.get_str();
          }
        }
        std::size_t i = 0;
        while (i < e.size() && ++e[i] > kMapTotal) e[i++] = 0;
        if (i == e.size()) break;
      }
    }
    const MonomialSeq fig{{2, 3}, {3, 3}, {3, 4}};
    const BigInt v_formula = npoly_q1(fig, 6);
    const BigRational v_oracle = eval_at(npoly_oracle(fig, 6), 1);
    Limits raised = default_limits();
    raised.map_total = 18;
    const BigInt v_mk = mk_count(fig, 6, raised);
    const bool fig_ok = v_formula == kFigureOneValue && v_oracle == BigRational(v_formula);
    std::string detail = n(instances) + " instances / " + n(cases) + " (A,k): q-formula vs binomial formula " +
                         n(formula_bad) + " disagreements; M_k vs N " + n(mk_bad) + " disagreements";
    if (mk_bad) detail += " (first " + first_mk + ")";
    detail += "; Figure-1 N = " + v_formula.get_str() + " (frozen " + n(kFigureOneValue) + "), M_6 = " + v_mk.get_str();
    return Outcome{formula_bad == 0 && mk_bad == 0 && fig_ok && v_mk == v_formula, detail};
  });

  criterion(5, "Sym^2 q-example reproduces the printed 8 terms", kBudget5, [&](auto &) {
    const auto g = FactorGrid::parse("(1,1)(2,1);(2,2)(1,1)");
    const QPoly q2 = q * q, q3 = q2 * q;
    // As printed, left to right.
    const std::vector<PrintedTerm> printed = {
        {q3, {3, 3}, {3, 2}},     {q2, {3, 3}, {4, 1}}, {q2 + q, {4, 2}, {3, 2}}, {q + 1, {4, 2}, {4, 1}},
        {q3, {2, 2}, {4, 3}},     {q2 + q, {2, 2}, {5, 2}}, {q2, {3, 1}, {4, 3}}, {q + 1, {3, 1}, {5, 2}}};
    const SymElement f = scaled_product_formula(g), o = scaled_product_oracle(g);
    unsigned extra = 0;
    auto [matches, first] =
        compare_printed<SymElement, QPoly>(printed, o, [](const QPoly &c) { return c; }, extra);
    std::string detail = "formula " + std::string(f == o ? "=" : "!=") + " oracle; " + n(matches) + "/" +
                         n(printed.size()) + " printed terms match, " + n(extra) + " unprinted terms";
    if (!first.empty()) detail += "; first mismatch " + first;
    return Outcome{f == o && matches == printed.size() && extra == 0, detail};
  });

  criterion(6, "Sym^2 example at q=1: formula = oracle, printed terms compared", kBudget6, [&](auto &) {
    const auto g = FactorGrid::parse("(1,2)(2,2);(2,1)(1,2)");
    // As printed, left to right; the printed sum contains 16 terms.
    const std::vector<std::tuple<long, NormalMonomial, NormalMonomial>> raw = {
        {1, {3, 4}, {3, 4}},  {6, {3, 4}, {4, 3}},  {8, {3, 4}, {5, 2}},  {8, {4, 3}, {4, 3}},
        {20, {4, 3}, {5, 2}}, {6, {5, 2}, {3, 4}},  {12, {5, 2}, {5, 2}}, {1, {3, 4}, {4, 4}},
        {2, {3, 4}, {5, 3}},  {6, {3, 4}, {6, 2}},  {2, {4, 3}, {4, 4}},  {4, {4, 3}, {5, 3}},
        {12, {4, 3}, {6, 3}}, {6, {5, 2}, {4, 4}},  {12, {5, 2}, {5, 3}}, {36, {5, 2}, {6, 2}}};
    std::vector<PrintedTerm> printed;
    for (const auto &[c, f1, f2] : raw) printed.push_back({QPoly(c), f1, f2});
    const SymElementQ1 direct = specialize_q1_product(g);
    const SymElementQ1 via_formula = eval_at(scaled_product_formula(g), 1);
    const SymElementQ1 via_oracle = eval_at(scaled_product_oracle(g), 1);
    unsigned extra = 0;
    auto [matches, first] = compare_printed<SymElementQ1, BigRational>(
        printed, via_oracle, [](const QPoly &c) { return eval_at(c, 1); }, extra);
    const bool agree = direct == via_formula && via_formula == via_oracle;
    std::string detail = "q=1 formula " + std::string(agree ? "=" : "!=") + " oracle (" + n(via_oracle.terms().size()) +
                         " terms); printed text: " + n(matches) + "/" + n(printed.size()) + " terms match, " + n(extra) +
                         " computed terms not printed";
    if (!first.empty()) detail += "; first mismatch " + first;
    return Outcome{agree, detail};
  });

  criterion(7, "Sym products: formula = oracle, n,m <= 3, exponents <= 2", kBudget7, [&](const Clock::time_point &start) {
    ColumnMemo fm, om;
    unsigned long grids = 0, bad = 0, full_shapes = 0;
    std::string first;
    auto one = [&](const FactorGrid &g) {
      ++grids;
      if (scaled_product_formula(g, fm) != scaled_product_oracle(g, om) && bad++ == 0) first = "first counterexample found";
    };
    unsigned long long big_total = 0;
    for (unsigned cols = 1; cols <= 3; ++cols)
      for (unsigned rows = 1; rows <= 3; ++rows) {
        if (cols == 3 && rows == 3) continue;
        for_each_grid(cols, rows, 2, one);
        ++full_shapes;
      }
    // The 3 x 3 shape has 165^3 grids; sweep exponents <= 1 completely, then
    // sample exponents <= 2 for the rest of the budget.
    big_total = grid_count(3, 3, 2);
    const unsigned long before = grids;
    for_each_grid(3, 3, 1, one);
    const unsigned long small_sweep = grids - before;
    std::mt19937_64 rng(kSeed);
    std::uniform_int_distribution<unsigned> e(0, 2);
    unsigned long sampled = 0;
    const auto deadline = start + std::chrono::duration<double>(kBudget7 * 0.85);
    while (Clock::now() < deadline) {
      std::vector<std::vector<ExpPair>> rows(3, std::vector<ExpPair>(3));
      for (auto &r : rows) {
        for (auto &p : r) p = {e(rng), e(rng)};
        std::sort(r.begin(), r.end());
      }
      one(FactorGrid(rows));
      ++sampled;
    }
    std::string detail = n(grids) + " grids, " + n(bad) + " disagreements; " + n(full_shapes) +
                         "/9 shapes exhaustive; 3x3: exhaustive at exponents <= 1 (" + n(small_sweep) + "), " +
                         n(sampled) + " random of " + n(big_total) + " at exponents <= 2 (exhaustive 3x3 does not fit the budget)";
    return Outcome{bad == 0 && sampled >= big_total, detail};
  });

  criterion(8, "representations respect normal ordering (words <= 6)", kBudget8, [&](auto &) {
    unsigned long cases = 0, bad = 0;
    for (unsigned len = 0; len <= 6; ++len)
      for (unsigned bits = 0; bits < (1u << len); ++bits) {
        std::string letters;
        for (unsigned i = 0; i < len; ++i) letters += (bits >> i & 1) ? 'y' : 'x';
        const Word w = Word::parse(letters);
        const MWElement nf = normal_order(w);
        for (const auto &pt : points) {
          for (long t = -3; t <= 3; ++t, ++cases) {
            const auto f = LaurentFn::monomial(t);
            bad += apply(Representation::Rho, w, f, pt) != apply(Representation::Rho, nf, f, pt);
          }
          for (long t = 0; t <= 4; ++t, ++cases) {
            const auto f = LaurentFn::monomial(t);
            bad += apply(Representation::Iota, w, f, pt) != apply(Representation::Iota, nf, f, pt);
          }
        }
      }
    return Outcome{bad == 0, n(cases) + " (word, monomial, q0) cases at q0 in {1/2, 2/3, 3/5}, " + n(bad) + " failures"};
  });

  criterion(9, "q-calculus identities on monomials", kBudget9, [&](auto &) {
    unsigned long cases = 0, bad = 0;
    for (const auto &pt : points) {
      for (long s = 0; s <= 6; ++s, ++cases) bad += !check_fundamental_theorem(LaurentFn::monomial(s), pt);
      for (long s = -4; s <= 4; ++s)
        for (long t = -4; t <= 4; ++t, ++cases)
          bad += !check_q_leibnitz(LaurentFn::monomial(s), LaurentFn::monomial(t), pt);
      for (long s = 0; s <= 5; ++s)
        for (long t = 0; t <= 5; ++t) {
          bad += !check_rota_baxter(LaurentFn::monomial(s), LaurentFn::monomial(t), pt);
          bad += !check_q_int_by_parts(LaurentFn::monomial(s), LaurentFn::monomial(t), pt);
          cases += 2;
        }
    }
    return Outcome{bad == 0, n(cases) + " identity instances (fundamental theorem, Leibnitz, Rota-Baxter, by parts), " +
                                 n(bad) + " failures"};
  });

  criterion(10, "inversion statistic: sum q^inv = [n]! for n <= 8", kBudget10, [&](auto &) {
    unsigned bad = 0;
    for (unsigned k = 0; k <= 8; ++k) bad += inversion_gf(k) != qfactorial(k);
    return Outcome{bad == 0, "n = 0..8, " + n(bad) + " failures"};
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
