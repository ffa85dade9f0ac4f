#include "qweyl/verify.hpp"

#include "qweyl/normal.hpp"
#include "qweyl/qrep.hpp"
#include "qweyl/render.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace qweyl {

void SuiteReport::check(bool ok, const std::function<std::string()> &describe) {
  ++cases;
  if (ok) return;
  if (failures++ == 0) first_failure = describe();
}

namespace {

std::vector<ExpPair> cell_values(unsigned max_exp) {
  std::vector<ExpPair> cells;
  for (std::uint32_t a = 0; a <= max_exp; ++a)
    for (std::uint32_t b = 0; b <= max_exp; ++b) cells.push_back({a, b});
  return cells;
}

// All nondecreasing index sequences of length `len` over [0, values).
std::vector<std::vector<ExpPair>> row_multisets(unsigned len, unsigned max_exp) {
  const auto cells = cell_values(max_exp);
  std::vector<std::vector<ExpPair>> rows;
  std::vector<std::size_t> idx(len, 0);
  while (true) {
    std::vector<ExpPair> row;
    for (auto i : idx) row.push_back(cells[i]);
    rows.push_back(std::move(row));
    std::size_t p = len;
    while (p > 0 && idx[p - 1] + 1 == cells.size()) --p;
    if (p == 0) break;
    ++idx[p - 1];
    for (std::size_t q = p; q < len; ++q) idx[q] = idx[p - 1];
  }
  return rows;
}

std::string describe_grid(const FactorGrid &g) {
  std::string out;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (i) out += ";";
    for (const auto &p : g.row(i)) out += "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
  }
  return out;
}

std::string seq_k(const MonomialSeq &seq, unsigned k) { return "A=" + to_text(seq) + " k=" + std::to_string(k); }

std::vector<unsigned> column_a(const MonomialSeq &s) {
  std::vector<unsigned> v;
  for (const auto &p : s.pairs()) v.push_back(p.a);
  return v;
}

std::vector<unsigned> column_b(const MonomialSeq &s) {
  std::vector<unsigned> v;
  for (const auto &p : s.pairs()) v.push_back(p.b);
  return v;
}

MonomialSeq random_seq(std::mt19937_64 &rng, unsigned max_n, unsigned max_exp) {
  std::uniform_int_distribution<unsigned> len(1, max_n), e(0, max_exp);
  std::vector<ExpPair> pairs(len(rng));
  for (auto &p : pairs) p = {e(rng), e(rng)};
  return MonomialSeq(std::move(pairs));
}

FactorGrid random_grid(std::mt19937_64 &rng, unsigned cols, unsigned rows, unsigned max_exp) {
  std::uniform_int_distribution<unsigned> e(0, max_exp);
  std::vector<std::vector<ExpPair>> grid(rows, std::vector<ExpPair>(cols));
  for (auto &row : grid) {
    for (auto &p : row) p = {e(rng), e(rng)};
    std::sort(row.begin(), row.end());
  }
  return FactorGrid(std::move(grid));
}

} // namespace

unsigned long long grid_count(unsigned cols, unsigned rows, unsigned max_exp) {
  const unsigned long long v = (max_exp + 1ull) * (max_exp + 1ull);
  unsigned long long per_row = 1;
  for (unsigned i = 0; i < cols; ++i) per_row = per_row * (v + i) / (i + 1);
  unsigned long long total = 1;
  for (unsigned i = 0; i < rows; ++i) total *= per_row;
  return total;
}

void for_each_grid(unsigned cols, unsigned rows, unsigned max_exp, const std::function<void(const FactorGrid &)> &visit) {
  if (cols == 0 || rows == 0) throw std::invalid_argument("grid needs at least one row and one column");
  const auto choices = row_multisets(cols, max_exp);
  std::vector<std::size_t> pick(rows, 0);
  while (true) {
    std::vector<std::vector<ExpPair>> g;
    for (auto i : pick) g.push_back(choices[i]);
    visit(FactorGrid(std::move(g)));
    std::size_t r = rows;
    while (r > 0 && pick[r - 1] + 1 == choices.size()) pick[--r] = 0;
    if (r == 0) return;
    ++pick[r - 1];
  }
}

void for_each_sequence(unsigned max_n, unsigned max_exp, const std::function<void(const MonomialSeq &)> &visit) {
  const auto cells = cell_values(max_exp);
  for (unsigned n = 1; n <= max_n; ++n) {
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      std::vector<ExpPair> pairs;
      for (auto i : idx) pairs.push_back(cells[i]);
      visit(MonomialSeq(std::move(pairs)));
      std::size_t p = n;
      while (p > 0 && idx[p - 1] + 1 == cells.size()) idx[--p] = 0;
      if (p == 0) break;
      ++idx[p - 1];
    }
  }
}

SuiteReport verify_c_coeffs(const SweepOptions &opt) {
  SuiteReport rep;
  rep.name = "c-coeffs";
  unsigned long printed_mismatch = 0;
  std::string first_printed;
  for (unsigned a = 0; a <= opt.max_a; ++a)
    for (unsigned b = 0; b <= opt.max_b; ++b)
      for (unsigned k = 0; k <= a; ++k) {
        const QPoly rec = c_recursive(a, b, k);
        const QPoly orc = c_oracle(a, b, k, opt.limits);
        bool ok = rec == orc && rec.is_natural();
        if (b >= 1) ok = ok && c_subsets(a, b, k, opt.limits) == rec && c_tform(a, b, k, TFormPrefactor::Rising, opt.limits) == rec;
        rep.check(ok, [&] {
          return "c(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(k) + "): recursion " + to_text(rec) +
                 ", rewrite " + to_text(orc);
        });
        if (opt.printed && b >= 1 && c_tform(a, b, k, TFormPrefactor::ShiftedBase, opt.limits) != rec) {
          if (printed_mismatch++ == 0)
            first_printed = "c(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(k) + ")";
        }
      }
  if (opt.printed)
    rep.notes.push_back("chain formula with prefactor [b-1]^(k): " + std::to_string(printed_mismatch) +
                        " mismatches" + (printed_mismatch ? ", first at " + first_printed : std::string()));
  return rep;
}

SuiteReport verify_npoly(const SweepOptions &opt) {
  SuiteReport rep;
  rep.name = "npoly";
  unsigned long mk_checked = 0, mk_mismatch = 0;
  std::string first_mk;

  auto one = [&](const MonomialSeq &seq, bool with_mk) {
    const MWElement oracle = monomial(seq, opt.limits);
    const unsigned na = seq.total_a(), nb = seq.total_b();
    std::vector<BigInt> mk;
    if (with_mk && na + nb <= opt.limits.map_total) mk = mk_counts(seq, opt.limits);
    for (unsigned k = 0; k <= nb; ++k) {
      const QPoly juju = npoly_q(seq, k);
      const QPoly alt = npoly_q_alt(seq, k);
      const QPoly rw = oracle.coefficient({na + k, nb - k});
      const BigInt q1 = npoly_q1(seq, k);
      const bool ok = juju == alt && juju == rw && juju.is_natural() && eval_at(juju, 1) == BigRational(q1);
      rep.check(ok, [&] {
        return seq_k(seq, k) + ": formula " + to_text(juju) + ", alternative " + to_text(alt) + ", rewrite " + to_text(rw) +
               ", q=1 " + q1.get_str();
      });
      if (!mk.empty()) {
        ++mk_checked;
        if (mk[k] != q1 && mk_mismatch++ == 0)
          first_mk = seq_k(seq, k) + ": map count " + mk[k].get_str() + ", N(A,k,1) " + q1.get_str();
      }
    }
  };

  for_each_sequence(opt.max_n, opt.max_exp, [&](const MonomialSeq &s) { one(s, true); });
  std::mt19937_64 rng(opt.seed);
  for (unsigned i = 0; i < opt.random; ++i) one(random_seq(rng, opt.max_n, opt.max_exp + 1), false);

  rep.notes.push_back("literal map count M_k vs N(A,k,1): " + std::to_string(mk_mismatch) + " of " +
                      std::to_string(mk_checked) + " disagree" + (mk_mismatch ? " (first: " + first_mk + ")" : ""));
  return rep;
}

SuiteReport verify_sympow(const SweepOptions &opt) {
  SuiteReport rep;
  rep.name = "sympow";
  ColumnMemo formula_memo, oracle_memo;
  std::mt19937_64 rng(opt.seed);

  auto one = [&](const FactorGrid &g) {
    const SymElement f = scaled_product_formula(g, formula_memo, opt.limits);
    const SymElement o = scaled_product_oracle(g, oracle_memo, opt.limits);
    bool natural = true;
    for (const auto &[mono, c] : f.terms()) natural = natural && c.is_natural();
    const bool ok = f == o && natural && eval_at(f, 1) == specialize_q1_product(g, opt.limits);
    rep.check(ok, [&] { return "grid " + describe_grid(g) + ": formula " + to_text(f) + ", oracle " + to_text(o); });
  };

  for (unsigned n = 1; n <= opt.max_n; ++n)
    for (unsigned m = 1; m <= opt.max_m; ++m) {
      const auto total = grid_count(n, m, opt.max_exp);
      if (opt.max_grids == 0 || total <= opt.max_grids) {
        for_each_grid(n, m, opt.max_exp, one);
        continue;
      }
      unsigned e = opt.max_exp;
      while (e > 0 && grid_count(n, m, e) > opt.max_grids) --e;
      if (grid_count(n, m, e) <= opt.max_grids) for_each_grid(n, m, e, one);
      for (unsigned long i = 0; i < opt.samples; ++i) one(random_grid(rng, n, m, opt.max_exp));
      rep.notes.push_back("shape n=" + std::to_string(n) + " m=" + std::to_string(m) + ": " + std::to_string(total) +
                          " grids at exponents <= " + std::to_string(opt.max_exp) + "; swept exponents <= " +
                          std::to_string(e) + " and sampled " + std::to_string(opt.samples));
    }
  return rep;
}

SuiteReport verify_representations(const SweepOptions &opt) {
  SuiteReport rep;
  rep.name = "representations";
  const auto points = standard_sample_points();
  for (unsigned len = 0; len <= opt.max_word; ++len)
    for (unsigned bits = 0; bits < (1u << len); ++bits) {
      std::string letters;
      for (unsigned i = 0; i < len; ++i) letters += (bits >> i & 1) ? 'y' : 'x';
      const Word w = Word::parse(letters);
      const MWElement nf = normal_order(w, RewriteStrategy::Leftmost, opt.limits);
      for (const auto &pt : points) {
        for (long s = -3; s <= 3; ++s) {
          const auto f = LaurentFn::monomial(s);
          const auto lhs = apply(Representation::Rho, w, f, pt), rhs = apply(Representation::Rho, nf, f, pt);
          rep.check(lhs == rhs, [&] { return "rho on word " + letters + ", f = " + to_text(f) + ": " + to_text(lhs) + " vs " + to_text(rhs); });
        }
        for (long s = 0; s <= 4; ++s) {
          const auto f = LaurentFn::monomial(s);
          const auto lhs = apply(Representation::Iota, w, f, pt), rhs = apply(Representation::Iota, nf, f, pt);
          rep.check(lhs == rhs, [&] { return "iota on word " + letters + ", f = " + to_text(f) + ": " + to_text(lhs) + " vs " + to_text(rhs); });
        }
      }
    }
  for (const auto &pt : points) {
    for (long s = -4; s <= 4; ++s)
      rep.check(check_rho_relation(LaurentFn::monomial(s), pt),
                [&] { return "rho relation fails on x^" + std::to_string(s) + " at q=" + pt.value().to_string(); });
    for (long s = 0; s <= 4; ++s)
      rep.check(check_iota_relation(LaurentFn::monomial(s), pt),
                [&] { return "iota relation fails on x^" + std::to_string(s) + " at q=" + pt.value().to_string(); });
  }
  return rep;
}

SuiteReport verify_identities(const SweepOptions &opt) {
  SuiteReport rep;
  rep.name = "identities";
  const auto points = standard_sample_points();
  auto at_q = [](const QPoint &pt) { return " at q=" + pt.value().to_string(); };

  for (const auto &pt : points) {
    for (long s = 0; s <= 6; ++s)
      rep.check(check_fundamental_theorem(LaurentFn::monomial(s), pt),
                [&] { return "d_q int x^" + std::to_string(s) + " != x^" + std::to_string(s) + at_q(pt); });
    for (long s = -3; s <= 3; ++s)
      for (long t = -3; t <= 3; ++t)
        rep.check(check_q_leibnitz(LaurentFn::monomial(s), LaurentFn::monomial(t), pt),
                  [&] { return "q-Leibnitz fails for x^" + std::to_string(s) + ", x^" + std::to_string(t) + at_q(pt); });
    for (long s = 0; s <= 4; ++s)
      for (long t = 0; t <= 4; ++t) {
        const auto f = LaurentFn::monomial(s) + LaurentFn::constant(2);
        const auto g = LaurentFn::monomial(t, 3) + LaurentFn::constant(-1);
        rep.check(check_rota_baxter(f, g, pt),
                  [&] { return "Rota-Baxter fails for " + to_text(f) + ", " + to_text(g) + at_q(pt); });
        rep.check(check_q_int_by_parts(f, g, pt),
                  [&] { return "integration by parts fails for " + to_text(f) + ", " + to_text(g) + at_q(pt); });
      }
  }

  for (unsigned n = 0; n <= std::min(8u, opt.limits.inversion_n); ++n)
    rep.check(inversion_gf(n, opt.limits) == qfactorial(n), [&] { return "inversion count gf != [" + std::to_string(n) + "]!"; });

  unsigned long printed_cases = 0, printed_mismatch = 0;
  std::string first_printed;
  const auto pt = points.front();
  for_each_sequence(opt.max_n, opt.max_exp, [&](const MonomialSeq &seq) {
    const auto a = column_a(seq), b = column_b(seq);
    for (auto formula : {NormalFormula::Primary, NormalFormula::Alternative})
      for (auto r : {Representation::Rho, Representation::Iota}) {
        const unsigned t0 = r == Representation::Rho ? 1 : 0;
        for (unsigned t = t0; t <= t0 + 2; ++t) {
          const auto report = bracket_identity_report(a, b, t, {formula, r}, pt);
          const char *name = r == Representation::Rho ? "rho" : "iota";
          rep.check(report.derived_holds(), [&] {
            return std::string(name) + " bracket identity, " + to_text(seq) + " t=" + std::to_string(t) + ": " +
                   report.derived_lhs.to_string() + " vs " + report.derived_rhs.to_string();
          });
          if (opt.printed && formula == NormalFormula::Primary) {
            ++printed_cases;
            if (!report.printed_holds() && printed_mismatch++ == 0)
              first_printed = std::string(name) + " " + to_text(seq) + " t=" + std::to_string(t);
          }
        }
      }
  });
  if (opt.printed)
    rep.notes.push_back("printed bracket forms: " + std::to_string(printed_mismatch) + " of " + std::to_string(printed_cases) +
                        " cases fail" + (printed_mismatch ? " (first: " + first_printed + ")" : ""));
  return rep;
}

std::vector<SuiteReport> run_verify(std::string_view suite, const SweepOptions &opt) {
  if (suite == "c-coeffs") return {verify_c_coeffs(opt)};
  if (suite == "npoly") return {verify_npoly(opt)};
  if (suite == "sympow") return {verify_sympow(opt)};
  if (suite == "representations") return {verify_representations(opt)};
  if (suite == "identities") return {verify_identities(opt)};
  if (suite == "all")
    return {verify_c_coeffs(opt), verify_npoly(opt), verify_sympow(opt), verify_representations(opt), verify_identities(opt)};
  throw std::invalid_argument("unknown verify suite '" + std::string(suite) + "'");
}

} // namespace qweyl
