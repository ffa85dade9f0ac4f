#include "qweyl/cli.hpp"

#include "qweyl/normal.hpp"
#include "qweyl/render.hpp"
#include "qweyl/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>

namespace qweyl::cli {

namespace {

enum class Format { Text, Latex, Json };

struct Rendered {
  Json json;
  std::string text;
  std::string latex;
};

struct Output {
  Format format = Format::Text;
  std::optional<BigRational> q_at;
  std::ostream *out = nullptr;

  Rendered poly(const QPoly &p) const {
    if (q_at) {
      auto v = eval_at(p, *q_at);
      return {to_json(v), to_text(v), to_latex(v)};
    }
    return {to_json(p), to_text(p), to_latex(p)};
  }

  Rendered integer(const BigInt &z) const { return {to_json(z), z.get_str(), z.get_str()}; }

  Rendered element(const MWElement &u) const {
    const MWElement v = q_at ? evaluated(u, *q_at) : u;
    return {to_json(v), to_text(v), to_latex(v)};
  }

  Rendered sym(const SymElement &s) const {
    const SymElement v = q_at ? evaluated(s, *q_at) : s;
    return {to_json(v), to_text(v), to_latex(v)};
  }

  void emit(const std::string &kind, const Rendered &r) const {
    switch (format) {
    case Format::Text: *out << r.text << "\n"; break;
    case Format::Latex: *out << r.latex << "\n"; break;
    case Format::Json: envelope(kind, r.json); break;
    }
  }

  /// A labelled list of results plus a verdict line.
  void emit_table(const std::string &kind, const std::vector<std::pair<std::string, Rendered>> &rows,
                  const std::string &verdict) const {
    if (format == Format::Json) {
      Json methods = Json::object();
      for (const auto &[name, r] : rows) methods[name] = r.json;
      envelope(kind, {{"methods", methods}, {"verdict", verdict}});
      return;
    }
    std::size_t width = 0;
    for (const auto &row : rows) width = std::max(width, row.first.size());
    for (const auto &[name, r] : rows)
      *out << name << ":" << std::string(width - name.size() + 1, ' ') << (format == Format::Latex ? r.latex : r.text) << "\n";
    *out << "verdict: " << verdict << "\n";
  }

  void envelope(const std::string &kind, const Json &value) const {
    Json doc = {{"kind", kind}, {"value", value}, {"meta", {{"guards", to_json(default_limits())}}}};
    if (q_at) doc["meta"]["q_at"] = to_json(*q_at);
    *out << doc.dump() << "\n";
  }
};

SymElement unscale(const SymElement &s, const FactorGrid &grid) {
  BigInt nfact = factorial(grid.cols()), scale;
  mpz_pow_ui(scale.get_mpz_t(), nfact.get_mpz_t(), grid.rows() - 1);
  const BigRational inv = BigRational(1) / BigRational(scale);
  SymElement out;
  for (const auto &[mono, c] : s.terms()) {
    QPoly scaled = c;
    scaled *= inv;
    out.add(mono, scaled);
  }
  return out;
}

int report_verify(const Output &o, const std::vector<SuiteReport> &reports) {
  bool ok = true;
  Json arr = Json::array();
  for (const auto &r : reports) {
    ok = ok && r.passed();
    Json j = {{"suite", r.name},
              {"cases", r.cases},
              {"failures", r.failures},
              {"passed", r.passed()},
              {"notes", r.notes}};
    if (r.first_failure) j["first_counterexample"] = *r.first_failure;
    arr.push_back(j);
  }
  if (o.format == Format::Json) {
    o.envelope("verify", arr);
    return ok ? 0 : 1;
  }
  for (const auto &r : reports) {
    if (r.passed())
      *o.out << r.name << ": PASS (" << r.cases << " cases)\n";
    else
      *o.out << r.name << ": FAIL (" << r.failures << " of " << r.cases << " cases)\n"
             << "  first counterexample: " << *r.first_failure << "\n";
    for (const auto &n : r.notes) *o.out << "  note: " << n << "\n";
  }
  return ok ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact computations in the q-meromorphic Weyl algebra", "qweyl"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text", q_at_text;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "latex", "json"}));
  app.add_option("--q-at", q_at_text, "Evaluate coefficients at q = NUM/DEN");

  std::string word;
  auto *normal = app.add_subcommand("normal-order", "Normal form of a word in x and y");
  normal->add_option("word", word, "Word over {x, y}; \"\" is the unit")->required();

  unsigned ca = 0, cb = 0, ck = 0;
  std::string c_method = "recursion";
  auto *ncoeff = app.add_subcommand("ncoeff", "Normal coordinate c(a,b,k)");
  ncoeff->add_option("a", ca)->required();
  ncoeff->add_option("b", cb)->required();
  ncoeff->add_option("k", ck)->required();
  ncoeff->add_option("--method", c_method)->check(CLI::IsMember({"recursion", "subsets", "tform", "rewrite", "all"}));

  std::string seq_text, n_method = "juju";
  unsigned nk = 0;
  auto *npoly = app.add_subcommand("npoly", "Normal polynomial N(A,k,q)");
  npoly->add_option("A", seq_text, "Exponent pairs, e.g. \"(1,1)(2,0)\"")->required();
  npoly->add_option("k", nk)->required();
  npoly->add_option("--method", n_method)->check(CLI::IsMember({"juju", "alt", "rewrite", "q1", "mk", "all"}));

  std::string grid_text, s_method = "formula";
  bool scaled = true;
  auto *sympow = app.add_subcommand("sympow", "Product of Sym^n monomials, one per row");
  sympow->add_option("grid", grid_text, "Rows separated by ';', e.g. \"(1,1)(2,1);(2,2)(1,1)\"")->required();
  sympow->add_option("--method", s_method)->check(CLI::IsMember({"formula", "oracle", "both"}));
  sympow->add_flag("--scaled,!--unscaled", scaled, "Multiply by (n!)^(m-1) (default)");

  std::string suite, variant = "derived";
  SweepOptions sweep;
  auto *verify = app.add_subcommand("verify", "Run consistency sweeps");
  verify->add_option("suite", suite)
      ->required()
      ->check(CLI::IsMember({"c-coeffs", "npoly", "sympow", "representations", "identities", "all"}));
  verify->add_option("--max-a", sweep.max_a);
  verify->add_option("--max-b", sweep.max_b);
  verify->add_option("--max-n", sweep.max_n);
  verify->add_option("--max-m", sweep.max_m);
  verify->add_option("--max-exp", sweep.max_exp);
  verify->add_option("--max-word", sweep.max_word);
  verify->add_option("--random", sweep.random);
  verify->add_option("--max-grids", sweep.max_grids, "Sample shapes with more grids than this (0: never)");
  verify->add_option("--samples", sweep.samples, "Random grids per sampled shape");
  verify->add_option("--seed", sweep.seed);
  verify->add_option("--variant", variant)->check(CLI::IsMember({"derived", "printed"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  Output o;
  o.out = &out;
  o.format = format == "latex" ? Format::Latex : format == "json" ? Format::Json : Format::Text;

  try {
    if (!q_at_text.empty()) o.q_at = BigRational::parse(q_at_text);
    const Limits &limits = default_limits();

    if (*normal) {
      o.emit("MWElement", o.element(normal_order(Word::parse(word), RewriteStrategy::Leftmost, limits)));
      return 0;
    }

    if (*ncoeff) {
      auto compute = [&](const std::string &m) -> std::optional<QPoly> {
        if (m == "recursion") return c_recursive(ca, cb, ck);
        if (m == "rewrite") return c_oracle(ca, cb, ck, limits);
        if (cb == 0) return std::nullopt;
        if (m == "subsets") return c_subsets(ca, cb, ck, limits);
        return c_tform(ca, cb, ck, TFormPrefactor::Rising, limits);
      };
      if (c_method != "all") {
        auto v = compute(c_method);
        if (!v) throw std::invalid_argument("method '" + c_method + "' needs b >= 1");
        o.emit("QPoly", o.poly(*v));
        return 0;
      }
      std::vector<std::pair<std::string, Rendered>> rows;
      std::optional<QPoly> first;
      bool agree = true;
      for (const char *m : {"recursion", "subsets", "tform", "rewrite"}) {
        auto v = compute(m);
        if (!v) {
          rows.push_back({m, {Json(nullptr), "undefined for b = 0", "\\text{undefined for } b = 0"}});
          continue;
        }
        if (!first) first = v;
        agree = agree && *v == *first;
        rows.push_back({m, o.poly(*v)});
      }
      o.emit_table("ncoeff-comparison", rows, agree ? "AGREE" : "DISAGREE");
      return agree ? 0 : 1;
    }

    if (*npoly) {
      const MonomialSeq seq = MonomialSeq::parse(seq_text);
      if (n_method == "juju") o.emit("QPoly", o.poly(npoly_q(seq, nk)));
      if (n_method == "alt") o.emit("QPoly", o.poly(npoly_q_alt(seq, nk)));
      if (n_method == "rewrite") o.emit("QPoly", o.poly(npoly_oracle(seq, nk, limits)));
      if (n_method == "q1") o.emit("Integer", o.integer(npoly_q1(seq, nk)));
      if (n_method == "mk") o.emit("Integer", o.integer(mk_count(seq, nk, limits)));
      if (n_method != "all") return 0;

      const QPoly juju = npoly_q(seq, nk), alt = npoly_q_alt(seq, nk), rw = npoly_oracle(seq, nk, limits);
      const BigInt q1 = npoly_q1(seq, nk);
      std::vector<std::pair<std::string, Rendered>> rows = {
          {"juju", o.poly(juju)}, {"alt", o.poly(alt)}, {"rewrite", o.poly(rw)}, {"q1", o.integer(q1)}};
      bool agree = juju == alt && juju == rw && eval_at(juju, 1) == BigRational(q1);
      if (seq.total_a() + seq.total_b() <= limits.map_total) {
        const BigInt mk = mk_count(seq, nk, limits);
        agree = agree && mk == q1;
        rows.push_back({"mk", o.integer(mk)});
      } else {
        rows.push_back({"mk", {Json(nullptr), "skipped (map_total guard)", "\\text{skipped}"}});
      }
      o.emit_table("npoly-comparison", rows, agree ? "AGREE" : "DISAGREE");
      return agree ? 0 : 1;
    }

    if (*sympow) {
      const FactorGrid grid = FactorGrid::parse(grid_text);
      auto formula = [&] {
        auto s = scaled_product_formula(grid, limits);
        return scaled ? s : unscale(s, grid);
      };
      auto oracle = [&] {
        auto s = scaled_product_oracle(grid, limits);
        return scaled ? s : unscale(s, grid);
      };
      if (s_method == "formula") o.emit("SymElement", o.sym(formula()));
      if (s_method == "oracle") o.emit("SymElement", o.sym(oracle()));
      if (s_method != "both") return 0;
      const auto f = formula(), g = oracle();
      o.emit_table("sympow-comparison", {{"formula", o.sym(f)}, {"oracle", o.sym(g)}}, f == g ? "AGREE" : "DISAGREE");
      return f == g ? 0 : 1;
    }

    sweep.printed = variant == "printed";
    sweep.limits = limits;
    return report_verify(o, run_verify(suite, sweep));
  } catch (const GuardError &e) {
    err << "qweyl: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument &e) {
    err << "qweyl: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error &e) {
    err << "qweyl: " << e.what() << "\n";
    return 2;
  }
}

} // namespace qweyl::cli
