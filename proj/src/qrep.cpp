#include "qweyl/qrep.hpp"

#include "qweyl/normal.hpp"

#include <cctype>

namespace qweyl {

// --- LaurentFn ---------------------------------------------------------------

LaurentFn LaurentFn::monomial(long exponent, BigRational c) {
  LaurentFn f;
  f.add(exponent, c);
  return f;
}

BigRational LaurentFn::coefficient(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigRational{} : it->second;
}

long LaurentFn::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of the zero function");
  return terms_.begin()->first;
}

BigRational LaurentFn::at_zero() const {
  if (!terms_.empty() && terms_.begin()->first < 0)
    throw std::domain_error("value at 0 of a function with a negative power of x");
  return coefficient(0);
}

void LaurentFn::add(long exponent, const BigRational &c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentFn &LaurentFn::operator+=(const LaurentFn &rhs) {
  for (const auto &[t, c] : rhs.terms_) add(t, c);
  return *this;
}

LaurentFn &LaurentFn::operator-=(const LaurentFn &rhs) {
  for (const auto &[t, c] : rhs.terms_) add(t, -c);
  return *this;
}

LaurentFn &LaurentFn::operator*=(const BigRational &scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto &[t, c] : terms_) c *= scalar;
  return *this;
}

LaurentFn operator*(const LaurentFn &lhs, const LaurentFn &rhs) {
  LaurentFn out;
  for (const auto &[s, c] : lhs.terms_)
    for (const auto &[t, d] : rhs.terms_) out.add(s + t, c * d);
  return out;
}

namespace {

class LaurentParser {
public:
  explicit LaurentParser(std::string_view text) : text_(text) {}

  LaurentFn run() {
    LaurentFn out;
    skip();
    if (pos_ == text_.size()) fail("empty expression");
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [exponent, coeff] = term();
      out.add(exponent, sign < 0 ? -coeff : coeff);
      first = false;
      skip();
    }
    return out;
  }

private:
  std::pair<long, BigRational> term() {
    BigRational coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      digits();
      if (peek() == '/') {
        ++pos_;
        digits();
      }
      coeff = BigRational::parse(text_.substr(start, pos_ - start));
      have_coeff = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
        if (peek() != 'x') fail("expected 'x' after '*'");
      }
    }
    if (peek() != 'x') {
      if (!have_coeff) fail("expected a coefficient or 'x'");
      return {0, coeff};
    }
    ++pos_;
    long exponent = 1;
    skip();
    if (peek() == '^') {
      ++pos_;
      skip();
      bool negative = false;
      if (peek() == '-' || peek() == '+') {
        negative = peek() == '-';
        ++pos_;
      }
      std::size_t start = pos_;
      digits();
      exponent = std::stol(std::string(text_.substr(start, pos_ - start)));
      if (negative) exponent = -exponent;
    }
    return {exponent, coeff};
  }

  void digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected digits");
    if (pos_ - start > 12) fail("number too long");
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string &why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

LaurentFn LaurentFn::parse(std::string_view text) { return LaurentParser(text).run(); }

// --- QPoint and brackets ----------------------------------------------------

QPoint::QPoint(BigRational q0) : q0_(std::move(q0)) {
  if (q0_.is_zero() || q0_.is_one()) throw std::domain_error("q must be specialized away from 0 and 1");
}

bool QPoint::in_unit_interval() const { return q0_.sign() > 0 && q0_ < BigRational(1); }

std::vector<QPoint> standard_sample_points() {
  return {QPoint(BigRational(1) / 2), QPoint(BigRational(2) / 3), QPoint(BigRational(3) / 5)};
}

BigRational bracket_at(long n, const QPoint &at) {
  const BigRational &q = at.value();
  return (q.pow(n) - 1) / (q - 1);
}

BigRational rising_bracket_at(long b, unsigned a, const QPoint &at) {
  BigRational out = 1;
  for (unsigned i = 0; i < a; ++i) out *= bracket_at(b + static_cast<long>(i), at);
  return out;
}

// --- q-calculus operators ----------------------------------------------------

LaurentFn q_derivative(const LaurentFn &f, const QPoint &at) {
  LaurentFn out;
  for (const auto &[t, c] : f.terms())
    if (t != 0) out.add(t - 1, c * bracket_at(t, at));
  return out;
}

LaurentFn q_shift(const LaurentFn &f, const QPoint &at) {
  LaurentFn out;
  for (const auto &[t, c] : f.terms()) out.add(t, c * at.value().pow(t));
  return out;
}

LaurentFn jackson_integral(const LaurentFn &f, const QPoint &at) {
  if (!at.in_unit_interval()) throw std::domain_error("Jackson integral needs 0 < q < 1");
  LaurentFn out;
  for (const auto &[t, c] : f.terms()) {
    if (t <= -1) throw std::domain_error("Jackson integral diverges for x^" + std::to_string(t));
    out.add(t + 1, c / bracket_at(t + 1, at));
  }
  return out;
}

LaurentFn rho_x(const LaurentFn &f, const QPoint &) {
  LaurentFn out;
  for (const auto &[t, c] : f.terms()) out.add(t - 1, c);
  return out;
}

LaurentFn rho_y(const LaurentFn &f, const QPoint &at) {
  return q_derivative(f, at.inverse()) * (-(BigRational(1) / at.value()));
}

LaurentFn iota_x(const LaurentFn &f, const QPoint &at) { return jackson_integral(f, at); }

LaurentFn iota_y(const LaurentFn &f, const QPoint &) {
  LaurentFn out;
  for (const auto &[t, c] : f.terms()) out.add(t + 1, c);
  return out;
}

namespace {

LaurentFn act(Representation rep, char letter, const LaurentFn &f, const QPoint &at) {
  if (rep == Representation::Rho) return letter == 'x' ? rho_x(f, at) : rho_y(f, at);
  return letter == 'x' ? iota_x(f, at) : iota_y(f, at);
}

} // namespace

LaurentFn apply(Representation rep, const Word &w, const LaurentFn &f, const QPoint &at) {
  LaurentFn out = f;
  const auto &letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out = act(rep, *it, out, at);
  return out;
}

LaurentFn apply(Representation rep, const MWElement &u, const LaurentFn &f, const QPoint &at) {
  LaurentFn out;
  for (const auto &[m, c] : u.terms()) {
    BigRational scale = eval_at(c, at.value());
    if (scale.is_zero()) continue;
    out += apply(rep, Word::normal(m.x, m.y), f, at) * scale;
  }
  return out;
}

bool check_rho_relation(const LaurentFn &f, const QPoint &at) {
  LaurentFn lhs = rho_y(rho_x(f, at), at);
  LaurentFn rhs = rho_x(rho_y(f, at), at) * at.value() + rho_x(rho_x(f, at), at);
  return lhs == rhs;
}

bool check_iota_relation(const LaurentFn &f, const QPoint &at) {
  LaurentFn lhs = iota_y(iota_x(f, at), at);
  LaurentFn rhs = iota_x(iota_y(f, at), at) * at.value() + iota_x(iota_x(f, at), at);
  return lhs == rhs;
}

bool check_q_leibnitz(const LaurentFn &f, const LaurentFn &g, const QPoint &at) {
  LaurentFn lhs = q_derivative(f * g, at);
  LaurentFn rhs = f * q_derivative(g, at) + q_shift(g, at) * q_derivative(f, at);
  return lhs == rhs;
}

bool check_rota_baxter(const LaurentFn &f, const LaurentFn &g, const QPoint &at) {
  LaurentFn int_f = jackson_integral(f, at);
  LaurentFn int_g = jackson_integral(g, at);
  LaurentFn lhs = int_f * int_g;
  LaurentFn rhs = jackson_integral(int_f * g, at) + jackson_integral(f * q_shift(int_g, at), at);
  return lhs == rhs;
}

bool check_q_int_by_parts(const LaurentFn &f, const LaurentFn &g, const QPoint &at) {
  const BigRational boundary = f.at_zero() * g.at_zero();
  LaurentFn lhs = jackson_integral(q_shift(f, at) * q_derivative(g, at), at);
  LaurentFn rhs = f * g - LaurentFn::constant(boundary) - jackson_integral(g * q_derivative(f, at), at);
  return lhs == rhs;
}

bool check_fundamental_theorem(const LaurentFn &f, const QPoint &at) {
  return q_derivative(jackson_integral(f, at), at) == f;
}

// --- bracket identities ------------------------------------------------------

namespace {

QPoly normal_polynomial(const MonomialSeq &seq, unsigned k, NormalFormula formula) {
  return formula == NormalFormula::Primary ? npoly_q(seq, k) : npoly_q_alt(seq, k);
}

} // namespace

BracketReport bracket_identity_report(std::span<const unsigned> a, std::span<const unsigned> b, unsigned t,
                                      BracketVariant variant, const QPoint &at) {
  if (a.empty() || a.size() != b.size()) throw std::invalid_argument("a and b must have the same nonzero length");
  if (variant.rep == Representation::Rho && t == 0) throw std::invalid_argument("rho bracket identity needs t >= 1");

  const std::size_t n = a.size();
  std::vector<ExpPair> pairs;
  for (std::size_t i = 0; i < n; ++i) pairs.push_back({a[i], b[i]});
  const MonomialSeq seq(pairs);
  const long ta = seq.total_a();
  const long tb = seq.total_b();
  const long tl = t;

  // |a_{>i}|, |b_{>i}| (0-based i)
  std::vector<long> a_after(n, 0), b_after(n, 0);
  for (std::size_t i = n - 1; i-- > 0;) {
    a_after[i] = a_after[i + 1] + a[i + 1];
    b_after[i] = b_after[i + 1] + b[i + 1];
  }

  std::vector<BigRational> n_at(static_cast<std::size_t>(tb) + 1);
  for (long k = 0; k <= tb; ++k)
    n_at[k] = eval_at(normal_polynomial(seq, static_cast<unsigned>(k), variant.formula), at.value());

  BracketReport r;
  if (variant.rep == Representation::Rho) {
    r.letterwise = apply(Representation::Rho, seq.word(), LaurentFn::monomial(-tl), at).coefficient(-(tl + ta + tb));
    r.derived_lhs = 1;
    r.printed_lhs = 1;
    for (std::size_t i = 0; i < n; ++i) {
      r.derived_lhs *= rising_bracket_at(tl + a_after[i] + b_after[i], b[i], at);
      r.printed_lhs *= bracket_at(tl + b_after[i] + b[i] + a_after[i] - 1, at);
    }
    for (long k = 0; k <= tb; ++k) {
      r.derived_rhs += n_at[k] * rising_bracket_at(tl, static_cast<unsigned>(tb - k), at);
      r.printed_rhs += n_at[k] * bracket_at(tl + tb - k - 1, at);
    }
    return r;
  }

  r.letterwise = apply(Representation::Iota, seq.word(), LaurentFn::monomial(tl), at).coefficient(tl + ta + tb);
  BigRational derived_den = 1, printed_den = 1;
  for (std::size_t i = 0; i < n; ++i) {
    derived_den *= rising_bracket_at(tl + a_after[i] + b_after[i] + b[i] + 1, a[i], at);
    printed_den *= rising_bracket_at(tl + a_after[i] + a[i] + b_after[i] + b[i] + 1, a[i], at);
  }
  r.derived_lhs = BigRational(1) / derived_den;
  if (printed_den.is_zero())
    r.printed_defined = false;
  else
    r.printed_lhs = BigRational(1) / printed_den;
  for (long k = 0; k <= tb; ++k) {
    r.derived_rhs += n_at[k] / rising_bracket_at(tl + tb - k + 1, static_cast<unsigned>(ta + k), at);
    BigRational den = rising_bracket_at(tl + ta + tb, static_cast<unsigned>(ta + k), at);
    if (den.is_zero()) {
      if (!n_at[k].is_zero()) r.printed_defined = false;
    } else {
      r.printed_rhs += n_at[k] / den;
    }
  }
  return r;
}

bool check_bracket_identity(std::span<const unsigned> a, std::span<const unsigned> b, unsigned t,
                            BracketVariant variant, const QPoint &at) {
  return bracket_identity_report(a, b, t, variant, at).derived_holds();
}

} // namespace qweyl
