#include "qweyl/render.hpp"

#include <sstream>

namespace qweyl {

namespace {

std::string abs_text(const BigRational &c) { return (c.sign() < 0 ? -c : c).to_string(); }

std::string abs_latex(const BigRational &c) {
  BigRational a = c.sign() < 0 ? -c : c;
  if (a.is_integer()) return a.to_string();
  return "\\frac{" + a.numerator().get_str() + "}{" + a.denominator().get_str() + "}";
}

template <typename Body>
std::string signed_join(const QPoly &p, const char *plus, const char *minus, Body body) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  auto coeffs = p.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const auto &c = coeffs[k];
    if (c.is_zero()) continue;
    if (first)
      out += c.sign() < 0 ? "-" : "";
    else
      out += c.sign() < 0 ? minus : plus;
    out += body(k, c);
    first = false;
  }
  return out;
}

bool is_single_positive_term(const QPoly &p) {
  int nonzero = 0;
  for (const auto &c : p.coefficients())
    if (!c.is_zero()) ++nonzero;
  return nonzero == 1 && p.coefficients().back().sign() > 0;
}

std::string text_power(const char *var, std::uint32_t e) { return std::string(var) + "^" + std::to_string(e); }

std::string latex_power(const std::string &var, std::uint32_t e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^{" + std::to_string(e) + "}";
}

std::string latex_term(const QPoly &coeff, const std::string &mono) {
  if (coeff == QPoly(1)) return mono.empty() ? "1" : mono;
  if (mono.empty()) return to_latex(coeff);
  if (is_single_positive_term(coeff)) return to_latex(coeff) + mono;
  return "(" + to_latex(coeff) + ")" + mono;
}

template <typename Coeff>
std::string sym_text(const BasicSymElement<Coeff> &s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto &[mono, c] : s.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_text(c) + ")";
    std::size_t j = 1;
    for (const auto &f : mono.factors()) {
      out += "*x" + std::to_string(j) + "^" + std::to_string(f.x);
      out += "*y" + std::to_string(j) + "^" + std::to_string(f.y);
      ++j;
    }
  }
  return out;
}

std::string sym_latex_monomial(const SymMonomial &mono) {
  std::string out;
  std::size_t j = 1;
  for (const auto &f : mono.factors()) {
    out += latex_power("x_{" + std::to_string(j) + "}", f.x);
    out += latex_power("y_{" + std::to_string(j) + "}", f.y);
    ++j;
  }
  return out;
}

Json factors_json(const SymMonomial &mono) {
  Json factors = Json::array();
  for (const auto &f : mono.factors()) factors.push_back({f.x, f.y});
  return factors;
}

SymMonomial factors_from_json(const Json &j) {
  if (!j.is_array()) throw ParseError("factors must be an array");
  std::vector<NormalMonomial> factors;
  for (const auto &f : j) {
    if (!f.is_array() || f.size() != 2) throw ParseError("factor must be [xexp, yexp]");
    factors.push_back({f[0].get<std::uint32_t>(), f[1].get<std::uint32_t>()});
  }
  return SymMonomial(std::move(factors));
}

template <typename F>
auto guarded(F f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception &e) {
    throw ParseError(std::string("JSON schema violation: ") + e.what());
  } catch (const std::invalid_argument &e) {
    throw ParseError(e.what());
  }
}

} // namespace

std::string to_text(const BigRational &r) { return r.to_string(); }

std::string to_text(const QPoly &p) {
  return signed_join(p, " + ", " - ", [](std::size_t k, const BigRational &c) {
    const bool unit = c == BigRational(1) || c == BigRational(-1);
    if (k == 0) return abs_text(c);
    std::string q = k == 1 ? "q" : "q^" + std::to_string(k);
    return unit ? q : abs_text(c) + "*" + q;
  });
}

std::string to_text(const MWElement &u) {
  if (u.is_zero()) return "0";
  std::string out;
  for (const auto &[m, c] : u.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_text(c) + ")";
    if (m.x > 0) out += "*" + text_power("x", m.x);
    if (m.y > 0) out += "*" + text_power("y", m.y);
  }
  return out;
}

std::string to_text(const SymElement &s) { return sym_text(s); }
std::string to_text(const SymElementQ1 &s) { return sym_text(s); }

std::string to_text(const LaurentFn &f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto &[t, c] : f.terms()) {
    if (out.empty())
      out += c.sign() < 0 ? "-" : "";
    else
      out += c.sign() < 0 ? " - " : " + ";
    const bool unit = c == BigRational(1) || c == BigRational(-1);
    if (t == 0) {
      out += abs_text(c);
      continue;
    }
    if (!unit) out += abs_text(c) + "*";
    out += "x^" + std::to_string(t);
  }
  return out;
}

std::string to_text(const MonomialSeq &seq) {
  std::string out;
  for (const auto &p : seq.pairs()) out += "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
  return out;
}

std::string to_latex(const BigRational &r) { return (r.sign() < 0 ? "-" : "") + abs_latex(r); }

std::string to_latex(const QPoly &p) {
  return signed_join(p, "+", "-", [](std::size_t k, const BigRational &c) {
    const bool unit = c == BigRational(1) || c == BigRational(-1);
    if (k == 0) return abs_latex(c);
    std::string q = latex_power("q", static_cast<std::uint32_t>(k));
    return unit ? q : abs_latex(c) + q;
  });
}

std::string to_latex(const MWElement &u) {
  if (u.is_zero()) return "0";
  std::string out;
  for (const auto &[m, c] : u.terms()) {
    if (!out.empty()) out += " + ";
    out += latex_term(c, latex_power("x", m.x) + latex_power("y", m.y));
  }
  return out;
}

std::string to_latex(const SymElement &s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto &[mono, c] : s.terms()) {
    if (!out.empty()) out += " + ";
    out += latex_term(c, sym_latex_monomial(mono));
  }
  return out;
}

std::string to_latex(const SymElementQ1 &s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto &[mono, c] : s.terms()) {
    if (!out.empty()) out += " + ";
    out += latex_term(QPoly(c), sym_latex_monomial(mono));
  }
  return out;
}

Json to_json(const BigRational &r) { return Json::array({r.numerator().get_str(), r.denominator().get_str()}); }

Json to_json(const BigInt &z) { return z.get_str(); }

Json to_json(const QPoly &p) {
  Json out = Json::array();
  auto coeffs = p.coefficients();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    out.push_back({k, coeffs[k].numerator().get_str(), coeffs[k].denominator().get_str()});
  }
  return out;
}

Json to_json(const MWElement &u) {
  Json out = Json::array();
  for (const auto &[m, c] : u.terms()) out.push_back({{"x", m.x}, {"y", m.y}, {"coeff", to_json(c)}});
  return out;
}

Json to_json(const SymElement &s) {
  Json out = Json::array();
  for (const auto &[mono, c] : s.terms()) out.push_back({{"factors", factors_json(mono)}, {"coeff", to_json(c)}});
  return out;
}

Json to_json(const SymElementQ1 &s) {
  Json out = Json::array();
  for (const auto &[mono, c] : s.terms()) out.push_back({{"factors", factors_json(mono)}, {"coeff", to_json(c)}});
  return out;
}

Json to_json(const MonomialSeq &seq) {
  Json out = Json::array();
  for (const auto &p : seq.pairs()) out.push_back({p.a, p.b});
  return out;
}

Json to_json(const Limits &limits) {
  return {{"inversion_n", limits.inversion_n}, {"word_length", limits.word_length}, {"subset_a", limits.subset_a},
          {"map_total", limits.map_total},     {"sym_n", limits.sym_n},             {"sym_m", limits.sym_m}};
}

BigRational rational_from_json(const Json &j) {
  return guarded([&] {
    if (!j.is_array() || j.size() != 2) throw ParseError("rational must be [\"num\", \"den\"]");
    return BigRational::parse(j[0].get<std::string>() + "/" + j[1].get<std::string>());
  });
}

BigInt bigint_from_json(const Json &j) {
  return guarded([&] {
    auto s = j.get<std::string>();
    BigInt z;
    if (s.empty() || z.set_str(s, 10) != 0) throw ParseError("malformed integer string '" + s + "'");
    return z;
  });
}

QPoly qpoly_from_json(const Json &j) {
  return guarded([&] {
    if (!j.is_array()) throw ParseError("QPoly must be an array of [degree, num, den]");
    QPoly out;
    for (const auto &t : j) {
      if (!t.is_array() || t.size() != 3) throw ParseError("QPoly term must be [degree, num, den]");
      auto c = BigRational::parse(t[1].get<std::string>() + "/" + t[2].get<std::string>());
      out += QPoly::monomial(t[0].get<std::size_t>(), c);
    }
    return out;
  });
}

MWElement mwelement_from_json(const Json &j) {
  return guarded([&] {
    if (!j.is_array()) throw ParseError("MWElement must be an array");
    MWElement out;
    for (const auto &t : j)
      out.add({t.at("x").get<std::uint32_t>(), t.at("y").get<std::uint32_t>()}, qpoly_from_json(t.at("coeff")));
    return out;
  });
}

SymElement symelement_from_json(const Json &j) {
  return guarded([&] {
    if (!j.is_array()) throw ParseError("SymElement must be an array");
    SymElement out;
    for (const auto &t : j) out.add(factors_from_json(t.at("factors")), qpoly_from_json(t.at("coeff")));
    return out;
  });
}

SymElementQ1 symelement_q1_from_json(const Json &j) {
  return guarded([&] {
    if (!j.is_array()) throw ParseError("SymElement must be an array");
    SymElementQ1 out;
    for (const auto &t : j) out.add(factors_from_json(t.at("factors")), rational_from_json(t.at("coeff")));
    return out;
  });
}

MonomialSeq monomial_seq_from_json(const Json &j) {
  return guarded([&] {
    if (!j.is_array() || j.empty()) throw ParseError("MonomialSeq must be a nonempty array of [a, b]");
    std::vector<ExpPair> pairs;
    for (const auto &p : j) {
      if (!p.is_array() || p.size() != 2) throw ParseError("pair must be [a, b]");
      pairs.push_back({p[0].get<std::uint32_t>(), p[1].get<std::uint32_t>()});
    }
    return MonomialSeq(std::move(pairs));
  });
}

MWElement evaluated(const MWElement &u, const BigRational &at) {
  MWElement out;
  for (const auto &[m, c] : specialize_q(u, at)) out.add(m, QPoly(c));
  return out;
}

SymElement evaluated(const SymElement &s, const BigRational &at) {
  SymElement out;
  for (const auto &[mono, c] : s.terms()) out.add(mono, QPoly(eval_at(c, at)));
  return out;
}

} // namespace qweyl
