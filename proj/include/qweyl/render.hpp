#pragma once

#include "qweyl/freealg.hpp"
#include "qweyl/qrep.hpp"
#include "qweyl/sympow.hpp"

#include <json.hpp>

#include <string>

namespace qweyl {

using Json = nlohmann::json;

// Plain text.  QPoly: "1 + 2*q + 2*q^2 + q^3" (ascending degree, "0" for
// zero).  MWElement: "(q)*x^1*y^1 + (1)*x^2" in (b, c) order, "(1)" for the
// unit.  SymElement: "(q^3)*x1^2*y1^2*x2^4*y2^3" with canonical factor order.
std::string to_text(const BigRational &r);
std::string to_text(const QPoly &p);
std::string to_text(const MWElement &u);
std::string to_text(const SymElement &s);
std::string to_text(const SymElementQ1 &s);
std::string to_text(const LaurentFn &f);
std::string to_text(const MonomialSeq &seq);

// LaTeX in the usual notation: "q^{2}x^{2}y + (1+q)x^{3}", tensor factors
// subscripted as x_{1}, y_{1}.
std::string to_latex(const BigRational &r);
std::string to_latex(const QPoly &p);
std::string to_latex(const MWElement &u);
std::string to_latex(const SymElement &s);
std::string to_latex(const SymElementQ1 &s);

// JSON.  Every integer that may grow is a decimal string.
//   BigRational  ["num", "den"]
//   QPoly        [[degree, "num", "den"], ...]
//   MWElement    [{"x": b, "y": c, "coeff": QPoly}, ...]
//   SymElement   [{"factors": [[a, b], ...], "coeff": QPoly}, ...]
//   SymElementQ1 [{"factors": [[a, b], ...], "coeff": BigRational}, ...]
//   MonomialSeq  [[a, b], ...]
Json to_json(const BigRational &r);
Json to_json(const BigInt &z);
Json to_json(const QPoly &p);
Json to_json(const MWElement &u);
Json to_json(const SymElement &s);
Json to_json(const SymElementQ1 &s);
Json to_json(const MonomialSeq &seq);
Json to_json(const Limits &limits);

// Inverses of to_json; throw ParseError on schema violations.
BigRational rational_from_json(const Json &j);
BigInt bigint_from_json(const Json &j);
QPoly qpoly_from_json(const Json &j);
MWElement mwelement_from_json(const Json &j);
SymElement symelement_from_json(const Json &j);
SymElementQ1 symelement_q1_from_json(const Json &j);
MonomialSeq monomial_seq_from_json(const Json &j);

/// Coefficients of u replaced by their values at q = at, as constant polynomials.
MWElement evaluated(const MWElement &u, const BigRational &at);
SymElement evaluated(const SymElement &s, const BigRational &at);

} // namespace qweyl
