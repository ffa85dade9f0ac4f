#pragma once

#include "oracles.hpp"

#include "qweyl/freealg.hpp"
#include "qweyl/qpoly.hpp"

#include <doctest.h>

#include <random>

namespace testing {

inline qweyl::QPoly to_qpoly(const oracle::Poly &p) {
  std::vector<qweyl::BigRational> c(p.begin(), p.end());
  return qweyl::QPoly(std::move(c));
}

inline qweyl::MWElement to_element(const oracle::Normal &n) {
  qweyl::MWElement u;
  for (const auto &[m, c] : n) u.add({m.first, m.second}, to_qpoly(c));
  return u;
}

/// q written as a polynomial, for readable expectations.
inline const qweyl::QPoly q = qweyl::QPoly::monomial(1);

inline qweyl::QPoly random_poly(std::mt19937_64 &rng) {
  std::uniform_int_distribution<int> deg(-1, 5), num(-40, 40), den(1, 9);
  std::vector<qweyl::BigRational> c;
  for (int d = deg(rng); d >= 0; --d) c.emplace_back(num(rng), den(rng));
  return qweyl::QPoly(std::move(c));
}

inline qweyl::MWElement random_element(std::mt19937_64 &rng, unsigned max_terms, unsigned max_exp) {
  std::uniform_int_distribution<unsigned> terms(0, max_terms), e(0, max_exp);
  qweyl::MWElement u;
  for (unsigned i = terms(rng); i > 0; --i) u.add({e(rng), e(rng)}, random_poly(rng));
  return u;
}

} // namespace testing
