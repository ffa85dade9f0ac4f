#include "qweyl/qpoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qweyl {

namespace {
const BigRational kZero{};
}

QPoly::QPoly(BigRational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

QPoly::QPoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(std::size_t degree, BigRational c) {
  if (c.is_zero()) return {};
  std::vector<BigRational> coeffs(degree + 1);
  coeffs[degree] = std::move(c);
  return QPoly(std::move(coeffs));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const BigRational &QPoly::operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : kZero; }

bool QPoly::is_natural() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRational &c) { return c.is_integer() && c.sign() >= 0; });
}

QPoly QPoly::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<BigRational> coeffs(k);
  coeffs.insert(coeffs.end(), coeffs_.begin(), coeffs_.end());
  QPoly out;
  out.coeffs_ = std::move(coeffs);
  return out;
}

QPoly &QPoly::operator+=(const QPoly &rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly &QPoly::operator-=(const QPoly &rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly &lhs, const QPoly &rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<BigRational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return QPoly(std::move(out));
}

QPoly &QPoly::operator*=(const QPoly &rhs) { return *this = *this * rhs; }

QPoly &QPoly::operator*=(const BigRational &scalar) {
  if (scalar.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto &c : coeffs_) c *= scalar;
  return *this;
}

QPoly &QPoly::operator/=(const BigRational &scalar) {
  if (scalar.is_zero()) throw std::domain_error("QPoly division by zero");
  for (auto &c : coeffs_) c /= scalar;
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly out = *this;
  for (auto &c : out.coeffs_) c = -c;
  return out;
}

BigRational eval_at(const QPoly &p, const BigRational &at) {
  BigRational acc;
  auto coeffs = p.coefficients();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

QPoly qbracket(unsigned n) { return QPoly(std::vector<BigRational>(n, BigRational(1))); }

QPoly qfactorial(unsigned n) {
  QPoly out = 1;
  for (unsigned k = 1; k <= n; ++k) out *= qbracket(k);
  return out;
}

QPoly qrising(unsigned b, unsigned a) {
  QPoly out = 1;
  for (unsigned i = 0; i < a; ++i) out *= qbracket(b + i);
  return out;
}

BigInt rising(unsigned long n, unsigned long k) {
  BigInt out = 1;
  for (unsigned long i = 0; i < k; ++i) out *= BigInt(n + i);
  return out;
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Permutation::Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (unsigned v : images_) {
    if (v == 0 || v > images_.size() || seen[v]) throw std::invalid_argument("not a permutation of 1..n");
    seen[v] = true;
  }
}

Permutation Permutation::identity(unsigned n) {
  std::vector<unsigned> images(n);
  std::iota(images.begin(), images.end(), 1u);
  return Permutation(std::move(images));
}

unsigned Permutation::inversions() const {
  unsigned count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j]) ++count;
  return count;
}

bool Permutation::next() { return std::next_permutation(images_.begin(), images_.end()); }

QPoly inversion_gf(unsigned n, const Limits &limits) {
  require_within("inversion_gf n", n, limits.inversion_n);
  std::vector<BigRational> histogram(n * (n > 0 ? n - 1 : 0) / 2 + 1);
  Permutation sigma = Permutation::identity(n);
  do {
    histogram[sigma.inversions()] += 1;
  } while (sigma.next());
  return QPoly(std::move(histogram));
}

} // namespace qweyl
