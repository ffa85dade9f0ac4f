#pragma once

#include <stdexcept>
#include <string>

namespace qweyl {

/// An enumeration or rewriting bound was exceeded.
class GuardError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (words, exponent sequences, grids, rationals).
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Size bounds for the brute-force paths.  Every bound is inclusive.
struct Limits {
  unsigned inversion_n = 9;    // |S_n| = n! permutations enumerated
  unsigned word_length = 64;   // letters handed to the rewriting engine
  unsigned subset_a = 20;      // 2^a subsets / chains in c_subsets, c_tform
  unsigned map_total = 14;     // sum of all exponents for mk_count
  unsigned sym_n = 4;          // tensor factors in Sym^n
  unsigned sym_m = 4;          // number of multiplied Sym^n elements

  /// Defaults, each raised to QWEYL_MAX_GUARD when that variable holds a
  /// larger positive integer.  Malformed values are ignored.
  static Limits from_env();

  friend bool operator==(const Limits &, const Limits &) = default;
};

/// Limits::from_env(), evaluated once per process.
const Limits &default_limits();

/// Throws GuardError naming `what` when value > bound.
void require_within(const char *what, unsigned long value, unsigned long bound);

} // namespace qweyl
