#pragma once

#include "qweyl/limits.hpp"
#include "qweyl/sympow.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qweyl {

/// Bounds for the consistency sweeps behind `qweyl verify`.
struct SweepOptions {
  unsigned max_a = 6;     // c(a,b,k): a <= max_a
  unsigned max_b = 6;     //           1 <= b <= max_b
  unsigned max_n = 3;     // factors in A / tensor factors in Sym^n
  unsigned max_m = 3;     // rows in a Sym^n product
  unsigned max_exp = 2;   // every exponent in A and in grids
  unsigned max_word = 6;  // word length for representation soundness
  unsigned random = 200;  // extra random normal-polynomial instances
  /// Grid shapes with more representatives than this are swept at the largest
  /// smaller exponent bound that fits, then sampled; 0 disables sampling.
  unsigned long max_grids = 100000;
  unsigned long samples = 4000; // random grids per oversized shape
  std::uint64_t seed = 20071017;
  bool printed = false;   // also compare printed variants of identities
  Limits limits = default_limits();
};

struct SuiteReport {
  std::string name;
  unsigned long cases = 0;
  unsigned long failures = 0;
  std::optional<std::string> first_failure;
  std::vector<std::string> notes;

  bool passed() const { return failures == 0; }
  /// Records one case; `describe` is called only for the first failure.
  void check(bool ok, const std::function<std::string()> &describe);
};

SuiteReport verify_c_coeffs(const SweepOptions &opt);
SuiteReport verify_npoly(const SweepOptions &opt);
SuiteReport verify_sympow(const SweepOptions &opt);
SuiteReport verify_representations(const SweepOptions &opt);
SuiteReport verify_identities(const SweepOptions &opt);

/// "c-coeffs", "npoly", "sympow", "representations", "identities" or "all".
/// Throws std::invalid_argument for any other name.
std::vector<SuiteReport> run_verify(std::string_view suite, const SweepOptions &opt);

/// Number of grids with `rows` rows, each a multiset of `cols` exponent pairs
/// with entries <= max_exp.  Rows are taken up to reordering because a Sym^n
/// element does not depend on the order of its tensor factors.
unsigned long long grid_count(unsigned cols, unsigned rows, unsigned max_exp);

/// Visits every grid counted by grid_count, in a fixed order.
void for_each_grid(unsigned cols, unsigned rows, unsigned max_exp, const std::function<void(const FactorGrid &)> &visit);

/// Every sequence A of length 1..max_n with entries <= max_exp.
void for_each_sequence(unsigned max_n, unsigned max_exp, const std::function<void(const MonomialSeq &)> &visit);

} // namespace qweyl
