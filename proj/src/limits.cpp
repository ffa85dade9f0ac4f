#include "qweyl/limits.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>

namespace qweyl {

Limits Limits::from_env() {
  Limits lim;
  const char *raw = std::getenv("QWEYL_MAX_GUARD");
  if (raw == nullptr) return lim;
  unsigned value = 0;
  auto [end, ec] = std::from_chars(raw, raw + std::strlen(raw), value);
  if (ec != std::errc{} || *end != '\0' || value == 0) return lim;
  for (unsigned *field : {&lim.inversion_n, &lim.word_length, &lim.subset_a, &lim.map_total, &lim.sym_n, &lim.sym_m})
    *field = std::max(*field, value);
  return lim;
}

const Limits &default_limits() {
  static const Limits lim = Limits::from_env();
  return lim;
}

void require_within(const char *what, unsigned long value, unsigned long bound) {
  if (value > bound)
    throw GuardError(std::string(what) + " = " + std::to_string(value) + " exceeds guard " + std::to_string(bound) +
                     " (raise with QWEYL_MAX_GUARD)");
}

} // namespace qweyl
