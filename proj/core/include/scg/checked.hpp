#ifndef SCG_CHECKED_HPP
#define SCG_CHECKED_HPP

#include <cstdint>

#include "scg/errors.hpp"

namespace scg {

// Exponent and length arithmetic is exact or fails loudly; wraparound would
// silently corrupt words whose letter counts reach the billions.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("int64 overflow in addition");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("int64 overflow in multiplication");
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
  if (a == INT64_MIN) throw overflow_error("int64 overflow in negation");
  return -a;
}

inline std::int64_t checked_abs(std::int64_t a) { return a < 0 ? checked_neg(a) : a; }

}  // namespace scg

#endif
