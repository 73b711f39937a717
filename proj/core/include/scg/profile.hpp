#ifndef SCG_PROFILE_HPP
#define SCG_PROFILE_HPP

#include <cstdint>
#include <string>

#include "scg/presentation.hpp"

namespace scg {

/** Inclusive index interval; relator factors take exponent i^2 for i inside. */
struct block_range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  std::int64_t count() const { return hi - lo + 1; }
  bool contains(std::int64_t i) const { return lo <= i && i <= hi; }

  friend bool operator==(const block_range&, const block_range&) = default;
};

/** Numeric layout of an encoding: the torsion primes, the squared-exponent
    blocks of the u and v relator families, and the linear exponent window of
    the w family. The shipped default is the "paper" profile; smaller custom
    profiles are legitimate for fuzzing once verify_metric confirms the
    lambda target on the encoded instance. */
struct construction_profile {
  std::string scale = "paper";  // "paper" or "custom"
  std::int64_t p1 = 10'000'000'019;
  std::int64_t p2 = 10'000'000'033;
  block_range ua{1, 1000};
  block_range ub{1001, 2000};
  block_range uc{2001, 3000};
  block_range ud{3001, 4000};
  block_range v{4001, 5000};
  std::int64_t w_block_len = 100;
  ratio lambda_target{1, 20};

  // The w factors of symbol m use exponents w_base(m)+1 .. w_base(m)+w_block_len.
  std::int64_t w_base(std::int64_t m) const { return w_block_len * m; }

  friend bool operator==(const construction_profile&,
                         const construction_profile&) = default;
};

construction_profile paper_profile();

// Deterministic Miller-Rabin over the fixed witness set that is exact for
// every signed 64-bit input.
bool is_prime(std::int64_t n);

// Requirements: p1, p2 distinct proven primes, each above 2 * (largest block
// square) / lambda so torsion powers out-measure every piece a u or v relator
// can contribute; blocks nonempty, ascending, pairwise disjoint; positive w
// window; lambda in (0, 1/6]. Throws domain_error naming the failure.
void validate_profile(const construction_profile& p);

// One line of space-separated key=value entries ("p1=...", "ub=1001:2000",
// "lambda=1/20"); missing keys keep the default profile's values, unknown
// keys are errors.
construction_profile parse_profile(const std::string& text);
std::string serialize_profile(const construction_profile& p);

}  // namespace scg

#endif
