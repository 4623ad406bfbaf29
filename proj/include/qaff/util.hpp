#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qaff {

enum class errc {
  division_by_zero,
  pole_at_sample,
  alpha_branch_missing,
  index_out_of_range,
  rank_out_of_range,
  direction_mismatch,
  cutoff_too_small,
  degree_overflow,
  dimension_mismatch,
  no_solution,
  not_proportional,
  neither_orientation,
  sample_hits_pole,
  inconsistent_quotient,
  non_separable,
  insufficient_degree,
  config_error,
  internal_fault,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::division_by_zero:     return "division-by-zero";
    case errc::pole_at_sample:       return "pole-at-sample";
    case errc::alpha_branch_missing: return "alpha-branch-missing";
    case errc::index_out_of_range:   return "index-out-of-range";
    case errc::rank_out_of_range:    return "rank-out-of-range";
    case errc::direction_mismatch:   return "direction-mismatch";
    case errc::cutoff_too_small:     return "cutoff-too-small";
    case errc::degree_overflow:      return "degree-overflow";
    case errc::dimension_mismatch:   return "dimension-mismatch";
    case errc::no_solution:          return "no-solution";
    case errc::not_proportional:     return "not-proportional-to-identity";
    case errc::neither_orientation:  return "neither-orientation";
    case errc::sample_hits_pole:     return "sample-hits-pole";
    case errc::inconsistent_quotient:return "inconsistent-quotient";
    case errc::non_separable:        return "non-separable";
    case errc::insufficient_degree:  return "insufficient-degree";
    case errc::config_error:         return "config-error";
    case errc::internal_fault:       return "internal-fault";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

// FNV-1a, used to fingerprint the convention ledger embedded in outputs.
inline std::uint64_t fnv1a64(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// Exponents in (1/2)Z are stored as twice their value. Integer exponents are
// even `Half`s; the suffix makes call sites explicit.
using Half = int;
inline constexpr Half half_of(int twice) { return twice; }
inline constexpr Half whole(int n) { return 2 * n; }
inline constexpr bool is_whole(Half h) { return (h % 2) == 0; }

}  // namespace qaff
