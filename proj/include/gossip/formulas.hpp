#pragma once

// Closed forms for the partial gossip number P(n, k).
//
// The threshold sequence t_i(k) = i + 2^(k-i-2), -1 <= i <= k-4, splits the
// range n < 2^(k-1) - 1 into bands t_i <= n < t_{i-1} on which P(n,k) = n + i.
// Above the top threshold P(n,k) = ceil((2^(k-1) - 1) n / 2^(k-1)).
// For k in {2, 3} the banded range is empty and every n falls in regime 1.
//
// Everything is exact 64-bit integer arithmetic; k is capped at 62 so that
// 2^(k-1) fits.

#include <cstdint>
#include <optional>
#include <string>

#include "gossip/errors.hpp"

namespace gossip::formulas {

inline constexpr std::int64_t kMaxK = 62;

enum class RegimeKind { Regime1 = 1, Regime2 = 2 };

struct TRegime {
  RegimeKind kind = RegimeKind::Regime1;
  std::optional<std::int64_t> index;  // only for Regime2

  friend bool operator==(const TRegime&, const TRegime&) = default;
};

namespace detail {

inline std::int64_t pow2(std::int64_t e) {
  if (e < 0 || e > 62) throw ArithmeticError("2^" + std::to_string(e) + " out of range");
  return std::int64_t{1} << e;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticError("integer overflow in addition");
  return r;
}

inline void check_k(std::int64_t k) {
  if (k > kMaxK) throw DomainError("k = " + std::to_string(k) + " exceeds the supported maximum 62");
}

}  // namespace detail

/// t_i(k) = i + 2^(k-i-2).
inline std::int64_t t_value(std::int64_t i, std::int64_t k) {
  if (k < 3) throw DomainError("t_i(k) needs k >= 3");
  detail::check_k(k);
  if (i < -1 || i > k - 4) {
    throw DomainError("index i = " + std::to_string(i) + " outside [-1, " + std::to_string(k - 4) +
                      "] for k = " + std::to_string(k));
  }
  return detail::checked_add(i, detail::pow2(k - i - 2));
}

inline TRegime classify_regime(std::int64_t n, std::int64_t k) {
  if (k < 2) throw DomainError("k must be at least 2");
  if (n < k) throw DomainError("n = " + std::to_string(n) + " < k = " + std::to_string(k));
  detail::check_k(k);
  if (n >= detail::pow2(k - 1) - 1) return {RegimeKind::Regime1, std::nullopt};
  // k >= 4 here: for k <= 3 the top threshold is <= k <= n.
  for (std::int64_t i = 0; i <= k - 4; ++i) {
    if (t_value(i, k) <= n && n < t_value(i - 1, k)) return {RegimeKind::Regime2, i};
  }
  throw DomainError("no regime for n = " + std::to_string(n) + ", k = " + std::to_string(k));
}

/// Minimum number of calls after which each of n persons knows >= k gossips.
inline std::int64_t p_min_calls(std::int64_t n, std::int64_t k) {
  const TRegime r = classify_regime(n, k);
  if (r.kind == RegimeKind::Regime2) return detail::checked_add(n, *r.index);
  // ceil((2^(k-1) - 1) n / 2^(k-1)) without forming the product
  return n - n / detail::pow2(k - 1);
}

/// Smallest tree size in which one person can be k'-informed while all the
/// others are k-informed: 2^(k-2) + 2^(k-3) + ... (k'-1 terms) + 1.
inline std::int64_t tree_size_bound_one_weak(std::int64_t k, std::int64_t kp) {
  if (kp < 1) throw DomainError("k' must be at least 1");
  if (kp > k) throw DomainError("k' = " + std::to_string(kp) + " exceeds k = " + std::to_string(k));
  detail::check_k(k);
  // Sum of 2^(k-j) for j = 2..k' equals 2^(k-1) - 2^(k-k').
  if (kp == 1) return 1;
  return detail::pow2(k - 1) - detail::pow2(k - kp) + 1;
}

}  // namespace gossip::formulas
