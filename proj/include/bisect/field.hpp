#pragma once

#include <compare>
#include <cstdint>
#include <optional>

#include "bisect/errors.hpp"

namespace bisect {

/// Canonical residue in [0, p). Values are only produced by PrimeField
/// operations, which keep them reduced.
struct Fe {
  std::uint32_t v = 0;
  friend auto operator<=>(const Fe&, const Fe&) = default;
};

/// The prime field F_p for an odd prime p <= 2^31 - 1.
///
/// All arithmetic runs in 64-bit integers with reduction after every
/// multiply, so no intermediate can overflow. Instances are immutable and
/// safe to share across threads.
class PrimeField {
 public:
  /// Validates that p is an odd prime in [3, 2^31 - 1].
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  int residue_class_mod_4() const { return static_cast<int>(p_ % 4); }

  /// The canonical i with i*i = -1 (smallest such residue); present iff
  /// p = 1 mod 4.
  std::optional<Fe> sqrt_minus_one() const { return sqrt_minus_one_; }

  Fe element(std::uint32_t x) const { return Fe{x % p_}; }
  Fe reduce(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return Fe{static_cast<std::uint32_t>(r)};
  }

  Fe add(Fe a, Fe b) const {
    std::uint64_t s = static_cast<std::uint64_t>(a.v) + b.v;
    if (s >= p_) s -= p_;
    return Fe{static_cast<std::uint32_t>(s)};
  }
  Fe sub(Fe a, Fe b) const {
    return a.v >= b.v ? Fe{a.v - b.v} : Fe{a.v + p_ - b.v};
  }
  Fe neg(Fe a) const { return a.v == 0 ? a : Fe{p_ - a.v}; }
  Fe mul(Fe a, Fe b) const {
    return Fe{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.v) * b.v % p_)};
  }
  Fe square(Fe a) const { return mul(a, a); }

  Fe pow(Fe a, std::uint64_t e) const;

  /// Multiplicative inverse; throws ZeroInverse on 0.
  Fe inverse(Fe a) const;

  /// a / 2 (characteristic is odd, so 2 is invertible).
  Fe half(Fe a) const;

  /// Euler criterion; 0 counts as a square.
  bool is_square(Fe a) const;

  /// Smallest nonnegative square root of a, or nullopt when a is a
  /// non-residue. Exhaustive search below 10^4, Tonelli-Shanks above.
  std::optional<Fe> sqrt(Fe a) const;

  friend bool operator==(const PrimeField& lhs, const PrimeField& rhs) { return lhs.p_ == rhs.p_; }

 private:
  std::uint32_t p_;
  std::optional<Fe> sqrt_minus_one_;
};

/// True iff p is prime (trial division; p <= 2^31 - 1 keeps this cheap).
bool is_prime(std::uint32_t p);

}  // namespace bisect
