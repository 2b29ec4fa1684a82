#pragma once

#include <cstdint>
#include <string>

namespace maxvar {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t value);

/// 2^62 - 57, the largest prime below 2^62.
inline constexpr std::uint64_t kDefaultPrime = (std::uint64_t{1} << 62) - 57;

/// The prime field Z/pZ with 2 <= p < 2^62. Elements are plain uint64_t
/// representatives in [0, p); all arithmetic goes through the field object.
class PrimeField {
 public:
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t modulus);

  std::uint64_t modulus() const noexcept { return p_; }

  Element reduce(std::int64_t value) const noexcept;
  Element reduce_unsigned(std::uint64_t value) const noexcept { return value % p_; }

  Element add(Element a, Element b) const noexcept {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const noexcept {
    return static_cast<Element>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Element pow(Element base, std::uint64_t exponent) const noexcept;
  /// Inverse of a nonzero element (Fermat). Undefined for zero.
  Element inv(Element a) const noexcept;

  /// Shoup's precomputation floor(w * 2^64 / p) for repeated products by w.
  Element precondition(Element w) const noexcept {
    return static_cast<Element>((static_cast<unsigned __int128>(w) << 64) / p_);
  }
  /// w * b mod p given w_pre = precondition(w). Requires b < p.
  Element mul_precon(Element b, Element w, Element w_pre) const noexcept {
    std::uint64_t q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(w_pre) * b) >> 64);
    std::uint64_t r = w * b - q * p_;
    return r >= p_ ? r - p_ : r;
  }

  /// Symmetric representative in (-p/2, p/2].
  std::int64_t signed_value(Element a) const noexcept {
    return a > p_ / 2 ? -static_cast<std::int64_t>(p_ - a) : static_cast<std::int64_t>(a);
  }

  bool operator==(const PrimeField& other) const noexcept { return p_ == other.p_; }

 private:
  std::uint64_t p_;
};

}  // namespace maxvar
