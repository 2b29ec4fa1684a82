#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace maxvar {

/// At most nine variables x_0..x_8 (projective dimension n <= 8).
inline constexpr int kMaxVariables = 9;
inline constexpr int kMaxDimension = kMaxVariables - 1;
/// Exponents and total degrees are bounded so a monomial packs into 63 bits.
inline constexpr int kMaxDegree = 127;

/// A monomial x_0^a_0 ... x_8^a_8, packed seven bits per variable with x_0 in
/// the most significant field. Comparing packed words is lexicographic order
/// with x_0 > x_1 > ...; for monomials of equal degree that is also graded
/// lexicographic order. Every exponent and the total degree stay <= 127, so
/// multiplication is a single addition with no carries between fields.
class Monomial {
 public:
  Monomial() = default;

  /// Throws DegreeOverflow or VariableOutOfRange on bad exponent vectors.
  static Monomial from_exponents(std::span<const int> exponents);
  static Monomial variable(int index, int power = 1);

  int exponent(int index) const noexcept {
    return static_cast<int>((packed_ >> shift(index)) & 0x7f);
  }
  int degree() const noexcept;
  std::vector<int> exponents(int num_vars) const;

  std::uint64_t packed() const noexcept { return packed_; }
  static Monomial from_packed(std::uint64_t packed) noexcept { return Monomial(packed); }

  /// Caller guarantees degree() + other.degree() <= kMaxDegree.
  Monomial operator*(const Monomial& other) const noexcept { return Monomial(packed_ + other.packed_); }

  bool operator==(const Monomial&) const = default;
  /// Graded lexicographic order (degree first, then x_0 > x_1 > ...).
  std::strong_ordering operator<=>(const Monomial& other) const noexcept;

  /// Grammar form, e.g. "x0^2*x3"; the constant monomial prints as "1".
  std::string to_string() const;

 private:
  explicit Monomial(std::uint64_t packed) : packed_(packed) {}
  static constexpr int shift(int index) { return 7 * (kMaxVariables - 1 - index); }

  std::uint64_t packed_ = 0;
};

/// C(n+p, n), the number of degree-p monomials in n+1 variables. Saturates at
/// UINT64_MAX instead of overflowing.
std::uint64_t monomial_count(int n, int p);

/// Binomial coefficient with saturation; 0 when k < 0 or k > m.
std::uint64_t binomial(std::int64_t m, std::int64_t k);

/// All degree-p monomials in x_0..x_n, in descending graded-lex order
/// (x_0^p first, x_n^p last).
std::vector<Monomial> enumerate_monomials(int n, int p);

/// Position of `m` in enumerate_monomials(n, m.degree()).
std::size_t monomial_index(int n, const Monomial& m);

}  // namespace maxvar
