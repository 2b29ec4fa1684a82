#include "maxvar/field.hpp"

#include "maxvar/error.hpp"

namespace maxvar {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e != 0) {
    if (e & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

}  // namespace

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidPrime: return "InvalidPrime";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::VariableOutOfRange: return "VariableOutOfRange";
    case ErrorCode::SizeGuardExceeded: return "SizeGuardExceeded";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::HilbertMismatch: return "HilbertMismatch";
    case ErrorCode::CacheMismatch: return "CacheMismatch";
    case ErrorCode::FormatError: return "FormatError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a proven witness set below 3.3 * 10^24.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t modulus) : p_(modulus) {
  if (modulus >= (std::uint64_t{1} << 62)) {
    throw Error(ErrorCode::InvalidPrime, "modulus " + std::to_string(modulus) + " must be below 2^62");
  }
  if (!is_prime(modulus)) {
    throw Error(ErrorCode::InvalidPrime, "modulus " + std::to_string(modulus) + " is not prime");
  }
}

PrimeField::Element PrimeField::reduce(std::int64_t value) const noexcept {
  if (value >= 0) return static_cast<Element>(value) % p_;
  // Negate in unsigned arithmetic so INT64_MIN is handled.
  Element magnitude = (~static_cast<std::uint64_t>(value) + 1) % p_;
  return neg(magnitude);
}

PrimeField::Element PrimeField::pow(Element base, std::uint64_t exponent) const noexcept {
  return powmod(base, exponent, p_);
}

PrimeField::Element PrimeField::inv(Element a) const noexcept { return powmod(a, p_ - 2, p_); }

}  // namespace maxvar
