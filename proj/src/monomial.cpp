#include "maxvar/monomial.hpp"

#include <limits>

#include "maxvar/error.hpp"

namespace maxvar {

Monomial Monomial::from_exponents(std::span<const int> exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVariables)) {
    throw Error(ErrorCode::VariableOutOfRange,
                "at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  std::uint64_t packed = 0;
  int total = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    int e = exponents[i];
    if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
    total += e;
    if (total > kMaxDegree) {
      throw Error(ErrorCode::DegreeOverflow,
                  "monomial degree exceeds " + std::to_string(kMaxDegree));
    }
    packed |= static_cast<std::uint64_t>(e) << shift(static_cast<int>(i));
  }
  return Monomial(packed);
}

Monomial Monomial::variable(int index, int power) {
  if (index < 0 || index >= kMaxVariables) {
    throw Error(ErrorCode::VariableOutOfRange, "variable index " + std::to_string(index));
  }
  if (power < 0 || power > kMaxDegree) {
    throw Error(ErrorCode::DegreeOverflow, "exponent " + std::to_string(power));
  }
  return Monomial(static_cast<std::uint64_t>(power) << shift(index));
}

int Monomial::degree() const noexcept {
  int total = 0;
  for (std::uint64_t w = packed_; w != 0; w >>= 7) total += static_cast<int>(w & 0x7f);
  return total;
}

std::vector<int> Monomial::exponents(int num_vars) const {
  std::vector<int> out(static_cast<std::size_t>(num_vars));
  for (int i = 0; i < num_vars; ++i) out[static_cast<std::size_t>(i)] = exponent(i);
  return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const noexcept {
  if (auto c = degree() <=> other.degree(); c != 0) return c;
  return packed_ <=> other.packed_;
}

std::string Monomial::to_string() const {
  std::string out;
  for (int i = 0; i < kMaxVariables; ++i) {
    int e = exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::uint64_t binomial(std::int64_t m, std::int64_t k) {
  if (k < 0 || m < 0 || k > m) return 0;
  if (k > m - k) k = m - k;
  unsigned __int128 result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result = result * static_cast<unsigned __int128>(m - k + i) / static_cast<unsigned __int128>(i);
    if (result > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t monomial_count(int n, int p) {
  if (n < 0 || p < 0) return 0;
  return binomial(n + p, n);
}

namespace {

void enumerate_into(int var, int n, int remaining, std::array<int, kMaxVariables>& exps,
                    std::vector<Monomial>& out) {
  if (var == n) {
    exps[static_cast<std::size_t>(var)] = remaining;
    out.push_back(Monomial::from_exponents(std::span<const int>(exps.data(), static_cast<std::size_t>(n) + 1)));
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[static_cast<std::size_t>(var)] = e;
    enumerate_into(var + 1, n, remaining - e, exps, out);
  }
}

}  // namespace

std::vector<Monomial> enumerate_monomials(int n, int p) {
  if (n < 0 || n > kMaxDimension) {
    throw Error(ErrorCode::VariableOutOfRange, "dimension " + std::to_string(n) + " outside 0.." +
                                                   std::to_string(kMaxDimension));
  }
  if (p < 0 || p > kMaxDegree) throw Error(ErrorCode::DegreeOverflow, "degree " + std::to_string(p));
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(monomial_count(n, p)));
  std::array<int, kMaxVariables> exps{};
  enumerate_into(0, n, p, exps, out);
  return out;
}

namespace {

// C(m, k) for m <= kMaxDegree + kMaxVariables, k <= kMaxVariables; every
// entry fits in 64 bits.
constexpr int kTableRows = kMaxDegree + kMaxVariables + 1;
using BinomialTable = std::array<std::array<std::uint64_t, kMaxVariables + 1>, kTableRows>;

constexpr BinomialTable make_binomial_table() {
  BinomialTable t{};
  for (int m = 0; m < kTableRows; ++m) {
    t[static_cast<std::size_t>(m)][0] = 1;
    for (int k = 1; k <= kMaxVariables; ++k) {
      t[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] =
          m == 0 ? 0
                 : t[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(k - 1)] +
                       t[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(k)];
    }
  }
  return t;
}

constexpr BinomialTable kBinomial = make_binomial_table();

}  // namespace

std::size_t monomial_index(int n, const Monomial& m) {
  // Monomials before m are those that agree on x_0..x_{i-1} and have a larger
  // exponent at x_i; for fixed i the count is a hockey-stick sum
  // C(r - a_i - 1 + k, k) with r the remaining degree and k = n - i.
  std::size_t index = 0;
  int remaining = m.degree();
  for (int i = 0; i < n; ++i) {
    int a = m.exponent(i);
    int k = n - i;
    if (remaining > a) {
      index += static_cast<std::size_t>(kBinomial[static_cast<std::size_t>(remaining - a - 1 + k)][static_cast<std::size_t>(k)]);
    }
    remaining -= a;
  }
  return index;
}

}  // namespace maxvar
