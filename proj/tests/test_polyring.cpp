#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <climits>

#include "maxvar/error.hpp"
#include "maxvar/form.hpp"
#include "maxvar/random.hpp"
#include "support/oracle.hpp"

using namespace maxvar;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::InvalidArgument;
}

std::size_t parse_position(std::string_view text, int n, const PrimeField& field) {
  try {
    parse_form(text, n, field);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("expected a parse error");
  return 0;
}

HomogeneousForm random_dense(const PrimeField& field, int n, int d, RandomStream& rng) {
  std::vector<Term> terms;
  for (const Monomial& m : enumerate_monomials(n, d)) terms.push_back({m, rng.below(field.modulus())});
  return HomogeneousForm(field, n, d, std::move(terms));
}

}  // namespace

TEST_CASE("primality") {
  for (std::uint64_t p : std::initializer_list<std::uint64_t>{2ULL, 3ULL, 5ULL, 101ULL, 10007ULL, 1000003ULL, 998244353ULL, (1ULL << 61) - 1, kDefaultPrime}) {
    CHECK(is_prime(p));
  }
  for (std::uint64_t c : std::initializer_list<std::uint64_t>{0ULL, 1ULL, 4ULL, 561ULL, 1105ULL, 3215031751ULL, (1ULL << 62) - 1, 1000001ULL * 1000003ULL}) {
    CHECK_FALSE(is_prime(c));
  }
  // small cross-check against trial division
  for (std::uint64_t v = 0; v < 2000; ++v) {
    bool trial = v >= 2;
    for (std::uint64_t q = 2; q * q <= v; ++q) trial = trial && v % q != 0;
    CHECK(is_prime(v) == trial);
  }
}

TEST_CASE("field construction is validated") {
  CHECK(code_of([] { PrimeField f(1ULL << 62); }) == ErrorCode::InvalidPrime);
  CHECK(code_of([] { PrimeField f(10); }) == ErrorCode::InvalidPrime);
  CHECK(code_of([] { PrimeField f(1); }) == ErrorCode::InvalidPrime);
  CHECK(PrimeField(kDefaultPrime).modulus() == (1ULL << 62) - 57);
}

TEST_CASE("field arithmetic against 128-bit reference") {
  RandomStream rng(11);
  for (std::uint64_t p : std::initializer_list<std::uint64_t>{2ULL, 7ULL, 10007ULL, kDefaultPrime}) {
    PrimeField f(p);
    for (int i = 0; i < 500; ++i) {
      std::uint64_t a = rng.below(p);
      std::uint64_t b = rng.below(p);
      CHECK(f.add(a, b) == oracle::addmod(a, b, p));
      CHECK(f.sub(a, b) == oracle::submod(a, b, p));
      CHECK(f.mul(a, b) == oracle::mulmod(a, b, p));
      CHECK(f.mul_precon(b, a, f.precondition(a)) == oracle::mulmod(a, b, p));
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.add(a, f.neg(a)) == 0);
    }
  }
}

TEST_CASE("signed reduction") {
  PrimeField f(10007);
  CHECK(f.reduce(-1) == 10006);
  CHECK(f.reduce(10008) == 1);
  CHECK(f.reduce(INT64_MIN) == f.neg(static_cast<std::uint64_t>(9223372036854775807ULL % 10007 + 1) % 10007));
  CHECK(f.signed_value(10006) == -1);
  CHECK(f.signed_value(5003) == 5003);
  CHECK(f.signed_value(5004) == -5003);
}

TEST_CASE("monomial packing and order") {
  Monomial m = Monomial::variable(0, 2) * Monomial::variable(3);
  CHECK(m.degree() == 3);
  CHECK(m.exponent(0) == 2);
  CHECK(m.exponent(3) == 1);
  CHECK(m.to_string() == "x0^2*x3");
  CHECK(Monomial().to_string() == "1");
  CHECK(Monomial::variable(0) > Monomial::variable(1));
  CHECK(Monomial::variable(8, 2) > Monomial::variable(0));  // degree first
  CHECK(code_of([] { Monomial::variable(9); }) == ErrorCode::VariableOutOfRange);
  CHECK(code_of([] { Monomial::variable(0, 128); }) == ErrorCode::DegreeOverflow);
  std::vector<int> too_big{100, 28};
  CHECK(code_of([&] { Monomial::from_exponents(too_big); }) == ErrorCode::DegreeOverflow);
}

TEST_CASE("enumeration is descending and indexed consistently") {
  for (int n = 0; n <= 5; ++n) {
    for (int p = 0; p <= 7; ++p) {
      auto mons = enumerate_monomials(n, p);
      REQUIRE(mons.size() == monomial_count(n, p));
      REQUIRE(mons.size() == oracle::monomials(n + 1, p).size());
      for (std::size_t i = 0; i < mons.size(); ++i) {
        CHECK(monomial_index(n, mons[i]) == i);
        if (i > 0) CHECK(mons[i - 1] > mons[i]);
      }
    }
  }
  CHECK(monomial_count(4, 21) == 12650);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(200, 100) == UINT64_MAX);
}

TEST_CASE("forms are canonical") {
  PrimeField f(101);
  Monomial a = Monomial::variable(0, 2);
  Monomial b = Monomial::variable(0) * Monomial::variable(1);
  HomogeneousForm g(f, 1, 2, {{b, 3}, {a, 5}, {b, 98}, {a, 1}});
  REQUIRE(g.terms().size() == 1);  // 3 + 98 = 0 mod 101
  CHECK(g.terms()[0].monomial == a);
  CHECK(g.coefficient(a) == 6);
  CHECK(g.coefficient(b) == 0);
  CHECK(code_of([&] { HomogeneousForm(f, 1, 3, {{a, 1}}); }) == ErrorCode::NotHomogeneous);
  CHECK(code_of([&] { HomogeneousForm(f, 0, 2, {{b, 1}}); }) == ErrorCode::VariableOutOfRange);
  CHECK(HomogeneousForm(f, 2, 3).to_string() == "0");
}

TEST_CASE("printing uses symmetric coefficients and round-trips") {
  PrimeField f(10007);
  HomogeneousForm g = parse_form("x0^4 + 2*x0*x1^3 - 7*x2^4", 2, f);
  CHECK(g.to_string() == "x0^4 + 2*x0*x1^3 - 7*x2^4");
  RandomStream rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng.below(4));
    int d = 1 + static_cast<int>(rng.below(5));
    HomogeneousForm r = random_dense(f, n, d, rng);
    CHECK(parse_form(r.to_string(), n, f) == r);
  }
}

TEST_CASE("parser accepts the grammar") {
  PrimeField f(10007);
  CHECK(parse_form("-x0*x1 + 3 x1 x2", 2, f) == parse_form("3*x1*x2 - x0*x1", 2, f));
  CHECK(parse_form("x0^2*x0", 0, f) == parse_form("x0^3", 0, f));
  CHECK(parse_form("20014*x0 + x1", 1, f).to_string() == "x1");  // 20014 = 2p
  CHECK(parse_form("7", 3, f).degree() == 0);
  CHECK(parse_form("  x0\n + x1 ", 1, f).terms().size() == 2);
}

TEST_CASE("parser errors carry positions") {
  PrimeField f(10007);
  CHECK(parse_position("x0^2 + x1", 1, f) == 7);
  CHECK(parse_position("x0 + x5", 3, f) == 5);
  CHECK(parse_position("1/2*x0", 1, f) == 1);
  CHECK(parse_position("x0 ++ x1", 1, f) == 4);
  CHECK(parse_position("", 1, f) == 0);
  CHECK(parse_position("x0 + ", 1, f) == 5);
  CHECK(parse_position("x0 * * x1", 1, f) == 5);
  CHECK(code_of([&] { parse_form("x0^2 + x1", 1, f); }) == ErrorCode::NotHomogeneous);
  CHECK(code_of([&] { parse_form("x4", 3, f); }) == ErrorCode::VariableOutOfRange);
  CHECK(code_of([&] { parse_form("1.5*x0", 1, f); }) == ErrorCode::SyntaxError);
  CHECK(code_of([&] { parse_form("x0^200", 1, f); }) == ErrorCode::DegreeOverflow);
}

TEST_CASE("arithmetic and derivatives") {
  PrimeField f(10007);
  HomogeneousForm g = parse_form("x0^2 + x1*x2", 2, f);
  HomogeneousForm h = parse_form("x0 - x2", 2, f);
  CHECK(multiply(g, h) == multiply(h, g));
  CHECK(multiply(g, h) == parse_form("x0^3 - x0^2*x2 + x0*x1*x2 - x1*x2^2", 2, f));
  auto parts = partial_derivatives(parse_form("x0^3 + 5*x0*x1^2", 1, f));
  CHECK(parts[0] == parse_form("3*x0^2 + 5*x1^2", 1, f));
  CHECK(parts[1] == parse_form("10*x0*x1", 1, f));
  CHECK(code_of([&] { partial_derivatives(parse_form("3", 1, f)); }) == ErrorCode::DegreeZero);
  CHECK(code_of([&] { multiply(g, parse_form("x0", 1, f)); }) == ErrorCode::DimensionMismatch);
  CHECK(code_of([&] { (void)(g + h); }) == ErrorCode::DegreeMismatch);
  CHECK((g - g).is_zero());
  CHECK(g.scaled(0).is_zero());
}

TEST_CASE("derivatives agree with the naive oracle") {
  PrimeField f(10007);
  RandomStream rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    HomogeneousForm g = random_dense(f, 3, 4, rng);
    auto ours = partial_derivatives(g);
    auto ref = oracle::partials(oracle::from_form(g), f.modulus());
    for (std::size_t i = 0; i < ours.size(); ++i) {
      auto converted = oracle::from_form(ours[i]);
      CHECK(converted.terms == ref[i].terms);
    }
  }
}

TEST_CASE("Euler identity holds and detects corrupted partials") {
  PrimeField f(10007);
  RandomStream rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    HomogeneousForm g = random_dense(f, 3, 5, rng);
    CHECK(euler_check(g));
    auto parts = partial_derivatives(g);
    std::size_t victim = rng.below(parts.size());
    std::vector<Term> extra{{Monomial::variable(static_cast<int>(victim), 4), 1}};
    parts[victim] = parts[victim] + HomogeneousForm(f, 3, 4, extra);
    CHECK_FALSE(euler_identity_holds(g, parts));
  }
  CHECK(fermat_form(f, 2, 3) == parse_form("x0^3 + x1^3 + x2^3", 2, f));
}
