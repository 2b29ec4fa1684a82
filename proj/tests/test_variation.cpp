#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "maxvar/error.hpp"
#include "maxvar/variation.hpp"
#include "support/oracle.hpp"

using namespace maxvar;

namespace {

bool mentions_not_maximal(const VariationReport& r) {
  auto bad = [](const std::string& s) { return s.find("not maximal") != std::string::npos; };
  if (bad(r.detail) || bad(r.criterion)) return true;
  for (const auto& note : r.notes) {
    if (bad(note)) return true;
  }
  return false;
}

JacobianRing smooth_random_ring(const PrimeField& f, int n, int d, RandomStream& rng) {
  for (;;) {
    JacobianRing ring(random_integer_form(n, d, 20, rng).over(f));
    if (ring.certify_smooth().certified()) return ring;
  }
}

}  // namespace

TEST_CASE("gates") {
  CHECK(gate_violation(GeometryKind::Hypersurface, 3, 3).has_value());
  CHECK(gate_violation(GeometryKind::Hypersurface, 2, 4).has_value());
  CHECK(gate_violation(GeometryKind::Hypersurface, 3, 2).has_value());
  CHECK_FALSE(gate_violation(GeometryKind::Hypersurface, 3, 4).has_value());
  CHECK_FALSE(gate_violation(GeometryKind::Hypersurface, 4, 3).has_value());
  CHECK_FALSE(gate_violation(GeometryKind::Hypersurface, 3, 5).has_value());
  CHECK(gate_violation(GeometryKind::DoubleCover, 2, 4).has_value());
  CHECK(gate_violation(GeometryKind::DoubleCover, 3, 5).has_value());
  CHECK(gate_violation(GeometryKind::DoubleCover, 1, 6).has_value());
  CHECK_FALSE(gate_violation(GeometryKind::DoubleCover, 2, 6).has_value());
  CHECK_FALSE(gate_violation(GeometryKind::DoubleCover, 3, 4).has_value());

  PrimeField f(kDefaultPrime);
  for (auto [kind, n, d] : std::vector<std::tuple<GeometryKind, int, int>>{
           {GeometryKind::Hypersurface, 3, 3}, {GeometryKind::Hypersurface, 2, 4}, {GeometryKind::DoubleCover, 3, 5}}) {
    VariationReport r = maxvar::maxvar(GeometryInput{kind, fermat_form(f, n, d), 1}, 3, 0);
    CHECK(r.verdict == VariationVerdict::PreconditionViolated);
    CHECK_FALSE(r.detail.empty());
    CHECK_FALSE(r.ring_verdict.has_value());
  }
}

TEST_CASE("Fermat quartic surface") {
  PrimeField f(kDefaultPrime);
  JacobianRing ring = fermat_ring(3, 4, f);
  for (int e = 1; e <= 3; ++e) {
    VariationReport r = maxvar_hypersurface(ring, e, 3, 0);
    CHECK(r.verdict == VariationVerdict::MaximalVariationCertified);
    CHECK(r.source_degree == 4 - e);
    CHECK(r.target_dim == 19u);
    CHECK(r.rank == r.source_dim);
    CHECK_FALSE(r.witness.has_value());
  }
  CHECK(maxvar_hypersurface(ring, 1, 3, 0).source_dim == 16u);
  CHECK(maxvar_hypersurface(ring, 4, 3, 0).verdict == VariationVerdict::TriviallyCertified);
  VariationReport past = maxvar_hypersurface(ring, 5, 3, 0);
  CHECK(past.verdict == VariationVerdict::TriviallyCertified);
  CHECK_FALSE(past.ring_verdict.has_value());
}

TEST_CASE("cubic threefold") {
  PrimeField f(kDefaultPrime);
  JacobianRing ring = fermat_ring(4, 3, f);
  VariationReport r = maxvar_hypersurface(ring, 1, 3, 0);
  CHECK(r.verdict == VariationVerdict::MaximalVariationCertified);
  CHECK(r.source_dim == 10u);
  CHECK(r.target_dim == 10u);
  CHECK(r.rank == 10u);

  RandomStream rng(3);
  JacobianRing random = smooth_random_ring(f, 4, 3, rng);
  CHECK(maxvar_hypersurface(random, 1, 3, 0).certified());
}

TEST_CASE("K3 double cover of the plane") {
  PrimeField f(kDefaultPrime);
  JacobianRing ring = fermat_ring(2, 6, f);
  VariationReport r = maxvar_double_cover(ring, 1, 3, 0);
  CHECK(r.verdict == VariationVerdict::MaximalVariationCertified);
  CHECK(r.source_dim == 18u);
  CHECK(r.target_dim == 19u);
  CHECK(r.rank == 18u);
  CHECK(maxvar_double_cover(ring, 6, 3, 0).verdict == VariationVerdict::TriviallyCertified);
  CHECK(maxvar_double_cover(ring, 7, 3, 0).verdict == VariationVerdict::TriviallyCertified);
  CHECK(maxvar::maxvar(GeometryInput{GeometryKind::DoubleCover, fermat_form(f, 2, 6), 1}, 3, 0).certified());
}

TEST_CASE("both geometries share the ring predicate at e = 1") {
  PrimeField f(1'000'003);
  RandomStream rng(8);
  for (auto [n, d] : std::vector<std::pair<int, int>>{{3, 4}, {4, 4}, {3, 6}}) {
    JacobianRing ring = smooth_random_ring(f, n, d, rng);
    for (std::uint64_t seed = 0; seed < 2; ++seed) {
      VariationReport hyper = maxvar_hypersurface(ring, 1, 2, seed);
      VariationReport cover = maxvar_double_cover(ring, 1, 2, seed);
      REQUIRE(hyper.ring_verdict.has_value());
      REQUIRE(cover.ring_verdict.has_value());
      CHECK(*hyper.ring_verdict == *cover.ring_verdict);
      CHECK(*hyper.ring_verdict == injectivity_criterion(ring, 1, 2, seed));
      CHECK(hyper.verdict == cover.verdict);
    }
  }
}

TEST_CASE("double cover with 1 < e < d goes through e = 1") {
  PrimeField f(kDefaultPrime);
  JacobianRing ring = fermat_ring(2, 6, f);
  VariationReport one = maxvar_double_cover(ring, 1, 3, 0);
  for (int e = 2; e < 6; ++e) {
    VariationReport r = maxvar_double_cover(ring, e, 3, 0);
    CHECK(r.verdict == one.verdict);
    CHECK(r.ring_verdict == one.ring_verdict);
    CHECK(r.e == e);
  }
}

TEST_CASE("certification at e = 1 carries over to larger e") {
  PrimeField f(1'000'003);
  RandomStream rng(12);
  for (auto [n, d] : std::vector<std::pair<int, int>>{{3, 4}, {3, 5}, {4, 3}}) {
    for (int trial = 0; trial < 3; ++trial) {
      JacobianRing ring = smooth_random_ring(f, n, d, rng);
      if (!maxvar_hypersurface(ring, 1, 3, 0).certified()) continue;
      for (int e = 2; e <= d + 1; ++e) CHECK(maxvar_hypersurface(ring, e, 3, 0).certified());
    }
  }
}

TEST_CASE("reports are deterministic and never claim non-maximality") {
  RandomStream rng(5);
  for (std::uint64_t p : std::initializer_list<std::uint64_t>{5ULL, 7ULL, 1'000'003ULL}) {
    PrimeField f(p);
    JacobianRing ring = fermat_ring(3, 4, f);
    for (int e = 1; e <= 5; ++e) {
      VariationReport a = maxvar_hypersurface(ring, e, 2, 4);
      VariationReport b = maxvar_hypersurface(ring, e, 2, 4);
      CHECK(a.verdict == b.verdict);
      CHECK(a.ring_verdict == b.ring_verdict);
      CHECK(a.notes == b.notes);
      CHECK_FALSE(mentions_not_maximal(a));
      if (a.verdict == VariationVerdict::NoEvidence) {
        CHECK(a.failure_bound.has_value());
        CHECK_FALSE(a.notes.empty());
      }
    }
  }
}

TEST_CASE("failures in small characteristic come with a checked witness") {
  PrimeField f(5);
  JacobianRing ring = fermat_ring(3, 4, f);
  VariationReport r = maxvar_hypersurface(ring, 1, 3, 0);
  REQUIRE(r.verdict == VariationVerdict::NoEvidence);
  REQUIRE(r.witness.has_value());
  REQUIRE(r.ring_verdict.has_value());
  REQUIRE(r.ring_verdict->h.has_value());
  oracle::Poly ref = oracle::from_form(ring.form());
  CHECK(oracle::in_jacobian_ideal(ref, 4, oracle::from_form(multiply(*r.ring_verdict->h, *r.witness)), 4, 5));
}

TEST_CASE("singular input is reported, not certified") {
  PrimeField f(10007);
  VariationReport r = maxvar::maxvar(GeometryInput{GeometryKind::Hypersurface, parse_form("x0^4", 3, f), 1}, 3, 0);
  CHECK(r.verdict == VariationVerdict::SmoothnessNotCertified);
  CHECK_FALSE(r.certified());
  CHECK_THROWS_AS(maxvar_hypersurface(fermat_ring(3, 4, f), 0, 3, 0), Error);
}

TEST_CASE("integer forms reduce consistently") {
  RandomStream rng(1);
  IntegerForm g = random_integer_form(2, 3, 10, rng);
  CHECK(g.terms.size() <= 10);
  for (const auto& [m, c] : g.terms) {
    CHECK(m.degree() == 3);
    CHECK(c >= -10);
    CHECK(c <= 10);
    CHECK(c != 0);
  }
  PrimeField f(101);
  HomogeneousForm reduced = g.over(f);
  for (const auto& [m, c] : g.terms) CHECK(reduced.coefficient(m) == f.reduce(c));
}

TEST_CASE("a small regression run passes") {
  RegressionSuiteOptions options;
  options.forms_per_case = 2;
  RegressionSuiteReport report = theorem_regression_suite(options);
  CHECK(report.outcomes.size() == 8);
  CHECK(report.skipped.empty());
  CHECK(report.passed());
  for (const auto& o : report.outcomes) CHECK(o.passed());

  options.max_columns = 50;
  RegressionSuiteReport tiny = theorem_regression_suite(options);
  CHECK(tiny.skipped.size() + tiny.outcomes.size() / 2 == 4);
}
