#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maxvar/lefschetz.hpp"

namespace maxvar {

enum class GeometryKind { Hypersurface, DoubleCover };

const char* to_string(GeometryKind kind);

/// A hypersurface F = 0 in P^n, or the double cover of P^n branched along
/// F = 0, with the linear system twisted by O(e).
struct GeometryInput {
  GeometryKind kind = GeometryKind::Hypersurface;
  HomogeneousForm form;
  int e = 1;

  int n() const { return form.dimension(); }
  int d() const { return form.degree(); }
};

/// The violated inequality, or nullopt when the (n, d) range is covered.
///   hypersurface: n >= 3, d >= 3, d >= 4 if n = 3
///   double cover: n >= 2, d even, d >= 4, d >= 6 if n = 2
std::optional<std::string> gate_violation(GeometryKind kind, int n, int d);

enum class VariationVerdict {
  MaximalVariationCertified,
  /// The sampled maps all fell short. Never read as "not maximal".
  NoEvidence,
  TriviallyCertified,
  PreconditionViolated,
  SmoothnessNotCertified,
};

const char* to_string(VariationVerdict verdict);

struct VariationReport {
  VariationVerdict verdict = VariationVerdict::PreconditionViolated;
  /// The shortcut reason, the violated precondition, or empty.
  std::string detail;
  std::string criterion;
  std::vector<std::string> notes;

  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  int e = 1;
  /// Degrees and dimensions of the map that was tested (source R_{d-e} or
  /// R_{d-1}, target R_d); unset when no map was needed.
  std::optional<int> source_degree;
  std::optional<std::uint64_t> source_dim;
  std::optional<std::uint64_t> target_dim;
  std::optional<std::uint64_t> rank;
  std::optional<RankVerdict> ring_verdict;
  std::optional<FailureBound> failure_bound;
  std::optional<HomogeneousForm> witness;

  bool certified() const {
    return verdict == VariationVerdict::MaximalVariationCertified || verdict == VariationVerdict::TriviallyCertified;
  }
};

/// The shared ring predicate: is ×h: R_{d-e} -> R_d injective for a sampled h
/// in S_e? Both the hypersurface and the double-cover criteria call this.
RankVerdict injectivity_criterion(const JacobianRing& ring, int e, int trials, std::uint64_t seed);

/// The ring is the Jacobian ring of input.form; passing it in lets callers
/// share cached degrees between reports. Throws InvalidArgument for e < 1.
VariationReport maxvar_hypersurface(const JacobianRing& ring, int e, int trials, std::uint64_t seed);
VariationReport maxvar_double_cover(const JacobianRing& ring, int e, int trials, std::uint64_t seed);

/// Dispatch on input.kind. The gate is checked before the ring is built.
VariationReport maxvar(const GeometryInput& input, int trials, std::uint64_t seed);

/// An integer-coefficient form, reducible modulo any prime.
struct IntegerForm {
  int n = 0;
  int d = 0;
  std::vector<std::pair<Monomial, std::int64_t>> terms;

  HomogeneousForm over(const PrimeField& field) const;
  std::string to_string() const;
};

/// Dense form with coefficients uniform in [-bound, bound].
IntegerForm random_integer_form(int n, int d, std::int64_t bound, RandomStream& rng);

struct RegressionCase {
  int n = 0;
  int d = 0;
  std::string label;
};

/// The (n, d) cases covered by the known theorems on hypersurfaces: d >= n+2,
/// quartic surfaces and cubic threefolds.
std::vector<RegressionCase> default_regression_cases();

struct RegressionSuiteOptions {
  std::vector<RegressionCase> cases = default_regression_cases();
  int forms_per_case = 20;
  std::int64_t coefficient_bound = 100;
  std::uint64_t prime = 1'000'003;
  std::uint64_t retry_prime = 998'244'353;
  int trials = 3;
  std::uint64_t seed = 0;
  /// Largest socle+1 piece the suite will build.
  std::uint64_t max_columns = 200'000;
};

struct RegressionOutcome {
  RegressionCase source;
  IntegerForm form;
  VariationVerdict first;
  std::optional<VariationVerdict> retry;

  /// Certified at the first prime, or at the retry prime.
  bool passed() const;
};

struct RegressionSuiteReport {
  std::vector<RegressionOutcome> outcomes;
  /// Cases skipped because socle+1 is past max_columns.
  std::vector<RegressionCase> skipped;
  /// Forms discarded because they did not certify smooth at the first prime.
  int resampled = 0;

  int retries() const;
  int failures() const;
  bool passed() const { return failures() == 0; }
};

/// Random smooth forms per case must all be certified at e = 1. A form that
/// fails at the first prime is retried at the second; failing both is a
/// failure of the suite.
RegressionSuiteReport theorem_regression_suite(const RegressionSuiteOptions& options = {});

}  // namespace maxvar
