#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxvar/jacobian.hpp"
#include "maxvar/random.hpp"

namespace maxvar {

/// ×h: R_{p-e} -> R_p in quotient-basis coordinates. Rows index the target
/// basis, columns the source basis.
struct GradedMap {
  const JacobianRing* ring = nullptr;
  HomogeneousForm h;
  int source_degree = 0;
  int target_degree = 0;
  FieldMatrix matrix;
  std::size_t rank = 0;

  std::size_t source_dim() const { return matrix.cols(); }
  std::size_t target_dim() const { return matrix.rows(); }
};

/// Throws DegreeMismatch when deg h < 1 or p < deg h, DimensionMismatch when
/// h lives in another ring. The ring should already be certified smooth;
/// nothing here checks that.
GradedMap mult_map(const JacobianRing& ring, const HomogeneousForm& h, int p);

/// A form with independent uniform coefficients on every degree-e monomial.
HomogeneousForm random_form(const PrimeField& field, int n, int e, RandomStream& rng);

enum class RankGoal {
  /// rank = min(source dim, target dim)
  Maximal,
  /// rank = source dim
  Injective,
};

/// Probability, over the uniform choice of h, that `trials` independent samples
/// all miss a good h when one exists: at most (required_rank / p)^trials,
/// since a nonzero minor of size required_rank is a polynomial of degree at
/// most required_rank in h's coefficients. The degree bound is conservative.
struct FailureBound {
  std::uint64_t required_rank = 0;
  std::uint64_t modulus = 0;
  int trials = 0;

  /// Clamped to 1 when the prime is too small for the bound to say anything.
  double value() const;
  /// "(r/p)^t"
  std::string expression() const;
  bool operator==(const FailureBound&) const = default;
};

struct RankVerdict {
  enum class Outcome {
    CertifiedMaxRank,
    ProbablyDeficient,
    /// The goal is impossible for dimension reasons (injectivity into a
    /// smaller space); nothing was sampled.
    Indeterminate,
  };

  Outcome outcome = Outcome::Indeterminate;
  int e = 0;
  int target_degree = 0;
  std::uint64_t source_dim = 0;
  std::uint64_t target_dim = 0;
  std::uint64_t required_rank = 0;
  std::uint64_t best_rank = 0;
  int trials_used = 0;
  /// The h whose rank decided the outcome (the first success, or the last
  /// failed sample).
  std::optional<HomogeneousForm> h;
  std::optional<FailureBound> failure_bound;
  /// For deficient injectivity: a nonzero G of degree p-e with h*G in the
  /// ideal, already re-checked against the Macaulay matrix.
  std::optional<HomogeneousForm> witness;

  bool certified() const { return outcome == Outcome::CertifiedMaxRank; }
  bool operator==(const RankVerdict&) const = default;
};

const char* to_string(RankVerdict::Outcome outcome);

/// Samples h in S_e up to `trials` times (streams derived from seed, e, p and
/// the trial index) and stops at the first h reaching the required rank of
/// ×h: R_{p-e} -> R_p. Throws InvalidArgument for trials < 1.
RankVerdict certify_general_max_rank(const JacobianRing& ring, int e, int p, int trials, std::uint64_t seed,
                                     RankGoal goal = RankGoal::Maximal);

struct WlpReport {
  /// One verdict per p = 1..socle for ×ℓ: R_{p-1} -> R_p.
  std::vector<RankVerdict> degrees;
  /// The first shared ℓ, and whether it alone had maximal rank everywhere.
  HomogeneousForm shared_ell;
  bool shared_ell_sufficed = false;

  bool holds() const;
};

/// Tries one shared ℓ for all degrees, then falls back to per-degree sampling
/// wherever it falls short.
WlpReport wlp_sweep(const JacobianRing& ring, int trials, std::uint64_t seed);

/// Given ×ℓ: R_{d-1} -> R_d injective, checks ×ℓ: R_{p-1} -> R_p injective for
/// every 1 <= p <= d by direct rank computation. Throws InvalidArgument if the
/// hypothesis does not hold for this ℓ.
bool injectivity_descends(const JacobianRing& ring, const HomogeneousForm& ell);

}  // namespace maxvar
