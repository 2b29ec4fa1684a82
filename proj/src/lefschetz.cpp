#include "maxvar/lefschetz.hpp"

#include <algorithm>
#include <cmath>

#include "maxvar/error.hpp"
#include "maxvar/linalg.hpp"

namespace maxvar {

GradedMap mult_map(const JacobianRing& ring, const HomogeneousForm& h, int p) {
  int e = h.degree();
  if (e < 1) throw Error(ErrorCode::DegreeMismatch, "multiplier must have degree >= 1");
  if (p < e) {
    throw Error(ErrorCode::DegreeMismatch, "target degree " + std::to_string(p) + " below deg h = " +
                                               std::to_string(e));
  }
  if (h.dimension() != ring.dimension() || !(h.field() == ring.field())) {
    throw Error(ErrorCode::DimensionMismatch, "multiplier does not belong to this ring");
  }
  const PrimeField& field = ring.field();
  const int n = ring.dimension();
  QuotientBasis source = ring.quotient_basis(p - e);
  std::size_t rows = ring.graded_dim(p);
  std::size_t cols = source.size();
  std::vector<PrimeField::Element> data(rows * cols, 0);
  std::vector<PrimeField::Element> column(rows);
  for (std::size_t j = 0; j < cols; ++j) {
    std::fill(column.begin(), column.end(), 0);
    for (const Term& t : h.terms()) {
      ring.accumulate_normal_form(p, monomial_index(n, t.monomial * source.monomials[j]), t.coefficient, column);
    }
    for (std::size_t i = 0; i < rows; ++i) data[i * cols + j] = column[i];
  }
  FieldMatrix matrix = FieldMatrix::dense(field, rows, cols, std::move(data));
  std::size_t r = rank(matrix);
  return GradedMap{&ring, h, p - e, p, std::move(matrix), r};
}

HomogeneousForm random_form(const PrimeField& field, int n, int e, RandomStream& rng) {
  std::vector<Term> terms;
  for (const Monomial& m : enumerate_monomials(n, e)) terms.push_back({m, rng.below(field.modulus())});
  return HomogeneousForm(field, n, e, std::move(terms));
}

double FailureBound::value() const {
  if (modulus == 0 || required_rank >= modulus) return 1.0;
  return std::pow(static_cast<double>(required_rank) / static_cast<double>(modulus), trials);
}

std::string FailureBound::expression() const {
  return "(" + std::to_string(required_rank) + "/" + std::to_string(modulus) + ")^" + std::to_string(trials);
}

const char* to_string(RankVerdict::Outcome outcome) {
  switch (outcome) {
    case RankVerdict::Outcome::CertifiedMaxRank: return "CertifiedMaxRank";
    case RankVerdict::Outcome::ProbablyDeficient: return "ProbablyDeficient";
    case RankVerdict::Outcome::Indeterminate: return "Indeterminate";
  }
  return "Unknown";
}

namespace {

// Lifts a kernel vector of ×h to a form and re-checks h*G against the
// Macaulay matrix, which does not go through the normal-form tables.
HomogeneousForm verified_witness(const GradedMap& map) {
  auto kernel = kernel_witness(map.matrix);
  if (!kernel) throw Error(ErrorCode::VerificationFailed, "deficient map has no kernel vector");
  HomogeneousForm g = map.ring->lift(map.source_degree, *kernel);
  if (!map.ring->in_ideal_by_matrix(multiply(map.h, g))) {
    throw Error(ErrorCode::VerificationFailed, "kernel witness does not multiply into the ideal");
  }
  return g;
}

}  // namespace

RankVerdict certify_general_max_rank(const JacobianRing& ring, int e, int p, int trials, std::uint64_t seed,
                                     RankGoal goal) {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");
  if (e < 1 || p < e) throw Error(ErrorCode::DegreeMismatch, "need 1 <= e <= p");
  RankVerdict verdict;
  verdict.e = e;
  verdict.target_degree = p;
  verdict.source_dim = ring.graded_dim(p - e);
  verdict.target_dim = ring.graded_dim(p);
  if (goal == RankGoal::Injective && verdict.source_dim > verdict.target_dim) {
    verdict.outcome = RankVerdict::Outcome::Indeterminate;
    verdict.required_rank = verdict.source_dim;
    return verdict;
  }
  verdict.required_rank = std::min(verdict.source_dim, verdict.target_dim);

  for (int trial = 0; trial < trials; ++trial) {
    RandomStream rng = RandomStream::derive(
        seed, {static_cast<std::uint64_t>(e), static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(trial)});
    GradedMap map = mult_map(ring, random_form(ring.field(), ring.dimension(), e, rng), p);
    verdict.trials_used = trial + 1;
    verdict.best_rank = std::max<std::uint64_t>(verdict.best_rank, map.rank);
    bool last = trial + 1 == trials;
    if (map.rank == verdict.required_rank || last) verdict.h = map.h;
    if (map.rank == verdict.required_rank) {
      verdict.outcome = RankVerdict::Outcome::CertifiedMaxRank;
      return verdict;
    }
    if (last) {
      verdict.outcome = RankVerdict::Outcome::ProbablyDeficient;
      verdict.failure_bound = FailureBound{verdict.required_rank, ring.field().modulus(), trials};
      if (verdict.required_rank == verdict.source_dim) verdict.witness = verified_witness(map);
    }
  }
  return verdict;
}

bool WlpReport::holds() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const RankVerdict& v) { return v.certified(); });
}

WlpReport wlp_sweep(const JacobianRing& ring, int trials, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");
  // Label 0 in the degree slot keeps the shared stream apart from every
  // per-degree stream.
  RandomStream rng = RandomStream::derive(seed, {1, 0, 0});
  WlpReport report{{}, random_form(ring.field(), ring.dimension(), 1, rng), true};
  for (int p = 1; p <= ring.socle_degree(); ++p) {
    GradedMap map = mult_map(ring, report.shared_ell, p);
    RankVerdict v;
    v.e = 1;
    v.target_degree = p;
    v.source_dim = map.source_dim();
    v.target_dim = map.target_dim();
    v.required_rank = std::min(v.source_dim, v.target_dim);
    v.best_rank = map.rank;
    v.trials_used = 1;
    v.h = report.shared_ell;
    if (map.rank == v.required_rank) {
      v.outcome = RankVerdict::Outcome::CertifiedMaxRank;
    } else {
      report.shared_ell_sufficed = false;
      v = certify_general_max_rank(ring, 1, p, trials, seed);
    }
    report.degrees.push_back(std::move(v));
  }
  return report;
}

bool injectivity_descends(const JacobianRing& ring, const HomogeneousForm& ell) {
  if (ell.degree() != 1) throw Error(ErrorCode::DegreeMismatch, "descent is stated for linear forms");
  int d = ring.degree();
  GradedMap top = mult_map(ring, ell, d);
  if (top.rank != top.source_dim()) {
    throw Error(ErrorCode::InvalidArgument, "multiplication is not injective into degree d for this form");
  }
  for (int p = 1; p < d; ++p) {
    GradedMap map = mult_map(ring, ell, p);
    if (map.rank != map.source_dim()) return false;
  }
  return true;
}

}  // namespace maxvar
