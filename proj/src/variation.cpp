#include "maxvar/variation.hpp"

#include <algorithm>

#include "maxvar/error.hpp"

namespace maxvar {

const char* to_string(GeometryKind kind) {
  return kind == GeometryKind::Hypersurface ? "hypersurface" : "double-cover";
}

const char* to_string(VariationVerdict verdict) {
  switch (verdict) {
    case VariationVerdict::MaximalVariationCertified: return "MaximalVariationCertified";
    case VariationVerdict::NoEvidence: return "NoEvidence";
    case VariationVerdict::TriviallyCertified: return "TriviallyCertified";
    case VariationVerdict::PreconditionViolated: return "PreconditionViolated";
    case VariationVerdict::SmoothnessNotCertified: return "SmoothnessNotCertified";
  }
  return "Unknown";
}

std::optional<std::string> gate_violation(GeometryKind kind, int n, int d) {
  if (kind == GeometryKind::Hypersurface) {
    if (n < 3) return "n >= 3 required, got n = " + std::to_string(n);
    if (d < 3) return "d >= 3 required, got d = " + std::to_string(d);
    if (n == 3 && d < 4) return "d >= 4 required when n = 3";
    return std::nullopt;
  }
  if (n < 2) return "n >= 2 required, got n = " + std::to_string(n);
  if (d % 2 != 0) return "branch degree d must be even, got d = " + std::to_string(d);
  if (d < 4) return "d >= 4 required, got d = " + std::to_string(d);
  if (n == 2 && d < 6) return "d >= 6 required when n = 2";
  return std::nullopt;
}

RankVerdict injectivity_criterion(const JacobianRing& ring, int e, int trials, std::uint64_t seed) {
  return certify_general_max_rank(ring, e, ring.degree(), trials, seed, RankGoal::Injective);
}

namespace {

VariationReport base_report(const JacobianRing& ring, int e, int trials, std::uint64_t seed) {
  if (e < 1) throw Error(ErrorCode::InvalidArgument, "twist e must be >= 1");
  VariationReport report;
  report.prime = ring.field().modulus();
  report.seed = seed;
  report.trials = trials;
  report.e = e;
  return report;
}

// Gate and smoothness; true when the report is already final.
bool check_preconditions(const JacobianRing& ring, GeometryKind kind, VariationReport& report) {
  if (auto violation = gate_violation(kind, ring.dimension(), ring.degree())) {
    report.verdict = VariationVerdict::PreconditionViolated;
    report.detail = *violation;
    return true;
  }
  SmoothnessCertificate cert = ring.certify_smooth();
  if (!cert.certified()) {
    report.verdict = VariationVerdict::SmoothnessNotCertified;
    report.detail = "smoothness not certified at prime " + std::to_string(ring.field().modulus()) +
                    ": dim R_" + std::to_string(cert.socle_degree + 1) + " = " +
                    std::to_string(cert.dim_past_socle);
    report.notes.push_back("this does not prove the form singular; retry with another prime");
    return true;
  }
  return false;
}

void apply_ring_verdict(VariationReport& report, const RankVerdict& v) {
  report.source_degree = v.target_degree - v.e;
  report.source_dim = v.source_dim;
  report.target_dim = v.target_dim;
  report.rank = v.best_rank;
  report.ring_verdict = v;
  if (v.certified()) {
    report.verdict = VariationVerdict::MaximalVariationCertified;
    return;
  }
  report.verdict = VariationVerdict::NoEvidence;
  report.failure_bound = v.failure_bound;
  report.witness = v.witness;
  if (v.outcome == RankVerdict::Outcome::Indeterminate) {
    report.notes.push_back("source is larger than target, so the map cannot be injective");
  } else {
    if (v.failure_bound->value() >= 1.0) {
      report.notes.push_back("every sampled map had a kernel; the prime is too small for the bound " +
                             v.failure_bound->expression() + " to say anything");
    } else {
      report.notes.push_back("every sampled map had a kernel; a good multiplier is missed with probability at most " +
                             v.failure_bound->expression());
    }
  }
}

}  // namespace

VariationReport maxvar_hypersurface(const JacobianRing& ring, int e, int trials, std::uint64_t seed) {
  VariationReport report = base_report(ring, e, trials, seed);
  report.criterion = "hypersurface: xh: R_{d-e} -> R_d injective for general h in R_e";
  if (check_preconditions(ring, GeometryKind::Hypersurface, report)) return report;
  const int d = ring.degree();
  if (e > d) {
    report.verdict = VariationVerdict::TriviallyCertified;
    report.detail = "e > d, so R_{d-e} = 0";
    return report;
  }
  if (e == d) {
    // The socle sits in degree (n+1)(d-2) >= d, so R_d is nonzero and a
    // general h does not vanish there.
    std::uint64_t top = ring.graded_dim(d);
    if (top == 0) throw Error(ErrorCode::HilbertMismatch, "certified ring with R_d = 0");
    report.verdict = VariationVerdict::TriviallyCertified;
    report.detail = "e = d: R_0 is spanned by 1 and R_d != 0";
    report.source_degree = 0;
    report.source_dim = 1;
    report.target_dim = top;
    return report;
  }
  apply_ring_verdict(report, injectivity_criterion(ring, e, trials, seed));
  if (report.verdict == VariationVerdict::NoEvidence) {
    if (e == 1) {
      report.notes.push_back(
          "for e = 1 the criterion is an equivalence; NoEvidence at several primes strongly suggests a genuine "
          "failure over C");
    } else {
      report.notes.push_back("for e >= 2 the criterion is only sufficient; this is not a proof of non-maximality");
    }
  }
  return report;
}

VariationReport maxvar_double_cover(const JacobianRing& ring, int e, int trials, std::uint64_t seed) {
  VariationReport report = base_report(ring, e, trials, seed);
  report.criterion = "double cover: xl: R_{d-1} -> R_d injective for general l in R_1 (branch ring)";
  if (check_preconditions(ring, GeometryKind::DoubleCover, report)) return report;
  const int d = ring.degree();
  if (e >= d) {
    report.verdict = VariationVerdict::TriviallyCertified;
    report.detail = "e >= d";
    return report;
  }
  apply_ring_verdict(report, injectivity_criterion(ring, 1, trials, seed));
  if (e > 1) {
    report.notes.push_back("for 1 < e < d the system is certified through the e = 1 criterion");
    if (report.verdict == VariationVerdict::NoEvidence) {
      report.notes.push_back("the e = 1 criterion is only sufficient for e >= 2; this is not a proof of non-maximality");
    }
  }
  return report;
}

VariationReport maxvar(const GeometryInput& input, int trials, std::uint64_t seed) {
  if (auto violation = gate_violation(input.kind, input.n(), input.d())) {
    VariationReport report;
    report.verdict = VariationVerdict::PreconditionViolated;
    report.detail = *violation;
    report.prime = input.form.field().modulus();
    report.seed = seed;
    report.trials = trials;
    report.e = input.e;
    return report;
  }
  JacobianRing ring(input.form);
  return input.kind == GeometryKind::Hypersurface ? maxvar_hypersurface(ring, input.e, trials, seed)
                                                  : maxvar_double_cover(ring, input.e, trials, seed);
}

HomogeneousForm IntegerForm::over(const PrimeField& field) const {
  return HomogeneousForm::from_integers(field, n, d, terms);
}

std::string IntegerForm::to_string() const {
  std::string out;
  for (const auto& [m, c] : terms) {
    if (c == 0) continue;
    std::uint64_t magnitude = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool constant = m.degree() == 0;
    if (magnitude != 1 || constant) {
      out += std::to_string(magnitude);
      if (!constant) out += "*";
    }
    if (!constant) out += m.to_string();
  }
  return out.empty() ? "0" : out;
}

IntegerForm random_integer_form(int n, int d, std::int64_t bound, RandomStream& rng) {
  IntegerForm form{n, d, {}};
  for (const Monomial& m : enumerate_monomials(n, d)) form.terms.emplace_back(m, rng.between(-bound, bound));
  return form;
}

std::vector<RegressionCase> default_regression_cases() {
  return {
      {3, 5, "d >= n+2"},
      {4, 6, "d >= n+2"},
      {3, 4, "quartic surface in P^3"},
      {4, 3, "cubic threefold"},
  };
}

bool RegressionOutcome::passed() const {
  auto ok = [](VariationVerdict v) {
    return v == VariationVerdict::MaximalVariationCertified || v == VariationVerdict::TriviallyCertified;
  };
  return ok(first) || (retry && ok(*retry));
}

int RegressionSuiteReport::retries() const {
  return static_cast<int>(std::count_if(outcomes.begin(), outcomes.end(), [](const RegressionOutcome& o) {
    return o.retry.has_value();
  }));
}

int RegressionSuiteReport::failures() const {
  return static_cast<int>(std::count_if(outcomes.begin(), outcomes.end(), [](const RegressionOutcome& o) {
    return !o.passed();
  }));
}

RegressionSuiteReport theorem_regression_suite(const RegressionSuiteOptions& options) {
  RegressionSuiteReport report;
  PrimeField first(options.prime);
  PrimeField second(options.retry_prime);
  JacobianOptions ring_options;
  ring_options.max_columns = options.max_columns;
  for (std::size_t c = 0; c < options.cases.size(); ++c) {
    const RegressionCase& rc = options.cases[c];
    int top = (rc.n + 1) * (rc.d - 2) + 1;
    if (monomial_count(rc.n, top) > options.max_columns) {
      report.skipped.push_back(rc);
      continue;
    }
    RandomStream rng = RandomStream::derive(options.seed, {0x7265'6772ULL, c});
    int accepted = 0;
    while (accepted < options.forms_per_case) {
      IntegerForm form = random_integer_form(rc.n, rc.d, options.coefficient_bound, rng);
      JacobianRing ring(form.over(first), ring_options);
      if (!ring.certify_smooth().certified()) {
        if (++report.resampled > 10 * options.forms_per_case + 10) {
          throw Error(ErrorCode::ResourceLimit, "too few random forms certify smooth at this prime");
        }
        continue;
      }
      ++accepted;
      RegressionOutcome outcome{rc, form, maxvar_hypersurface(ring, 1, options.trials, options.seed).verdict,
                                std::nullopt};
      if (!outcome.passed()) {
        JacobianRing retry(form.over(second), ring_options);
        outcome.retry = maxvar_hypersurface(retry, 1, options.trials, options.seed).verdict;
      }
      report.outcomes.push_back(std::move(outcome));
    }
  }
  return report;
}

}  // namespace maxvar
