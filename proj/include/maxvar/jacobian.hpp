#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <vector>

#include "maxvar/form.hpp"
#include "maxvar/matrix.hpp"

namespace maxvar {

/// Coefficients of ((1 - t^(d-1)) / (1 - t))^(n+1), the Hilbert series of a
/// complete intersection of n+1 forms of degree d-1 in n+1 variables, for
/// degrees 0..(n+1)(d-2). Computed by inclusion-exclusion. Requires d >= 2.
std::vector<std::uint64_t> ci_hilbert_coefficients(int n, int d);

/// dim R_0, dim R_1, ...
struct HilbertFunction {
  std::vector<std::uint64_t> coefficients;

  bool is_palindromic() const;
  bool operator==(const HilbertFunction&) const = default;
};

/// A basis of R_p: the standard monomials, i.e. the monomials of S_p that are
/// not pivot columns of the ideal's echelon form, in descending graded-lex
/// order.
struct QuotientBasis {
  int degree = 0;
  std::vector<Monomial> monomials;

  std::size_t size() const noexcept { return monomials.size(); }
};

struct SmoothnessCertificate {
  enum class Status { Certified, NotCertified };

  Status status = Status::NotCertified;
  int socle_degree = 0;
  /// dim R_{socle+1}; zero exactly when certified.
  std::uint64_t dim_past_socle = 0;
  /// dim R_0 .. dim R_socle when certified; dim R_0 .. dim R_{socle+1} otherwise.
  HilbertFunction hilbert;

  bool certified() const noexcept { return status == Status::Certified; }
};

struct JacobianOptions {
  /// Refuse any graded piece whose monomial count exceeds this.
  std::uint64_t max_columns = 2'000'000;
  /// Disable the early stop that ends a degree once the ideal reaches the
  /// largest rank any n+1 forms of degree d-1 can have there.
  bool exhaustive = false;
};

/// R = k[x_0..x_n] / (dF/dx_0, ..., dF/dx_n), built one degree at a time.
///
/// Degree q of the ideal is computed from degree q-1 as J_q = S_1 * J_{q-1}
/// (the generators all live in degree d-1), so each step is linear algebra on
/// the monomials that are not already forced into the ideal. Every degree
/// keeps the normal form of each non-standard monomial in terms of the
/// standard ones. Standard monomials are the same set that column_echelon
/// would leave unpivoted in ideal_matrix(q).
///
/// The early stop is sound: for any n+1 forms of degree d-1, dim R_q is at
/// least the complete-intersection value, since the rank of the ideal matrix
/// can only drop under specialization of generic coefficients.
///
/// Records are built lazily under a mutex and never change afterwards, so a
/// ring can be shared between threads.
class JacobianRing {
 public:
  /// Throws DegreeTooSmall (d < 2) or FieldTooSmall (p <= d).
  explicit JacobianRing(HomogeneousForm f, JacobianOptions options = {});
  ~JacobianRing();
  JacobianRing(JacobianRing&&) noexcept;
  JacobianRing& operator=(JacobianRing&&) noexcept;

  const HomogeneousForm& form() const noexcept;
  const std::vector<HomogeneousForm>& partials() const noexcept;
  const PrimeField& field() const noexcept;
  int dimension() const noexcept;
  int degree() const noexcept;
  /// (n+1)(d-2).
  int socle_degree() const noexcept;

  /// Macaulay matrix of the ideal in degree p: rows m * dF/dx_i for every
  /// degree p-d+1 monomial m (grouped by i), columns the degree-p monomials in
  /// enumerate_monomials order. Sparse; no rows when p < d-1.
  FieldMatrix ideal_matrix(int p) const;

  /// dim R_p = C(n+p, n) - rank J_p. Zero for p < 0.
  std::uint64_t graded_dim(int p) const;
  QuotientBasis quotient_basis(int p) const;
  HilbertFunction hilbert_function(int max_degree) const;
  SmoothnessCertificate certify_smooth() const;

  /// Coordinates of g in quotient_basis(deg g).
  std::vector<PrimeField::Element> normal_form(const HomogeneousForm& g) const;
  /// Coordinates of the monomial at `column` of enumerate_monomials(n, p),
  /// added into `acc` with weight c.
  void accumulate_normal_form(int p, std::size_t column, PrimeField::Element c,
                              std::span<PrimeField::Element> acc) const;
  /// Σ coords[j] * basis[j] as a form of degree p.
  HomogeneousForm lift(int p, std::span<const PrimeField::Element> coords) const;
  /// Membership through the normal form.
  bool reduces_to_zero(const HomogeneousForm& g) const;
  /// Membership through the Macaulay matrix, independent of the degree-by-
  /// degree engine: rank does not grow when g is appended to ideal_matrix.
  bool in_ideal_by_matrix(const HomogeneousForm& g) const;

  /// Seed a dimension from an external cache. Only graded_dim and the
  /// certificate may answer from it; if the degree is later built, the two
  /// must agree or CacheMismatch is thrown.
  void preload_dimension(int p, std::uint64_t dim);
  /// Degrees whose dimension was answered from preloaded values.
  std::set<int> cache_hits() const;
  /// Degrees actually built by the engine so far (0..k-1).
  int built_degrees() const;

 private:
  struct State;
  std::unique_ptr<State> state_;
};

/// The ring of sum x_i^d; its quotient is the tensor product of n+1 copies of
/// k[x]/(x^(d-1)).
JacobianRing fermat_ring(int n, int d, const PrimeField& field, JacobianOptions options = {});

}  // namespace maxvar
