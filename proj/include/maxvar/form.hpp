#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "maxvar/field.hpp"
#include "maxvar/monomial.hpp"

namespace maxvar {

struct Term {
  Monomial monomial;
  PrimeField::Element coefficient;

  bool operator==(const Term&) const = default;
};

/// A homogeneous polynomial in x_0..x_n over a prime field. Terms are kept in
/// descending graded-lex order with no zero coefficients, so two equal forms
/// have identical term sequences. Immutable after construction.
class HomogeneousForm {
 public:
  /// The zero form of the given degree.
  HomogeneousForm(PrimeField field, int n, int degree);

  /// Collects like terms, drops zeros and validates degrees and variables.
  HomogeneousForm(PrimeField field, int n, int degree, std::vector<Term> terms);

  /// Integer coefficients, reduced into the field.
  static HomogeneousForm from_integers(PrimeField field, int n, int degree,
                                       const std::vector<std::pair<Monomial, std::int64_t>>& terms);

  const PrimeField& field() const noexcept { return field_; }
  int dimension() const noexcept { return n_; }
  int num_variables() const noexcept { return n_ + 1; }
  int degree() const noexcept { return degree_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient of `m`, zero when absent.
  PrimeField::Element coefficient(const Monomial& m) const;

  HomogeneousForm operator+(const HomogeneousForm& other) const;
  HomogeneousForm operator-(const HomogeneousForm& other) const;
  HomogeneousForm scaled(PrimeField::Element c) const;

  bool operator==(const HomogeneousForm& other) const;

  /// Input-grammar text with symmetric coefficient representatives, e.g.
  /// "x0^4 + 2*x0*x1^3 - 7*x2^4". The zero form prints as "0".
  std::string to_string() const;

 private:
  void check_compatible(const HomogeneousForm& other) const;

  PrimeField field_;
  int n_;
  int degree_;
  std::vector<Term> terms_;
};

/// The n+1 partial derivatives dF/dx_i. Throws DegreeZero for constants.
std::vector<HomogeneousForm> partial_derivatives(const HomogeneousForm& f);

/// Exact product. Throws DimensionMismatch for different n or fields.
HomogeneousForm multiply(const HomogeneousForm& f, const HomogeneousForm& g);

/// The monomial m as a form with coefficient c.
HomogeneousForm monomial_form(PrimeField field, int n, const Monomial& m, PrimeField::Element c = 1);

/// Whether d*F equals sum x_i * dF/dx_i. Requires p not dividing deg F.
bool euler_check(const HomogeneousForm& f);

/// The same identity against caller-supplied partials.
bool euler_identity_holds(const HomogeneousForm& f, std::span<const HomogeneousForm> partials);

/// Sum of x_i^d over i = 0..n.
HomogeneousForm fermat_form(PrimeField field, int n, int d);

/// Parse a form in the grammar
///   form := term (('+'|'-') term)*
///   term := [integer] ('*'? var)*
///   var  := 'x' index ('^' exponent)?
/// with whitespace ignored. Integer literals are reduced mod p. Throws
/// ParseError with SyntaxError, NotHomogeneous or VariableOutOfRange.
HomogeneousForm parse_form(std::string_view text, int n, const PrimeField& field);

}  // namespace maxvar
