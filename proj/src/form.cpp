#include "maxvar/form.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "maxvar/error.hpp"

namespace maxvar {

namespace {

void check_dimension(int n) {
  if (n < 0 || n > kMaxDimension) {
    throw Error(ErrorCode::VariableOutOfRange,
                "dimension " + std::to_string(n) + " outside 0.." + std::to_string(kMaxDimension));
  }
}

bool uses_only_first(const Monomial& m, int num_vars) {
  for (int i = num_vars; i < kMaxVariables; ++i) {
    if (m.exponent(i) != 0) return false;
  }
  return true;
}

// Sort descending and merge equal monomials, dropping zero sums.
void canonicalize(const PrimeField& field, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.monomial.packed() > b.monomial.packed(); });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term merged = terms[i];
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].monomial == merged.monomial; ++j) {
      merged.coefficient = field.add(merged.coefficient, terms[j].coefficient);
    }
    if (merged.coefficient != 0) terms[out++] = merged;
    i = j;
  }
  terms.resize(out);
}

}  // namespace

HomogeneousForm::HomogeneousForm(PrimeField field, int n, int degree)
    : field_(field), n_(n), degree_(degree) {
  check_dimension(n);
  if (degree < 0 || degree > kMaxDegree) {
    throw Error(ErrorCode::DegreeOverflow, "degree " + std::to_string(degree));
  }
}

HomogeneousForm::HomogeneousForm(PrimeField field, int n, int degree, std::vector<Term> terms)
    : HomogeneousForm(field, n, degree) {
  for (Term& t : terms) {
    if (t.monomial.degree() != degree) {
      throw Error(ErrorCode::NotHomogeneous, "term " + t.monomial.to_string() + " has degree " +
                                                 std::to_string(t.monomial.degree()) + ", expected " +
                                                 std::to_string(degree));
    }
    if (!uses_only_first(t.monomial, n + 1)) {
      throw Error(ErrorCode::VariableOutOfRange,
                  "term " + t.monomial.to_string() + " uses a variable beyond x" + std::to_string(n));
    }
    t.coefficient = field_.reduce_unsigned(t.coefficient);
  }
  canonicalize(field_, terms);
  terms_ = std::move(terms);
}

HomogeneousForm HomogeneousForm::from_integers(PrimeField field, int n, int degree,
                                               const std::vector<std::pair<Monomial, std::int64_t>>& terms) {
  std::vector<Term> reduced;
  reduced.reserve(terms.size());
  for (const auto& [m, c] : terms) reduced.push_back({m, field.reduce(c)});
  return HomogeneousForm(field, n, degree, std::move(reduced));
}

PrimeField::Element HomogeneousForm::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m.packed(),
                             [](const Term& t, std::uint64_t key) { return t.monomial.packed() > key; });
  return (it != terms_.end() && it->monomial == m) ? it->coefficient : 0;
}

void HomogeneousForm::check_compatible(const HomogeneousForm& other) const {
  if (n_ != other.n_ || !(field_ == other.field_)) {
    throw Error(ErrorCode::DimensionMismatch, "forms live in different rings");
  }
}

HomogeneousForm HomogeneousForm::operator+(const HomogeneousForm& other) const {
  check_compatible(other);
  if (degree_ != other.degree_) throw Error(ErrorCode::DegreeMismatch, "adding forms of different degree");
  std::vector<Term> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  return HomogeneousForm(field_, n_, degree_, std::move(all));
}

HomogeneousForm HomogeneousForm::operator-(const HomogeneousForm& other) const {
  return *this + other.scaled(field_.neg(1));
}

HomogeneousForm HomogeneousForm::scaled(PrimeField::Element c) const {
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coefficient = field_.mul(t.coefficient, c);
  return HomogeneousForm(field_, n_, degree_, std::move(out));
}

bool HomogeneousForm::operator==(const HomogeneousForm& other) const {
  return field_ == other.field_ && n_ == other.n_ && degree_ == other.degree_ && terms_ == other.terms_;
}

std::string HomogeneousForm::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Term& t : terms_) {
    std::int64_t c = field_.signed_value(t.coefficient);
    bool negative = c < 0;
    std::uint64_t magnitude = negative ? static_cast<std::uint64_t>(-(c + 1)) + 1 : static_cast<std::uint64_t>(c);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    bool constant = t.monomial.degree() == 0;
    if (magnitude != 1 || constant) {
      out += std::to_string(magnitude);
      if (!constant) out += '*';
    }
    if (!constant) out += t.monomial.to_string();
  }
  return out;
}

std::vector<HomogeneousForm> partial_derivatives(const HomogeneousForm& f) {
  if (f.degree() == 0) throw Error(ErrorCode::DegreeZero, "cannot differentiate a constant form");
  const PrimeField& field = f.field();
  std::vector<HomogeneousForm> out;
  out.reserve(static_cast<std::size_t>(f.num_variables()));
  for (int i = 0; i < f.num_variables(); ++i) {
    std::vector<Term> terms;
    for (const Term& t : f.terms()) {
      int e = t.monomial.exponent(i);
      if (e == 0) continue;
      std::uint64_t lowered = t.monomial.packed() - Monomial::variable(i).packed();
      terms.push_back({Monomial::from_packed(lowered),
                       field.mul(t.coefficient, field.reduce_unsigned(static_cast<std::uint64_t>(e)))});
    }
    out.emplace_back(field, f.dimension(), f.degree() - 1, std::move(terms));
  }
  return out;
}

HomogeneousForm multiply(const HomogeneousForm& f, const HomogeneousForm& g) {
  if (f.dimension() != g.dimension() || !(f.field() == g.field())) {
    throw Error(ErrorCode::DimensionMismatch, "multiplying forms from different rings");
  }
  int degree = f.degree() + g.degree();
  if (degree > kMaxDegree) throw Error(ErrorCode::DegreeOverflow, "product degree " + std::to_string(degree));
  const PrimeField& field = f.field();
  std::vector<Term> terms;
  terms.reserve(f.terms().size() * g.terms().size());
  for (const Term& a : f.terms()) {
    for (const Term& b : g.terms()) {
      terms.push_back({a.monomial * b.monomial, field.mul(a.coefficient, b.coefficient)});
    }
  }
  return HomogeneousForm(field, f.dimension(), degree, std::move(terms));
}

HomogeneousForm monomial_form(PrimeField field, int n, const Monomial& m, PrimeField::Element c) {
  return HomogeneousForm(field, n, m.degree(), {Term{m, c}});
}

bool euler_check(const HomogeneousForm& f) {
  if (f.degree() == 0) return f.is_zero();
  std::vector<HomogeneousForm> partials = partial_derivatives(f);
  return euler_identity_holds(f, partials);
}

bool euler_identity_holds(const HomogeneousForm& f, std::span<const HomogeneousForm> partials) {
  if (partials.size() != static_cast<std::size_t>(f.num_variables())) return false;
  const PrimeField& field = f.field();
  HomogeneousForm sum(field, f.dimension(), f.degree());
  for (int i = 0; i < f.num_variables(); ++i) {
    const HomogeneousForm& partial = partials[static_cast<std::size_t>(i)];
    if (partial.degree() + 1 != f.degree()) return false;
    sum = sum + multiply(monomial_form(field, f.dimension(), Monomial::variable(i)), partial);
  }
  return sum == f.scaled(field.reduce_unsigned(static_cast<std::uint64_t>(f.degree())));
}

HomogeneousForm fermat_form(PrimeField field, int n, int d) {
  std::vector<Term> terms;
  for (int i = 0; i <= n; ++i) terms.push_back({Monomial::variable(i, d), 1});
  return HomogeneousForm(field, n, d, std::move(terms));
}

namespace {

class FormParser {
 public:
  FormParser(std::string_view text, int n, const PrimeField& field) : text_(text), n_(n), field_(field) {}

  HomogeneousForm run() {
    skip_space();
    if (at_end()) fail(ErrorCode::SyntaxError, "empty form");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      parse_term(negative);
      skip_space();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail(ErrorCode::SyntaxError, std::string("expected '+' or '-', found '") + c + "'");
      negative = c == '-';
      ++pos_;
    }
    return HomogeneousForm(field_, n_, degree_, std::move(terms_));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(ErrorCode code, const std::string& message) const { fail_at(code, pos_, message); }
  [[noreturn]] void fail_at(ErrorCode code, std::size_t where, const std::string& message) const {
    throw ParseError(code, where, message);
  }

  // Decimal digits as a small integer, for indices and exponents.
  int parse_small_integer(const char* what) {
    skip_space();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail(ErrorCode::SyntaxError, std::string("expected ") + what);
    }
    std::size_t start = pos_;
    long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > kMaxDegree) fail_at(ErrorCode::DegreeOverflow, start, std::string(what) + " too large");
      ++pos_;
    }
    return static_cast<int>(value);
  }

  void parse_term(bool negative) {
    skip_space();
    std::size_t start = pos_;
    PrimeField::Element coefficient = 1;
    bool has_literal = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      has_literal = true;
      coefficient = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        coefficient = field_.add(field_.mul(coefficient, 10 % field_.modulus()),
                                 field_.reduce_unsigned(static_cast<std::uint64_t>(peek() - '0')));
        ++pos_;
      }
      skip_space();
      if (!at_end() && (peek() == '/' || peek() == '.')) {
        fail(ErrorCode::SyntaxError, "only integer coefficients are accepted");
      }
    }
    std::array<int, kMaxVariables> exps{};
    int degree = 0;
    bool has_variable = false;
    for (;;) {
      skip_space();
      if (at_end()) break;
      bool starred = false;
      if (peek() == '*') {
        if (!has_literal && !has_variable) fail(ErrorCode::SyntaxError, "unexpected '*'");
        starred = true;
        ++pos_;
        skip_space();
      }
      if (at_end() || peek() != 'x') {
        if (starred) fail(ErrorCode::SyntaxError, "expected a variable after '*'");
        break;
      }
      std::size_t var_start = pos_;
      ++pos_;
      int index = parse_small_integer("variable index");
      if (index > n_) {
        fail_at(ErrorCode::VariableOutOfRange, var_start,
                "variable x" + std::to_string(index) + " outside x0..x" + std::to_string(n_));
      }
      int power = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        power = parse_small_integer("exponent");
      }
      exps[static_cast<std::size_t>(index)] += power;
      degree += power;
      if (degree > kMaxDegree) fail_at(ErrorCode::DegreeOverflow, var_start, "term degree too large");
      has_variable = true;
    }
    if (!has_literal && !has_variable) {
      if (at_end()) fail(ErrorCode::SyntaxError, "expected a term");
      fail(ErrorCode::SyntaxError, std::string("unexpected character '") + peek() + "'");
    }
    if (!seen_term_) {
      degree_ = degree;
    } else if (degree != degree_) {
      fail_at(ErrorCode::NotHomogeneous, start,
              "term of degree " + std::to_string(degree) + " in a form of degree " + std::to_string(degree_));
    }
    seen_term_ = true;
    Monomial m = Monomial::from_exponents(std::span<const int>(exps.data(), static_cast<std::size_t>(n_) + 1));
    terms_.push_back({m, negative ? field_.neg(coefficient) : coefficient});
  }

  std::string_view text_;
  int n_;
  const PrimeField& field_;
  std::size_t pos_ = 0;
  int degree_ = 0;
  bool seen_term_ = false;
  std::vector<Term> terms_;
};

}  // namespace

HomogeneousForm parse_form(std::string_view text, int n, const PrimeField& field) {
  check_dimension(n);
  return FormParser(text, n, field).run();
}

}  // namespace maxvar
