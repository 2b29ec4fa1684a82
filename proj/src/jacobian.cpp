#include "maxvar/jacobian.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "maxvar/error.hpp"
#include "maxvar/linalg.hpp"

namespace maxvar {

std::vector<std::uint64_t> ci_hilbert_coefficients(int n, int d) {
  if (d < 2) throw Error(ErrorCode::DegreeTooSmall, "complete-intersection series needs d >= 2");
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative dimension");
  int socle = (n + 1) * (d - 2);
  std::vector<std::uint64_t> out(static_cast<std::size_t>(socle) + 1);
  for (int p = 0; p <= socle; ++p) {
    __int128 total = 0;
    for (int j = 0; j <= n + 1 && p - j * (d - 1) >= 0; ++j) {
      __int128 term = static_cast<__int128>(binomial(n + 1, j)) *
                      static_cast<__int128>(binomial(n + p - j * (d - 1), n));
      total += (j % 2 == 0) ? term : -term;
    }
    out[static_cast<std::size_t>(p)] = static_cast<std::uint64_t>(total);
  }
  return out;
}

bool HilbertFunction::is_palindromic() const {
  return std::equal(coefficients.begin(), coefficients.end(), coefficients.rbegin());
}

namespace {

using Element = PrimeField::Element;
constexpr std::uint32_t kNoReducer = UINT32_MAX;

struct DegreeRecord {
  int degree = 0;
  std::vector<Monomial> monomials;
  /// Position in the standard basis, or -1 for a leading monomial.
  std::vector<std::int32_t> std_pos;
  /// Standard columns in ascending column order.
  std::vector<std::uint32_t> std_cols;
  /// For leading columns: the normal form over standard positions.
  std::vector<SparseRow> normal_forms;

  std::uint64_t dim() const { return std_cols.size(); }
};

// Dense accumulator over a fixed index range.
class Accumulator {
 public:
  Accumulator(const PrimeField& field, std::size_t size) : field_(field), values_(size, 0) {}

  void add(std::size_t i, Element v) { values_[i] = field_.add(values_[i], v); }
  void add_scaled(const SparseRow& row, Element c) {
    if (c == 0) return;
    Element pre = field_.precondition(c);
    for (const SparseEntry& e : row) values_[e.col] = field_.add(values_[e.col], field_.mul_precon(e.value, c, pre));
  }
  void subtract(const SparseRow& row) {
    for (const SparseEntry& e : row) values_[e.col] = field_.sub(values_[e.col], e.value);
  }
  /// Moves the nonzero entries out and clears.
  SparseRow gather() {
    SparseRow out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (values_[i] != 0) {
        out.push_back({static_cast<std::uint32_t>(i), values_[i]});
        values_[i] = 0;
      }
    }
    return out;
  }
  std::vector<Element>& values() { return values_; }

 private:
  const PrimeField& field_;
  std::vector<Element> values_;
};

// Incremental echelon over a dense column range. Rows are kept with a leading
// 1 and zeros to the left of it; reduce_fully() turns them into RREF.
class DenseEchelon {
 public:
  DenseEchelon(const PrimeField& field, std::size_t cols)
      : field_(field), cols_(cols), row_of_col_(cols, -1) {}

  std::size_t rank() const { return rows_.size(); }

  /// Reduces v in place; stores it and returns true if it was independent.
  bool insert(std::vector<Element>& v) {
    for (std::size_t c = 0; c < cols_; ++c) {
      Element x = v[c];
      if (x == 0) continue;
      std::int32_t r = row_of_col_[c];
      if (r < 0) {
        Element inv = field_.inv(x);
        Element pre = field_.precondition(inv);
        for (std::size_t k = c; k < cols_; ++k) {
          if (v[k] != 0) v[k] = field_.mul_precon(v[k], inv, pre);
        }
        row_of_col_[c] = static_cast<std::int32_t>(rows_.size());
        pivots_.push_back(c);
        rows_.push_back(v);
        return true;
      }
      axpy(v, rows_[static_cast<std::size_t>(r)], field_.neg(x), c);
    }
    return false;
  }

  void reduce_fully() {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] > pivots_[b]; });
    // Rows with larger pivots are already fully reduced when used.
    for (std::size_t idx : order) {
      std::vector<Element>& row = rows_[idx];
      for (std::size_t c = pivots_[idx] + 1; c < cols_; ++c) {
        std::int32_t r = row_of_col_[c];
        if (r < 0 || row[c] == 0) continue;
        axpy(row, rows_[static_cast<std::size_t>(r)], field_.neg(row[c]), c);
      }
    }
  }

  bool is_pivot(std::size_t c) const { return row_of_col_[c] >= 0; }
  const std::vector<Element>& row_for(std::size_t c) const {
    return rows_[static_cast<std::size_t>(row_of_col_[c])];
  }

 private:
  void axpy(std::vector<Element>& v, const std::vector<Element>& row, Element factor, std::size_t from) {
    Element pre = field_.precondition(factor);
    for (std::size_t k = from; k < cols_; ++k) {
      if (row[k] != 0) v[k] = field_.add(v[k], field_.mul_precon(row[k], factor, pre));
    }
  }

  const PrimeField& field_;
  std::size_t cols_;
  std::vector<std::int32_t> row_of_col_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<Element>> rows_;
};

}  // namespace

struct JacobianRing::State {
  State(HomogeneousForm f, JacobianOptions opts)
      : form(std::move(f)), options(opts), n(form.dimension()), d(form.degree()) {}

  HomogeneousForm form;
  std::vector<HomogeneousForm> partials;
  JacobianOptions options;
  int n;
  int d;
  std::vector<std::uint64_t> ci;

  mutable std::mutex mutex;
  mutable std::vector<std::unique_ptr<const DegreeRecord>> records;
  mutable std::map<int, std::uint64_t> preloaded;
  mutable std::set<int> hits;

  int socle() const { return (n + 1) * (d - 2); }
  std::uint64_t ci_at(int q) const { return q <= socle() ? ci[static_cast<std::size_t>(q)] : 0; }

  // Caller holds the mutex.
  const DegreeRecord& record(int q) const {
    while (static_cast<int>(records.size()) <= q) {
      int next = static_cast<int>(records.size());
      auto built = build(next);
      auto it = preloaded.find(next);
      if (it != preloaded.end() && it->second != built->dim()) {
        throw Error(ErrorCode::CacheMismatch, "cached dim R_" + std::to_string(next) + " = " +
                                                  std::to_string(it->second) + " but computed " +
                                                  std::to_string(built->dim()));
      }
      records.push_back(std::move(built));
    }
    return *records[static_cast<std::size_t>(q)];
  }

  std::unique_ptr<DegreeRecord> build(int q) const;
  void build_first_ideal_degree(DegreeRecord& rec) const;
  void build_from_previous(DegreeRecord& rec, const DegreeRecord& prev) const;
};

namespace {

void mark_all_standard(DegreeRecord& rec) {
  std::size_t count = rec.monomials.size();
  rec.std_pos.resize(count);
  rec.std_cols.resize(count);
  rec.normal_forms.assign(count, {});
  for (std::size_t c = 0; c < count; ++c) {
    rec.std_pos[c] = static_cast<std::int32_t>(c);
    rec.std_cols[c] = static_cast<std::uint32_t>(c);
  }
}

// Fills std_pos/std_cols from a leading-column mask.
void assign_standard(DegreeRecord& rec, const std::vector<bool>& leading) {
  std::size_t count = rec.monomials.size();
  rec.std_pos.assign(count, -1);
  rec.std_cols.clear();
  rec.normal_forms.assign(count, {});
  for (std::size_t c = 0; c < count; ++c) {
    if (leading[c]) continue;
    rec.std_pos[c] = static_cast<std::int32_t>(rec.std_cols.size());
    rec.std_cols.push_back(static_cast<std::uint32_t>(c));
  }
}

}  // namespace

std::unique_ptr<DegreeRecord> JacobianRing::State::build(int q) const {
  std::uint64_t count = monomial_count(n, q);
  if (count > options.max_columns) {
    throw Error(ErrorCode::ResourceLimit, "degree " + std::to_string(q) + " has " + std::to_string(count) +
                                              " monomials, above the limit of " +
                                              std::to_string(options.max_columns));
  }
  auto rec = std::make_unique<DegreeRecord>();
  rec->degree = q;
  rec->monomials = enumerate_monomials(n, q);
  if (q < d - 1) {
    mark_all_standard(*rec);
  } else if (q == d - 1) {
    build_first_ideal_degree(*rec);
  } else {
    const DegreeRecord& prev = *records[static_cast<std::size_t>(q - 1)];
    if (prev.dim() == 0) {
      // R_{q-1} = 0 forces R_q = 0; every monomial reduces to zero.
      rec->std_pos.assign(rec->monomials.size(), -1);
      rec->normal_forms.assign(rec->monomials.size(), {});
    } else {
      build_from_previous(*rec, prev);
    }
  }
  return rec;
}

void JacobianRing::State::build_first_ideal_degree(DegreeRecord& rec) const {
  const PrimeField& field = form.field();
  std::size_t cols = rec.monomials.size();
  std::vector<SparseRow> rows;
  for (const HomogeneousForm& g : partials) {
    SparseRow row;
    for (const Term& t : g.terms()) {
      row.push_back({static_cast<std::uint32_t>(monomial_index(n, t.monomial)), t.coefficient});
    }
    rows.push_back(std::move(row));
  }
  EchelonResult ech = reduced_echelon(FieldMatrix::sparse(field, cols, std::move(rows)));
  std::vector<bool> leading(cols, false);
  for (std::size_t c : ech.pivot_columns) leading[c] = true;
  assign_standard(rec, leading);
  for (std::size_t k = 0; k < ech.rank; ++k) {
    SparseRow nf;
    for (const SparseEntry& e : ech.echelon.sparse_row(k)) {
      std::int32_t pos = rec.std_pos[e.col];
      if (pos >= 0) nf.push_back({static_cast<std::uint32_t>(pos), field.neg(e.value)});
    }
    rec.normal_forms[ech.pivot_columns[k]] = std::move(nf);
  }
}

void JacobianRing::State::build_from_previous(DegreeRecord& rec, const DegreeRecord& prev) const {
  const PrimeField& field = form.field();
  const std::size_t count = rec.monomials.size();
  const std::size_t nvars = static_cast<std::size_t>(n) + 1;

  std::vector<std::uint32_t> prev_leads;
  for (std::size_t c = 0; c < prev.monomials.size(); ++c) {
    if (prev.std_pos[c] < 0) prev_leads.push_back(static_cast<std::uint32_t>(c));
  }
  std::vector<std::uint64_t> var_packed(nvars);
  for (std::size_t i = 0; i < nvars; ++i) var_packed[i] = Monomial::variable(static_cast<int>(i)).packed();
  auto column_of = [&](const Monomial& m, std::size_t i) {
    return static_cast<std::uint32_t>(monomial_index(n, Monomial::from_packed(m.packed() + var_packed[i])));
  };
  // Column of x_i * (standard monomial s of degree q-1).
  std::vector<std::uint32_t> std_times(nvars * prev.std_cols.size());
  for (std::size_t s = 0; s < prev.std_cols.size(); ++s) {
    for (std::size_t i = 0; i < nvars; ++i) {
      std_times[s * nvars + i] = column_of(prev.monomials[prev.std_cols[s]], i);
    }
  }

  // Generator g = k * nvars + i stands for x_i * (m - NF(m)), m = prev_leads[k].
  // Its leading monomial is x_i * m; the first generator per column reduces.
  std::vector<std::uint32_t> lead_of(prev_leads.size() * nvars);
  std::vector<std::uint32_t> reducer(count, kNoReducer);
  for (std::size_t k = 0; k < prev_leads.size(); ++k) {
    for (std::size_t i = 0; i < nvars; ++i) {
      std::uint32_t u = column_of(prev.monomials[prev_leads[k]], i);
      std::uint32_t g = static_cast<std::uint32_t>(k * nvars + i);
      lead_of[g] = u;
      if (reducer[u] == kNoReducer) reducer[u] = g;
    }
  }
  std::vector<std::int32_t> qpos(count, -1);
  std::vector<std::uint32_t> qcols;
  for (std::size_t u = 0; u < count; ++u) {
    if (reducer[u] == kNoReducer) {
      qpos[u] = static_cast<std::int32_t>(qcols.size());
      qcols.push_back(static_cast<std::uint32_t>(u));
    }
  }
  const std::size_t nq = qcols.size();
  const std::size_t np = count - nq;

  // reduced[u] for a reducer column u: u ≡ Σ reduced[u][j] * qcols[j] (mod J).
  std::vector<SparseRow> reduced(count);
  Accumulator acc(field, nq);
  auto accumulate_tail = [&](std::uint32_t g) {
    std::size_t k = g / nvars;
    std::size_t i = g % nvars;
    for (const SparseEntry& e : prev.normal_forms[prev_leads[k]]) {
      std::uint32_t v = std_times[e.col * nvars + i];
      std::int32_t pos = qpos[v];
      if (pos >= 0) {
        acc.add(static_cast<std::size_t>(pos), e.value);
      } else {
        acc.add_scaled(reduced[v], e.value);
      }
    }
  };
  // Tail monomials are smaller than the lead, i.e. at larger column indices,
  // so walking columns from the back sees every substitution already reduced.
  for (std::size_t u = count; u-- > 0;) {
    if (reducer[u] == kNoReducer) continue;
    accumulate_tail(reducer[u]);
    reduced[u] = acc.gather();
  }

  std::uint64_t cap = count - ci_at(rec.degree);
  if (np > cap) {
    throw Error(ErrorCode::HilbertMismatch, "ideal rank exceeds the complete-intersection bound in degree " +
                                                std::to_string(rec.degree));
  }
  const std::size_t needed = static_cast<std::size_t>(cap - np);
  DenseEchelon echelon(field, nq);
  if (options.exhaustive || needed > 0) {
    for (std::uint32_t g = 0; g < lead_of.size(); ++g) {
      std::uint32_t u = lead_of[g];
      if (reducer[u] == g) continue;
      // x_i m - reducer: both have leading monomial u with coefficient 1.
      accumulate_tail(g);
      acc.subtract(reduced[u]);
      echelon.insert(acc.values());
      std::fill(acc.values().begin(), acc.values().end(), 0);
      if (!options.exhaustive && echelon.rank() == needed) break;
    }
  }
  echelon.reduce_fully();

  std::vector<bool> leading(count, true);
  for (std::size_t j = 0; j < nq; ++j) {
    if (!echelon.is_pivot(j)) leading[qcols[j]] = false;
  }
  assign_standard(rec, leading);
  // Standard Q positions map to standard basis positions.
  std::vector<std::int32_t> q_to_std(nq, -1);
  for (std::size_t j = 0; j < nq; ++j) q_to_std[j] = rec.std_pos[qcols[j]];

  for (std::size_t j = 0; j < nq; ++j) {
    if (!echelon.is_pivot(j)) continue;
    const std::vector<Element>& row = echelon.row_for(j);
    SparseRow nf;
    for (std::size_t k = j + 1; k < nq; ++k) {
      if (row[k] != 0 && q_to_std[k] >= 0) nf.push_back({static_cast<std::uint32_t>(q_to_std[k]), field.neg(row[k])});
    }
    rec.normal_forms[qcols[j]] = std::move(nf);
  }
  Accumulator std_acc(field, rec.std_cols.size());
  for (std::size_t u = 0; u < count; ++u) {
    if (reducer[u] == kNoReducer) continue;
    for (const SparseEntry& e : reduced[u]) {
      if (q_to_std[e.col] >= 0) {
        std_acc.add(static_cast<std::size_t>(q_to_std[e.col]), e.value);
      } else {
        std_acc.add_scaled(rec.normal_forms[qcols[e.col]], e.value);
      }
    }
    rec.normal_forms[u] = std_acc.gather();
    SparseRow().swap(reduced[u]);
  }
}

JacobianRing::JacobianRing(HomogeneousForm f, JacobianOptions options)
    : state_(std::make_unique<State>(std::move(f), options)) {
  State& s = *state_;
  if (s.d < 2) throw Error(ErrorCode::DegreeTooSmall, "Jacobian ring needs deg F >= 2");
  if (s.form.field().modulus() <= static_cast<std::uint64_t>(s.d)) {
    throw Error(ErrorCode::FieldTooSmall, "field characteristic " + std::to_string(s.form.field().modulus()) +
                                              " must exceed deg F = " + std::to_string(s.d));
  }
  s.partials = partial_derivatives(s.form);
  s.ci = ci_hilbert_coefficients(s.n, s.d);
}

JacobianRing::~JacobianRing() = default;
JacobianRing::JacobianRing(JacobianRing&&) noexcept = default;
JacobianRing& JacobianRing::operator=(JacobianRing&&) noexcept = default;

const HomogeneousForm& JacobianRing::form() const noexcept { return state_->form; }
const std::vector<HomogeneousForm>& JacobianRing::partials() const noexcept { return state_->partials; }
const PrimeField& JacobianRing::field() const noexcept { return state_->form.field(); }
int JacobianRing::dimension() const noexcept { return state_->n; }
int JacobianRing::degree() const noexcept { return state_->d; }
int JacobianRing::socle_degree() const noexcept { return state_->socle(); }

FieldMatrix JacobianRing::ideal_matrix(int p) const {
  const State& s = *state_;
  std::uint64_t cols = monomial_count(s.n, p);
  if (cols > s.options.max_columns) {
    throw Error(ErrorCode::ResourceLimit, "ideal matrix in degree " + std::to_string(p) + " is too large");
  }
  std::vector<SparseRow> rows;
  if (p >= s.d - 1) {
    std::vector<Monomial> multipliers = enumerate_monomials(s.n, p - s.d + 1);
    rows.reserve(multipliers.size() * s.partials.size());
    for (const HomogeneousForm& g : s.partials) {
      for (const Monomial& m : multipliers) {
        SparseRow row;
        row.reserve(g.terms().size());
        for (const Term& t : g.terms()) {
          row.push_back({static_cast<std::uint32_t>(monomial_index(s.n, m * t.monomial)), t.coefficient});
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return FieldMatrix::sparse(field(), static_cast<std::size_t>(cols), std::move(rows));
}

std::uint64_t JacobianRing::graded_dim(int p) const {
  if (p < 0) return 0;
  const State& s = *state_;
  std::lock_guard lock(s.mutex);
  if (p >= static_cast<int>(s.records.size())) {
    auto it = s.preloaded.find(p);
    if (it != s.preloaded.end()) {
      s.hits.insert(p);
      return it->second;
    }
  }
  return s.record(p).dim();
}

QuotientBasis JacobianRing::quotient_basis(int p) const {
  QuotientBasis basis{p, {}};
  if (p < 0) return basis;
  const State& s = *state_;
  std::lock_guard lock(s.mutex);
  const DegreeRecord& rec = s.record(p);
  basis.monomials.reserve(rec.std_cols.size());
  for (std::uint32_t c : rec.std_cols) basis.monomials.push_back(rec.monomials[c]);
  return basis;
}

HilbertFunction JacobianRing::hilbert_function(int max_degree) const {
  HilbertFunction h;
  for (int p = 0; p <= max_degree; ++p) h.coefficients.push_back(graded_dim(p));
  return h;
}

SmoothnessCertificate JacobianRing::certify_smooth() const {
  SmoothnessCertificate cert;
  int socle = socle_degree();
  cert.socle_degree = socle;
  cert.hilbert = hilbert_function(socle + 1);
  cert.dim_past_socle = cert.hilbert.coefficients.back();
  if (cert.dim_past_socle != 0) {
    cert.status = SmoothnessCertificate::Status::NotCertified;
    return cert;
  }
  cert.hilbert.coefficients.pop_back();
  const std::vector<std::uint64_t>& expected = state_->ci;
  if (cert.hilbert.coefficients != expected) {
    for (int p = 0; p <= socle; ++p) {
      if (cert.hilbert.coefficients[static_cast<std::size_t>(p)] != expected[static_cast<std::size_t>(p)]) {
        throw Error(ErrorCode::HilbertMismatch,
                    "R is Artinian but dim R_" + std::to_string(p) + " = " +
                        std::to_string(cert.hilbert.coefficients[static_cast<std::size_t>(p)]) +
                        " differs from the complete-intersection value " +
                        std::to_string(expected[static_cast<std::size_t>(p)]));
      }
    }
  }
  cert.status = SmoothnessCertificate::Status::Certified;
  return cert;
}

void JacobianRing::accumulate_normal_form(int p, std::size_t column, PrimeField::Element c,
                                          std::span<PrimeField::Element> acc) const {
  const State& s = *state_;
  const DegreeRecord* rec = nullptr;
  {
    std::lock_guard lock(s.mutex);
    rec = &s.record(p);
  }
  const PrimeField& f = field();
  if (acc.size() != rec->std_cols.size()) throw Error(ErrorCode::DimensionMismatch, "accumulator size");
  std::int32_t pos = rec->std_pos[column];
  if (pos >= 0) {
    acc[static_cast<std::size_t>(pos)] = f.add(acc[static_cast<std::size_t>(pos)], c);
    return;
  }
  for (const SparseEntry& e : rec->normal_forms[column]) acc[e.col] = f.add(acc[e.col], f.mul(e.value, c));
}

std::vector<PrimeField::Element> JacobianRing::normal_form(const HomogeneousForm& g) const {
  if (g.dimension() != dimension() || !(g.field() == field())) {
    throw Error(ErrorCode::DimensionMismatch, "form does not belong to this ring");
  }
  std::vector<Element> acc(graded_dim(g.degree()), 0);
  for (const Term& t : g.terms()) {
    accumulate_normal_form(g.degree(), monomial_index(dimension(), t.monomial), t.coefficient, acc);
  }
  return acc;
}

HomogeneousForm JacobianRing::lift(int p, std::span<const PrimeField::Element> coords) const {
  QuotientBasis basis = quotient_basis(p);
  if (coords.size() != basis.size()) throw Error(ErrorCode::DimensionMismatch, "coordinate vector length");
  std::vector<Term> terms;
  for (std::size_t j = 0; j < coords.size(); ++j) terms.push_back({basis.monomials[j], coords[j]});
  return HomogeneousForm(field(), dimension(), p, std::move(terms));
}

bool JacobianRing::reduces_to_zero(const HomogeneousForm& g) const {
  auto nf = normal_form(g);
  return std::all_of(nf.begin(), nf.end(), [](Element x) { return x == 0; });
}

bool JacobianRing::in_ideal_by_matrix(const HomogeneousForm& g) const {
  if (g.dimension() != dimension() || !(g.field() == field())) {
    throw Error(ErrorCode::DimensionMismatch, "form does not belong to this ring");
  }
  if (g.is_zero()) return true;
  FieldMatrix ideal = ideal_matrix(g.degree());
  std::vector<SparseRow> rows;
  for (std::size_t r = 0; r < ideal.rows(); ++r) rows.push_back(ideal.sparse_row(r));
  std::size_t base = rank(ideal);
  SparseRow extra;
  for (const Term& t : g.terms()) {
    extra.push_back({static_cast<std::uint32_t>(monomial_index(dimension(), t.monomial)), t.coefficient});
  }
  rows.push_back(std::move(extra));
  return rank(FieldMatrix::sparse(field(), ideal.cols(), std::move(rows))) == base;
}

void JacobianRing::preload_dimension(int p, std::uint64_t dim) {
  State& s = *state_;
  std::lock_guard lock(s.mutex);
  if (p < static_cast<int>(s.records.size()) && s.records[static_cast<std::size_t>(p)]->dim() != dim) {
    throw Error(ErrorCode::CacheMismatch, "cached dim R_" + std::to_string(p) + " disagrees with computed value");
  }
  s.preloaded[p] = dim;
}

std::set<int> JacobianRing::cache_hits() const {
  std::lock_guard lock(state_->mutex);
  return state_->hits;
}

int JacobianRing::built_degrees() const {
  std::lock_guard lock(state_->mutex);
  return static_cast<int>(state_->records.size());
}

JacobianRing fermat_ring(int n, int d, const PrimeField& field, JacobianOptions options) {
  return JacobianRing(fermat_form(field, n, d), options);
}

}  // namespace maxvar
