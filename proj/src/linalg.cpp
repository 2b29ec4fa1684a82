#include "maxvar/linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

#include "maxvar/error.hpp"

namespace maxvar {

namespace {

using Element = PrimeField::Element;

// row <- row - factor * pivot, both sorted sparse rows.
SparseRow axpy_sparse(const PrimeField& field, const SparseRow& row, Element factor, const SparseRow& pivot) {
  Element neg = field.neg(factor);
  Element neg_pre = field.precondition(neg);
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].col < pivot[j].col)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].col < row[i].col) {
      out.push_back({pivot[j].col, field.mul_precon(pivot[j].value, neg, neg_pre)});
      ++j;
    } else {
      Element v = field.add(row[i].value, field.mul_precon(pivot[j].value, neg, neg_pre));
      if (v != 0) out.push_back({row[i].col, v});
      ++i;
      ++j;
    }
  }
  return out;
}

enum class PivotPolicy { Shortest, Topmost };

struct SparseElimination {
  std::vector<std::size_t> pivot_columns;
  std::vector<SparseRow> pivot_rows;  // normalized to a leading 1
};

// Column-by-column elimination over buckets keyed by leading column. Each
// bucket's pivot is picked by `policy`; every other row in the bucket is
// reduced and moves to a later bucket.
SparseElimination eliminate_sparse(const FieldMatrix& m, PivotPolicy policy) {
  const PrimeField& field = m.field();
  struct Pending {
    std::size_t origin;
    SparseRow row;
  };
  std::vector<std::vector<Pending>> buckets(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseRow row = m.sparse_row(r);
    if (!row.empty()) buckets[row.front().col].push_back({r, std::move(row)});
  }
  SparseElimination result;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    auto& bucket = buckets[c];
    if (bucket.empty()) continue;
    std::size_t best = 0;
    for (std::size_t k = 1; k < bucket.size(); ++k) {
      bool better = policy == PivotPolicy::Shortest
                        ? (bucket[k].row.size() < bucket[best].row.size() ||
                           (bucket[k].row.size() == bucket[best].row.size() && bucket[k].origin < bucket[best].origin))
                        : bucket[k].origin < bucket[best].origin;
      if (better) best = k;
    }
    Pending pivot = std::move(bucket[best]);
    Element lead_inv = field.inv(pivot.row.front().value);
    for (std::size_t k = 0; k < bucket.size(); ++k) {
      if (k == best) continue;
      Element factor = field.mul(bucket[k].row.front().value, lead_inv);
      SparseRow reduced = axpy_sparse(field, bucket[k].row, factor, pivot.row);
      if (!reduced.empty()) {
        std::size_t lead = reduced.front().col;
        buckets[lead].push_back({bucket[k].origin, std::move(reduced)});
      }
    }
    bucket.clear();
    bucket.shrink_to_fit();
    Element pre = field.precondition(lead_inv);
    for (SparseEntry& e : pivot.row) e.value = field.mul_precon(e.value, lead_inv, pre);
    result.pivot_columns.push_back(c);
    result.pivot_rows.push_back(std::move(pivot.row));
  }
  return result;
}

std::size_t rank_dense(const FieldMatrix& m) {
  const PrimeField& field = m.field();
  std::size_t rows = m.rows();
  std::size_t cols = m.cols();
  std::vector<Element> a(m.dense_data().begin(), m.dense_data().end());
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pivot * cols),
                       a.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * cols),
                       a.begin() + static_cast<std::ptrdiff_t>(rank * cols));
    }
    const Element* prow = &a[rank * cols];
    Element inv = field.inv(prow[c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      Element* row = &a[r * cols];
      if (row[c] == 0) continue;
      Element neg = field.neg(field.mul(row[c], inv));
      Element neg_pre = field.precondition(neg);
      for (std::size_t k = c; k < cols; ++k) {
        if (prow[k] != 0) row[k] = field.add(row[k], field.mul_precon(prow[k], neg, neg_pre));
      }
    }
    ++rank;
  }
  return rank;
}

// Dense reduced row echelon form with the topmost-row rule. Returns the pivot
// columns; `a` is left in RREF with rank leading rows.
std::vector<std::size_t> rref_dense(const PrimeField& field, std::vector<Element>& a, std::size_t rows,
                                    std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    // Rotate so remaining rows keep their original relative order.
    std::rotate(a.begin() + static_cast<std::ptrdiff_t>(rank * cols),
                a.begin() + static_cast<std::ptrdiff_t>(pivot * cols),
                a.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * cols));
    Element* prow = &a[rank * cols];
    Element inv = field.inv(prow[c]);
    Element inv_pre = field.precondition(inv);
    for (std::size_t k = c; k < cols; ++k) prow[k] = field.mul_precon(prow[k], inv, inv_pre);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      Element* row = &a[r * cols];
      if (row[c] == 0) continue;
      Element neg = field.neg(row[c]);
      Element neg_pre = field.precondition(neg);
      for (std::size_t k = c; k < cols; ++k) {
        if (prow[k] != 0) row[k] = field.add(row[k], field.mul_precon(prow[k], neg, neg_pre));
      }
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const FieldMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (!m.is_sparse()) return rank_dense(m);
  return eliminate_sparse(m, PivotPolicy::Shortest).pivot_columns.size();
}

EchelonResult column_echelon(const FieldMatrix& m) {
  SparseElimination e = eliminate_sparse(m, PivotPolicy::Topmost);
  EchelonResult result{e.pivot_columns.size(), std::move(e.pivot_columns),
                       FieldMatrix::sparse(m.field(), m.cols(), std::move(e.pivot_rows))};
  return result;
}

EchelonResult reduced_echelon(const FieldMatrix& m) {
  FieldMatrix dense = m.to_dense();
  std::vector<Element> a(dense.dense_data().begin(), dense.dense_data().end());
  std::vector<std::size_t> pivots = rref_dense(m.field(), a, m.rows(), m.cols());
  std::vector<Element> top(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(pivots.size() * m.cols()));
  std::size_t r = pivots.size();
  return EchelonResult{r, std::move(pivots), FieldMatrix::dense(m.field(), r, m.cols(), std::move(top))};
}

std::vector<std::vector<PrimeField::Element>> kernel_basis(const FieldMatrix& m) {
  const PrimeField& field = m.field();
  std::size_t rows = m.rows();
  std::size_t cols = m.cols();
  if (rows * cols > 50'000'000) {
    throw Error(ErrorCode::SizeGuardExceeded, "kernel computation on a " + std::to_string(rows) + "x" +
                                                  std::to_string(cols) + " matrix");
  }
  FieldMatrix dense = m.to_dense();
  std::vector<Element> a(dense.dense_data().begin(), dense.dense_data().end());
  std::vector<std::size_t> pivots = rref_dense(field, a, rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Element>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Element> v(cols, 0);
    v[free] = 1 % field.modulus();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = field.neg(a[i * cols + free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<PrimeField::Element>> kernel_witness(const FieldMatrix& m) {
  auto basis = kernel_basis(m);
  if (basis.empty()) return std::nullopt;
  std::vector<Element> image = m.apply(basis.front());
  if (std::any_of(image.begin(), image.end(), [](Element x) { return x != 0; })) {
    throw Error(ErrorCode::VerificationFailed, "kernel witness failed verification");
  }
  return std::move(basis.front());
}

std::size_t dense_rank_oracle(const FieldMatrix& m) {
  std::size_t rows = m.rows();
  std::size_t cols = m.cols();
  if (rows * cols > kOracleGuard) {
    throw Error(ErrorCode::SizeGuardExceeded, "oracle refuses a " + std::to_string(rows) + "x" +
                                                  std::to_string(cols) + " matrix");
  }
  std::uint64_t p = m.field().modulus();
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m.at(r, c);
  }
  auto mulmod = [p](std::uint64_t x, std::uint64_t y) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % p);
  };
  auto modinv = [&](std::uint64_t x) {
    std::uint64_t result = 1;
    std::uint64_t e = p - 2;
    while (e > 0) {
      if (e & 1) result = mulmod(result, x);
      x = mulmod(x, x);
      e >>= 1;
    }
    return result;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    std::uint64_t inv = modinv(a[r][c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      std::uint64_t f = mulmod(a[i][c], inv);
      for (std::size_t k = c; k < cols; ++k) {
        a[i][k] = (a[i][k] + mulmod(p - f, a[r][k])) % p;
      }
    }
    ++r;
  }
  return r;
}

}  // namespace maxvar
