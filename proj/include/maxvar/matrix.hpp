#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <variant>
#include <vector>

#include "maxvar/field.hpp"

namespace maxvar {

struct SparseEntry {
  std::uint32_t col;
  PrimeField::Element value;

  bool operator==(const SparseEntry&) const = default;
};

/// Sorted by column, no explicit zeros.
using SparseRow = std::vector<SparseEntry>;

/// A matrix over a prime field, stored either dense row-major or as sparse
/// rows. Immutable once built; both storages answer the same queries.
class FieldMatrix {
 public:
  using Element = PrimeField::Element;

  /// Entries are reduced mod p; throws DimensionMismatch on a size mismatch.
  static FieldMatrix dense(PrimeField field, std::size_t rows, std::size_t cols, std::vector<Element> data);
  static FieldMatrix zeros(PrimeField field, std::size_t rows, std::size_t cols);
  static FieldMatrix identity(PrimeField field, std::size_t size);
  /// Rows are sorted, merged and stripped of zeros; columns are range-checked.
  static FieldMatrix sparse(PrimeField field, std::size_t cols, std::vector<SparseRow> rows);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_sparse() const noexcept { return std::holds_alternative<SparseStorage>(storage_); }

  Element at(std::size_t r, std::size_t c) const;
  std::size_t nonzeros() const;

  FieldMatrix to_dense() const;
  FieldMatrix to_sparse() const;
  FieldMatrix transpose() const;

  /// Row r as a sparse row (copies for dense storage).
  SparseRow sparse_row(std::size_t r) const;
  /// Dense row-major data; only valid for dense storage.
  std::span<const Element> dense_data() const;

  /// M * v. Throws DimensionMismatch.
  std::vector<Element> apply(std::span<const Element> v) const;

  /// Entrywise equality, independent of storage.
  bool operator==(const FieldMatrix& other) const;

 private:
  using DenseStorage = std::vector<Element>;
  using SparseStorage = std::vector<SparseRow>;

  FieldMatrix(PrimeField field, std::size_t rows, std::size_t cols, std::variant<DenseStorage, SparseStorage> s)
      : field_(field), rows_(rows), cols_(cols), storage_(std::move(s)) {}

  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::variant<DenseStorage, SparseStorage> storage_;
};

/// Debug dump: a header line "rows cols modulus" followed by one
/// "row col value" triple per nonzero entry.
void write_matrix_dump(std::ostream& out, const FieldMatrix& m);
/// Throws FormatError on malformed input, duplicate entries, out-of-range
/// indices, values >= modulus or a non-prime modulus.
FieldMatrix read_matrix_dump(std::istream& in);

}  // namespace maxvar
