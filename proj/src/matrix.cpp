#include "maxvar/matrix.hpp"

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "maxvar/error.hpp"

namespace maxvar {

FieldMatrix FieldMatrix::dense(PrimeField field, std::size_t rows, std::size_t cols, std::vector<Element> data) {
  if (data.size() != rows * cols) {
    throw Error(ErrorCode::DimensionMismatch, "dense data has " + std::to_string(data.size()) +
                                                  " entries, expected " + std::to_string(rows * cols));
  }
  for (Element& x : data) x = field.reduce_unsigned(x);
  return FieldMatrix(field, rows, cols, std::move(data));
}

FieldMatrix FieldMatrix::zeros(PrimeField field, std::size_t rows, std::size_t cols) {
  return FieldMatrix(field, rows, cols, DenseStorage(rows * cols, 0));
}

FieldMatrix FieldMatrix::identity(PrimeField field, std::size_t size) {
  DenseStorage data(size * size, 0);
  for (std::size_t i = 0; i < size; ++i) data[i * size + i] = 1 % field.modulus();
  return FieldMatrix(field, size, size, std::move(data));
}

FieldMatrix FieldMatrix::sparse(PrimeField field, std::size_t cols, std::vector<SparseRow> rows) {
  for (SparseRow& row : rows) {
    std::sort(row.begin(), row.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.col < b.col; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < row.size();) {
      if (row[i].col >= cols) {
        throw Error(ErrorCode::DimensionMismatch, "column " + std::to_string(row[i].col) + " out of range");
      }
      SparseEntry merged{row[i].col, field.reduce_unsigned(row[i].value)};
      std::size_t j = i + 1;
      for (; j < row.size() && row[j].col == merged.col; ++j) {
        merged.value = field.add(merged.value, field.reduce_unsigned(row[j].value));
      }
      if (merged.value != 0) row[out++] = merged;
      i = j;
    }
    row.resize(out);
  }
  std::size_t num_rows = rows.size();
  return FieldMatrix(field, num_rows, cols, std::move(rows));
}

FieldMatrix::Element FieldMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw Error(ErrorCode::DimensionMismatch, "matrix index out of range");
  if (const auto* d = std::get_if<DenseStorage>(&storage_)) return (*d)[r * cols_ + c];
  const SparseRow& row = std::get<SparseStorage>(storage_)[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const SparseEntry& e, std::size_t col) { return e.col < col; });
  return (it != row.end() && it->col == c) ? it->value : 0;
}

std::size_t FieldMatrix::nonzeros() const {
  if (const auto* d = std::get_if<DenseStorage>(&storage_)) {
    return static_cast<std::size_t>(std::count_if(d->begin(), d->end(), [](Element x) { return x != 0; }));
  }
  std::size_t total = 0;
  for (const SparseRow& row : std::get<SparseStorage>(storage_)) total += row.size();
  return total;
}

SparseRow FieldMatrix::sparse_row(std::size_t r) const {
  if (r >= rows_) throw Error(ErrorCode::DimensionMismatch, "row index out of range");
  if (const auto* s = std::get_if<SparseStorage>(&storage_)) return (*s)[r];
  const auto& d = std::get<DenseStorage>(storage_);
  SparseRow row;
  for (std::size_t c = 0; c < cols_; ++c) {
    Element x = d[r * cols_ + c];
    if (x != 0) row.push_back({static_cast<std::uint32_t>(c), x});
  }
  return row;
}

std::span<const FieldMatrix::Element> FieldMatrix::dense_data() const {
  const auto* d = std::get_if<DenseStorage>(&storage_);
  if (d == nullptr) throw Error(ErrorCode::InvalidArgument, "dense_data on sparse storage");
  return *d;
}

FieldMatrix FieldMatrix::to_dense() const {
  if (!is_sparse()) return *this;
  DenseStorage data(rows_ * cols_, 0);
  const auto& s = std::get<SparseStorage>(storage_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const SparseEntry& e : s[r]) data[r * cols_ + e.col] = e.value;
  }
  return FieldMatrix(field_, rows_, cols_, std::move(data));
}

FieldMatrix FieldMatrix::to_sparse() const {
  if (is_sparse()) return *this;
  SparseStorage rows(rows_);
  for (std::size_t r = 0; r < rows_; ++r) rows[r] = sparse_row(r);
  return FieldMatrix(field_, rows_, cols_, std::move(rows));
}

FieldMatrix FieldMatrix::transpose() const {
  if (const auto* d = std::get_if<DenseStorage>(&storage_)) {
    DenseStorage t(rows_ * cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) t[c * rows_ + r] = (*d)[r * cols_ + c];
    }
    return FieldMatrix(field_, cols_, rows_, std::move(t));
  }
  SparseStorage t(cols_);
  const auto& s = std::get<SparseStorage>(storage_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const SparseEntry& e : s[r]) t[e.col].push_back({static_cast<std::uint32_t>(r), e.value});
  }
  return FieldMatrix(field_, cols_, rows_, std::move(t));
}

std::vector<FieldMatrix::Element> FieldMatrix::apply(std::span<const Element> v) const {
  if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "vector length does not match columns");
  std::vector<Element> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    Element acc = 0;
    if (const auto* d = std::get_if<DenseStorage>(&storage_)) {
      for (std::size_t c = 0; c < cols_; ++c) acc = field_.add(acc, field_.mul((*d)[r * cols_ + c], v[c]));
    } else {
      for (const SparseEntry& e : std::get<SparseStorage>(storage_)[r]) {
        acc = field_.add(acc, field_.mul(e.value, v[e.col]));
      }
    }
    out[r] = acc;
  }
  return out;
}

bool FieldMatrix::operator==(const FieldMatrix& other) const {
  if (!(field_ == other.field_) || rows_ != other.rows_ || cols_ != other.cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (sparse_row(r) != other.sparse_row(r)) return false;
  }
  return true;
}

void write_matrix_dump(std::ostream& out, const FieldMatrix& m) {
  out << m.rows() << ' ' << m.cols() << ' ' << m.field().modulus() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const SparseEntry& e : m.sparse_row(r)) out << r << ' ' << e.col << ' ' << e.value << '\n';
  }
}

namespace {

[[noreturn]] void dump_error(std::size_t line, const std::string& message) {
  throw Error(ErrorCode::FormatError, "matrix dump line " + std::to_string(line) + ": " + message);
}

// Strict unsigned parse: digits only, no sign, no overflow.
bool parse_u64(const std::string& token, std::uint64_t& out) {
  if (token.empty() || token.size() > 20) return false;
  unsigned __int128 value = 0;
  for (char c : token) {
    if (c < '0' || c > '9') return false;
    value = value * 10 + static_cast<unsigned>(c - '0');
  }
  if (value > UINT64_MAX) return false;
  out = static_cast<std::uint64_t>(value);
  return true;
}

std::vector<std::uint64_t> parse_line(const std::string& text, std::size_t line_no, std::size_t expected) {
  std::istringstream tokens(text);
  std::vector<std::uint64_t> values;
  std::string token;
  while (tokens >> token) {
    std::uint64_t v = 0;
    if (!parse_u64(token, v)) dump_error(line_no, "bad integer '" + token + "'");
    values.push_back(v);
  }
  if (values.size() != expected) {
    dump_error(line_no, "expected " + std::to_string(expected) + " fields, found " + std::to_string(values.size()));
  }
  return values;
}

}  // namespace

FieldMatrix read_matrix_dump(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw Error(ErrorCode::FormatError, "matrix dump is empty");
  auto header = parse_line(line, line_no, 3);
  std::size_t rows = header[0];
  std::size_t cols = header[1];
  if (cols > UINT32_MAX) dump_error(line_no, "too many columns");
  std::uint64_t modulus = header[2];
  std::optional<PrimeField> field;
  try {
    field.emplace(modulus);
  } catch (const Error& e) {
    dump_error(line_no, e.what());
  }
  std::vector<SparseRow> data(rows);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  while (next_line()) {
    auto triple = parse_line(line, line_no, 3);
    if (triple[0] >= rows || triple[1] >= cols) dump_error(line_no, "index out of range");
    if (triple[2] >= modulus) dump_error(line_no, "value not reduced modulo " + std::to_string(modulus));
    if (!seen.insert({triple[0], triple[1]}).second) dump_error(line_no, "duplicate entry");
    data[triple[0]].push_back({static_cast<std::uint32_t>(triple[1]), triple[2]});
  }
  return FieldMatrix::sparse(*field, cols, std::move(data));
}

}  // namespace maxvar
