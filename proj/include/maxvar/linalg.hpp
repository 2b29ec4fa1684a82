#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "maxvar/matrix.hpp"

namespace maxvar {

/// Row echelon data for a matrix. The pivot columns are the greedy
/// left-to-right maximal independent column set, which depends only on the
/// matrix. Pivot rows are chosen by the fixed rule: scan columns left to
/// right, take the topmost remaining row (by original index) with a nonzero
/// entry there.
struct EchelonResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
  /// One row per pivot, leading entry 1, in pivot-column order (sparse).
  FieldMatrix echelon;
};

/// Exact rank over F_p. Sparse inputs use Markowitz-style elimination (the
/// shortest row wins each pivot); dense inputs use in-place elimination.
std::size_t rank(const FieldMatrix& m);

EchelonResult column_echelon(const FieldMatrix& m);

/// Fully reduced row echelon form (dense elimination, topmost-row rule):
/// each echelon row is zero in every other pivot column.
EchelonResult reduced_echelon(const FieldMatrix& m);

/// A nonzero v with M v = 0, or nullopt when M has full column rank. The
/// returned vector is checked against M before it is handed out.
std::optional<std::vector<PrimeField::Element>> kernel_witness(const FieldMatrix& m);

/// A basis of the right kernel: one vector per non-pivot column, with a 1 in
/// that column and zeros in the other non-pivot columns.
std::vector<std::vector<PrimeField::Element>> kernel_basis(const FieldMatrix& m);

/// Largest rows*cols product the dense oracle accepts.
inline constexpr std::size_t kOracleGuard = 10'000'000;

/// Textbook Gaussian elimination on a dense copy, without any of the tricks
/// used by rank(). For tests and the rank-oracle command only. Throws
/// SizeGuardExceeded past kOracleGuard.
std::size_t dense_rank_oracle(const FieldMatrix& m);

}  // namespace maxvar
