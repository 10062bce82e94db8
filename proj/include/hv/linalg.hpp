#pragma once

#include "hv/scalar.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace hv {

/// Sparse row: column index -> nonzero coefficient.
using SparseRow = std::map<std::size_t, Scalar>;

/// Incremental exact Gaussian elimination over Q(i).
///
/// Rows are kept in echelon form keyed by leading column, each scaled so
/// its leading entry is 1. The leading column of a row is its smallest
/// column index, so the column numbering fixes the pivot order and the
/// resulting bases are deterministic.
class RowReducer {
public:
    explicit RowReducer(std::size_t columns) : columns_(columns) {}

    /// Reduces `row` against the current pivots and keeps the remainder.
    /// Returns true iff the rank grew.
    bool add_row(SparseRow row);

    /// True iff `row` lies in the span of the rows added so far.
    bool contains(SparseRow row) const;

    std::size_t rank() const { return pivots_.size(); }
    std::size_t columns() const { return columns_; }

    /// Basis of {x : A x = 0}, one dense vector per free column in
    /// ascending order; vector k has a 1 at its free column, 0 at the
    /// other free columns, and no entry beyond its free column.
    std::vector<std::vector<Scalar>> nullspace() const;

private:
    void reduce(SparseRow& row) const;

    std::size_t columns_;
    std::map<std::size_t, SparseRow> pivots_;
};

/// row += factor * other
void axpy(SparseRow& row, const Scalar& factor, const SparseRow& other);

SparseRow to_sparse(const std::vector<Scalar>& dense);

} // namespace hv
