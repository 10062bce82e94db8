#include "hv/linalg.hpp"

#include "hv/errors.hpp"

namespace hv {

void axpy(SparseRow& row, const Scalar& factor, const SparseRow& other)
{
    if (factor.is_zero()) return;
    for (const auto& [col, v] : other) {
        auto [it, inserted] = row.try_emplace(col, factor * v);
        if (inserted) continue;
        it->second += factor * v;
        if (it->second.is_zero()) row.erase(it);
    }
}

SparseRow to_sparse(const std::vector<Scalar>& dense)
{
    SparseRow row;
    for (std::size_t k = 0; k < dense.size(); ++k)
        if (!dense[k].is_zero()) row.emplace(k, dense[k]);
    return row;
}

void RowReducer::reduce(SparseRow& row) const
{
    // Walk columns in increasing order; each elimination only touches
    // columns at or beyond the pivot, so the cursor never moves back.
    auto it = row.begin();
    while (it != row.end()) {
        auto piv = pivots_.find(it->first);
        if (piv == pivots_.end()) {
            ++it;
            continue;
        }
        std::size_t col = it->first;
        Scalar factor = -it->second;
        axpy(row, factor, piv->second);
        it = row.upper_bound(col);
    }
}

bool RowReducer::add_row(SparseRow row)
{
    for (const auto& [col, v] : row)
        if (col >= columns_) throw PreconditionError("row entry beyond matrix width");
    // Reduce only until the leading entry is a new pivot; full reduction
    // is deferred to nullspace().
    while (!row.empty()) {
        auto lead = row.begin();
        auto piv = pivots_.find(lead->first);
        if (piv == pivots_.end()) {
            Scalar scale = lead->second.inv();
            for (auto& [col, v] : row) v *= scale;
            pivots_.emplace(lead->first, std::move(row));
            return true;
        }
        Scalar factor = -lead->second;
        axpy(row, factor, piv->second);
    }
    return false;
}

bool RowReducer::contains(SparseRow row) const
{
    reduce(row);
    return row.empty();
}

std::vector<std::vector<Scalar>> RowReducer::nullspace() const
{
    // Back-substitute into reduced row echelon form, highest pivot first.
    std::map<std::size_t, SparseRow> rref = pivots_;
    for (auto it = rref.rbegin(); it != rref.rend(); ++it) {
        for (auto jt = rref.begin(); jt->first != it->first; ++jt) {
            auto hit = jt->second.find(it->first);
            if (hit == jt->second.end()) continue;
            Scalar factor = -hit->second;
            axpy(jt->second, factor, it->second);
        }
    }
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < columns_; ++free) {
        if (rref.count(free) != 0) continue;
        std::vector<Scalar> v(columns_);
        v[free] = Scalar(1);
        for (const auto& [pcol, row] : rref) {
            auto hit = row.find(free);
            if (hit != row.end()) v[pcol] = -hit->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace hv
