#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "tcone/rational.hpp"

namespace tcone {

// Incremental row space over the rationals, kept as gcd-normalized integer
// rows in echelon form. Entries stay tiny for the unit-coefficient incidence
// matrices this project produces; arithmetic is checked 128-bit.
class RowSpace {
public:
    explicit RowSpace(int cols) : cols_(cols) {}

    int rank() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    const std::vector<long long>& row(int i) const { return rows_[i]; }
    int pivot(int i) const { return pivots_[i]; }
    const std::vector<std::vector<long long>>& rows() const { return rows_; }

    // Reduces row against the echelon basis; returns the (normalized)
    // residue, empty when row lies in the span.
    std::vector<long long> residue(std::vector<long long> row) const {
        for (const auto& r : rows_) {
            int p = pivots_[&r - rows_.data()];
            if (row[p] == 0) continue;
            combine(row, r, p);
        }
        normalize(row);
        return row;
    }

    bool contains(std::vector<long long> row) const {
        row = residue(std::move(row));
        for (long long v : row)
            if (v != 0) return false;
        return true;
    }

    // Inserts row if independent; true when the rank grew.
    bool insert(std::vector<long long> row) {
        row = residue(std::move(row));
        int p = -1;
        for (int i = 0; i < cols_; ++i)
            if (row[i] != 0) {
                p = i;
                break;
            }
        if (p < 0) return false;
        rows_.push_back(std::move(row));
        pivots_.push_back(p);
        // Keep echelon shape: order rows by pivot.
        for (size_t i = rows_.size(); i-- > 1;) {
            if (pivots_[i] < pivots_[i - 1]) {
                std::swap(rows_[i], rows_[i - 1]);
                std::swap(pivots_[i], pivots_[i - 1]);
            } else {
                break;
            }
        }
        return true;
    }

private:
    // row <- pivot_val * row - row_val * r, gcd-normalized.
    static void combine(std::vector<long long>& row, const std::vector<long long>& r, int p) {
        __int128 a = r[p];
        __int128 b = row[p];
        long long g = 0;
        std::vector<__int128> tmp(row.size());
        for (size_t i = 0; i < row.size(); ++i) {
            tmp[i] = a * row[i] - b * r[i];
            __int128 v = tmp[i] < 0 ? -tmp[i] : tmp[i];
            require(v <= INT64_MAX, errc::internal, "row combination overflow");
            g = std::gcd(g, static_cast<long long>(v));
        }
        for (size_t i = 0; i < row.size(); ++i)
            row[i] = static_cast<long long>(g > 1 ? tmp[i] / g : tmp[i]);
    }

    static void normalize(std::vector<long long>& row) {
        long long g = 0;
        bool neg = false;
        for (long long v : row) {
            if (g == 0 && v != 0) neg = v < 0;
            g = std::gcd(g, v < 0 ? -v : v);
        }
        if (g > 1 || neg)
            for (auto& v : row) v = neg ? -v / std::max<long long>(g, 1) : v / std::max<long long>(g, 1);
    }

    int cols_;
    std::vector<std::vector<long long>> rows_;
    std::vector<int> pivots_;
};

inline int rank_of(const std::vector<std::vector<long long>>& rows, int cols) {
    RowSpace rs(cols);
    for (const auto& r : rows) rs.insert(r);
    return rs.rank();
}

// Basis of { c : sum_i c_i rows[i] in span(sub_rows) }. Augmented
// elimination: the row space of {(s, 0)} u {(rows[i], e_i)} meets the
// coefficient block exactly in the kernel, and the echelon rows pivoting
// there expose it.
inline std::vector<std::vector<long long>> kernel_mod(
    std::span<const std::vector<long long>> sub_rows,
    const std::vector<std::vector<long long>>& rows, int img_cols) {
    const int n = static_cast<int>(rows.size());
    RowSpace aug(img_cols + n);
    for (const auto& s : sub_rows) {
        std::vector<long long> row(static_cast<size_t>(img_cols) + n, 0);
        std::copy(s.begin(), s.end(), row.begin());
        aug.insert(std::move(row));
    }
    for (int i = 0; i < n; ++i) {
        std::vector<long long> row(static_cast<size_t>(img_cols) + n, 0);
        std::copy(rows[i].begin(), rows[i].end(), row.begin());
        row[static_cast<size_t>(img_cols) + i] = 1;
        aug.insert(std::move(row));
    }
    std::vector<std::vector<long long>> kernel;
    for (int r = 0; r < aug.rank(); ++r) {
        if (aug.pivot(r) < img_cols) continue;
        const auto& row = aug.row(r);
        kernel.emplace_back(row.begin() + img_cols, row.end());
    }
    return kernel;
}

} // namespace tcone
