#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace bkm {

/// Immutable dense row matrix of n vectors in d dimensions, with optional
/// per-row class ids and precomputed energy E = sum_i x_i'x_i.
///
/// Rows are stored row-major in double precision; per-row squared norms are
/// cached at construction since they sit on the hot path of gain evaluation.
class Dataset {
public:
    Dataset(std::size_t n, int d, std::vector<double> rows,
            std::optional<std::vector<int>> class_ids = std::nullopt);

    std::size_t n() const { return n_; }
    int d() const { return d_; }

    std::span<const double> row(std::size_t i) const {
        return {rows_.data() + i * static_cast<std::size_t>(d_),
                static_cast<std::size_t>(d_)};
    }

    /// x_i'x_i, cached.
    double row_norm_sq(std::size_t i) const { return row_sq_[i]; }

    /// E = sum_i x_i'x_i.
    double energy() const { return energy_; }

    bool has_class_ids() const { return class_ids_.has_value(); }
    const std::vector<int>& class_ids() const;

    /// Number of distinct class ids (max id + 1); requires class ids.
    int class_count() const;

    const std::vector<double>& raw() const { return rows_; }

private:
    std::size_t n_;
    int d_;
    std::vector<double> rows_;
    std::vector<double> row_sq_;
    double energy_;
    std::optional<std::vector<int>> class_ids_;
};

/// Copy of the rows named by `members` (order preserved). Class ids, when
/// present, are carried over.
Dataset subset(const Dataset& ds, std::span<const std::int64_t> members);

/// Copy of the contiguous column range [col_start, col_start + col_len).
Dataset project(const Dataset& ds, int col_start, int col_len);

/// Copy with every row scaled to unit length; zero rows are left untouched.
Dataset normalized(const Dataset& ds);

}  // namespace bkm
