#include "bkm/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bkm/errors.hpp"

namespace bkm {

Dataset::Dataset(std::size_t n, int d, std::vector<double> rows,
                 std::optional<std::vector<int>> class_ids)
    : n_(n), d_(d), rows_(std::move(rows)), class_ids_(std::move(class_ids)) {
    if (n_ < 1 || d_ < 1) {
        throw Error("Dataset requires n >= 1 and d >= 1, got n=" +
                    std::to_string(n_) + " d=" + std::to_string(d_));
    }
    if (rows_.size() != n_ * static_cast<std::size_t>(d_)) {
        throw Error("Dataset row buffer has " + std::to_string(rows_.size()) +
                    " values, expected " +
                    std::to_string(n_ * static_cast<std::size_t>(d_)));
    }
    if (class_ids_ && class_ids_->size() != n_) {
        throw Error("class id list length " + std::to_string(class_ids_->size()) +
                    " does not match n=" + std::to_string(n_));
    }
    row_sq_.resize(n_);
    energy_ = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        double s = 0.0;
        const double* p = rows_.data() + i * static_cast<std::size_t>(d_);
        for (int j = 0; j < d_; ++j) s += p[j] * p[j];
        row_sq_[i] = s;
        energy_ += s;
    }
}

const std::vector<int>& Dataset::class_ids() const {
    if (!class_ids_) throw MissingLabelsError("dataset has no class ids");
    return *class_ids_;
}

int Dataset::class_count() const {
    const auto& ids = class_ids();
    return *std::max_element(ids.begin(), ids.end()) + 1;
}

Dataset subset(const Dataset& ds, std::span<const std::int64_t> members) {
    const int d = ds.d();
    std::vector<double> rows;
    rows.reserve(members.size() * static_cast<std::size_t>(d));
    for (std::int64_t m : members) {
        auto r = ds.row(static_cast<std::size_t>(m));
        rows.insert(rows.end(), r.begin(), r.end());
    }
    std::optional<std::vector<int>> ids;
    if (ds.has_class_ids()) {
        ids.emplace();
        ids->reserve(members.size());
        for (std::int64_t m : members)
            ids->push_back(ds.class_ids()[static_cast<std::size_t>(m)]);
    }
    return Dataset(members.size(), d, std::move(rows), std::move(ids));
}

Dataset project(const Dataset& ds, int col_start, int col_len) {
    if (col_start < 0 || col_len < 1 || col_start + col_len > ds.d()) {
        throw Error("project: column range [" + std::to_string(col_start) + ", " +
                    std::to_string(col_start + col_len) + ") outside d=" +
                    std::to_string(ds.d()));
    }
    std::vector<double> rows;
    rows.reserve(ds.n() * static_cast<std::size_t>(col_len));
    for (std::size_t i = 0; i < ds.n(); ++i) {
        auto r = ds.row(i);
        rows.insert(rows.end(), r.begin() + col_start,
                    r.begin() + col_start + col_len);
    }
    std::optional<std::vector<int>> ids;
    if (ds.has_class_ids()) ids = ds.class_ids();
    return Dataset(ds.n(), col_len, std::move(rows), std::move(ids));
}

Dataset normalized(const Dataset& ds) {
    std::vector<double> rows(ds.raw());
    const int d = ds.d();
    for (std::size_t i = 0; i < ds.n(); ++i) {
        double nrm = std::sqrt(ds.row_norm_sq(i));
        if (nrm == 0.0) continue;
        double* p = rows.data() + i * static_cast<std::size_t>(d);
        for (int j = 0; j < d; ++j) p[j] /= nrm;
    }
    std::optional<std::vector<int>> ids;
    if (ds.has_class_ids()) ids = ds.class_ids();
    return Dataset(ds.n(), d, std::move(rows), std::move(ids));
}

}  // namespace bkm
