#include "asympt/linalg.hpp"

namespace asympt {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<GaussianRational>>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        GaussianRational inv = m[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            GaussianRational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t QiMatrix::rank() const {
    std::vector<std::vector<GaussianRational>> m(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        m[r].resize(cols_);
        for (std::size_t c = 0; c < cols_; ++c) m[r][c] = at(r, c);
    }
    return rref(m).size();
}

std::vector<std::vector<GaussianRational>> QiMatrix::nullspace() const {
    std::vector<std::vector<GaussianRational>> m(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        m[r].resize(cols_);
        for (std::size_t c = 0; c < cols_; ++c) m[r][c] = at(r, c);
    }
    std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<GaussianRational>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<GaussianRational> v(cols_);
        v[free] = GaussianRational(1);
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -m[k][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace asympt
