#pragma once

#include <cstddef>
#include <vector>

#include "asympt/rational.hpp"

namespace asympt {

// Dense matrix over Q(i); just enough exact linear algebra for rank and
// nullspace computations on small systems.
class QiMatrix {
public:
    QiMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    GaussianRational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const GaussianRational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::size_t rank() const;
    // Basis of the right nullspace, each vector of length cols().
    std::vector<std::vector<GaussianRational>> nullspace() const;

private:
    std::size_t rows_, cols_;
    std::vector<GaussianRational> data_;
};

} // namespace asympt
