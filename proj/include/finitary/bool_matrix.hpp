#pragma once

#include <cstddef>
#include <vector>

namespace finitary {

/// Dense boolean matrix with (row, col) addressing. Used for registration
/// tables, quasiorders and partial orders alike.
class BoolMatrix {
public:
    BoolMatrix() = default;
    BoolMatrix(std::size_t rows, std::size_t cols, bool fill = false)
        : rows_(rows), cols_(cols), cells_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool operator()(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, bool value) { cells_[i * cols_ + j] = value; }

    bool operator==(const BoolMatrix&) const = default;

    /// In-place reflexive-transitive closure (square matrices only).
    void close_reflexive_transitive() {
        for (std::size_t i = 0; i < rows_; ++i) set(i, i, true);
        for (std::size_t k = 0; k < rows_; ++k)
            for (std::size_t i = 0; i < rows_; ++i)
                if ((*this)(i, k))
                    for (std::size_t j = 0; j < cols_; ++j)
                        if ((*this)(k, j)) set(i, j, true);
    }

    bool is_reflexive() const {
        for (std::size_t i = 0; i < rows_; ++i)
            if (!(*this)(i, i)) return false;
        return true;
    }

    bool is_transitive() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < rows_; ++j)
                if ((*this)(i, j))
                    for (std::size_t k = 0; k < rows_; ++k)
                        if ((*this)(j, k) && !(*this)(i, k)) return false;
        return true;
    }

    bool is_antisymmetric() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < rows_; ++j)
                if ((*this)(i, j) && (*this)(j, i)) return false;
        return true;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<bool> cells_;
};

}  // namespace finitary
