#ifndef LIAISON_LINALG_HPP
#define LIAISON_LINALG_HPP

#include <cstdint>
#include <vector>

#include "liaison/field.hpp"

namespace liaison {

/// Dense matrix over GF(p); only what degree-slice linear algebra needs.
class MatGF {
public:
    MatGF(const PrimeField& F, std::size_t rows, std::size_t cols)
        : F_(F), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    std::uint32_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    /// In-place reduced row echelon form.  Returns the pivot columns in
    /// increasing order; fully canonical (pivots 1, pivot columns cleared).
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t sel = r;
            while (sel < rows_ && at(sel, c) == 0) ++sel;
            if (sel == rows_) continue;
            if (sel != r)
                for (std::size_t j = c; j < cols_; ++j) std::swap(at(sel, j), at(r, j));
            std::uint32_t inv = F_.inv(at(r, c));
            for (std::size_t j = c; j < cols_; ++j) at(r, j) = F_.mul(at(r, j), inv);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || at(i, c) == 0) continue;
                std::uint32_t f = at(i, c);
                for (std::size_t j = c; j < cols_; ++j)
                    at(i, j) = F_.sub(at(i, j), F_.mul(f, at(r, j)));
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank() const {
        MatGF copy = *this;
        return copy.rref().size();
    }

private:
    PrimeField F_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> a_;
};

/// Incrementally maintained row space in echelon form; answers
/// membership/independence queries for degree-slice vectors.
class RowSpace {
public:
    explicit RowSpace(const PrimeField& F, std::size_t width) : F_(F), width_(width) {}

    std::size_t dim() const { return rows_.size(); }

    /// Reduce v against the current basis (in place).
    void reduce(std::vector<std::uint32_t>& v) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            std::uint32_t c = v[pivots_[k]];
            if (c == 0) continue;
            const std::vector<std::uint32_t>& row = rows_[k];
            for (std::size_t j = pivots_[k]; j < width_; ++j)
                v[j] = F_.sub(v[j], F_.mul(c, row[j]));
        }
    }

    bool contains(std::vector<std::uint32_t> v) const {
        reduce(v);
        for (std::uint32_t x : v)
            if (x != 0) return false;
        return true;
    }

    /// Insert v if independent of the span; returns true when inserted.
    bool add(std::vector<std::uint32_t> v) {
        if (v.size() != width_) throw error("RowSpace: width mismatch");
        reduce(v);
        std::size_t p = 0;
        while (p < width_ && v[p] == 0) ++p;
        if (p == width_) return false;
        std::uint32_t inv = F_.inv(v[p]);
        for (std::size_t j = p; j < width_; ++j) v[j] = F_.mul(v[j], inv);
        // keep earlier rows reduced against the new one for a clean form
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            std::uint32_t c = rows_[k][p];
            if (c == 0) continue;
            for (std::size_t j = p; j < width_; ++j)
                rows_[k][j] = F_.sub(rows_[k][j], F_.mul(c, v[j]));
        }
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        pivots_.insert(pivots_.begin() + pos, p);
        rows_.insert(rows_.begin() + pos, std::move(v));
        return true;
    }

    const std::vector<std::vector<std::uint32_t>>& rows() const { return rows_; }

private:
    PrimeField F_;
    std::size_t width_;
    std::vector<std::size_t> pivots_;
    std::vector<std::vector<std::uint32_t>> rows_;
};

} // namespace liaison

#endif
