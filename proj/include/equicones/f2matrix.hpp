#ifndef EQUICONES_F2MATRIX_HPP
#define EQUICONES_F2MATRIX_HPP

#include <cstdint>
#include <vector>

namespace equicones {

/* Dense F2 matrix, one bitset row per row. Desk-scale: region computations
 * stay well under 10^4 columns. */
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0)
    {
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const
    {
        return (data_[r * words_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v = true)
    {
        auto& w = data_[r * words_ + c / 64];
        if (v)
            w |= std::uint64_t{1} << (c % 64);
        else
            w &= ~(std::uint64_t{1} << (c % 64));
    }
    void xor_row(std::size_t dst, std::size_t src)
    {
        for (std::size_t k = 0; k < words_; ++k) data_[dst * words_ + k] ^= data_[src * words_ + k];
    }

    /* b = x * this (row vector times matrix), returned as bit rows appended? Not needed. */

    std::size_t rank() const;

    /* rank of this with extra rows appended; used for membership tests. */
    static std::size_t rank_of(std::vector<std::vector<std::uint64_t>> rows, std::size_t words);

    /* true iff v (length cols) lies in the row space. */
    bool row_space_contains(const std::vector<std::uint64_t>& v) const;

    std::vector<std::uint64_t> row_copy(std::size_t r) const
    {
        return {data_.begin() + static_cast<std::ptrdiff_t>(r * words_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * words_)};
    }
    std::size_t words_per_row() const { return words_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> data_;
};

/* Rank over F2 of a 0/1 matrix given as explicit rows. */
int matrix_rank_f2(const std::vector<std::vector<int>>& m);

}  // namespace equicones

#endif
