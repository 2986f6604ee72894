#include "equicones/f2matrix.hpp"

namespace equicones {

namespace {

int lowest_set(const std::vector<std::uint64_t>& row)
{
    for (std::size_t k = 0; k < row.size(); ++k)
        if (row[k]) return static_cast<int>(k * 64 + static_cast<std::size_t>(__builtin_ctzll(row[k])));
    return -1;
}

}  // namespace

std::size_t F2Matrix::rank_of(std::vector<std::vector<std::uint64_t>> rows, std::size_t words)
{
    (void)words;
    std::vector<std::vector<std::uint64_t>> basis;  /* rows with distinct pivots */
    std::vector<int> pivots;
    std::size_t rank = 0;
    for (auto& row : rows) {
        for (std::size_t b = 0; b < basis.size(); ++b) {
            int pv = pivots[b];
            if ((row[static_cast<std::size_t>(pv) / 64] >> (static_cast<std::size_t>(pv) % 64)) & 1u)
                for (std::size_t k = 0; k < row.size(); ++k) row[k] ^= basis[b][k];
        }
        int pv = lowest_set(row);
        if (pv >= 0) {
            basis.push_back(row);
            pivots.push_back(pv);
            ++rank;
        }
    }
    return rank;
}

std::size_t F2Matrix::rank() const
{
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) rows.push_back(row_copy(r));
    return rank_of(std::move(rows), words_);
}

bool F2Matrix::row_space_contains(const std::vector<std::uint64_t>& v) const
{
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(rows_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) rows.push_back(row_copy(r));
    std::size_t base = rank_of(rows, words_);
    rows.push_back(v);
    return rank_of(std::move(rows), words_) == base;
}

int matrix_rank_f2(const std::vector<std::vector<int>>& m)
{
    if (m.empty()) return 0;
    std::size_t cols = m.front().size();
    F2Matrix M(m.size(), cols);
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (m[r][c]) M.set(r, c);
    return static_cast<int>(M.rank());
}

}  // namespace equicones
