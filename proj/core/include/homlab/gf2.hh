#ifndef HOMLAB_GF2_HH
#define HOMLAB_GF2_HH

#include <cstddef>
#include <cstdint>
#include <vector>

namespace homlab
{
    /// A vector over GF(2), one byte per coordinate holding 0 or 1.
    using Cochain = std::vector<std::uint8_t>;

    /// Dense bit matrix; rows are packed into 64-bit words.
    class GF2Matrix
    {
    public:
        GF2Matrix() = default;
        GF2Matrix(std::size_t rows, std::size_t cols);

        [[nodiscard]] auto rows() const -> std::size_t { return _rows; }
        [[nodiscard]] auto cols() const -> std::size_t { return _cols; }

        [[nodiscard]] auto get(std::size_t r, std::size_t c) const -> bool
        {
            return (_bits[r * _words + c / 64] >> (c % 64)) & 1U;
        }
        void flip(std::size_t r, std::size_t c) { _bits[r * _words + c / 64] ^= std::uint64_t{1} << (c % 64); }
        void set(std::size_t r, std::size_t c, bool value)
        {
            if (get(r, c) != value)
                flip(r, c);
        }

        [[nodiscard]] auto rank() const -> std::size_t;
        [[nodiscard]] auto transpose() const -> GF2Matrix;
        [[nodiscard]] auto is_zero() const -> bool;
        [[nodiscard]] auto operator*(const GF2Matrix & other) const -> GF2Matrix;

        /// Whether b is a GF(2) combination of the columns.
        [[nodiscard]] auto in_column_space(const Cochain & b) const -> bool;

    private:
        std::size_t _rows = 0, _cols = 0, _words = 0;
        std::vector<std::uint64_t> _bits;
    };

    /// Column-sparse bit matrix; each column is a sorted list of row indices.
    class SparseGF2Matrix
    {
    public:
        using Column = std::vector<std::uint32_t>;

        SparseGF2Matrix() = default;
        SparseGF2Matrix(std::size_t rows, std::vector<Column> columns);

        [[nodiscard]] auto rows() const -> std::size_t { return _rows; }
        [[nodiscard]] auto cols() const -> std::size_t { return _columns.size(); }
        [[nodiscard]] auto column(std::size_t c) const -> const Column & { return _columns[c]; }

        /// Column reduction with pivot on the lowest nonzero row.
        [[nodiscard]] auto rank() const -> std::size_t;
        [[nodiscard]] auto in_column_space(const Cochain & b) const -> bool;
        [[nodiscard]] auto transpose() const -> SparseGF2Matrix;
        [[nodiscard]] auto to_dense() const -> GF2Matrix;

        /// y = A x over GF(2).
        [[nodiscard]] auto apply(const Cochain & x) const -> Cochain;

    private:
        std::size_t _rows = 0;
        std::vector<Column> _columns;
    };

    /// Matrices with fewer than this many rows and columns are eliminated densely.
    inline constexpr std::size_t dense_elimination_limit = 10'000;

    [[nodiscard]] auto gf2_rank(const SparseGF2Matrix & m) -> std::size_t;
    [[nodiscard]] auto gf2_in_column_space(const SparseGF2Matrix & m, const Cochain & b) -> bool;
}

#endif
