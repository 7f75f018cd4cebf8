#include <homlab/errors.hh>
#include <homlab/gf2.hh>

#include <algorithm>
#include <bit>
#include <unordered_map>

using std::size_t;
using std::vector;

namespace homlab
{
    GF2Matrix::GF2Matrix(size_t rows, size_t cols) :
        _rows(rows),
        _cols(cols),
        _words((cols + 63) / 64),
        _bits(rows * _words, 0)
    {
    }

    auto GF2Matrix::rank() const -> size_t
    {
        auto bits = _bits;
        size_t rank = 0;
        for (size_t c = 0; c < _cols && rank < _rows; ++c) {
            auto word = c / 64;
            auto mask = std::uint64_t{1} << (c % 64);
            size_t pivot = rank;
            while (pivot < _rows && (bits[pivot * _words + word] & mask) == 0)
                ++pivot;
            if (pivot == _rows)
                continue;
            if (pivot != rank)
                std::swap_ranges(bits.begin() + pivot * _words, bits.begin() + (pivot + 1) * _words,
                    bits.begin() + rank * _words);
            for (size_t r = rank + 1; r < _rows; ++r)
                if (bits[r * _words + word] & mask)
                    for (size_t w = word; w < _words; ++w)
                        bits[r * _words + w] ^= bits[rank * _words + w];
            ++rank;
        }
        return rank;
    }

    auto GF2Matrix::transpose() const -> GF2Matrix
    {
        GF2Matrix t(_cols, _rows);
        for (size_t r = 0; r < _rows; ++r)
            for (size_t c = 0; c < _cols; ++c)
                if (get(r, c))
                    t.flip(c, r);
        return t;
    }

    auto GF2Matrix::is_zero() const -> bool
    {
        return std::all_of(_bits.begin(), _bits.end(), [](auto w) { return w == 0; });
    }

    auto GF2Matrix::operator*(const GF2Matrix & other) const -> GF2Matrix
    {
        if (_cols != other._rows)
            throw InputError("GF(2) product shape mismatch");
        GF2Matrix result(_rows, other._cols);
        for (size_t r = 0; r < _rows; ++r)
            for (size_t k = 0; k < _cols; ++k)
                if (get(r, k))
                    for (size_t w = 0; w < result._words; ++w)
                        result._bits[r * result._words + w] ^= other._bits[k * other._words + w];
        return result;
    }

    auto GF2Matrix::in_column_space(const Cochain & b) const -> bool
    {
        if (b.size() != _rows)
            throw InputError("right-hand side has the wrong length");
        GF2Matrix augmented(_rows, _cols + 1);
        for (size_t r = 0; r < _rows; ++r) {
            for (size_t c = 0; c < _cols; ++c)
                if (get(r, c))
                    augmented.flip(r, c);
            if (b[r])
                augmented.flip(r, _cols);
        }
        return augmented.rank() == rank();
    }

    SparseGF2Matrix::SparseGF2Matrix(size_t rows, vector<Column> columns) :
        _rows(rows),
        _columns(std::move(columns))
    {
        for (auto & col : _columns) {
            std::sort(col.begin(), col.end());
            // Repeated entries cancel in pairs.
            Column reduced;
            for (size_t i = 0; i < col.size();) {
                size_t j = i;
                while (j < col.size() && col[j] == col[i])
                    ++j;
                if ((j - i) % 2 == 1)
                    reduced.push_back(col[i]);
                i = j;
            }
            if (! reduced.empty() && reduced.back() >= rows)
                throw InputError("sparse column entry out of range");
            col = std::move(reduced);
        }
    }

    namespace
    {
        void add_into(SparseGF2Matrix::Column & target, const SparseGF2Matrix::Column & source)
        {
            SparseGF2Matrix::Column sum;
            sum.reserve(target.size() + source.size());
            std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(),
                std::back_inserter(sum));
            target = std::move(sum);
        }

        /// Reduces columns in place; returns the pivot table row -> column.
        auto reduce(vector<SparseGF2Matrix::Column> & cols) -> std::unordered_map<std::uint32_t, size_t>
        {
            std::unordered_map<std::uint32_t, size_t> pivot_of_row;
            for (size_t c = 0; c < cols.size(); ++c) {
                while (! cols[c].empty()) {
                    auto it = pivot_of_row.find(cols[c].back());
                    if (it == pivot_of_row.end()) {
                        pivot_of_row.emplace(cols[c].back(), c);
                        break;
                    }
                    add_into(cols[c], cols[it->second]);
                }
            }
            return pivot_of_row;
        }
    }

    auto SparseGF2Matrix::rank() const -> size_t
    {
        auto cols = _columns;
        return reduce(cols).size();
    }

    auto SparseGF2Matrix::in_column_space(const Cochain & b) const -> bool
    {
        if (b.size() != _rows)
            throw InputError("right-hand side has the wrong length");
        auto cols = _columns;
        auto pivots = reduce(cols);
        Column target;
        for (size_t r = 0; r < _rows; ++r)
            if (b[r])
                target.push_back(static_cast<std::uint32_t>(r));
        while (! target.empty()) {
            auto it = pivots.find(target.back());
            if (it == pivots.end())
                return false;
            add_into(target, cols[it->second]);
        }
        return true;
    }

    auto SparseGF2Matrix::transpose() const -> SparseGF2Matrix
    {
        vector<Column> t(_rows);
        for (size_t c = 0; c < _columns.size(); ++c)
            for (auto r : _columns[c])
                t[r].push_back(static_cast<std::uint32_t>(c));
        return SparseGF2Matrix(_columns.size(), std::move(t));
    }

    auto SparseGF2Matrix::to_dense() const -> GF2Matrix
    {
        GF2Matrix m(_rows, _columns.size());
        for (size_t c = 0; c < _columns.size(); ++c)
            for (auto r : _columns[c])
                m.flip(r, c);
        return m;
    }

    auto SparseGF2Matrix::apply(const Cochain & x) const -> Cochain
    {
        if (x.size() != _columns.size())
            throw InputError("vector has the wrong length");
        Cochain y(_rows, 0);
        for (size_t c = 0; c < _columns.size(); ++c)
            if (x[c])
                for (auto r : _columns[c])
                    y[r] ^= 1;
        return y;
    }

    auto gf2_rank(const SparseGF2Matrix & m) -> size_t
    {
        if (m.rows() < dense_elimination_limit && m.cols() < dense_elimination_limit)
            return m.to_dense().rank();
        return m.rank();
    }

    auto gf2_in_column_space(const SparseGF2Matrix & m, const Cochain & b) -> bool
    {
        if (m.rows() < dense_elimination_limit && m.cols() < dense_elimination_limit)
            return m.to_dense().in_column_space(b);
        return m.in_column_space(b);
    }
}
