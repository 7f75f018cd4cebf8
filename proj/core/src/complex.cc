#include <homlab/complex.hh>
#include <homlab/errors.hh>

#include <algorithm>
#include <functional>

using std::optional;
using std::size_t;
using std::vector;

namespace homlab
{
    namespace
    {
        auto without(const SimplexVertices & tuple, size_t k) -> SimplexVertices
        {
            SimplexVertices face;
            face.reserve(tuple.size() - 1);
            for (size_t i = 0; i < tuple.size(); ++i)
                if (i != k)
                    face.push_back(tuple[i]);
            return face;
        }

        auto has_repeat(SimplexVertices tuple) -> bool
        {
            std::sort(tuple.begin(), tuple.end());
            return std::adjacent_find(tuple.begin(), tuple.end()) != tuple.end();
        }

        auto vertex_cells(size_t vertex_count) -> vector<Cell>
        {
            vector<Cell> cells(vertex_count);
            for (size_t v = 0; v < vertex_count; ++v)
                cells[v].vertices = {static_cast<std::uint32_t>(v)};
            return cells;
        }
    }

    auto OrderedDeltaComplex::from_tuples(size_t vertex_count, vector<vector<SimplexVertices>> tuples)
        -> OrderedDeltaComplex
    {
        OrderedDeltaComplex result;
        if (vertex_count == 0) {
            for (const auto & dim : tuples)
                if (! dim.empty())
                    throw InputError("simplices on an empty vertex set");
            return result;
        }
        result._cells.push_back(vertex_cells(vertex_count));

        while (! tuples.empty() && tuples.back().empty())
            tuples.pop_back();

        for (size_t d = 1; d <= tuples.size(); ++d) {
            auto & layer = tuples[d - 1];
            std::sort(layer.begin(), layer.end());
            if (std::adjacent_find(layer.begin(), layer.end()) != layer.end())
                throw InputError("repeated simplex in dimension " + std::to_string(d));

            const auto & lower = result._cells[d - 1];
            vector<Cell> cells;
            cells.reserve(layer.size());
            for (auto & tuple : layer) {
                if (tuple.size() != d + 1)
                    throw InputError("simplex of the wrong size in dimension " + std::to_string(d));
                if (has_repeat(tuple))
                    throw InputError("simplex lists a vertex twice");
                for (auto v : tuple)
                    if (v >= vertex_count)
                        throw InputError("simplex vertex out of range");

                Cell cell{std::move(tuple), {}};
                for (size_t k = 0; k <= d; ++k) {
                    auto face = without(cell.vertices, k);
                    auto it = std::lower_bound(lower.begin(), lower.end(), face,
                        [](const Cell & c, const SimplexVertices & t) { return c.vertices < t; });
                    if (it == lower.end() || it->vertices != face)
                        throw InputError("missing face of a simplex in dimension " + std::to_string(d));
                    cell.faces.push_back(static_cast<size_t>(it - lower.begin()));
                }
                cells.push_back(std::move(cell));
            }
            result._cells.push_back(std::move(cells));
        }
        return result;
    }

    auto OrderedDeltaComplex::from_cells(size_t vertex_count, vector<vector<Cell>> cells) -> OrderedDeltaComplex
    {
        OrderedDeltaComplex result;
        if (vertex_count == 0) {
            for (const auto & dim : cells)
                if (! dim.empty())
                    throw InputError("cells on an empty vertex set");
            return result;
        }
        while (! cells.empty() && cells.back().empty())
            cells.pop_back();
        result._cells.push_back(vertex_cells(vertex_count));
        for (auto & layer : cells)
            result._cells.push_back(std::move(layer));
        result.validate();

        for (size_t d = 1; d < result._cells.size() && result._simplicial; ++d) {
            vector<SimplexVertices> tuples;
            for (const auto & c : result._cells[d])
                tuples.push_back(c.vertices);
            std::sort(tuples.begin(), tuples.end());
            result._simplicial = std::adjacent_find(tuples.begin(), tuples.end()) == tuples.end();
        }
        return result;
    }

    void OrderedDeltaComplex::validate() const
    {
        auto n = vertex_count();
        for (size_t d = 1; d < _cells.size(); ++d)
            for (const auto & c : _cells[d]) {
                if (c.vertices.size() != d + 1 || c.faces.size() != d + 1)
                    throw InputError("cell of the wrong size in dimension " + std::to_string(d));
                if (has_repeat(c.vertices))
                    throw InputError("cell lists a vertex twice");
                for (auto v : c.vertices)
                    if (v >= n)
                        throw InputError("cell vertex out of range");
                for (size_t k = 0; k <= d; ++k) {
                    if (c.faces[k] >= _cells[d - 1].size())
                        throw InputError("face index out of range");
                    if (_cells[d - 1][c.faces[k]].vertices != without(c.vertices, k))
                        throw InputError("face order inconsistent with its cell in dimension " + std::to_string(d));
                }
            }
    }

    auto OrderedDeltaComplex::total_cells() const -> size_t
    {
        size_t total = 0;
        for (const auto & layer : _cells)
            total += layer.size();
        return total;
    }

    auto OrderedDeltaComplex::find(const SimplexVertices & tuple) const -> optional<size_t>
    {
        if (tuple.empty() || tuple.size() > _cells.size())
            return std::nullopt;
        const auto & layer = _cells[tuple.size() - 1];
        auto it = std::lower_bound(layer.begin(), layer.end(), tuple,
            [](const Cell & c, const SimplexVertices & t) { return c.vertices < t; });
        if (it != layer.end() && it->vertices == tuple)
            return static_cast<size_t>(it - layer.begin());
        // Cells built by from_cells need not be sorted.
        for (size_t i = 0; i < layer.size(); ++i)
            if (layer[i].vertices == tuple)
                return i;
        return std::nullopt;
    }

    auto OrderedDeltaComplex::boundary(size_t d) const -> SparseGF2Matrix
    {
        if (d == 0)
            throw InputError("boundary maps start in dimension 1");
        vector<SparseGF2Matrix::Column> cols(count(d));
        for (size_t i = 0; i < count(d); ++i)
            for (auto f : _cells[d][i].faces)
                cols[i].push_back(static_cast<std::uint32_t>(f));
        return SparseGF2Matrix(count(d - 1), std::move(cols));
    }

    auto OrderedDeltaComplex::coboundary_matrix(size_t d) const -> SparseGF2Matrix
    {
        if (d + 1 >= _cells.size())
            return SparseGF2Matrix(0, vector<SparseGF2Matrix::Column>(count(d)));
        return boundary(d + 1).transpose();
    }

    auto as_finite_poset(const HomPoset & poset) -> FinitePoset
    {
        FinitePoset result;
        result.strictly_above.resize(poset.size());
        auto below = poset.strictly_below();
        for (size_t i = 0; i < below.size(); ++i)
            for (auto j : below[i])
                result.strictly_above[j].push_back(i);
        return result;
    }

    auto order_complex(const FinitePoset & poset, size_t max_chains) -> OrderedDeltaComplex
    {
        vector<vector<SimplexVertices>> tuples;
        size_t total = poset.size();
        if (total > max_chains)
            throw ResourceError("order complex exceeds the chain cap of " + std::to_string(max_chains));

        SimplexVertices chain;
        std::function<void(size_t)> extend = [&](size_t top) {
            for (auto next : poset.strictly_above[top]) {
                chain.push_back(static_cast<std::uint32_t>(next));
                auto d = chain.size() - 1;
                if (tuples.size() < d)
                    tuples.resize(d);
                tuples[d - 1].push_back(chain);
                if (++total > max_chains)
                    throw ResourceError("order complex exceeds the chain cap of " + std::to_string(max_chains));
                extend(next);
                chain.pop_back();
            }
        };
        for (size_t i = 0; i < poset.size(); ++i) {
            chain = {static_cast<std::uint32_t>(i)};
            extend(i);
        }
        return OrderedDeltaComplex::from_tuples(poset.size(), std::move(tuples));
    }

    auto order_complex(const HomPoset & poset, size_t max_chains) -> OrderedDeltaComplex
    {
        return order_complex(as_finite_poset(poset), max_chains);
    }
}
