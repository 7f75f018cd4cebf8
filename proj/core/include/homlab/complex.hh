#ifndef HOMLAB_COMPLEX_HH
#define HOMLAB_COMPLEX_HH

#include <homlab/gf2.hh>
#include <homlab/hom.hh>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace homlab
{
    using SimplexVertices = std::vector<std::uint32_t>;

    /// A d-simplex: its ordered vertex tuple, and the index of face k
    /// (vertex k deleted) among the (d-1)-simplices.
    struct Cell
    {
        SimplexVertices vertices;
        std::vector<std::size_t> faces;
    };

    inline constexpr std::size_t default_max_chains = 10'000'000;

    /// Delta-complex with a vertex order on each simplex. Distinct simplices
    /// may share a vertex tuple (as happens in quotients); faces are tracked
    /// by index rather than looked up by tuple.
    class OrderedDeltaComplex
    {
    public:
        OrderedDeltaComplex() = default;

        /// Simplicial complex on vertices 0..vertex_count-1 from ordered
        /// tuples of dimension >= 1, grouped by dimension starting at 1.
        /// Throws InputError on repeated vertices, repeated tuples or missing faces.
        static auto from_tuples(std::size_t vertex_count, std::vector<std::vector<SimplexVertices>> tuples)
            -> OrderedDeltaComplex;

        /// General delta-complex from explicit cells of dimension >= 1.
        /// Throws InputError unless every face index resolves to a cell whose
        /// tuple is the parent tuple with that vertex deleted.
        static auto from_cells(std::size_t vertex_count, std::vector<std::vector<Cell>> cells) -> OrderedDeltaComplex;

        /// -1 for the empty complex.
        [[nodiscard]] auto dimension() const -> int { return static_cast<int>(_cells.size()) - 1; }
        [[nodiscard]] auto empty() const -> bool { return _cells.empty(); }
        [[nodiscard]] auto count(std::size_t d) const -> std::size_t { return d < _cells.size() ? _cells[d].size() : 0; }
        [[nodiscard]] auto vertex_count() const -> std::size_t { return count(0); }
        [[nodiscard]] auto cell(std::size_t d, std::size_t i) const -> const Cell & { return _cells[d][i]; }
        [[nodiscard]] auto cells(std::size_t d) const -> const std::vector<Cell> & { return _cells[d]; }
        [[nodiscard]] auto total_cells() const -> std::size_t;

        /// No two simplices share a vertex tuple.
        [[nodiscard]] auto is_simplicial() const -> bool { return _simplicial; }

        /// Index of the simplex with exactly this ordered tuple; simplicial complexes only.
        [[nodiscard]] auto find(const SimplexVertices & tuple) const -> std::optional<std::size_t>;

        /// Boundary map C_d -> C_{d-1}, d >= 1; columns are d-simplices.
        [[nodiscard]] auto boundary(std::size_t d) const -> SparseGF2Matrix;

        /// Coboundary map C^d -> C^{d+1}; columns are d-simplices.
        [[nodiscard]] auto coboundary_matrix(std::size_t d) const -> SparseGF2Matrix;

    private:
        void validate() const;

        std::vector<std::vector<Cell>> _cells;
        bool _simplicial = true;
    };

    /// A finite poset given by, for each element, all elements strictly above it.
    struct FinitePoset
    {
        std::vector<std::vector<std::size_t>> strictly_above;

        [[nodiscard]] auto size() const -> std::size_t { return strictly_above.size(); }
    };

    [[nodiscard]] auto as_finite_poset(const HomPoset & poset) -> FinitePoset;

    /// Simplices are the chains, each listed in increasing order. Vertex i is
    /// poset element i. Throws ResourceError past max_chains simplices.
    [[nodiscard]] auto order_complex(const FinitePoset & poset, std::size_t max_chains = default_max_chains)
        -> OrderedDeltaComplex;

    [[nodiscard]] auto order_complex(const HomPoset & poset, std::size_t max_chains = default_max_chains)
        -> OrderedDeltaComplex;
}

#endif
