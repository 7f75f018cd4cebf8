#ifndef HOMLAB_GRAPH_HH
#define HOMLAB_GRAPH_HH

#include <homlab/ext_int.hh>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace homlab
{
    using VertexIndex = std::uint32_t;

    /// Image of each source vertex, indexed by source vertex position.
    using Assignment = std::vector<VertexIndex>;

    using NamedAssignment = std::map<std::string, std::string>;

    /// Finite undirected graph with optional loops and no multi-edges. The
    /// order in which vertices are declared is the canonical order used by
    /// every deterministic iteration in the library.
    class Graph
    {
    public:
        Graph() = default;

        /// Throws InputError on duplicate vertex names or on edges that
        /// mention undeclared vertices. Repeated edges collapse.
        Graph(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>> & edges);

        static auto from_indices(std::vector<std::string> vertices,
            const std::vector<std::pair<VertexIndex, VertexIndex>> & edges) -> Graph;

        [[nodiscard]] auto size() const -> std::size_t { return _names.size(); }
        [[nodiscard]] auto empty() const -> bool { return _names.empty(); }
        [[nodiscard]] auto name(VertexIndex v) const -> const std::string & { return _names[v]; }
        [[nodiscard]] auto names() const -> const std::vector<std::string> & { return _names; }
        [[nodiscard]] auto index_of(const std::string & name) const -> std::optional<VertexIndex>;

        /// As index_of, but throws InputError naming the missing vertex.
        [[nodiscard]] auto require_index(const std::string & name) const -> VertexIndex;

        [[nodiscard]] auto adjacent(VertexIndex u, VertexIndex v) const -> bool { return _adj[u * size() + v] != 0; }
        [[nodiscard]] auto has_loop(VertexIndex v) const -> bool { return adjacent(v, v); }
        [[nodiscard]] auto has_loops() const -> bool;

        /// Sorted neighbour list; contains v itself when v carries a loop.
        [[nodiscard]] auto neighbours(VertexIndex v) const -> const std::vector<VertexIndex> & { return _neighbours[v]; }

        /// Bit i set iff i is adjacent to v. Only valid for graphs with at most 64 vertices.
        [[nodiscard]] auto neighbour_mask(VertexIndex v) const -> std::uint64_t;

        /// Edges as (u, v) with u <= v, sorted lexicographically by index.
        [[nodiscard]] auto edges() const -> const std::vector<std::pair<VertexIndex, VertexIndex>> & { return _edges; }
        [[nodiscard]] auto edge_count() const -> std::size_t { return _edges.size(); }

        auto operator==(const Graph & other) const -> bool
        {
            return _names == other._names && _edges == other._edges;
        }

    private:
        void build_adjacency(const std::vector<std::pair<VertexIndex, VertexIndex>> & edges);

        std::vector<std::string> _names;
        std::map<std::string, VertexIndex> _index;
        std::vector<std::uint8_t> _adj;
        std::vector<std::vector<VertexIndex>> _neighbours;
        std::vector<std::pair<VertexIndex, VertexIndex>> _edges;
    };

    /// A total vertex assignment between two graphs that sends edges to edges.
    struct GraphMap
    {
        Graph source;
        Graph target;
        Assignment image;

        /// Builds from names and validates the homomorphism condition;
        /// throws InputError if the assignment is partial, mentions undeclared
        /// vertices, or fails to send some edge to an edge.
        static auto from_names(Graph source, Graph target, const NamedAssignment & assignment) -> GraphMap;

        [[nodiscard]] auto named() const -> NamedAssignment;

        auto operator==(const GraphMap &) const -> bool = default;
    };

    [[nodiscard]] auto is_graph_map(const Graph & g, const Graph & h, std::span<const VertexIndex> image) -> bool;

    /// Throws InputError if the assignment mentions a vertex not declared in
    /// the relevant graph or misses a source vertex.
    [[nodiscard]] auto is_graph_map(const NamedAssignment & assignment, const Graph & g, const Graph & h) -> bool;

    [[nodiscard]] auto resolve_assignment(const NamedAssignment & assignment, const Graph & g, const Graph & h)
        -> Assignment;

    /// Least n admitting a map into K_n: 0 for the empty graph, +inf for a
    /// graph with a loop.
    [[nodiscard]] auto chromatic_number(const Graph & g) -> ExtInt;

    /// A proper colouring with colours 0..k-1 if one exists.
    [[nodiscard]] auto colour_with(const Graph & g, unsigned k) -> std::optional<Assignment>;

    /// Calls visit on every graph map g -> h in lexicographic order until it returns false.
    void for_each_graph_map(const Graph & g, const Graph & h, const std::function<bool(const Assignment &)> & visit);

    /// A graph together with an involutive graph endomorphism.
    class Z2Graph
    {
    public:
        /// Throws InputError unless the involution is a graph map whose square is the identity.
        Z2Graph(Graph graph, Assignment involution);

        static auto from_names(Graph graph, const NamedAssignment & involution) -> Z2Graph;

        [[nodiscard]] auto graph() const -> const Graph & { return _graph; }
        [[nodiscard]] auto involution() const -> const Assignment & { return _involution; }
        [[nodiscard]] auto operator()(VertexIndex v) const -> VertexIndex { return _involution[v]; }

        /// Some vertex is adjacent to its image.
        [[nodiscard]] auto is_flipping() const -> bool;

        auto operator==(const Z2Graph &) const -> bool = default;

    private:
        Graph _graph;
        Assignment _involution;
    };

    [[nodiscard]] inline auto is_flipping(const Z2Graph & z) -> bool { return z.is_flipping(); }

    /// inclusion: K2 -> T onto an edge; retraction: T -> K2 with retraction o inclusion = id.
    struct RetractionWitness
    {
        GraphMap inclusion;
        GraphMap retraction;
    };

    /// Returns a witness iff the chromatic number is exactly 2. The edge used
    /// is the first one in canonical order. Throws InputError on looped input.
    [[nodiscard]] auto find_retraction_to_edge(const Graph & t) -> std::optional<RetractionWitness>;

    /// Lexicographically first graph map phi with phi o gamma_A = gamma_B o phi.
    [[nodiscard]] auto search_equivariant_map(const Z2Graph & a, const Z2Graph & b) -> std::optional<GraphMap>;

    [[nodiscard]] auto is_equivariant(const Z2Graph & a, const Z2Graph & b, std::span<const VertexIndex> image) -> bool;

    [[nodiscard]] auto compose(std::span<const VertexIndex> outer, std::span<const VertexIndex> inner) -> Assignment;
}

#endif
