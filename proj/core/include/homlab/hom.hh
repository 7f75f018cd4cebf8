#ifndef HOMLAB_HOM_HH
#define HOMLAB_HOM_HH

#include <homlab/graph.hh>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace homlab
{
    /// Subset of the target's vertices, bit i for vertex i. Targets are
    /// therefore limited to 64 vertices.
    using ColourSet = std::uint64_t;

    /// One nonempty colour set per source vertex.
    using Multihom = std::vector<ColourSet>;

    inline constexpr std::size_t default_max_elements = 10'000'000;

    /// Order on colour sets: lexicographic on their sorted element lists, so
    /// {1} < {1,2} < {1,2,3} < {1,3} < {2}.
    [[nodiscard]] auto colour_set_less(ColourSet a, ColourSet b) -> bool;

    /// Lexicographic extension of colour_set_less; the canonical element order.
    [[nodiscard]] auto multihom_less(std::span<const ColourSet> a, std::span<const ColourSet> b) -> bool;

    [[nodiscard]] auto singleton_sets(std::span<const VertexIndex> image) -> Multihom;

    /// Cross-product condition on every edge of g. Throws InputError if some
    /// set is empty or the shape does not match.
    [[nodiscard]] auto is_multihom(const Graph & g, const Graph & h, std::span<const ColourSet> sets) -> bool;

    /// The poset of all multihomomorphisms g -> h under pointwise inclusion,
    /// stored in canonical order, optionally with an involution on elements.
    class HomPoset
    {
    public:
        [[nodiscard]] auto source() const -> const Graph & { return _source; }
        [[nodiscard]] auto target() const -> const Graph & { return _target; }
        [[nodiscard]] auto size() const -> std::size_t { return _width == 0 ? 0 : _data.size() / _width; }
        [[nodiscard]] auto empty() const -> bool { return size() == 0; }

        [[nodiscard]] auto element(std::size_t i) const -> std::span<const ColourSet>
        {
            return {_data.data() + i * _width, _width};
        }

        /// Indices of the elements whose sets are all singletons, in canonical order.
        [[nodiscard]] auto atoms() const -> const std::vector<std::size_t> & { return _atoms; }
        [[nodiscard]] auto is_atom(std::size_t i) const -> bool;

        [[nodiscard]] auto find(std::span<const ColourSet> sets) const -> std::optional<std::size_t>;
        [[nodiscard]] auto find_map(std::span<const VertexIndex> image) const -> std::optional<std::size_t>;

        /// Pointwise inclusion.
        [[nodiscard]] auto leq(std::size_t i, std::size_t j) const -> bool;

        [[nodiscard]] auto involution() const -> const std::optional<std::vector<std::size_t>> & { return _involution; }

        /// For every element, the indices of all elements strictly below it.
        [[nodiscard]] auto strictly_below() const -> std::vector<std::vector<std::size_t>>;

        /// The colouring read off an atom.
        [[nodiscard]] auto atom_map(std::size_t i) const -> Assignment;

    private:
        friend auto enumerate_hom(const Graph &, const Graph &, std::size_t) -> HomPoset;
        friend auto induced_involution(const Z2Graph &, HomPoset) -> HomPoset;

        Graph _source;
        Graph _target;
        std::size_t _width = 0;
        std::vector<ColourSet> _data;
        std::vector<std::size_t> _atoms;
        std::optional<std::vector<std::size_t>> _involution;
    };

    /// Depth-first enumeration with forward pruning. Throws InputError for an
    /// empty source or a target with more than 64 vertices, and ResourceError
    /// once more than max_elements elements are found.
    [[nodiscard]] auto enumerate_hom(const Graph & g, const Graph & h, std::size_t max_elements = default_max_elements)
        -> HomPoset;

    /// eta -> eta o f for every element of a poset over f's target.
    [[nodiscard]] auto precompose(std::span<const ColourSet> eta, std::span<const VertexIndex> f) -> Multihom;

    /// The poset map Hom(T2, G) -> Hom(T1, G) induced by f : T1 -> T2, as
    /// indices into `into`. Throws InputError if the posets do not match f.
    [[nodiscard]] auto induced_map(const GraphMap & f, const HomPoset & from, const HomPoset & into)
        -> std::vector<std::size_t>;

    /// Attaches eta -> eta o gamma. Throws InputError unless the poset is over
    /// z's graph, the target is loopless and gamma is flipping; throws
    /// InvariantError if some element is fixed.
    [[nodiscard]] auto induced_involution(const Z2Graph & z, HomPoset poset) -> HomPoset;

    /// Partition of poset elements. Labels are numbered by first occurrence in
    /// canonical element order, so equal partitions have equal label vectors.
    struct Components
    {
        std::vector<std::size_t> label;
        std::size_t count = 0;

        [[nodiscard]] auto same(std::size_t i, std::size_t j) const -> bool { return label[i] == label[j]; }
    };

    /// Connected components via the atom union relation: two colourings are
    /// joined when their pointwise union is a multihom. Every other element
    /// inherits the component of an atom below it.
    [[nodiscard]] auto components(const HomPoset & poset) -> Components;

    /// Connected components of the comparability graph by pairwise inclusion
    /// tests. Quadratic; intended as an oracle for components().
    [[nodiscard]] auto components_by_comparability(const HomPoset & poset) -> Components;

    /// Throws InputError if either map is not an atom of the poset.
    [[nodiscard]] auto same_component(const HomPoset & poset, const Components & parts,
        std::span<const VertexIndex> phi, std::span<const VertexIndex> psi) -> bool;

    /// Sequence of graph maps g -> h; consecutive entries differ in at most one vertex.
    struct PathCertificate
    {
        Graph source;
        Graph target;
        std::vector<Assignment> colourings;

        /// Number of steps that change exactly one vertex.
        [[nodiscard]] auto moves() const -> std::size_t;

        auto operator==(const PathCertificate &) const -> bool = default;
    };

    struct CertificateCheck
    {
        bool valid = true;
        std::size_t index = 0;
        std::string reason;
    };

    /// Reports the first colouring that is not a graph map, or the first
    /// step that changes more than one vertex. Throws InputError for colours
    /// outside the target.
    [[nodiscard]] auto verify_certificate(const PathCertificate & certificate) -> CertificateCheck;

    /// Shortest single-vertex recolouring path from `from` to `to`. Neighbours
    /// are explored by (vertex, colour) in canonical order. A nullopt result
    /// only says that recolouring moves do not connect the two maps; it does
    /// not by itself decide poset connectivity. Throws InputError if either
    /// endpoint is not a graph map.
    [[nodiscard]] auto find_path(const Graph & g, const Graph & h, const Assignment & from, const Assignment & to)
        -> std::optional<PathCertificate>;
}

#endif
