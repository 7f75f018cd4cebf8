#include <homlab/builtins.hh>
#include <homlab/errors.hh>
#include <homlab/graph.hh>

#include <algorithm>
#include <deque>
#include <functional>

using std::optional;
using std::pair;
using std::string;
using std::vector;

namespace homlab
{
    Graph::Graph(vector<string> vertices, const vector<pair<string, string>> & edges) :
        _names(std::move(vertices))
    {
        for (VertexIndex i = 0; i < _names.size(); ++i)
            if (! _index.emplace(_names[i], i).second)
                throw InputError("duplicate vertex '" + _names[i] + "'");

        vector<pair<VertexIndex, VertexIndex>> indexed;
        indexed.reserve(edges.size());
        for (const auto & [u, v] : edges)
            indexed.emplace_back(require_index(u), require_index(v));
        build_adjacency(indexed);
    }

    auto Graph::from_indices(vector<string> vertices, const vector<pair<VertexIndex, VertexIndex>> & edges) -> Graph
    {
        Graph g;
        g._names = std::move(vertices);
        for (VertexIndex i = 0; i < g._names.size(); ++i)
            if (! g._index.emplace(g._names[i], i).second)
                throw InputError("duplicate vertex '" + g._names[i] + "'");
        for (const auto & [u, v] : edges)
            if (u >= g.size() || v >= g.size())
                throw InputError("edge endpoint out of range");
        g.build_adjacency(edges);
        return g;
    }

    void Graph::build_adjacency(const vector<pair<VertexIndex, VertexIndex>> & edges)
    {
        auto n = size();
        _adj.assign(n * n, 0);
        _neighbours.assign(n, {});
        _edges.clear();
        for (auto [u, v] : edges) {
            _adj[u * n + v] = 1;
            _adj[v * n + u] = 1;
        }
        for (VertexIndex u = 0; u < n; ++u)
            for (VertexIndex v = 0; v < n; ++v)
                if (_adj[u * n + v]) {
                    _neighbours[u].push_back(v);
                    if (u <= v)
                        _edges.emplace_back(u, v);
                }
    }

    auto Graph::index_of(const string & name) const -> optional<VertexIndex>
    {
        auto it = _index.find(name);
        if (it == _index.end())
            return std::nullopt;
        return it->second;
    }

    auto Graph::require_index(const string & name) const -> VertexIndex
    {
        auto i = index_of(name);
        if (! i)
            throw InputError("undeclared vertex '" + name + "'");
        return *i;
    }

    auto Graph::has_loops() const -> bool
    {
        for (VertexIndex v = 0; v < size(); ++v)
            if (has_loop(v))
                return true;
        return false;
    }

    auto Graph::neighbour_mask(VertexIndex v) const -> std::uint64_t
    {
        if (size() > 64)
            throw InputError("neighbour masks need at most 64 vertices");
        std::uint64_t mask = 0;
        for (auto w : _neighbours[v])
            mask |= std::uint64_t{1} << w;
        return mask;
    }

    auto is_graph_map(const Graph & g, const Graph & h, std::span<const VertexIndex> image) -> bool
    {
        if (image.size() != g.size())
            return false;
        for (auto v : image)
            if (v >= h.size())
                return false;
        return std::all_of(g.edges().begin(), g.edges().end(),
            [&](const auto & e) { return h.adjacent(image[e.first], image[e.second]); });
    }

    auto resolve_assignment(const NamedAssignment & assignment, const Graph & g, const Graph & h) -> Assignment
    {
        Assignment image(g.size(), 0);
        vector<bool> seen(g.size(), false);
        for (const auto & [from, to] : assignment) {
            auto v = g.require_index(from);
            image[v] = h.require_index(to);
            seen[v] = true;
        }
        for (VertexIndex v = 0; v < g.size(); ++v)
            if (! seen[v])
                throw InputError("assignment misses vertex '" + g.name(v) + "'");
        return image;
    }

    auto is_graph_map(const NamedAssignment & assignment, const Graph & g, const Graph & h) -> bool
    {
        return is_graph_map(g, h, resolve_assignment(assignment, g, h));
    }

    auto GraphMap::from_names(Graph source, Graph target, const NamedAssignment & assignment) -> GraphMap
    {
        auto image = resolve_assignment(assignment, source, target);
        if (! is_graph_map(source, target, image))
            throw InputError("assignment does not send every edge to an edge");
        return GraphMap{std::move(source), std::move(target), std::move(image)};
    }

    auto GraphMap::named() const -> NamedAssignment
    {
        NamedAssignment result;
        for (VertexIndex v = 0; v < source.size(); ++v)
            result.emplace(source.name(v), target.name(image[v]));
        return result;
    }

    auto colour_with(const Graph & g, unsigned k) -> optional<Assignment>
    {
        auto n = g.size();
        if (n == 0)
            return Assignment{};
        if (k == 0 || g.has_loops())
            return std::nullopt;

        Assignment colour(n, 0);
        // Colours are introduced in increasing order, so vertex 0 always gets colour 0.
        std::function<bool(VertexIndex, unsigned)> extend = [&](VertexIndex v, unsigned used) -> bool {
            if (v == n)
                return true;
            auto limit = std::min(k, used + 1);
            for (unsigned c = 0; c < limit; ++c) {
                bool ok = true;
                for (auto w : g.neighbours(v))
                    if (w < v && colour[w] == c) {
                        ok = false;
                        break;
                    }
                if (! ok)
                    continue;
                colour[v] = c;
                if (extend(v + 1, std::max(used, c + 1)))
                    return true;
            }
            return false;
        };
        if (extend(0, 0))
            return colour;
        return std::nullopt;
    }

    void for_each_graph_map(const Graph & g, const Graph & h, const std::function<bool(const Assignment &)> & visit)
    {
        auto n = g.size();
        Assignment image(n, 0);
        bool stop = false;
        std::function<void(VertexIndex)> extend = [&](VertexIndex v) {
            if (v == n) {
                stop = ! visit(image);
                return;
            }
            for (VertexIndex x = 0; x < h.size() && ! stop; ++x) {
                bool ok = true;
                for (auto w : g.neighbours(v))
                    if (w <= v && ! h.adjacent(w == v ? x : image[w], x)) {
                        ok = false;
                        break;
                    }
                if (! ok)
                    continue;
                image[v] = x;
                extend(v + 1);
            }
        };
        extend(0);
    }

    auto chromatic_number(const Graph & g) -> ExtInt
    {
        if (g.empty())
            return 0;
        if (g.has_loops())
            return ExtInt::pos_inf();
        for (unsigned k = 1;; ++k)
            if (colour_with(g, k))
                return static_cast<long long>(k);
    }

    Z2Graph::Z2Graph(Graph graph, Assignment involution) :
        _graph(std::move(graph)),
        _involution(std::move(involution))
    {
        if (! is_graph_map(_graph, _graph, _involution))
            throw InputError("involution is not a graph map");
        for (VertexIndex v = 0; v < _graph.size(); ++v)
            if (_involution[_involution[v]] != v)
                throw InputError("involution does not square to the identity at '" + _graph.name(v) + "'");
    }

    auto Z2Graph::from_names(Graph graph, const NamedAssignment & involution) -> Z2Graph
    {
        auto image = resolve_assignment(involution, graph, graph);
        return Z2Graph{std::move(graph), std::move(image)};
    }

    auto Z2Graph::is_flipping() const -> bool
    {
        for (VertexIndex v = 0; v < _graph.size(); ++v)
            if (_graph.adjacent(v, _involution[v]))
                return true;
        return false;
    }

    auto find_retraction_to_edge(const Graph & t) -> optional<RetractionWitness>
    {
        if (t.has_loops())
            throw InputError("retraction onto an edge needs a loopless graph");
        if (t.edge_count() == 0)
            return std::nullopt;

        vector<int> side(t.size(), -1);
        for (VertexIndex start = 0; start < t.size(); ++start) {
            if (side[start] != -1)
                continue;
            side[start] = 0;
            std::deque<VertexIndex> queue{start};
            while (! queue.empty()) {
                auto v = queue.front();
                queue.pop_front();
                for (auto w : t.neighbours(v)) {
                    if (side[w] == -1) {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    }
                    else if (side[w] == side[v])
                        return std::nullopt;
                }
            }
        }

        auto k2 = complete(2);
        auto [u, w] = t.edges().front();
        Assignment retraction(t.size());
        for (VertexIndex v = 0; v < t.size(); ++v)
            retraction[v] = side[v] == side[u] ? 0 : 1;

        RetractionWitness witness{
            GraphMap{k2, t, Assignment{u, w}},
            GraphMap{t, k2, std::move(retraction)}};
        return witness;
    }

    auto is_equivariant(const Z2Graph & a, const Z2Graph & b, std::span<const VertexIndex> image) -> bool
    {
        if (! is_graph_map(a.graph(), b.graph(), image))
            return false;
        for (VertexIndex v = 0; v < a.graph().size(); ++v)
            if (image[a(v)] != b(image[v]))
                return false;
        return true;
    }

    auto search_equivariant_map(const Z2Graph & a, const Z2Graph & b) -> optional<GraphMap>
    {
        const auto & ga = a.graph();
        const auto & gb = b.graph();
        auto n = ga.size();
        constexpr auto unset = static_cast<VertexIndex>(-1);
        Assignment image(n, unset);

        // Assigning v forces gamma_A(v); both must be consistent with every
        // already-assigned neighbour.
        auto consistent = [&](VertexIndex v) {
            for (auto w : ga.neighbours(v))
                if (image[w] != unset && ! gb.adjacent(image[v], image[w]))
                    return false;
            return true;
        };

        std::function<bool(VertexIndex)> extend = [&](VertexIndex v) -> bool {
            while (v < n && image[v] != unset)
                ++v;
            if (v == n)
                return true;
            auto partner = a(v);
            for (VertexIndex x = 0; x < gb.size(); ++x) {
                auto forced = b(x);
                if (partner == v && forced != x)
                    continue;
                image[v] = x;
                image[partner] = forced;
                if (consistent(v) && consistent(partner) && extend(v + 1))
                    return true;
                image[v] = unset;
                image[partner] = unset;
            }
            return false;
        };

        if (! extend(0))
            return std::nullopt;
        return GraphMap{ga, gb, std::move(image)};
    }

    auto compose(std::span<const VertexIndex> outer, std::span<const VertexIndex> inner) -> Assignment
    {
        Assignment result(inner.size());
        for (std::size_t i = 0; i < inner.size(); ++i)
            result[i] = outer[inner[i]];
        return result;
    }
}
