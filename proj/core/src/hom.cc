#include <homlab/errors.hh>
#include <homlab/hom.hh>

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <numeric>
#include <unordered_map>

using std::optional;
using std::size_t;
using std::span;
using std::string;
using std::vector;

namespace homlab
{
    namespace
    {
        class UnionFind
        {
        public:
            explicit UnionFind(size_t n) : _parent(n) { std::iota(_parent.begin(), _parent.end(), size_t{0}); }

            auto find(size_t x) -> size_t
            {
                while (_parent[x] != x) {
                    _parent[x] = _parent[_parent[x]];
                    x = _parent[x];
                }
                return x;
            }

            void unite(size_t a, size_t b)
            {
                a = find(a);
                b = find(b);
                if (a != b)
                    _parent[std::max(a, b)] = std::min(a, b);
            }

        private:
            vector<size_t> _parent;
        };

        auto canonical_labels(UnionFind & uf, size_t n) -> Components
        {
            Components result;
            result.label.resize(n);
            vector<size_t> relabel(n, n);
            for (size_t i = 0; i < n; ++i) {
                auto root = uf.find(i);
                if (relabel[root] == n)
                    relabel[root] = result.count++;
                result.label[i] = relabel[root];
            }
            return result;
        }

        /// Colours adjacent to every member of `set`.
        auto common_neighbours(const vector<ColourSet> & masks, ColourSet set) -> ColourSet
        {
            ColourSet result = ~ColourSet{0};
            for (; set != 0; set &= set - 1)
                result &= masks[std::countr_zero(set)];
            return result;
        }

        auto lowest_choice(span<const ColourSet> sets) -> Assignment
        {
            Assignment image(sets.size());
            for (size_t v = 0; v < sets.size(); ++v)
                image[v] = static_cast<VertexIndex>(std::countr_zero(sets[v]));
            return image;
        }

        auto neighbour_masks(const Graph & h) -> vector<ColourSet>
        {
            vector<ColourSet> masks(h.size());
            for (VertexIndex x = 0; x < h.size(); ++x)
                masks[x] = h.neighbour_mask(x);
            return masks;
        }

        struct AssignmentHash
        {
            auto operator()(const Assignment & a) const noexcept -> size_t
            {
                size_t h = 1469598103934665603ULL;
                for (auto x : a)
                    h = (h ^ x) * 1099511628211ULL;
                return h;
            }
        };
    }

    auto colour_set_less(ColourSet a, ColourSet b) -> bool
    {
        while (a != 0 && b != 0) {
            auto la = a & -a;
            auto lb = b & -b;
            if (la != lb)
                return la < lb;
            a ^= la;
            b ^= lb;
        }
        return a == 0 && b != 0;
    }

    auto multihom_less(span<const ColourSet> a, span<const ColourSet> b) -> bool
    {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), colour_set_less);
    }

    auto singleton_sets(span<const VertexIndex> image) -> Multihom
    {
        Multihom sets(image.size());
        for (size_t v = 0; v < image.size(); ++v)
            sets[v] = ColourSet{1} << image[v];
        return sets;
    }

    auto is_multihom(const Graph & g, const Graph & h, span<const ColourSet> sets) -> bool
    {
        if (sets.size() != g.size())
            throw InputError("multihom has " + std::to_string(sets.size()) + " sets for " +
                std::to_string(g.size()) + " vertices");
        ColourSet universe = h.size() >= 64 ? ~ColourSet{0} : (ColourSet{1} << h.size()) - 1;
        for (size_t v = 0; v < sets.size(); ++v) {
            if (sets[v] == 0)
                throw InputError("empty colour set at vertex '" + g.name(static_cast<VertexIndex>(v)) + "'");
            if ((sets[v] & ~universe) != 0)
                throw InputError("colour outside the target at vertex '" + g.name(static_cast<VertexIndex>(v)) + "'");
        }
        auto masks = neighbour_masks(h);
        for (auto [v, w] : g.edges())
            if ((sets[w] & ~common_neighbours(masks, sets[v])) != 0)
                return false;
        return true;
    }

    auto HomPoset::is_atom(size_t i) const -> bool
    {
        auto e = element(i);
        return std::all_of(e.begin(), e.end(), [](ColourSet s) { return std::has_single_bit(s); });
    }

    auto HomPoset::find(span<const ColourSet> sets) const -> optional<size_t>
    {
        if (sets.size() != _width)
            return std::nullopt;
        size_t lo = 0, hi = size();
        while (lo < hi) {
            auto mid = lo + (hi - lo) / 2;
            if (multihom_less(element(mid), sets))
                lo = mid + 1;
            else
                hi = mid;
        }
        if (lo < size() && std::equal(sets.begin(), sets.end(), element(lo).begin()))
            return lo;
        return std::nullopt;
    }

    auto HomPoset::find_map(span<const VertexIndex> image) const -> optional<size_t>
    {
        for (auto x : image)
            if (x >= _target.size())
                return std::nullopt;
        return find(singleton_sets(image));
    }

    auto HomPoset::leq(size_t i, size_t j) const -> bool
    {
        auto a = element(i), b = element(j);
        for (size_t v = 0; v < _width; ++v)
            if ((a[v] & ~b[v]) != 0)
                return false;
        return true;
    }

    auto HomPoset::atom_map(size_t i) const -> Assignment
    {
        return lowest_choice(element(i));
    }

    auto HomPoset::strictly_below() const -> vector<vector<size_t>>
    {
        vector<vector<size_t>> below(size());
        Multihom current(_width);
        for (size_t i = 0; i < size(); ++i) {
            auto e = element(i);
            // Every choice of nonempty subsets of a multihom is again a multihom.
            std::function<void(size_t)> descend = [&](size_t v) {
                if (v == _width) {
                    if (! std::equal(current.begin(), current.end(), e.begin())) {
                        auto j = find(current);
                        if (! j)
                            throw InvariantError("sub-multihom missing from the poset");
                        below[i].push_back(*j);
                    }
                    return;
                }
                for (ColourSet sub = e[v]; sub != 0; sub = (sub - 1) & e[v]) {
                    current[v] = sub;
                    descend(v + 1);
                }
            };
            descend(0);
            std::sort(below[i].begin(), below[i].end());
        }
        return below;
    }

    auto enumerate_hom(const Graph & g, const Graph & h, size_t max_elements) -> HomPoset
    {
        if (g.empty())
            throw InputError("Hom poset needs a nonempty source graph");
        if (h.size() > 64)
            throw InputError("Hom poset targets are limited to 64 vertices");

        HomPoset poset;
        poset._source = g;
        poset._target = h;
        poset._width = g.size();

        auto masks = neighbour_masks(h);
        ColourSet universe = h.size() == 64 ? ~ColourSet{0} : (ColourSet{1} << h.size()) - 1;
        auto n = static_cast<VertexIndex>(g.size());
        Multihom current(n, 0);
        size_t count = 0;

        std::function<void(VertexIndex)> extend = [&](VertexIndex v) {
            if (v == n) {
                if (++count > max_elements)
                    throw ResourceError("Hom(" + std::to_string(g.size()) + "-vertex graph, " +
                        std::to_string(h.size()) + "-vertex graph) exceeds the element cap of " +
                        std::to_string(max_elements));
                poset._data.insert(poset._data.end(), current.begin(), current.end());
                return;
            }
            ColourSet allowed = universe;
            for (auto w : g.neighbours(v))
                if (w < v)
                    allowed &= common_neighbours(masks, current[w]);
            if (allowed == 0)
                return;

            vector<ColourSet> candidates;
            for (ColourSet sub = allowed; sub != 0; sub = (sub - 1) & allowed)
                if (! g.has_loop(v) || (sub & ~common_neighbours(masks, sub)) == 0)
                    candidates.push_back(sub);
            std::sort(candidates.begin(), candidates.end(), colour_set_less);

            for (auto s : candidates) {
                current[v] = s;
                extend(v + 1);
            }
            current[v] = 0;
        };
        extend(0);

        for (size_t i = 0; i < poset.size(); ++i)
            if (poset.is_atom(i))
                poset._atoms.push_back(i);
        return poset;
    }

    auto precompose(span<const ColourSet> eta, span<const VertexIndex> f) -> Multihom
    {
        Multihom result(f.size());
        for (size_t v = 0; v < f.size(); ++v)
            result[v] = eta[f[v]];
        return result;
    }

    auto induced_map(const GraphMap & f, const HomPoset & from, const HomPoset & into) -> vector<size_t>
    {
        if (! (from.source() == f.target) || ! (into.source() == f.source) || ! (from.target() == into.target()))
            throw InputError("posets do not match the graph map");
        vector<size_t> image(from.size());
        for (size_t i = 0; i < from.size(); ++i) {
            auto j = into.find(precompose(from.element(i), f.image));
            if (! j)
                throw InvariantError("precomposition left the Hom poset");
            image[i] = *j;
        }
        return image;
    }

    auto induced_involution(const Z2Graph & z, HomPoset poset) -> HomPoset
    {
        if (! (poset.source() == z.graph()))
            throw InputError("poset source does not match the involution's graph");
        if (poset.target().has_loops())
            throw InputError("induced involution needs a loopless target");
        if (! z.is_flipping())
            throw InputError("induced involution needs a flipping involution");

        vector<size_t> inv(poset.size());
        for (size_t i = 0; i < poset.size(); ++i) {
            auto j = poset.find(precompose(poset.element(i), z.involution()));
            if (! j)
                throw InvariantError("involution image missing from the poset");
            if (*j == i)
                throw InvariantError("induced involution fixes element " + std::to_string(i));
            inv[i] = *j;
        }
        poset._involution = std::move(inv);
        return poset;
    }

    auto components(const HomPoset & poset) -> Components
    {
        const auto & g = poset.source();
        const auto & h = poset.target();
        const auto & atoms = poset.atoms();
        auto n = static_cast<VertexIndex>(g.size());

        UnionFind atom_uf(atoms.size());
        vector<size_t> atom_slot(poset.size(), atoms.size());
        for (size_t k = 0; k < atoms.size(); ++k)
            atom_slot[atoms[k]] = k;

        Assignment partner(n);
        for (size_t k = 0; k < atoms.size(); ++k) {
            auto phi = poset.atom_map(atoms[k]);
            // Enumerate every psi whose pointwise union with phi is a multihom.
            std::function<void(VertexIndex)> extend = [&](VertexIndex v) {
                if (v == n) {
                    auto j = poset.find_map(partner);
                    if (! j)
                        throw InvariantError("colouring missing from the poset atoms");
                    atom_uf.unite(k, atom_slot[*j]);
                    return;
                }
                for (VertexIndex c = 0; c < h.size(); ++c) {
                    bool ok = true;
                    for (auto w : g.neighbours(v)) {
                        if (w > v)
                            break;
                        VertexIndex wa = phi[w], wb = w == v ? c : partner[w];
                        if (! h.adjacent(phi[v], wa) || ! h.adjacent(phi[v], wb) || ! h.adjacent(c, wa) ||
                            ! h.adjacent(c, wb)) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) {
                        partner[v] = c;
                        extend(v + 1);
                    }
                }
            };
            extend(0);
        }

        UnionFind uf(poset.size());
        for (size_t i = 0; i < poset.size(); ++i) {
            auto a = poset.find_map(lowest_choice(poset.element(i)));
            if (! a)
                throw InvariantError("element dominates no atom");
            uf.unite(i, atoms[atom_uf.find(atom_slot[*a])]);
        }
        return canonical_labels(uf, poset.size());
    }

    auto components_by_comparability(const HomPoset & poset) -> Components
    {
        UnionFind uf(poset.size());
        for (size_t i = 0; i < poset.size(); ++i)
            for (size_t j = i + 1; j < poset.size(); ++j)
                if (poset.leq(i, j) || poset.leq(j, i))
                    uf.unite(i, j);
        return canonical_labels(uf, poset.size());
    }

    auto same_component(const HomPoset & poset, const Components & parts, span<const VertexIndex> phi,
        span<const VertexIndex> psi) -> bool
    {
        auto i = poset.find_map(phi), j = poset.find_map(psi);
        if (! i || ! j)
            throw InputError("same_component needs two graph maps of the poset");
        return parts.same(*i, *j);
    }

    auto PathCertificate::moves() const -> size_t
    {
        size_t result = 0;
        for (size_t i = 1; i < colourings.size(); ++i)
            if (colourings[i] != colourings[i - 1])
                ++result;
        return result;
    }

    auto verify_certificate(const PathCertificate & certificate) -> CertificateCheck
    {
        const auto & g = certificate.source;
        const auto & h = certificate.target;
        const auto & seq = certificate.colourings;
        if (seq.empty())
            return {false, 0, "certificate has no colourings"};

        for (size_t i = 0; i < seq.size(); ++i) {
            if (seq[i].size() != g.size())
                throw InputError("colouring " + std::to_string(i) + " does not cover the source graph");
            for (auto c : seq[i])
                if (c >= h.size())
                    throw InputError("colouring " + std::to_string(i) + " uses a colour outside the target");
        }

        for (size_t i = 0; i < seq.size(); ++i) {
            if (! is_graph_map(g, h, seq[i]))
                return {false, i, "colouring " + std::to_string(i) + " is not a graph map"};
            if (i == 0)
                continue;
            size_t changed = 0;
            for (size_t v = 0; v < g.size(); ++v)
                if (seq[i][v] != seq[i - 1][v])
                    ++changed;
            if (changed > 1)
                return {false, i,
                    "step " + std::to_string(i - 1) + " -> " + std::to_string(i) + " changes " +
                        std::to_string(changed) + " vertices"};
        }
        return {};
    }

    auto find_path(const Graph & g, const Graph & h, const Assignment & from, const Assignment & to)
        -> optional<PathCertificate>
    {
        if (! is_graph_map(g, h, from) || ! is_graph_map(g, h, to))
            throw InputError("find_path endpoints must be graph maps");

        vector<Assignment> states{from};
        vector<size_t> parent{0};
        std::unordered_map<Assignment, size_t, AssignmentHash> seen{{from, 0}};

        auto finish = [&](size_t last) {
            vector<Assignment> path;
            for (auto i = last;; i = parent[i]) {
                path.push_back(states[i]);
                if (i == 0)
                    break;
            }
            std::reverse(path.begin(), path.end());
            return PathCertificate{g, h, std::move(path)};
        };

        if (from == to)
            return finish(0);

        for (size_t head = 0; head < states.size(); ++head) {
            for (VertexIndex v = 0; v < g.size(); ++v) {
                for (VertexIndex c = 0; c < h.size(); ++c) {
                    if (c == states[head][v])
                        continue;
                    bool ok = true;
                    for (auto w : g.neighbours(v))
                        if (! h.adjacent(c, w == v ? c : states[head][w])) {
                            ok = false;
                            break;
                        }
                    if (! ok)
                        continue;
                    auto next = states[head];
                    next[v] = c;
                    if (seen.contains(next))
                        continue;
                    seen.emplace(next, states.size());
                    states.push_back(std::move(next));
                    parent.push_back(head);
                    if (states.back() == to)
                        return finish(states.size() - 1);
                }
            }
        }
        return std::nullopt;
    }
}
