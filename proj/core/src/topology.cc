#include <homlab/errors.hh>
#include <homlab/topology.hh>

#include <algorithm>

using std::optional;
using std::size_t;
using std::uint32_t;
using std::vector;

namespace homlab
{
    namespace
    {
        auto meets(SimplexVertices a, SimplexVertices b) -> bool
        {
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            vector<uint32_t> common;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
            return ! common.empty();
        }

        auto rank_of_boundary(const OrderedDeltaComplex & complex, size_t d) -> size_t
        {
            if (d == 0 || static_cast<int>(d) > complex.dimension())
                return 0;
            return gf2_rank(complex.boundary(d));
        }
    }

    auto quotient_with_w1(const OrderedDeltaComplex & cover, const vector<uint32_t> & involution,
        const optional<vector<uint32_t>> & section) -> DoubleCoverQuotient
    {
        DoubleCoverQuotient result;
        result.w1.degree = 1;
        if (cover.empty())
            return result;
        if (! cover.is_simplicial())
            throw InputError("quotients need a simplicial cover");

        auto n = cover.vertex_count();
        if (involution.size() != n)
            throw InputError("involution does not cover every vertex");
        for (size_t v = 0; v < n; ++v) {
            if (involution[v] >= n || involution[involution[v]] != v)
                throw InputError("vertex map is not an involution");
            if (involution[v] == v)
                throw InputError("involution is not free: vertex " + std::to_string(v) + " is fixed");
        }

        auto dim = static_cast<size_t>(cover.dimension());
        vector<vector<size_t>> orbit_of(dim + 1);
        vector<vector<size_t>> representatives(dim + 1);
        for (size_t d = 0; d <= dim; ++d) {
            auto count = cover.count(d);
            orbit_of[d].assign(count, count);
            for (size_t i = 0; i < count; ++i) {
                const auto & tuple = cover.cell(d, i).vertices;
                SimplexVertices image;
                for (auto v : tuple)
                    image.push_back(involution[v]);
                auto j = cover.find(image);
                if (! j)
                    throw InputError("involution does not map simplices to simplices with the same vertex order");
                if (meets(tuple, image))
                    throw InputError("involution is not free: a simplex meets its image in dimension " +
                        std::to_string(d));
                if (i < *j) {
                    orbit_of[d][i] = representatives[d].size();
                    representatives[d].push_back(i);
                }
                else
                    orbit_of[d][i] = orbit_of[d][*j];
            }
        }

        for (size_t i = 0; i < n; ++i)
            result.vertex_orbit.push_back(static_cast<uint32_t>(orbit_of[0][i]));

        if (section) {
            if (section->size() != representatives[0].size())
                throw InputError("section has the wrong number of entries");
            for (size_t q = 0; q < section->size(); ++q)
                if ((*section)[q] >= n || result.vertex_orbit[(*section)[q]] != q)
                    throw InputError("section entry is not a lift of its orbit");
            result.section = *section;
        }
        else
            for (auto rep : representatives[0])
                result.section.push_back(static_cast<uint32_t>(rep));

        vector<vector<Cell>> cells(dim);
        for (size_t d = 1; d <= dim; ++d)
            for (auto rep : representatives[d]) {
                const auto & lift = cover.cell(d, rep);
                Cell cell;
                for (auto v : lift.vertices)
                    cell.vertices.push_back(result.vertex_orbit[v]);
                for (auto f : lift.faces)
                    cell.faces.push_back(orbit_of[d - 1][f]);
                cells[d - 1].push_back(std::move(cell));
            }
        result.base = OrderedDeltaComplex::from_cells(representatives[0].size(), std::move(cells));

        if (dim >= 1)
            for (auto rep : representatives[1]) {
                auto u = cover.cell(1, rep).vertices[0];
                auto v = cover.cell(1, rep).vertices[1];
                auto start_orbit = result.vertex_orbit[u];
                auto end = u == result.section[start_orbit] ? v : involution[v];
                result.w1.values.push_back(end != result.section[result.vertex_orbit[v]] ? 1 : 0);
            }
        return result;
    }

    auto betti_mod2(const OrderedDeltaComplex & complex) -> vector<size_t>
    {
        vector<size_t> betti;
        for (int d = 0; d <= complex.dimension(); ++d) {
            auto du = static_cast<size_t>(d);
            betti.push_back(complex.count(du) - rank_of_boundary(complex, du) - rank_of_boundary(complex, du + 1));
        }
        return betti;
    }

    auto reduced_betti_mod2(const OrderedDeltaComplex & complex) -> vector<size_t>
    {
        auto betti = betti_mod2(complex);
        if (! betti.empty())
            --betti[0];
        return betti;
    }

    auto coboundary(const OrderedDeltaComplex & complex, const CocycleClass & c) -> CocycleClass
    {
        if (c.values.size() != complex.count(c.degree))
            throw InputError("cochain length does not match the complex");
        return CocycleClass{c.degree + 1, complex.coboundary_matrix(c.degree).apply(c.values)};
    }

    auto cup_power(const OrderedDeltaComplex & complex, const CocycleClass & z, size_t n) -> CocycleClass
    {
        if (z.degree != 1 || z.values.size() != complex.count(1))
            throw InputError("cup powers need a degree-1 cochain on this complex");

        CocycleClass power{0, Cochain(complex.count(0), 1)};
        if (n == 0)
            return power;
        if (static_cast<int>(n) > complex.dimension())
            return CocycleClass{n, {}};

        // last_edge[i]: index of the edge spanned by the final two vertices of simplex i.
        vector<size_t> last_edge(complex.count(1));
        for (size_t i = 0; i < last_edge.size(); ++i)
            last_edge[i] = i;
        power = z;
        for (size_t d = 2; d <= n; ++d) {
            vector<size_t> next_last(complex.count(d));
            Cochain values(complex.count(d));
            for (size_t i = 0; i < complex.count(d); ++i) {
                const auto & cell = complex.cell(d, i);
                next_last[i] = last_edge[cell.faces[0]];
                values[i] = power.values[cell.faces[d]] & z.values[next_last[i]];
            }
            last_edge = std::move(next_last);
            power = CocycleClass{d, std::move(values)};
        }

        auto check = coboundary(complex, power);
        if (std::any_of(check.values.begin(), check.values.end(), [](auto x) { return x != 0; }))
            throw InvariantError("cup power is not a cocycle; is the input a cocycle?");
        return power;
    }

    auto is_coboundary(const OrderedDeltaComplex & complex, const CocycleClass & c) -> bool
    {
        if (c.values.size() != complex.count(c.degree))
            throw InputError("cochain length does not match the complex");
        if (std::all_of(c.values.begin(), c.values.end(), [](auto x) { return x == 0; }))
            return true;
        if (c.degree == 0)
            return false;
        return gf2_in_column_space(complex.coboundary_matrix(c.degree - 1), c.values);
    }

    auto to_string(HeightMethod m) -> std::string
    {
        return m == HeightMethod::full ? "full" : "component";
    }

    auto sw_height(const HomPoset & poset, HeightMethod method, size_t max_chains) -> HeightResult
    {
        if (! poset.involution())
            throw InputError("height needs a poset with an involution");
        HeightResult result{ExtInt::neg_inf(), false, method};
        if (poset.empty())
            return result;
        const auto & inv = *poset.involution();

        if (method == HeightMethod::component) {
            auto parts = components(poset);
            for (size_t i = 0; i < poset.size(); ++i)
                if (parts.same(i, inv[i])) {
                    result.value = 1;
                    result.lower_bound = true;
                    return result;
                }
            result.value = 0;
            return result;
        }

        OrderedDeltaComplex cover;
        try {
            cover = order_complex(poset, max_chains);
        }
        catch (const ResourceError & e) {
            throw ResourceError(std::string{e.what()} + "; use the component method instead");
        }
        vector<uint32_t> vertex_map(inv.begin(), inv.end());
        auto quotient = quotient_with_w1(cover, vertex_map);
        auto dim = quotient.base.dimension();
        for (int n = 1; n <= dim; ++n) {
            auto power = cup_power(quotient.base, quotient.w1, static_cast<size_t>(n));
            if (is_coboundary(quotient.base, power)) {
                result.value = n - 1;
                return result;
            }
        }
        result.value = dim;
        return result;
    }

    auto conn_proxy(const OrderedDeltaComplex & complex) -> ConnectivityProxy
    {
        if (complex.empty())
            return {ExtInt::neg_inf(), true};
        auto reduced = reduced_betti_mod2(complex);
        for (size_t k = 0; k < reduced.size(); ++k)
            if (reduced[k] != 0) {
                auto n = static_cast<long long>(k) - 1;
                return {ExtInt{n}, n <= 0};
            }
        return {ExtInt::pos_inf(), false};
    }
}
