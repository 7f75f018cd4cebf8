#include <homlab/bounds.hh>
#include <homlab/builtins.hh>
#include <homlab/complex.hh>
#include <homlab/errors.hh>

#include <algorithm>
#include <bit>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

using std::optional;
using std::pair;
using std::size_t;
using std::string;
using std::vector;

namespace homlab
{
    namespace
    {
        auto describe(const HomPoset & poset, size_t i) -> string
        {
            std::ostringstream out;
            auto e = poset.element(i);
            for (VertexIndex v = 0; v < e.size(); ++v) {
                if (v)
                    out << ' ';
                out << poset.source().name(v) << ":{";
                bool first = true;
                for (auto s = e[v]; s != 0; s &= s - 1) {
                    if (! first)
                        out << ',';
                    first = false;
                    out << poset.target().name(static_cast<VertexIndex>(std::countr_zero(s)));
                }
                out << '}';
            }
            return out.str();
        }

        auto describe(const Graph & g, const Graph & h, const Assignment & image) -> string
        {
            std::ostringstream out;
            for (VertexIndex v = 0; v < image.size(); ++v)
                out << (v ? " " : "") << g.name(v) << "=" << h.name(image[v]);
            return out.str();
        }

        /// An element lying in one component with its image, if any.
        auto self_linked_element(const HomPoset & poset) -> optional<size_t>
        {
            const auto & inv = *poset.involution();
            auto parts = components(poset);
            for (size_t i = 0; i < poset.size(); ++i)
                if (parts.same(i, inv[i]))
                    return i;
            return std::nullopt;
        }

        auto fnv1a(const string & s) -> std::uint64_t
        {
            std::uint64_t h = 1469598103934665603ULL;
            for (unsigned char c : s)
                h = (h ^ c) * 1099511628211ULL;
            return h;
        }
    }

    auto to_string(Verdict v) -> string
    {
        switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::violated: return "violated";
        case Verdict::inconclusive: break;
        }
        return "inconclusive";
    }

    auto check_swt_bound(const Z2Graph & test, const Graph & target, const BoundOptions & options, ReportLabels labels)
        -> BoundReport
    {
        if (! test.is_flipping())
            throw InputError("the Stiefel-Whitney bound needs a flipping involution");
        if (target.has_loops())
            throw InputError("the Stiefel-Whitney bound needs a loopless target");

        BoundReport report;
        report.labels = std::move(labels);
        report.invariant = "height";
        report.chi_target = chromatic_number(target);
        report.chi_test = chromatic_number(test.graph());

        auto poset = induced_involution(test, enumerate_hom(test.graph(), target, options.max_elements));
        report.hom_size = poset.size();
        auto method = options.method.value_or(
            poset.size() <= options.full_method_max_elements ? HeightMethod::full : HeightMethod::component);
        auto height = sw_height(poset, method, options.max_chains);
        report.value = height.value;
        report.lower_bound = height.lower_bound;
        report.method = to_string(method);

        auto required = height.value + report.chi_test;
        if (height.value == ExtInt::neg_inf())
            report.status = Verdict::holds;
        else if (report.chi_target < required)
            report.status = Verdict::violated;
        else
            report.status = height.lower_bound ? Verdict::inconclusive : Verdict::holds;

        if (height.lower_bound)
            if (auto i = self_linked_element(poset))
                report.witness = "component contains " + describe(poset, *i) + " and its image";
        return report;
    }

    auto check_ht_bound(const Graph & test, const Graph & target, bool allow_heuristic, const BoundOptions & options,
        ReportLabels labels) -> BoundReport
    {
        BoundReport report;
        report.labels = std::move(labels);
        report.invariant = "conn";
        report.method = allow_heuristic ? "homology-proxy" : "homology-proxy-exact-only";
        report.chi_target = chromatic_number(target);
        report.chi_test = chromatic_number(test);

        auto poset = enumerate_hom(test, target, options.max_elements);
        report.hom_size = poset.size();
        auto proxy = conn_proxy(order_complex(poset, options.max_chains));
        report.value = proxy.value;
        report.exact = proxy.exact;

        auto satisfied = report.chi_target >= proxy.value + report.chi_test;
        if (proxy.value == ExtInt::neg_inf())
            report.status = Verdict::holds;
        else if (proxy.exact)
            report.status = satisfied ? Verdict::holds : Verdict::violated;
        else if (allow_heuristic && satisfied)
            report.status = Verdict::holds;
        else
            report.status = Verdict::inconclusive;
        return report;
    }

    auto bound_suite(const Z2Graph & test, const vector<pair<string, Graph>> & family, const BoundOptions & options,
        const string & test_label, const string & involution_label) -> vector<SuiteEntry>
    {
        vector<SuiteEntry> entries;
        for (const auto & [label, g] : family) {
            SuiteEntry entry{label, std::nullopt, {}};
            try {
                entry.report = check_swt_bound(test, g, options, ReportLabels{test_label, involution_label, label});
            }
            catch (const std::exception & e) {
                entry.error = e.what();
            }
            entries.push_back(std::move(entry));
        }
        return entries;
    }

    auto connected_graphs(unsigned max_vertices) -> vector<Graph>
    {
        vector<Graph> result;
        for (unsigned n = 1; n <= max_vertices; ++n) {
            vector<pair<VertexIndex, VertexIndex>> slots;
            for (VertexIndex i = 0; i < n; ++i)
                for (VertexIndex j = i + 1; j < n; ++j)
                    slots.emplace_back(i, j);
            if (slots.size() > 24)
                throw ResourceError("connected graph enumeration is limited to 7 vertices");

            vector<VertexIndex> perm(n);
            std::set<std::uint64_t> seen;
            for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << slots.size()); ++subset) {
                vector<std::uint32_t> adj(n, 0);
                for (size_t k = 0; k < slots.size(); ++k)
                    if (subset >> k & 1U) {
                        adj[slots[k].first] |= 1U << slots[k].second;
                        adj[slots[k].second] |= 1U << slots[k].first;
                    }

                std::uint32_t reached = 1, frontier = 1;
                while (frontier) {
                    std::uint32_t next = 0;
                    for (auto f = frontier; f; f &= f - 1)
                        next |= adj[std::countr_zero(f)];
                    frontier = next & ~reached;
                    reached |= next;
                }
                if (reached != (n == 32 ? ~0U : (1U << n) - 1))
                    continue;

                // Canonical code: the largest edge bitmask over all relabellings.
                std::uint64_t best = 0;
                std::iota(perm.begin(), perm.end(), 0);
                do {
                    std::uint64_t code = 0;
                    for (size_t k = 0; k < slots.size(); ++k)
                        if (adj[perm[slots[k].first]] >> perm[slots[k].second] & 1U)
                            code |= std::uint64_t{1} << k;
                    best = std::max(best, code);
                } while (std::next_permutation(perm.begin(), perm.end()));

                if (! seen.insert(best).second)
                    continue;
                vector<pair<VertexIndex, VertexIndex>> edges;
                for (size_t k = 0; k < slots.size(); ++k)
                    if (best >> k & 1U)
                        edges.push_back(slots[k]);
                vector<string> names;
                for (unsigned i = 1; i <= n; ++i)
                    names.push_back(std::to_string(i));
                result.push_back(Graph::from_indices(std::move(names), edges));
            }
        }
        return result;
    }

    auto graph_identifier(const Graph & g) -> string
    {
        auto names = g.names();
        std::sort(names.begin(), names.end());
        vector<pair<string, string>> edges;
        for (auto [u, v] : g.edges()) {
            auto a = g.name(u), b = g.name(v);
            if (b < a)
                std::swap(a, b);
            edges.emplace_back(a, b);
        }
        std::sort(edges.begin(), edges.end());
        string canonical;
        for (const auto & n : names)
            canonical += n + ",";
        canonical += ";";
        for (const auto & [a, b] : edges)
            canonical += a + "-" + b + ",";
        char buffer[17];
        std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(fnv1a(canonical)));
        return "n" + std::to_string(g.size()) + "-" + buffer;
    }

    auto PipelineReport::failed_stage() const -> optional<int>
    {
        for (const auto & s : stages)
            if (! s.passed)
                return s.stage;
        return std::nullopt;
    }

    auto Theorem2Config::defaults() -> Theorem2Config
    {
        return Theorem2Config{paper_path_certificate(), paper_f(), paper_gamma2(), paper_gamma1(), cycle_reflection(5)};
    }

    auto theorem2_pipeline(const Theorem2Config & config) -> PipelineReport
    {
        PipelineReport report{"theorem2", false, {}};
        const auto & t = config.start.source;
        const auto & k = config.start.target;
        const auto & cert = config.certificate;

        auto run = [&](int stage, const string & name, const std::function<string()> & body) {
            StageResult result{stage, name, false, {}};
            try {
                result.detail = body();
                result.passed = true;
            }
            catch (const std::exception & e) {
                result.detail = e.what();
            }
            report.stages.push_back(result);
            return result.passed;
        };
        auto fail = [](const string & why) -> string { throw InvariantError(why); };

        if (! run(1, "verify certificate", [&]() -> string {
                if (! (cert.source == t) || ! (cert.target == k))
                    return fail("certificate graphs do not match the colouring f");
                auto check = verify_certificate(cert);
                if (! check.valid)
                    return fail("invalid at index " + std::to_string(check.index) + ": " + check.reason);
                if (cert.colourings.front() != config.start.image)
                    return fail("certificate does not start at f");
                if (cert.colourings.back() != compose(config.start.image, paper_gamma2().involution()))
                    return fail("certificate does not end at f o gamma2");
                return std::to_string(cert.colourings.size()) + " colourings, " + std::to_string(cert.moves()) +
                    " single-vertex moves, from f to f o gamma2";
            }))
            return report;

        auto hom = enumerate_hom(t, k);
        if (! run(2, "same component", [&]() -> string {
                auto parts = components(hom);
                if (! same_component(hom, parts, cert.colourings.front(), cert.colourings.back()))
                    return fail("certificate endpoints lie in different components");
                return "Hom(T,K3) has " + std::to_string(hom.size()) + " elements, " +
                    std::to_string(hom.atoms().size()) + " atoms, " + std::to_string(parts.count) +
                    " components; endpoints share one";
            }))
            return report;

        if (! run(3, "SWT violation", [&]() -> string {
                if (cert.colourings.back() != compose(config.start.image, config.violating.involution()))
                    return fail("certificate endpoint is not f o gamma for the violating involution");
                BoundOptions options;
                options.method = HeightMethod::component;
                auto bound = check_swt_bound(config.violating, k, options);
                if (bound.value < ExtInt{1} || bound.status != Verdict::violated)
                    return fail("no component is invariant under the involution; height class " +
                        bound.value.to_string());
                return "w1 != 0, height >= 1; chi(K3) = " + bound.chi_target.to_string() + " < 1 + " +
                    bound.chi_test.to_string() + " = height + chi(T)";
            }))
            return report;

        if (! run(4, "equivariant probe map", [&]() -> string {
                auto map = search_equivariant_map(config.probe, config.contrast);
                if (! map)
                    return fail("no equivariant map from the probe graph");
                if (! is_equivariant(config.probe, config.contrast, map->image))
                    return fail("search returned a non-equivariant map");
                auto chi_probe = chromatic_number(config.probe.graph());
                auto chi_t = chromatic_number(t);
                if (chi_probe != chi_t)
                    return fail("chromatic numbers differ: " + chi_probe.to_string() + " vs " + chi_t.to_string());
                return "map " + describe(map->source, map->target, map->image) + "; chi = " + chi_t.to_string() +
                    " on both sides";
            }))
            return report;

        if (! run(5, "no invariant component under contrast", [&]() -> string {
                auto poset = induced_involution(config.contrast, hom);
                auto parts = components(poset);
                const auto & inv = *poset.involution();
                for (size_t i = 0; i < poset.size(); ++i)
                    if (parts.same(i, inv[i]))
                        return fail("component containing " + describe(poset, i) + " is invariant");
                return std::to_string(parts.count) + " components, none invariant; height class 0";
            }))
            return report;

        report.passed = true;
        return report;
    }

    auto is_order_preserving(const HomPoset & from, const HomPoset & into, const vector<size_t> & map) -> bool
    {
        auto below = from.strictly_below();
        for (size_t i = 0; i < below.size(); ++i)
            for (auto j : below[i])
                if (! into.leq(map[j], map[i]))
                    return false;
        return true;
    }

    auto theorem1_pipeline(const Graph & test, const vector<pair<string, Graph>> & suite, size_t max_elements)
        -> Theorem1Report
    {
        if (chromatic_number(test) != ExtInt{2})
            throw InputError("the retract pipeline needs a graph of chromatic number exactly 2");
        auto witness = find_retraction_to_edge(test);
        if (! witness)
            throw InvariantError("no retraction onto an edge for a graph of chromatic number 2");

        Theorem1Report report{*witness, {}, true};
        auto edge = complete(2);
        for (const auto & [label, g] : suite) {
            auto hom_edge = enumerate_hom(edge, g, max_elements);
            auto hom_test = enumerate_hom(test, g, max_elements);
            auto r_star = induced_map(witness->retraction, hom_edge, hom_test);
            auto i_star = induced_map(witness->inclusion, hom_test, hom_edge);

            RetractCheck check{label, hom_edge.size(), hom_test.size(), true, true};
            for (size_t k = 0; k < hom_edge.size(); ++k)
                if (i_star[r_star[k]] != k)
                    check.identity = false;
            check.order_preserving =
                is_order_preserving(hom_edge, hom_test, r_star) && is_order_preserving(hom_test, hom_edge, i_star);
            report.passed = report.passed && check.identity && check.order_preserving;
            report.checks.push_back(std::move(check));
        }
        return report;
    }
}
