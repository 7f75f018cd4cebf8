// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <homlab/bounds.hh>
#include <homlab/builtins.hh>
#include <homlab/complex.hh>
#include <homlab/io.hh>
#include <homlab/topology.hh>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace homlab;
using Clock = std::chrono::steady_clock;

namespace
{
    struct Failure
    {
        std::string why;
    };

    void expect(bool condition, const std::string & why)
    {
        if (! condition)
            throw Failure{why};
    }

    auto swap_family() -> std::vector<std::pair<std::string, Graph>>
    {
        std::vector<std::pair<std::string, Graph>> result;
        for (const auto & g : connected_graphs(5))
            result.emplace_back(graph_identifier(g), g);
        return result;
    }

    /// Every (test, involution, target) instance touched by criteria 1-6.
    struct Instance
    {
        Z2Graph test;
        Graph target;
    };

    auto instances() -> std::vector<Instance>
    {
        std::vector<Instance> result{{paper_gamma2(), complete(3)}, {paper_gamma1(), complete(3)},
            {cycle_reflection(5), complete(3)}, {complete_swap(2), complete(4)}};
        for (const auto & [_, g] : swap_family())
            result.push_back({complete_swap(2), g});
        return result;
    }

    auto criterion_1() -> std::string
    {
        auto config = Theorem2Config::defaults();
        config.certificate = io::load_certificate(std::filesystem::path{HOMLAB_DATA_DIR} / "fig3_path.json");
        const auto & cert = config.certificate;
        expect(cert.colourings.size() == 16, "expected 16 colourings");
        expect(cert.moves() == 15, "expected 15 single-vertex moves");
        expect(cert.colourings.front() == paper_f().image, "certificate must start at f");
        expect(cert.colourings.back() == paper_f_gamma2().image, "certificate must end at f o gamma2");
        auto report = theorem2_pipeline(config);
        for (const auto & s : report.stages)
            expect(s.passed, "stage " + std::to_string(s.stage) + ": " + s.detail);
        expect(report.passed && report.stages.size() == 5, "pipeline did not complete");
        BoundOptions component;
        component.method = HeightMethod::component;
        auto bound = check_swt_bound(paper_gamma2(), complete(3), component);
        expect(bound.status == Verdict::violated && bound.chi_target == ExtInt(3) && bound.value == ExtInt(1) &&
                bound.chi_test == ExtInt(3),
            "expected the violation 3 < 1 + 3");
        return "16 colourings, 15 moves, 3 < 1 + 3";
    }

    auto criterion_2() -> std::string
    {
        auto poset = induced_involution(paper_gamma1(), enumerate_hom(paper_t(), complete(3)));
        auto parts = components(poset);
        const auto & inv = *poset.involution();
        for (std::size_t i = 0; i < poset.size(); ++i)
            expect(! parts.same(i, inv[i]), "a component is invariant under gamma1");
        auto h = sw_height(poset, HeightMethod::component);
        expect(h.value == ExtInt(0) && ! h.lower_bound, "component height class is not 0");
        return std::to_string(parts.count) + " components, none invariant";
    }

    auto criterion_3() -> std::string
    {
        auto c5 = cycle_reflection(5);
        auto g1 = paper_gamma1();
        auto phi = search_equivariant_map(c5, g1);
        expect(phi.has_value(), "no equivariant map found");
        expect(is_graph_map(c5.graph(), g1.graph(), phi->image), "not a graph map");
        for (VertexIndex v = 0; v < c5.graph().size(); ++v)
            expect(phi->image[c5(v)] == g1(phi->image[v]), "not equivariant");
        expect(chromatic_number(c5.graph()) == ExtInt(3) && chromatic_number(paper_t()) == ExtInt(3),
            "chromatic numbers are not both 3");
        return "map found, chi = 3 on both sides";
    }

    auto criterion_4() -> std::string
    {
        BoundOptions full;
        full.method = HeightMethod::full;
        auto k3 = check_swt_bound(complete_swap(2), complete(3), full);
        auto k4 = check_swt_bound(complete_swap(2), complete(4), full);
        expect(k3.value == ExtInt(1), "height of Hom(K2,K3) is " + k3.value.to_string());
        expect(k4.value == ExtInt(2), "height of Hom(K2,K4) is " + k4.value.to_string());
        expect(k3.status == Verdict::holds && k3.chi_target == k3.value + k3.chi_test, "3 >= 1 + 2 not tight");
        expect(k4.status == Verdict::holds && k4.chi_target == k4.value + k4.chi_test, "4 >= 2 + 2 not tight");
        return "heights 1 and 2, both bounds tight";
    }

    auto criterion_5() -> std::string
    {
        auto b3 = betti_mod2(order_complex(enumerate_hom(complete(2), complete(3))));
        auto b4 = betti_mod2(order_complex(enumerate_hom(complete(2), complete(4))));
        expect(b3 == std::vector<std::size_t>{1, 1}, "Betti numbers of Hom(K2,K3) differ");
        expect(b4 == std::vector<std::size_t>{1, 0, 1}, "Betti numbers of Hom(K2,K4) differ");
        return "(1,1) and (1,0,1)";
    }

    auto criterion_6() -> std::string
    {
        auto family = swap_family();
        auto entries = bound_suite(complete_swap(2), family, {}, "K2", "swap");
        std::size_t full = 0;
        for (const auto & e : entries) {
            expect(e.report.has_value(), e.target + ": " + e.error);
            expect(e.report->status != Verdict::violated, e.target + " violates the bound");
            expect(e.report->status == Verdict::holds, e.target + " is inconclusive");
            if (e.report->method == "full")
                ++full;
        }
        return std::to_string(entries.size()) + " graphs, 0 violations, " + std::to_string(full) + " by the full method";
    }

    auto criterion_7() -> std::string
    {
        std::size_t checked = 0;
        auto compare = [&](const HomPoset & p) {
            if (p.size() > 2000)
                return;
            expect(components(p).label == components_by_comparability(p).label, "partitions differ");
            ++checked;
        };
        for (const auto & inst : instances())
            compare(enumerate_hom(inst.test.graph(), inst.target));
        for (const auto * name : {"K2", "K3", "C5"}) {
            compare(enumerate_hom(complete(2), std::get<Graph>(builtin(name))));
            compare(enumerate_hom(cycle(4), std::get<Graph>(builtin(name))));
        }
        compare(enumerate_hom(complete(2), complete(2)));
        compare(enumerate_hom(complete(3), complete(3)));
        return std::to_string(checked) + " posets";
    }

    auto criterion_8() -> std::string
    {
        std::mt19937 rng(8);
        std::size_t complexes = 0;
        auto check_chain_complex = [&](const OrderedDeltaComplex & x) {
            for (int d = 2; d <= x.dimension(); ++d) {
                auto product = x.boundary(static_cast<std::size_t>(d) - 1).to_dense() *
                    x.boundary(static_cast<std::size_t>(d)).to_dense();
                expect(product.is_zero(), "boundary of boundary is nonzero");
            }
            for (int d = 0; d + 2 <= x.dimension(); ++d) {
                auto product = x.coboundary_matrix(static_cast<std::size_t>(d) + 1).to_dense() *
                    x.coboundary_matrix(static_cast<std::size_t>(d)).to_dense();
                expect(product.is_zero(), "coboundary of coboundary is nonzero");
            }
            ++complexes;
        };

        std::size_t posets = 0;
        for (const auto & inst : instances()) {
            auto poset = induced_involution(inst.test, enumerate_hom(inst.test.graph(), inst.target));
            const auto & inv = *poset.involution();
            for (std::size_t i = 0; i < poset.size(); ++i)
                expect(inv[i] != i, "induced involution has a fixed point");
            ++posets;
            if (poset.size() > 2000 || poset.empty())
                continue;
            auto cover = order_complex(poset);
            check_chain_complex(cover);
            std::vector<std::uint32_t> vertex_inv(inv.begin(), inv.end());
            auto q = quotient_with_w1(cover, vertex_inv);
            check_chain_complex(q.base);
            for (int trial = 0; trial < 2; ++trial) {
                auto section = q.section;
                for (auto & s : section)
                    if (rng() & 1U)
                        s = vertex_inv[s];
                auto other = quotient_with_w1(cover, vertex_inv, section);
                CocycleClass difference = q.w1;
                for (std::size_t i = 0; i < difference.values.size(); ++i)
                    difference.values[i] ^= other.w1.values[i];
                expect(is_coboundary(q.base, difference), "w1 depends on the section");
            }
        }

        std::vector<std::pair<std::string, Graph>> suite{{"K2", complete(2)}, {"K3", complete(3)}, {"C5", cycle(5)}};
        auto retract = theorem1_pipeline(cycle(4), suite);
        for (const auto & c : retract.checks)
            expect(c.identity && c.order_preserving, "retract identity fails on " + c.target);
        expect(retract.passed, "retract pipeline failed");

        return std::to_string(posets) + " free involutions, " + std::to_string(complexes) + " complexes";
    }

    struct Criterion
    {
        int number;
        std::string name;
        std::chrono::seconds limit;
        std::function<std::string()> run;
    };
}

auto main() -> int
{
    using std::chrono::seconds;
    std::vector<Criterion> criteria{
        {1, "(T, gamma2) counterexample reproduction", seconds{30}, criterion_1},
        {2, "gamma1 contrast", seconds{600}, criterion_2},
        {3, "equivariant map C5 -> (T, gamma1)", seconds{5}, criterion_3},
        {4, "height oracle values", seconds{60}, criterion_4},
        {5, "Betti suite", seconds{600}, criterion_5},
        {6, "bound sweep over connected graphs on <= 5 vertices", seconds{600}, criterion_6},
        {7, "atom-move and comparability partitions agree", seconds{600}, criterion_7},
        {8, "property suite", seconds{600}, criterion_8},
    };

    int failures = 0;
    for (const auto & c : criteria) {
        auto start = Clock::now();
        std::string detail;
        bool ok = true;
        try {
            detail = c.run();
        }
        catch (const Failure & f) {
            ok = false;
            detail = f.why;
        }
        catch (const std::exception & e) {
            ok = false;
            detail = std::string{"exception: "} + e.what();
        }
        auto elapsed = std::chrono::duration<double>(Clock::now() - start);
        if (ok && elapsed > c.limit) {
            ok = false;
            detail += " (over the time limit)";
        }
        std::ostringstream line;
        line.precision(3);
        line << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.name << " - " << detail << " ["
             << std::fixed << elapsed.count() << " s]";
        std::cout << line.str() << std::endl;
        if (! ok)
            ++failures;
    }
    return failures == 0 ? 0 : 1;
}
