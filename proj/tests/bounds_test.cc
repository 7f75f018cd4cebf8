#include "oracles.hh"

#include <homlab/bounds.hh>
#include <homlab/builtins.hh>
#include <homlab/errors.hh>

#include <doctest.h>

#include <set>

using namespace homlab;

namespace
{
    auto family(std::initializer_list<const char *> names) -> std::vector<std::pair<std::string, Graph>>
    {
        std::vector<std::pair<std::string, Graph>> result;
        for (const auto * n : names)
            result.emplace_back(n, std::get<Graph>(builtin(n)));
        return result;
    }
}

TEST_SUITE("bounds")
{
    TEST_CASE("SWT bound instances")
    {
        auto k3 = check_swt_bound(complete_swap(2), complete(3));
        CHECK(k3.value == ExtInt(1));
        CHECK(k3.status == Verdict::holds);
        CHECK(k3.chi_target == ExtInt(3));
        CHECK(k3.chi_test == ExtInt(2));

        auto k4 = check_swt_bound(complete_swap(2), complete(4));
        CHECK(k4.value == ExtInt(2));
        CHECK(k4.status == Verdict::holds);

        BoundOptions component;
        component.method = HeightMethod::component;
        auto violation = check_swt_bound(paper_gamma2(), complete(3), component);
        CHECK(violation.status == Verdict::violated);
        CHECK(violation.value == ExtInt(1));
        CHECK(violation.lower_bound);
        CHECK(violation.chi_test == ExtInt(3));
        CHECK(violation.witness.has_value());

        auto contrast = check_swt_bound(paper_gamma1(), complete(3));
        CHECK(contrast.status == Verdict::holds);
        CHECK(contrast.value == ExtInt(0));
        CHECK(contrast.method == "component");

        auto empty = check_swt_bound(complete_swap(3), complete(2));
        CHECK(empty.value == ExtInt::neg_inf());
        CHECK(empty.status == Verdict::holds);

        CHECK_THROWS_AS((void) check_swt_bound(Z2Graph(cycle(4), Assignment{2, 3, 0, 1}), complete(3)), InputError);
        CHECK_THROWS_AS((void) check_swt_bound(complete_swap(2), Graph({"x"}, {{"x", "x"}})), InputError);
    }

    TEST_CASE("a component lower bound that does not violate is inconclusive")
    {
        BoundOptions component;
        component.method = HeightMethod::component;
        auto r = check_swt_bound(complete_swap(2), complete(4), component);
        CHECK(r.value == ExtInt(1));
        CHECK(r.lower_bound);
        CHECK(r.status == Verdict::inconclusive);
    }

    TEST_CASE("HT bound instances")
    {
        auto circle = check_ht_bound(complete(2), complete(3), false);
        CHECK(circle.value == ExtInt(0));
        CHECK(circle.exact);
        CHECK(circle.status == Verdict::holds);

        auto points = check_ht_bound(complete(2), complete(2), false);
        CHECK(points.value == ExtInt(-1));
        CHECK(points.status == Verdict::holds);

        auto empty = check_ht_bound(complete(3), complete(2), false);
        CHECK(empty.value == ExtInt::neg_inf());
        CHECK(empty.status == Verdict::holds);

        auto sphere = check_ht_bound(complete(2), complete(4), false);
        CHECK(sphere.value == ExtInt(1));
        CHECK_FALSE(sphere.exact);
        CHECK(sphere.status == Verdict::inconclusive);
        auto heuristic = check_ht_bound(complete(2), complete(4), true);
        CHECK(heuristic.status == Verdict::holds);
    }

    TEST_CASE("reports never violate on heuristic evidence")
    {
        std::mt19937 rng(31);
        for (int trial = 0; trial < 40; ++trial) {
            auto t = oracle::random_graph(rng, 1 + rng() % 3, 0.7);
            auto g = oracle::random_graph(rng, 1 + rng() % 4, 0.6);
            for (bool heuristic : {false, true}) {
                auto r = check_ht_bound(t, g, heuristic);
                if (r.status == Verdict::violated)
                    CHECK(r.exact);
                CHECK(r.chi_test == chromatic_number(t));
                CHECK(r.chi_target == chromatic_number(g));
            }
        }
    }

    TEST_CASE("theorem2_pipeline default run")
    {
        auto report = theorem2_pipeline();
        CHECK(report.passed);
        REQUIRE(report.stages.size() == 5);
        for (const auto & s : report.stages)
            CHECK_MESSAGE(s.passed, s.detail);
        CHECK_FALSE(report.failed_stage());
        CHECK(report.stages[0].detail.find("16 colourings, 15 single-vertex moves") != std::string::npos);
    }

    TEST_CASE("theorem2_pipeline rejects a corrupted certificate at stage 1")
    {
        auto config = Theorem2Config::defaults();
        config.certificate.colourings.erase(config.certificate.colourings.begin() + 5);
        auto report = theorem2_pipeline(config);
        CHECK_FALSE(report.passed);
        CHECK(report.failed_stage() == 1);
        CHECK(report.stages.back().detail.find("index 5") != std::string::npos);
    }

    TEST_CASE("theorem2_pipeline with the involutions swapped fails at stage 3")
    {
        auto config = Theorem2Config::defaults();
        std::swap(config.violating, config.contrast);
        auto report = theorem2_pipeline(config);
        CHECK_FALSE(report.passed);
        CHECK(report.failed_stage() == 3);
    }

    TEST_CASE("theorem1_pipeline")
    {
        auto c4 = theorem1_pipeline(cycle(4), family({"K2", "K3", "C5"}));
        CHECK(c4.passed);
        REQUIRE(c4.checks.size() == 3);
        for (const auto & c : c4.checks) {
            CHECK(c.identity);
            CHECK(c.order_preserving);
        }
        CHECK(theorem1_pipeline(cycle(6), family({"K3"})).passed);
        CHECK_THROWS_AS((void) theorem1_pipeline(cycle(5), family({"K3"})), InputError);
        CHECK_THROWS_AS((void) theorem1_pipeline(complete(1), family({"K3"})), InputError);
    }

    TEST_CASE("connected graph catalogue")
    {
        std::vector<std::size_t> expected{1, 1, 2, 6, 21};
        auto all = connected_graphs(5);
        std::vector<std::size_t> counts(5, 0);
        std::set<std::string> ids;
        for (const auto & g : all) {
            ++counts[g.size() - 1];
            CHECK_FALSE(g.has_loops());
            ids.insert(graph_identifier(g));
        }
        CHECK(counts == expected);
        CHECK(ids.size() == all.size());
        CHECK(connected_graphs(6).size() == 1 + 1 + 2 + 6 + 21 + 112);
    }

    TEST_CASE("graph identifiers ignore vertex declaration order")
    {
        Graph a({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
        Graph b({"z", "y", "x"}, {{"z", "y"}, {"y", "x"}});
        CHECK(graph_identifier(a) == graph_identifier(b));
        CHECK(graph_identifier(a) != graph_identifier(complete(3)));
    }

    TEST_CASE("bound suite")
    {
        std::vector<std::pair<std::string, Graph>> graphs;
        for (const auto & g : connected_graphs(5))
            graphs.emplace_back(graph_identifier(g), g);
        auto entries = bound_suite(complete_swap(2), graphs, {}, "K2", "swap");
        REQUIRE(entries.size() == graphs.size());
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const auto & e = entries[i];
            REQUIRE_MESSAGE(e.report, e.error);
            CHECK(e.target == graphs[i].first);
            CHECK(e.report->status != Verdict::violated);
            CHECK(e.report->chi_target == chromatic_number(graphs[i].second));
        }

        auto one = bound_suite(paper_gamma2(), family({"K3"}));
        REQUIRE(one.size() == 1);
        REQUIRE(one[0].report);
        CHECK(one[0].report->status == Verdict::violated);

        CHECK(bound_suite(complete_swap(2), {}).empty());

        auto errors = bound_suite(complete_swap(2), {{"loop", Graph({"x"}, {{"x", "x"}})}});
        REQUIRE(errors.size() == 1);
        CHECK_FALSE(errors[0].report);
        CHECK_FALSE(errors[0].error.empty());
    }
}
