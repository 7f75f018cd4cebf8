#include "oracles.hh"

#include <homlab/bounds.hh>
#include <homlab/builtins.hh>
#include <homlab/errors.hh>
#include <homlab/hom.hh>

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace homlab;

namespace
{
    auto set_of(std::initializer_list<int> colours) -> ColourSet
    {
        ColourSet s = 0;
        for (auto c : colours)
            s |= ColourSet{1} << (c - 1);
        return s;
    }

    auto sorted_elements(const HomPoset & p) -> std::vector<std::vector<ColourSet>>
    {
        std::vector<std::vector<ColourSet>> out;
        for (std::size_t i = 0; i < p.size(); ++i)
            out.emplace_back(p.element(i).begin(), p.element(i).end());
        return out;
    }
}

TEST_SUITE("hom")
{
    TEST_CASE("colour set order is lexicographic on sorted elements")
    {
        CHECK(colour_set_less(set_of({1}), set_of({1, 2})));
        CHECK(colour_set_less(set_of({1, 2}), set_of({1, 2, 3})));
        CHECK(colour_set_less(set_of({1, 2, 3}), set_of({1, 3})));
        CHECK(colour_set_less(set_of({1, 3}), set_of({2})));
        CHECK_FALSE(colour_set_less(set_of({2}), set_of({2})));
    }

    TEST_CASE("is_multihom")
    {
        auto k2 = complete(2), k3 = complete(3);
        CHECK(is_multihom(k2, k3, std::vector<ColourSet>{set_of({1, 2}), set_of({3})}));
        CHECK_FALSE(is_multihom(k2, k3, std::vector<ColourSet>{set_of({1, 2}), set_of({2})}));
        CHECK_THROWS_AS((void) is_multihom(k2, k3, std::vector<ColourSet>{0, set_of({3})}), InputError);

        auto f = paper_f();
        CHECK(is_multihom(f.source, f.target, singleton_sets(f.image)));

        // Union of two colourings differing at one vertex.
        auto t = paper_t();
        auto cert = paper_path_certificate();
        for (std::size_t i = 1; i < cert.colourings.size(); ++i) {
            Multihom eta(t.size());
            for (std::size_t v = 0; v < t.size(); ++v)
                eta[v] = (ColourSet{1} << cert.colourings[i - 1][v]) | (ColourSet{1} << cert.colourings[i][v]);
            CHECK(is_multihom(t, complete(3), eta));
        }
    }

    TEST_CASE("enumerate_hom sizes")
    {
        auto k2k3 = enumerate_hom(complete(2), complete(3));
        CHECK(k2k3.size() == 12);
        CHECK(k2k3.atoms().size() == 6);

        auto k3k3 = enumerate_hom(complete(3), complete(3));
        CHECK(k3k3.size() == 6);
        CHECK(k3k3.atoms().size() == 6);

        CHECK(enumerate_hom(complete(2), complete(4)).size() == 50);
        CHECK(enumerate_hom(Graph({"x"}, {{"x", "x"}}), complete(3)).empty());

        auto tk3 = enumerate_hom(paper_t(), complete(3));
        CHECK(tk3.size() == 2160);
        CHECK(tk3.atoms().size() == 600);

        CHECK_THROWS_AS((void) enumerate_hom(Graph{}, complete(3)), InputError);
        CHECK_THROWS_AS((void) enumerate_hom(paper_t(), complete(3), 1000), ResourceError);
    }

    TEST_CASE("enumerate_hom matches brute force and is canonically ordered")
    {
        std::mt19937 rng(11);
        for (int trial = 0; trial < 60; ++trial) {
            auto g = oracle::random_graph(rng, 1 + rng() % 4, 0.5, trial % 5 == 0);
            auto h = oracle::random_graph(rng, 1 + rng() % 4, 0.6, trial % 3 == 0);
            auto p = enumerate_hom(g, h);
            auto expected = oracle::all_multihoms(g, h);
            auto got = sorted_elements(p);
            CHECK(std::is_sorted(got.begin(), got.end(),
                [](const auto & a, const auto & b) { return multihom_less(a, b); }));
            std::sort(expected.begin(), expected.end());
            std::sort(got.begin(), got.end());
            CHECK(got == expected);
            for (std::size_t i = 0; i < p.size(); ++i)
                CHECK(p.find(p.element(i)) == std::optional<std::size_t>{i});
        }
    }

    TEST_CASE("poset order and choice functions")
    {
        std::vector<HomPoset> posets;
        posets.push_back(enumerate_hom(complete(2), complete(4)));
        posets.push_back(enumerate_hom(cycle(5), complete(3)));
        posets.push_back(enumerate_hom(cycle(4), complete(3)));
        posets.push_back(enumerate_hom(paper_t(), complete(3)));
        std::mt19937 rng(3);
        for (const auto & p : posets) {
            for (std::size_t i = 0; i < std::min<std::size_t>(p.size(), 200); ++i) {
                CHECK(p.leq(i, i));
                // every element dominates an atom; sampled choice functions are graph maps
                auto e = p.element(i);
                for (int sample = 0; sample < 5; ++sample) {
                    Assignment choice(e.size());
                    for (std::size_t v = 0; v < e.size(); ++v) {
                        std::vector<VertexIndex> members;
                        for (VertexIndex x = 0; x < 64; ++x)
                            if (e[v] >> x & 1U)
                                members.push_back(x);
                        choice[v] = members[rng() % members.size()];
                    }
                    CHECK(is_graph_map(p.source(), p.target(), choice));
                    auto atom = p.find_map(choice);
                    REQUIRE(atom);
                    CHECK(p.leq(*atom, i));
                }
            }
            auto below = p.strictly_below();
            for (std::size_t i = 0; i < p.size() && i < 300; ++i)
                for (auto j : below[i]) {
                    CHECK(p.leq(j, i));
                    CHECK_FALSE(p.leq(i, j));
                }
        }
    }

    TEST_CASE("induced involution")
    {
        auto tk3 = induced_involution(paper_gamma2(), enumerate_hom(paper_t(), complete(3)));
        auto f = paper_f();
        auto i = tk3.find_map(f.image);
        REQUIRE(i);
        auto image = tk3.atom_map((*tk3.involution())[*i]);
        auto t = paper_t();
        auto k3 = complete(3);
        NamedAssignment expected{{"a", "2"}, {"b", "3"}, {"c", "1"}, {"d", "3"}, {"e", "1"}, {"a'", "1"}, {"b'", "2"},
            {"c'", "3"}, {"d'", "2"}, {"e'", "3"}};
        CHECK(image == resolve_assignment(expected, t, k3));

        auto k2k3 = induced_involution(complete_swap(2), enumerate_hom(complete(2), complete(3)));
        const auto & inv = *k2k3.involution();
        std::size_t orbits = 0;
        for (std::size_t k = 0; k < inv.size(); ++k) {
            auto e = k2k3.element(k), m = k2k3.element(inv[k]);
            CHECK(m[0] == e[1]);
            CHECK(m[1] == e[0]);
            if (k < inv[k])
                ++orbits;
        }
        CHECK(orbits == 6);

        auto identity = Z2Graph(complete(2), Assignment{0, 1});
        CHECK_THROWS_AS((void) induced_involution(identity, enumerate_hom(complete(2), complete(3))), InputError);
        CHECK_THROWS_AS((void) induced_involution(complete_swap(2), enumerate_hom(complete(2), Graph({"x"}, {{"x", "x"}}))),
            InputError);
    }

    TEST_CASE("induced involutions are free and never comparable within an orbit")
    {
        std::vector<std::pair<Z2Graph, Graph>> cases{{complete_swap(2), complete(3)}, {complete_swap(2), complete(4)},
            {complete_swap(3), complete(4)}, {cycle_reflection(5), complete(3)}, {cycle_reflection(5), complete(4)},
            {paper_gamma1(), complete(3)}, {paper_gamma2(), complete(3)}, {Z2Graph(cycle(4), Assignment{1, 0, 3, 2}), cycle(5)}};
        for (const auto & [z, g] : cases) {
            REQUIRE(z.is_flipping());
            auto p = induced_involution(z, enumerate_hom(z.graph(), g));
            const auto & inv = *p.involution();
            for (std::size_t i = 0; i < p.size(); ++i) {
                CHECK(inv[i] != i);
                CHECK(inv[inv[i]] == i);
                CHECK_FALSE(p.leq(i, inv[i]));
            }
        }
    }

    TEST_CASE("components and the comparability oracle")
    {
        auto tk3 = enumerate_hom(paper_t(), complete(3));
        auto parts = components(tk3);
        CHECK(parts.count == 4);
        CHECK(parts.label == components_by_comparability(tk3).label);
        auto f = paper_f();
        CHECK(same_component(tk3, parts, f.image, paper_f_gamma2().image));
        CHECK(same_component(tk3, parts, f.image, f.image));

        auto k3k3 = enumerate_hom(complete(3), complete(3));
        auto isolated = components(k3k3);
        CHECK(isolated.count == 6);
        CHECK_FALSE(same_component(k3k3, isolated, Assignment{0, 1, 2}, Assignment{1, 0, 2}));
        CHECK_THROWS_AS((void) same_component(k3k3, isolated, Assignment{0, 0, 2}, Assignment{1, 0, 2}), InputError);

        std::mt19937 rng(5);
        for (int trial = 0; trial < 60; ++trial) {
            auto g = oracle::random_graph(rng, 1 + rng() % 5, 0.5);
            auto h = oracle::random_graph(rng, 2 + rng() % 3, 0.7, trial % 4 == 0);
            auto p = enumerate_hom(g, h);
            if (p.size() > 2000)
                continue;
            CHECK(components(p).label == components_by_comparability(p).label);
        }
    }

    TEST_CASE("induced maps")
    {
        auto k3 = complete(3);
        auto tk3 = enumerate_hom(paper_t(), k3);
        auto c5k3 = enumerate_hom(cycle(5), k3);

        GraphMap identity{paper_t(), paper_t(), Assignment{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}};
        auto id_star = induced_map(identity, tk3, tk3);
        for (std::size_t i = 0; i < id_star.size(); ++i)
            CHECK(id_star[i] == i);

        auto phi = search_equivariant_map(cycle_reflection(5), paper_gamma1());
        REQUIRE(phi);
        auto phi_star = induced_map(*phi, tk3, c5k3);
        CHECK(is_order_preserving(tk3, c5k3, phi_star));

        auto tk3_inv = induced_involution(paper_gamma1(), tk3);
        auto c5k3_inv = induced_involution(cycle_reflection(5), c5k3);
        for (std::size_t i = 0; i < tk3.size(); ++i)
            CHECK(phi_star[(*tk3_inv.involution())[i]] == (*c5k3_inv.involution())[phi_star[i]]);

        CHECK_THROWS_AS((void) induced_map(*phi, c5k3, tk3), InputError);
    }

    TEST_CASE("retract identity on Hom(K2, G)")
    {
        auto w = find_retraction_to_edge(cycle(4));
        REQUIRE(w);
        for (const auto & g : {complete(2), complete(3), cycle(5)}) {
            auto hk2 = enumerate_hom(complete(2), g);
            auto ht = enumerate_hom(cycle(4), g);
            auto r_star = induced_map(w->retraction, hk2, ht);
            auto i_star = induced_map(w->inclusion, ht, hk2);
            for (std::size_t k = 0; k < hk2.size(); ++k)
                CHECK(i_star[r_star[k]] == k);
        }
    }

    TEST_CASE("find_path")
    {
        auto t = paper_t();
        auto k3 = complete(3);
        auto path = find_path(t, k3, paper_f().image, paper_f_gamma2().image);
        REQUIRE(path);
        CHECK(path->moves() <= 15);
        CHECK(path->moves() == 15);
        CHECK(path->colourings.size() == path->moves() + 1);
        CHECK(verify_certificate(*path).valid);
        CHECK(path->colourings.front() == paper_f().image);
        CHECK(path->colourings.back() == paper_f_gamma2().image);

        auto id = Assignment{0, 1, 2};
        auto same = find_path(k3, k3, id, id);
        REQUIRE(same);
        CHECK(same->moves() == 0);
        CHECK(same->colourings.size() == 1);

        CHECK_FALSE(find_path(k3, k3, id, Assignment{1, 0, 2}));
        CHECK_THROWS_AS((void) find_path(k3, k3, Assignment{0, 0, 1}, id), InputError);
    }

    TEST_CASE("find_path certificates always verify")
    {
        std::mt19937 rng(17);
        for (int trial = 0; trial < 40; ++trial) {
            auto g = oracle::random_graph(rng, 2 + rng() % 5, 0.4);
            auto h = complete(3 + rng() % 2);
            auto p = enumerate_hom(g, h);
            if (p.atoms().size() < 2)
                continue;
            auto a = p.atom_map(p.atoms()[rng() % p.atoms().size()]);
            auto b = p.atom_map(p.atoms()[rng() % p.atoms().size()]);
            auto path = find_path(g, h, a, b);
            if (path) {
                CHECK(verify_certificate(*path).valid);
                // Recolouring connectivity implies poset connectivity.
                CHECK(same_component(p, components(p), a, b));
            }
        }
    }

    TEST_CASE("verify_certificate diagnostics")
    {
        auto cert = paper_path_certificate();
        CHECK(cert.colourings.size() == 16);
        CHECK(cert.moves() == 15);
        auto ok = verify_certificate(cert);
        CHECK(ok.valid);

        auto two_step = cert;
        two_step.colourings.erase(two_step.colourings.begin() + 5);
        auto bad = verify_certificate(two_step);
        CHECK_FALSE(bad.valid);
        CHECK(bad.index == 5);

        auto improper = cert;
        improper.colourings[7][0] = improper.colourings[7][1];
        auto worse = verify_certificate(improper);
        CHECK_FALSE(worse.valid);
        CHECK(worse.index == 7);

        auto repeated = cert;
        repeated.colourings.insert(repeated.colourings.begin() + 3, repeated.colourings[3]);
        CHECK(verify_certificate(repeated).valid);

        auto out_of_range = cert;
        out_of_range.colourings[2][4] = 7;
        CHECK_THROWS_AS((void) verify_certificate(out_of_range), InputError);
    }
}
