#include "cli.hh"

#include <homlab/bounds.hh>
#include <homlab/builtins.hh>
#include <homlab/errors.hh>
#include <homlab/io.hh>
#include <homlab/topology.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using std::string;
using std::vector;
using nlohmann::ordered_json;

namespace homlab::cli
{
    namespace
    {
        auto max_elements_from_env() -> std::size_t
        {
            const char * raw = std::getenv("HOMLAB_MAX_ELEMENTS");
            if (! raw || ! *raw)
                return default_max_elements;
            char * end = nullptr;
            auto value = std::strtoull(raw, &end, 10);
            if (*end != '\0' || value == 0)
                throw InputError("HOMLAB_MAX_ELEMENTS must be a positive integer, got '" + string{raw} + "'");
            return value;
        }

        auto parse_json(const string & text) -> ordered_json { return ordered_json::parse(text); }

        auto ext(const ExtInt & x) -> ordered_json
        {
            if (x.is_finite())
                return x.value();
            return x.to_string();
        }

        auto describe(const Graph & g, const Graph & h, const Assignment & image) -> string
        {
            string s;
            for (VertexIndex v = 0; v < g.size(); ++v) {
                if (v)
                    s += ' ';
                s += g.name(v) + "=" + h.name(image[v]);
            }
            return s;
        }

        auto assignment_json(const Graph & g, const Graph & h, const Assignment & image) -> ordered_json
        {
            return parse_json(io::map_to_json(GraphMap{g, h, image}))["assignment"];
        }

        auto split(const string & list) -> vector<string>
        {
            vector<string> parts;
            std::stringstream in{list};
            for (string item; std::getline(in, item, ',');)
                if (! item.empty())
                    parts.push_back(item);
            return parts;
        }

        auto bound_line(const BoundReport & r) -> string
        {
            std::ostringstream s;
            auto value = (r.lower_bound ? ">= " : "") + r.value.to_string();
            s << r.invariant << "(Hom(" << r.labels.test_graph << ", " << r.labels.target << ")) " << value << " ["
              << r.method << (r.exact ? "" : ", heuristic") << "]; chi(" << r.labels.target
              << ") = " << r.chi_target.to_string() << ", chi(" << r.labels.test_graph << ") = " << r.chi_test.to_string()
              << ": " << to_string(r.status);
            if (r.witness)
                s << "\nwitness: " << *r.witness;
            return s.str();
        }

        auto verdict_code(Verdict v) -> int { return v == Verdict::holds ? ok : negative; }

        auto parse_method(const string & name) -> std::optional<HeightMethod>
        {
            if (name == "auto")
                return std::nullopt;
            if (name == "full")
                return HeightMethod::full;
            return HeightMethod::component;
        }

        auto default_certificate() -> PathCertificate
        {
#ifdef HOMLAB_DATA_DIR
            std::filesystem::path bundled{HOMLAB_DATA_DIR};
            bundled /= "fig3_path.json";
            if (std::filesystem::exists(bundled))
                return io::load_certificate(bundled);
#endif
            return paper_path_certificate();
        }
    }

    auto run(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Hom complexes of graphs, Stiefel-Whitney heights and test-graph bounds"};
        app.fallthrough();
        app.require_subcommand(1);
        bool json = false;
        app.add_flag("--json", json, "Machine-readable output");

        std::function<int()> action;
        auto bind = [&](CLI::App * sub, std::function<int()> body) { sub->callback([&action, body] { action = body; }); };

        // chrom
        string graph_arg;
        auto * chrom = app.add_subcommand("chrom", "Chromatic number");
        chrom->add_option("graph", graph_arg, "Graph name or file")->required();
        bind(chrom, [&] {
            auto g = io::resolve_graph(graph_arg);
            auto chi = chromatic_number(g);
            if (json)
                out << ordered_json{{"graph", graph_arg}, {"chromatic_number", ext(chi)}}.dump() << '\n';
            else
                out << chi.to_string() << '\n';
            return ok;
        });

        // maps
        string source_arg, target_arg;
        bool count_only = false;
        auto * maps = app.add_subcommand("maps", "List graph maps G -> H");
        maps->add_option("G", source_arg)->required();
        maps->add_option("H", target_arg)->required();
        maps->add_flag("--count", count_only, "Print only the number of maps");
        bind(maps, [&] {
            auto g = io::resolve_graph(source_arg);
            auto h = io::resolve_graph(target_arg);
            std::size_t count = 0;
            for_each_graph_map(g, h, [&](const Assignment & a) {
                ++count;
                if (! count_only)
                    out << (json ? assignment_json(g, h, a).dump() : describe(g, h, a)) << '\n';
                return true;
            });
            if (count_only)
                out << (json ? ordered_json{{"count", count}}.dump() : std::to_string(count)) << '\n';
            return count > 0 ? ok : negative;
        });

        // hom
        bool size_only = false, list_components = false;
        string export_path;
        auto * hom = app.add_subcommand("hom", "Build the Hom poset");
        hom->add_option("G", source_arg)->required();
        hom->add_option("H", target_arg)->required();
        auto * size_flag = hom->add_flag("--size", size_only, "Print only the number of elements");
        hom->add_flag("--components", list_components, "List connected components")->excludes(size_flag);
        hom->add_option("--export", export_path, "Write the order complex as JSON to this path");
        bind(hom, [&] {
            auto poset = enumerate_hom(io::resolve_graph(source_arg), io::resolve_graph(target_arg), max_elements_from_env());
            if (! export_path.empty()) {
                std::ofstream file{export_path};
                if (! file)
                    throw InputError("cannot write '" + export_path + "'");
                file << io::complex_to_json(order_complex(poset)) << '\n';
            }
            if (size_only) {
                out << (json ? ordered_json{{"size", poset.size()}}.dump() : std::to_string(poset.size())) << '\n';
                return ok;
            }
            auto parts = components(poset);
            vector<std::size_t> sizes(parts.count, 0), atoms(parts.count, 0);
            for (std::size_t i = 0; i < poset.size(); ++i)
                ++sizes[parts.label[i]];
            for (auto a : poset.atoms())
                ++atoms[parts.label[a]];
            if (json) {
                ordered_json j{{"size", poset.size()}, {"atoms", poset.atoms().size()}, {"components", parts.count}};
                if (list_components) {
                    j["component_sizes"] = sizes;
                    j["component_atoms"] = atoms;
                }
                out << j.dump() << '\n';
            }
            else if (list_components) {
                for (std::size_t c = 0; c < parts.count; ++c)
                    out << "component " << c << ": " << sizes[c] << " elements, " << atoms[c] << " atoms\n";
            }
            else
                out << "elements " << poset.size() << "\natoms " << poset.atoms().size() << "\ncomponents "
                    << parts.count << '\n';
            return ok;
        });

        // height
        string involution_arg, method_arg = "auto";
        auto * height = app.add_subcommand("height", "Stiefel-Whitney height of Hom(T, G)");
        height->add_option("T", source_arg)->required();
        height->add_option("inv", involution_arg)->required();
        height->add_option("G", target_arg)->required();
        auto method_choice = CLI::IsMember({"auto", "full", "component"});
        height->add_option("--method", method_arg, "full, component, or auto")->check(method_choice);
        bind(height, [&] {
            auto t = io::resolve_graph(source_arg);
            auto z = io::resolve_involution(involution_arg, t);
            auto poset = induced_involution(z, enumerate_hom(t, io::resolve_graph(target_arg), max_elements_from_env()));
            auto method = parse_method(method_arg)
                              .value_or(poset.size() <= BoundOptions{}.full_method_max_elements ? HeightMethod::full
                                                                                                 : HeightMethod::component);
            auto h = sw_height(poset, method);
            if (json)
                out << ordered_json{{"value", ext(h.value)}, {"lower_bound", h.lower_bound},
                           {"method", to_string(h.method)}}.dump()
                    << '\n';
            else
                out << (h.lower_bound ? ">= " : "") << h.value.to_string() << '\n';
            return ok;
        });

        // betti
        bool reduced = false;
        auto * betti = app.add_subcommand("betti", "Mod-2 Betti numbers of the order complex of Hom(G, H)");
        betti->add_option("G", source_arg)->required();
        betti->add_option("H", target_arg)->required();
        betti->add_flag("--reduced", reduced, "Reduced Betti numbers");
        bind(betti, [&] {
            auto complex = order_complex(
                enumerate_hom(io::resolve_graph(source_arg), io::resolve_graph(target_arg), max_elements_from_env()));
            auto numbers = reduced ? reduced_betti_mod2(complex) : betti_mod2(complex);
            if (json)
                out << ordered_json{{"betti", numbers}}.dump() << '\n';
            else {
                for (std::size_t i = 0; i < numbers.size(); ++i)
                    out << (i ? " " : "") << numbers[i];
                out << '\n';
            }
            return ok;
        });

        // verify-cert
        string cert_arg;
        auto * verify = app.add_subcommand("verify-cert", "Check a single-vertex-move path certificate");
        verify->add_option("cert", cert_arg, "Certificate file")->required();
        bind(verify, [&] {
            auto cert = io::load_certificate(cert_arg);
            auto check = verify_certificate(cert);
            if (json) {
                ordered_json j{{"valid", check.valid}, {"colorings", cert.colourings.size()}};
                if (check.valid)
                    j["moves"] = cert.moves();
                else {
                    j["index"] = check.index;
                    j["reason"] = check.reason;
                }
                out << j.dump() << '\n';
            }
            else if (check.valid)
                out << "valid: " << cert.colourings.size() << " colourings, " << cert.moves() << " single-vertex moves\n";
            else
                out << "invalid at index " << check.index << ": " << check.reason << '\n';
            return check.valid ? ok : negative;
        });

        // find-path
        string from_arg, to_arg;
        auto * find = app.add_subcommand("find-path", "Shortest single-vertex-move path between two colourings");
        find->add_option("G", source_arg)->required();
        find->add_option("H", target_arg)->required();
        find->add_option("from", from_arg, "Map name or file")->required();
        find->add_option("to", to_arg, "Map name or file")->required();
        bind(find, [&] {
            auto g = io::resolve_graph(source_arg);
            auto h = io::resolve_graph(target_arg);
            auto from = io::resolve_map(from_arg);
            auto to = io::resolve_map(to_arg);
            for (const auto * f : {&from, &to})
                if (! (f->source == g) || ! (f->target == h))
                    throw InputError("endpoint maps must go from " + source_arg + " to " + target_arg);
            auto path = find_path(g, h, from.image, to.image);
            if (! path) {
                if (json)
                    out << "null\n";
                else
                    out << "no path\n";
                return negative;
            }
            if (json)
                out << io::certificate_to_json(*path) << '\n';
            else {
                for (const auto & c : path->colourings)
                    out << describe(g, h, c) << '\n';
                out << path->moves() << " moves\n";
            }
            return ok;
        });

        // eqmap
        string second_graph_arg, second_involution_arg;
        auto * eqmap = app.add_subcommand("eqmap", "Search for an equivariant graph map (T1, inv1) -> (T2, inv2)");
        eqmap->add_option("T1", source_arg)->required();
        eqmap->add_option("inv1", involution_arg)->required();
        eqmap->add_option("T2", second_graph_arg)->required();
        eqmap->add_option("inv2", second_involution_arg)->required();
        bind(eqmap, [&] {
            auto t1 = io::resolve_graph(source_arg);
            auto t2 = io::resolve_graph(second_graph_arg);
            auto phi = search_equivariant_map(
                io::resolve_involution(involution_arg, t1), io::resolve_involution(second_involution_arg, t2));
            if (json)
                out << (phi ? assignment_json(t1, t2, phi->image).dump() : "null") << '\n';
            else
                out << (phi ? describe(t1, t2, phi->image) : "none") << '\n';
            return phi ? ok : negative;
        });

        auto options = [&] {
            BoundOptions o;
            o.method = parse_method(method_arg);
            o.max_elements = max_elements_from_env();
            return o;
        };

        // check-swt
        auto * swt = app.add_subcommand("check-swt", "Check chi(G) >= height(Hom(T, G)) + chi(T)");
        swt->add_option("T", source_arg)->required();
        swt->add_option("inv", involution_arg)->required();
        swt->add_option("G", target_arg)->required();
        swt->add_option("--method", method_arg, "full, component, or auto")->check(method_choice);
        bind(swt, [&] {
            auto t = io::resolve_graph(source_arg);
            auto report = check_swt_bound(io::resolve_involution(involution_arg, t), io::resolve_graph(target_arg),
                options(), {source_arg, involution_arg, target_arg});
            out << (json ? io::report_to_json(report) : bound_line(report)) << '\n';
            return verdict_code(report.status);
        });

        // check-ht
        bool heuristic = false;
        auto * ht = app.add_subcommand("check-ht", "Check chi(G) >= conn(Hom(T, G)) + chi(T)");
        ht->add_option("T", source_arg)->required();
        ht->add_option("G", target_arg)->required();
        ht->add_flag("--heuristic", heuristic, "Let homological connectivity values decide the verdict");
        bind(ht, [&] {
            auto report = check_ht_bound(io::resolve_graph(source_arg), io::resolve_graph(target_arg), heuristic,
                options(), {source_arg, "", target_arg});
            out << (json ? io::report_to_json(report) : bound_line(report)) << '\n';
            return verdict_code(report.status);
        });

        // bound-suite
        unsigned max_vertices = 5;
        string family_arg;
        bool summary = false;
        auto * suite = app.add_subcommand("bound-suite", "Stiefel-Whitney bound over a family of graphs");
        suite->add_option("T", source_arg)->required();
        suite->add_option("inv", involution_arg)->required();
        auto * family_opt = suite->add_option("--family", family_arg, "Comma-separated graph names or files");
        suite->add_option("--max-vertices", max_vertices, "All connected graphs up to this size")
            ->check(CLI::Range(1, 7))
            ->excludes(family_opt);
        suite->add_flag("--summary", summary, "Human-readable table instead of JSON lines");
        bind(suite, [&] {
            auto t = io::resolve_graph(source_arg);
            auto z = io::resolve_involution(involution_arg, t);
            vector<std::pair<string, Graph>> family;
            if (! family_arg.empty())
                for (const auto & name : split(family_arg))
                    family.emplace_back(name, io::resolve_graph(name));
            else
                for (const auto & g : connected_graphs(max_vertices))
                    family.emplace_back(graph_identifier(g), g);
            auto o = options();
            auto entries = bound_suite(z, family, o, source_arg, involution_arg);
            std::size_t violations = 0;
            for (const auto & e : entries)
                if (e.report && e.report->status == Verdict::violated)
                    ++violations;
            if (summary) {
                out << std::left << std::setw(24) << "target" << std::setw(8) << "chi" << std::setw(10) << "height"
                    << std::setw(11) << "method" << "status\n";
                for (const auto & e : entries) {
                    out << std::setw(24) << e.target;
                    if (! e.report) {
                        out << "error: " << e.error << '\n';
                        continue;
                    }
                    const auto & r = *e.report;
                    out << std::setw(8) << r.chi_target.to_string() << std::setw(10)
                        << ((r.lower_bound ? ">=" : "") + r.value.to_string()) << std::setw(11) << r.method
                        << to_string(r.status) << '\n';
                }
                out << entries.size() << " graphs, " << violations << " violations\n";
            }
            else
                for (const auto & e : entries) {
                    if (e.report)
                        out << io::report_to_json(*e.report) << '\n';
                    else
                        out << ordered_json{{"target", e.target}, {"error", e.error}}.dump() << '\n';
                }
            return violations == 0 ? ok : negative;
        });

        // paper
        auto * paper = app.add_subcommand("paper", "Reproduce the test-graph results");
        paper->require_subcommand(1);
        string suite_arg = "K2,K3,C5";
        auto * theorem1 = paper->add_subcommand("theorem1", "Retract identity for a graph of chromatic number 2");
        theorem1->add_option("graph", graph_arg)->required();
        theorem1->add_option("--suite", suite_arg, "Comma-separated target graphs");
        bind(theorem1, [&] {
            vector<std::pair<string, Graph>> targets;
            for (const auto & name : split(suite_arg))
                targets.emplace_back(name, io::resolve_graph(name));
            auto report = theorem1_pipeline(io::resolve_graph(graph_arg), targets, max_elements_from_env());
            if (json)
                out << io::theorem1_to_json(report) << '\n';
            else {
                const auto & w = report.witness;
                out << "retraction onto the edge "
                    << w.inclusion.target.name(w.inclusion.image[0]) << "-" << w.inclusion.target.name(w.inclusion.image[1])
                    << ": " << describe(w.retraction.source, w.retraction.target, w.retraction.image) << '\n';
                for (const auto & c : report.checks)
                    out << c.target << ": |Hom(K2,G)| = " << c.hom_edge_size << ", |Hom(T,G)| = " << c.hom_test_size
                        << ", i* o r* = id " << (c.identity ? "yes" : "no") << ", order preserving "
                        << (c.order_preserving ? "yes" : "no") << '\n';
                out << (report.passed ? "PASS" : "FAIL") << '\n';
            }
            return report.passed ? ok : negative;
        });

        string violating_arg, contrast_arg;
        auto * theorem2 = paper->add_subcommand("theorem2", "Five-stage reproduction of the (T, gamma2) counterexample");
        theorem2->add_option("--certificate", cert_arg, "Path certificate (default: bundled)");
        theorem2->add_option("--violating", violating_arg, "Involution expected to violate the bound (default gamma2)");
        theorem2->add_option("--contrast", contrast_arg, "Involution expected to satisfy it (default gamma1)");
        bind(theorem2, [&] {
            auto config = Theorem2Config::defaults();
            config.certificate = cert_arg.empty() ? default_certificate() : io::load_certificate(cert_arg);
            auto t = paper_t();
            if (! violating_arg.empty())
                config.violating = io::resolve_involution(violating_arg, t);
            if (! contrast_arg.empty())
                config.contrast = io::resolve_involution(contrast_arg, t);
            auto report = theorem2_pipeline(config);
            if (json)
                out << io::pipeline_to_json(report) << '\n';
            else {
                for (const auto & s : report.stages)
                    out << "stage " << s.stage << " (" << s.name << "): " << (s.passed ? "pass" : "FAIL") << " - "
                        << s.detail << '\n';
                out << (report.passed ? "PASS" : "FAIL") << '\n';
            }
            return report.passed ? ok : negative;
        });

        try {
            app.parse(argc, argv);
        }
        catch (const CLI::ParseError & e) {
            int code = app.exit(e, out, err);
            return code == 0 ? ok : usage_error;
        }

        try {
            return action();
        }
        catch (const ResourceError & e) {
            err << "resource limit: " << e.what() << '\n';
            return resource_error;
        }
        catch (const std::exception & e) {
            err << "error: " << e.what() << '\n';
            return usage_error;
        }
    }
}
