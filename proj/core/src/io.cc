#include <homlab/builtins.hh>
#include <homlab/errors.hh>
#include <homlab/io.hh>

#include <json.hpp>

#include <bit>
#include <fstream>
#include <sstream>

using std::string;
using std::string_view;
using std::vector;
namespace fs = std::filesystem;

namespace homlab::io
{
    namespace
    {
        using nlohmann::json;
        using nlohmann::ordered_json;

        auto parse(string_view text) -> json
        {
            try {
                return json::parse(text);
            }
            catch (const json::exception & e) {
                throw InputError(string{"malformed JSON: "} + e.what());
            }
        }

        auto vertex_id(const json & j) -> string
        {
            if (j.is_string())
                return j.get<string>();
            if (j.is_number_integer())
                return std::to_string(j.get<long long>());
            throw InputError("vertex identifiers must be strings or integers, got " + j.dump());
        }

        /// Integers are written as JSON numbers so colour values read naturally.
        auto vertex_value(const string & name) -> ordered_json
        {
            bool numeric = ! name.empty() && name.size() < 18 && (name == "0" || name[0] != '0');
            for (char c : name)
                numeric = numeric && c >= '0' && c <= '9';
            if (numeric)
                return std::stoll(name);
            return name;
        }

        auto require(const json & j, const char * key) -> const json &
        {
            if (! j.is_object() || ! j.contains(key))
                throw InputError(string{"missing field '"} + key + "'");
            return j.at(key);
        }

        auto graph_from(const json & j) -> Graph
        {
            const auto & vertices = require(j, "vertices");
            const auto & edges = require(j, "edges");
            if (! vertices.is_array() || ! edges.is_array())
                throw InputError("'vertices' and 'edges' must be arrays");
            vector<string> names;
            for (const auto & v : vertices)
                names.push_back(vertex_id(v));
            vector<std::pair<string, string>> pairs;
            for (const auto & e : edges) {
                if (! e.is_array() || e.size() != 2)
                    throw InputError("each edge must be a pair of vertices");
                pairs.emplace_back(vertex_id(e[0]), vertex_id(e[1]));
            }
            return Graph{std::move(names), pairs};
        }

        auto graph_json(const Graph & g) -> ordered_json
        {
            ordered_json j;
            j["vertices"] = ordered_json::array();
            for (const auto & n : g.names())
                j["vertices"].push_back(n);
            j["edges"] = ordered_json::array();
            for (auto [u, v] : g.edges())
                j["edges"].push_back({g.name(u), g.name(v)});
            return j;
        }

        auto graph_field(const json & j, const fs::path & base) -> Graph
        {
            if (j.is_string())
                return resolve_graph(j.get<string>(), base);
            if (j.is_object())
                return graph_from(j);
            throw InputError("a graph must be a name, a path or an inline object");
        }

        auto named_assignment(const json & j) -> NamedAssignment
        {
            if (! j.is_object())
                throw InputError("an assignment must be an object");
            NamedAssignment result;
            for (const auto & [key, value] : j.items())
                result.emplace(key, vertex_id(value));
            return result;
        }

        auto assignment_json(const Graph & g, const Graph & h, const Assignment & image) -> ordered_json
        {
            ordered_json j = ordered_json::object();
            for (VertexIndex v = 0; v < g.size(); ++v)
                j[g.name(v)] = vertex_value(h.name(image[v]));
            return j;
        }

        auto locate(const string & name_or_path, const fs::path & base) -> fs::path
        {
            fs::path p{name_or_path};
            if (p.is_relative() && ! base.empty() && ! fs::exists(p))
                p = base / p;
            return p;
        }

        auto ext(const ExtInt & x) -> ordered_json
        {
            if (x.is_finite())
                return x.value();
            return x.to_string();
        }
    }

    auto read_file(const fs::path & path) -> string
    {
        std::ifstream in{path};
        if (! in)
            throw InputError("cannot read '" + path.string() + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    auto graph_from_json(string_view text) -> Graph
    {
        return graph_from(parse(text));
    }

    auto graph_to_json(const Graph & g) -> string
    {
        return graph_json(g).dump();
    }

    auto resolve_graph(const string & name_or_path, const fs::path & base) -> Graph
    {
        if (auto b = find_builtin(name_or_path)) {
            if (auto g = std::get_if<Graph>(&*b))
                return *g;
            throw InputError("built-in '" + name_or_path + "' is not a graph");
        }
        auto path = locate(name_or_path, base);
        if (! fs::exists(path))
            throw InputError("unknown graph '" + name_or_path + "'");
        return graph_from_json(read_file(path));
    }

    auto resolve_involution(const string & name_or_path, const Graph & graph, const fs::path & base) -> Z2Graph
    {
        if (auto b = find_builtin(name_or_path)) {
            auto z = std::get_if<Z2Graph>(&*b);
            if (! z)
                throw InputError("built-in '" + name_or_path + "' is not an involution");
            if (! (z->graph() == graph))
                throw InputError("involution '" + name_or_path + "' belongs to a different graph");
            return *z;
        }
        auto path = locate(name_or_path, base);
        if (! fs::exists(path))
            throw InputError("unknown involution '" + name_or_path + "'");
        auto j = parse(read_file(path));
        if (j.contains("graph")) {
            auto declared = graph_field(j.at("graph"), path.parent_path());
            if (! (declared == graph))
                throw InputError("involution file '" + name_or_path + "' belongs to a different graph");
        }
        return Z2Graph::from_names(graph, named_assignment(require(j, "map")));
    }

    auto involution_to_json(const Z2Graph & z, const string & graph_ref) -> string
    {
        ordered_json j;
        if (graph_ref.empty())
            j["graph"] = graph_json(z.graph());
        else
            j["graph"] = graph_ref;
        j["map"] = assignment_json(z.graph(), z.graph(), z.involution());
        return j.dump();
    }

    auto map_from_json(string_view text, const fs::path & base) -> GraphMap
    {
        auto j = parse(text);
        auto source = graph_field(require(j, "source"), base);
        auto target = graph_field(require(j, "target"), base);
        return GraphMap::from_names(std::move(source), std::move(target), named_assignment(require(j, "assignment")));
    }

    auto resolve_map(const string & name_or_path, const fs::path & base) -> GraphMap
    {
        if (auto b = find_builtin(name_or_path)) {
            if (auto f = std::get_if<GraphMap>(&*b))
                return *f;
            throw InputError("built-in '" + name_or_path + "' is not a graph map");
        }
        auto path = locate(name_or_path, base);
        if (! fs::exists(path))
            throw InputError("unknown map '" + name_or_path + "'");
        return map_from_json(read_file(path), path.parent_path());
    }

    auto map_to_json(const GraphMap & f) -> string
    {
        ordered_json j;
        j["source"] = graph_json(f.source);
        j["target"] = graph_json(f.target);
        j["assignment"] = assignment_json(f.source, f.target, f.image);
        return j.dump();
    }

    auto certificate_from_json(string_view text, const fs::path & base) -> PathCertificate
    {
        auto j = parse(text);
        PathCertificate c{graph_field(require(j, "source"), base), graph_field(require(j, "target"), base), {}};
        const auto & colourings = require(j, "colorings");
        if (! colourings.is_array())
            throw InputError("'colorings' must be an array");
        for (const auto & entry : colourings)
            c.colourings.push_back(resolve_assignment(named_assignment(entry), c.source, c.target));
        return c;
    }

    auto load_certificate(const fs::path & path) -> PathCertificate
    {
        return certificate_from_json(read_file(path), path.parent_path());
    }

    auto certificate_to_json(const PathCertificate & c) -> string
    {
        ordered_json j;
        j["source"] = graph_json(c.source);
        j["target"] = graph_json(c.target);
        j["colorings"] = ordered_json::array();
        for (const auto & colouring : c.colourings)
            j["colorings"].push_back(assignment_json(c.source, c.target, colouring));
        return j.dump();
    }

    auto complex_to_json(const OrderedDeltaComplex & complex) -> string
    {
        ordered_json j;
        j["dimension"] = complex.dimension();
        j["simplices"] = ordered_json::array();
        for (int d = 0; d <= complex.dimension(); ++d) {
            auto layer = ordered_json::array();
            for (const auto & cell : complex.cells(static_cast<std::size_t>(d)))
                layer.push_back(cell.vertices);
            j["simplices"].push_back(std::move(layer));
        }
        return j.dump();
    }

    auto cochain_to_json(const CocycleClass & c) -> string
    {
        ordered_json j;
        j["degree"] = c.degree;
        j["support"] = ordered_json::array();
        for (std::size_t i = 0; i < c.values.size(); ++i)
            if (c.values[i])
                j["support"].push_back(i);
        return j.dump();
    }

    auto report_to_json(const BoundReport & r) -> string
    {
        ordered_json j;
        j["test_graph"] = r.labels.test_graph;
        j["involution"] = r.labels.involution;
        j["target"] = r.labels.target;
        j["chi_target"] = ext(r.chi_target);
        j["chi_test"] = ext(r.chi_test);
        j["invariant"] = r.invariant;
        j["value"] = ext(r.value);
        j["lower_bound"] = r.lower_bound;
        j["exact"] = r.exact;
        j["method"] = r.method;
        j["hom_size"] = r.hom_size;
        j["status"] = to_string(r.status);
        j["witness"] = r.witness ? ordered_json(*r.witness) : ordered_json(nullptr);
        return j.dump();
    }

    auto pipeline_to_json(const PipelineReport & r) -> string
    {
        ordered_json j;
        j["pipeline"] = r.pipeline;
        j["passed"] = r.passed;
        j["stages"] = ordered_json::array();
        for (const auto & s : r.stages)
            j["stages"].push_back({{"stage", s.stage}, {"name", s.name}, {"passed", s.passed}, {"detail", s.detail}});
        if (auto f = r.failed_stage())
            j["failed_stage"] = *f;
        return j.dump();
    }

    auto theorem1_to_json(const Theorem1Report & r) -> string
    {
        ordered_json j;
        j["pipeline"] = "theorem1";
        j["passed"] = r.passed;
        j["inclusion"] = assignment_json(r.witness.inclusion.source, r.witness.inclusion.target, r.witness.inclusion.image);
        j["retraction"] =
            assignment_json(r.witness.retraction.source, r.witness.retraction.target, r.witness.retraction.image);
        j["checks"] = ordered_json::array();
        for (const auto & c : r.checks)
            j["checks"].push_back({{"target", c.target}, {"hom_edge_size", c.hom_edge_size},
                {"hom_test_size", c.hom_test_size}, {"identity", c.identity},
                {"order_preserving", c.order_preserving}});
        return j.dump();
    }
}
