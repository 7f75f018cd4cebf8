#ifndef HOMLAB_IO_HH
#define HOMLAB_IO_HH

#include <homlab/bounds.hh>
#include <homlab/complex.hh>
#include <homlab/graph.hh>
#include <homlab/hom.hh>
#include <homlab/topology.hh>

#include <filesystem>
#include <string>
#include <string_view>

namespace homlab::io
{
    // File formats. Vertex identifiers may be JSON strings or integers; a
    // <graph> field is either an inline graph object, a built-in name, or a
    // path resolved against the directory of the file that mentions it.
    //
    //   graph:       {"vertices": ["a", ...], "edges": [["a","b"], ...]}   (["v","v"] is a loop)
    //   involution:  {"graph": <graph>, "map": {"a": "a'", ...}}
    //   map:         {"source": <graph>, "target": <graph>, "assignment": {"a": "1", ...}}
    //   certificate: {"source": <graph>, "target": <graph>, "colorings": [{"a": 1, ...}, ...]}
    //
    // All of these throw InputError on malformed input.

    [[nodiscard]] auto read_file(const std::filesystem::path & path) -> std::string;

    [[nodiscard]] auto graph_from_json(std::string_view text) -> Graph;
    [[nodiscard]] auto graph_to_json(const Graph & g) -> std::string;

    /// Built-in name, or a path to a graph file.
    [[nodiscard]] auto resolve_graph(const std::string & name_or_path, const std::filesystem::path & base = {}) -> Graph;

    /// Built-in involution name or involution file. If the file names a graph
    /// it must equal `graph`; the map is always resolved against `graph`.
    [[nodiscard]] auto resolve_involution(const std::string & name_or_path, const Graph & graph,
        const std::filesystem::path & base = {}) -> Z2Graph;

    [[nodiscard]] auto involution_to_json(const Z2Graph & z, const std::string & graph_ref = {}) -> std::string;

    [[nodiscard]] auto resolve_map(const std::string & name_or_path, const std::filesystem::path & base = {}) -> GraphMap;
    [[nodiscard]] auto map_from_json(std::string_view text, const std::filesystem::path & base = {}) -> GraphMap;
    [[nodiscard]] auto map_to_json(const GraphMap & f) -> std::string;

    [[nodiscard]] auto certificate_from_json(std::string_view text, const std::filesystem::path & base = {})
        -> PathCertificate;
    [[nodiscard]] auto load_certificate(const std::filesystem::path & path) -> PathCertificate;

    /// Graphs are written inline so the output is self-contained.
    [[nodiscard]] auto certificate_to_json(const PathCertificate & c) -> std::string;

    /// {"dimension": d, "simplices": [[[v0], ...], [[v0, v1], ...], ...]}
    [[nodiscard]] auto complex_to_json(const OrderedDeltaComplex & complex) -> std::string;

    /// {"degree": d, "support": [indices of simplices with value 1]}
    [[nodiscard]] auto cochain_to_json(const CocycleClass & c) -> std::string;

    /// One line, no trailing newline.
    [[nodiscard]] auto report_to_json(const BoundReport & report) -> std::string;
    [[nodiscard]] auto pipeline_to_json(const PipelineReport & report) -> std::string;
    [[nodiscard]] auto theorem1_to_json(const Theorem1Report & report) -> std::string;
}

#endif
