#ifndef HOMLAB_BOUNDS_HH
#define HOMLAB_BOUNDS_HH

#include <homlab/ext_int.hh>
#include <homlab/graph.hh>
#include <homlab/hom.hh>
#include <homlab/topology.hh>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homlab
{
    enum class Verdict
    {
        holds,
        violated,
        inconclusive
    };

    [[nodiscard]] auto to_string(Verdict v) -> std::string;

    struct ReportLabels
    {
        std::string test_graph = "T";
        std::string involution;
        std::string target = "G";
    };

    /// Outcome of checking chi(G) >= invariant(Hom(T, G)) + chi(T) on one instance.
    struct BoundReport
    {
        ReportLabels labels;
        ExtInt chi_target;
        ExtInt chi_test;
        /// "height" or "conn".
        std::string invariant;
        ExtInt value;
        /// The true invariant is at least `value` (component-method heights).
        bool lower_bound = false;
        /// False for connectivity values that rest on vanishing homology alone.
        bool exact = true;
        std::string method;
        std::size_t hom_size = 0;
        Verdict status = Verdict::inconclusive;
        std::optional<std::string> witness;
    };

    struct BoundOptions
    {
        /// nullopt selects the full method up to full_method_max_elements poset elements.
        std::optional<HeightMethod> method;
        std::size_t full_method_max_elements = 2000;
        std::size_t max_elements = default_max_elements;
        std::size_t max_chains = default_max_chains;
    };

    /// Stiefel-Whitney bound. Violations are reported only on exact or
    /// lower-bound evidence; a component-method "at least 1" that does not
    /// produce a violation yields inconclusive. Throws InputError unless the
    /// involution is flipping and G is loopless.
    [[nodiscard]] auto check_swt_bound(const Z2Graph & test, const Graph & target, const BoundOptions & options = {},
        ReportLabels labels = {}) -> BoundReport;

    /// Connectivity bound using conn_proxy. Without allow_heuristic only the
    /// exact values -inf, -1, 0 decide the verdict. Heuristic values are upper
    /// bounds on connectivity, so they may confirm holds but never a violation.
    [[nodiscard]] auto check_ht_bound(const Graph & test, const Graph & target, bool allow_heuristic,
        const BoundOptions & options = {}, ReportLabels labels = {}) -> BoundReport;

    struct SuiteEntry
    {
        std::string target;
        std::optional<BoundReport> report;
        std::string error;
    };

    /// check_swt_bound over a family with automatic method selection. Errors
    /// are recorded per entry.
    [[nodiscard]] auto bound_suite(const Z2Graph & test, const std::vector<std::pair<std::string, Graph>> & family,
        const BoundOptions & options = {}, const std::string & test_label = "T", const std::string & involution_label = "gamma")
        -> std::vector<SuiteEntry>;

    /// One representative per isomorphism class of connected loopless graphs
    /// on 1..max_vertices vertices, vertices named "1".."n".
    [[nodiscard]] auto connected_graphs(unsigned max_vertices) -> std::vector<Graph>;

    /// Stable identifier from the edge list under sorted vertex names.
    [[nodiscard]] auto graph_identifier(const Graph & g) -> std::string;

    struct StageResult
    {
        int stage = 0;
        std::string name;
        bool passed = false;
        std::string detail;
    };

    struct PipelineReport
    {
        std::string pipeline;
        bool passed = false;
        std::vector<StageResult> stages;

        [[nodiscard]] auto failed_stage() const -> std::optional<int>;
    };

    struct Theorem2Config
    {
        PathCertificate certificate;
        GraphMap start;
        Z2Graph violating;
        Z2Graph contrast;
        Z2Graph probe;

        /// Bundled certificate, paper_f, gamma2 as the violating involution,
        /// gamma1 as the contrast and the reflected 5-cycle as the probe.
        static auto defaults() -> Theorem2Config;
    };

    /// Five stages, stopping at the first failure:
    ///   1. the certificate is valid and runs from f to f o gamma2;
    ///   2. its endpoints share a component of Hom(T, K3);
    ///   3. under the violating involution the endpoint is f o gamma, some
    ///      component is invariant and chi(K3) < height + chi(T);
    ///   4. an equivariant map probe -> (T, contrast) exists with equal chromatic numbers;
    ///   5. no component is invariant under the contrast involution.
    [[nodiscard]] auto theorem2_pipeline(const Theorem2Config & config = Theorem2Config::defaults()) -> PipelineReport;

    struct RetractCheck
    {
        std::string target;
        std::size_t hom_edge_size = 0;
        std::size_t hom_test_size = 0;
        bool identity = false;
        bool order_preserving = false;
    };

    struct Theorem1Report
    {
        RetractionWitness witness;
        std::vector<RetractCheck> checks;
        bool passed = false;
    };

    /// For each suite graph G, checks that i* o r* is the identity on
    /// Hom(K2, G) and that both induced maps preserve order. Throws
    /// InputError unless chi(T) = 2.
    [[nodiscard]] auto theorem1_pipeline(const Graph & test, const std::vector<std::pair<std::string, Graph>> & suite,
        std::size_t max_elements = default_max_elements) -> Theorem1Report;

    [[nodiscard]] auto is_order_preserving(const HomPoset & from, const HomPoset & into, const std::vector<std::size_t> & map)
        -> bool;
}

#endif
