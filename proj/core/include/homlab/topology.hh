#ifndef HOMLAB_TOPOLOGY_HH
#define HOMLAB_TOPOLOGY_HH

#include <homlab/complex.hh>
#include <homlab/ext_int.hh>
#include <homlab/gf2.hh>
#include <homlab/hom.hh>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace homlab
{
    /// A degree-d cochain, one value per d-simplex.
    struct CocycleClass
    {
        std::size_t degree = 0;
        Cochain values;

        auto operator==(const CocycleClass &) const -> bool = default;
    };

    /// Base of a free double cover together with its first Stiefel-Whitney cocycle.
    struct DoubleCoverQuotient
    {
        OrderedDeltaComplex base;
        CocycleClass w1;
        /// Quotient vertex of each cover vertex.
        std::vector<std::uint32_t> vertex_orbit;
        /// Chosen lift of each quotient vertex.
        std::vector<std::uint32_t> section;
    };

    /// Quotient of a simplicial complex by a free, order-preserving involution
    /// on its vertices. Quotient vertices and simplices are numbered by their
    /// lowest-indexed lift. The w1 representative takes value 1 on an edge
    /// when the lift starting at the chosen lift of its first vertex ends away
    /// from the chosen lift of its last vertex. `section` picks one lift per
    /// orbit (in orbit order); by default the lower-indexed one.
    ///
    /// Throws InputError if the involution is not an order-preserving simplicial
    /// involution or some simplex meets its image.
    [[nodiscard]] auto quotient_with_w1(const OrderedDeltaComplex & cover, const std::vector<std::uint32_t> & involution,
        const std::optional<std::vector<std::uint32_t>> & section = std::nullopt) -> DoubleCoverQuotient;

    [[nodiscard]] auto betti_mod2(const OrderedDeltaComplex & complex) -> std::vector<std::size_t>;

    /// Reduced Betti numbers in degrees 0..dim; empty for the empty complex.
    [[nodiscard]] auto reduced_betti_mod2(const OrderedDeltaComplex & complex) -> std::vector<std::size_t>;

    [[nodiscard]] auto coboundary(const OrderedDeltaComplex & complex, const CocycleClass & c) -> CocycleClass;

    /// z^n by the front-face/back-face product: on [v0..vn] the product of z
    /// over the edges [v(i-1), v(i)]. Degree beyond the dimension yields the
    /// zero class. Throws InvariantError if the result is not a cocycle.
    [[nodiscard]] auto cup_power(const OrderedDeltaComplex & complex, const CocycleClass & z, std::size_t n)
        -> CocycleClass;

    [[nodiscard]] auto is_coboundary(const OrderedDeltaComplex & complex, const CocycleClass & c) -> bool;

    enum class HeightMethod
    {
        full,
        component
    };

    [[nodiscard]] auto to_string(HeightMethod m) -> std::string;

    struct HeightResult
    {
        ExtInt value;
        /// Only the component method sets this: the true height is at least `value`.
        bool lower_bound = false;
        HeightMethod method = HeightMethod::full;
    };

    /// Largest n with w1^n nonzero on the quotient of the order complex.
    /// The component method decides only -inf / 0 / at-least-1, by testing
    /// for a component mapped onto itself. Throws InputError without an
    /// involution; the full method throws ResourceError past max_chains.
    [[nodiscard]] auto sw_height(const HomPoset & poset, HeightMethod method,
        std::size_t max_chains = default_max_chains) -> HeightResult;

    struct ConnectivityProxy
    {
        ExtInt value;
        /// False when value >= 1: vanishing homology does not decide simple connectivity.
        bool exact = true;
    };

    /// Largest n with reduced mod-2 homology vanishing through degree n;
    /// -inf for the empty complex, +inf when all reduced homology vanishes.
    [[nodiscard]] auto conn_proxy(const OrderedDeltaComplex & complex) -> ConnectivityProxy;
}

#endif
