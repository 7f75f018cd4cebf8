#ifndef HOMLAB_BUILTINS_HH
#define HOMLAB_BUILTINS_HH

#include <homlab/graph.hh>
#include <homlab/hom.hh>

#include <optional>
#include <string>
#include <variant>

namespace homlab
{
    /// K_n on vertices "1".."n".
    [[nodiscard]] auto complete(unsigned n) -> Graph;

    /// C_n on vertices "1".."n" with edges i-(i+1) and n-1. Requires n >= 3.
    [[nodiscard]] auto cycle(unsigned n) -> Graph;

    /// K_n with the involution exchanging 1 and 2 and fixing the rest. Requires n >= 2.
    [[nodiscard]] auto complete_swap(unsigned n) -> Z2Graph;

    /// C_n with the reflection fixing vertex 1 (i -> n + 2 - i mod n).
    [[nodiscard]] auto cycle_reflection(unsigned n) -> Z2Graph;

    /// Two pentagons a-b-c-d-e-a and a'-b'-c'-d'-e'-a' joined by the bridge a-a'.
    [[nodiscard]] auto paper_t() -> Graph;

    /// Reflection through the axis along the bridge: fixes a, a' and swaps b<->e, c<->d on both sides.
    [[nodiscard]] auto paper_gamma1() -> Z2Graph;

    /// Reflection across the bridge: swaps x <-> x' for every letter.
    [[nodiscard]] auto paper_gamma2() -> Z2Graph;

    /// The proper 3-colouring T -> K3 used as the starting point of the path certificate.
    [[nodiscard]] auto paper_f() -> GraphMap;

    /// paper_f composed with gamma2; the endpoint of the path certificate.
    [[nodiscard]] auto paper_f_gamma2() -> GraphMap;

    /// The 16-colouring recolouring path from paper_f to paper_f o gamma2,
    /// transcribed panel by panel (left column downwards, then right column upwards).
    [[nodiscard]] auto paper_path_certificate() -> PathCertificate;

    using Builtin = std::variant<Graph, Z2Graph, GraphMap>;

    /// Recognised names: K<n>, C<n>, complete(n), cycle(n), paper_T, gamma1,
    /// gamma2, paper_gamma1, paper_gamma2, paper_f, paper_f_gamma2,
    /// K<n>_swap, C<n>_reflection. Returns nullopt for anything else.
    [[nodiscard]] auto find_builtin(const std::string & name) -> std::optional<Builtin>;

    /// As find_builtin, but throws InputError for an unknown name.
    [[nodiscard]] auto builtin(const std::string & name) -> Builtin;
}

#endif
