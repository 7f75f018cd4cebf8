#include <homlab/builtins.hh>
#include <homlab/errors.hh>

#include <charconv>
#include <regex>

using std::optional;
using std::pair;
using std::string;
using std::vector;

namespace homlab
{
    namespace
    {
        auto numbered(unsigned n) -> vector<string>
        {
            vector<string> names;
            for (unsigned i = 1; i <= n; ++i)
                names.push_back(std::to_string(i));
            return names;
        }

        auto parse_unsigned(const string & s) -> unsigned
        {
            unsigned value = 0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
            if (ec != std::errc{} || ptr != s.data() + s.size())
                throw InputError("bad numeric parameter '" + s + "'");
            return value;
        }

        const vector<string> paper_t_vertices{"a", "b", "c", "d", "e", "a'", "b'", "c'", "d'", "e'"};
    }

    auto complete(unsigned n) -> Graph
    {
        vector<pair<VertexIndex, VertexIndex>> edges;
        for (VertexIndex i = 0; i < n; ++i)
            for (VertexIndex j = i + 1; j < n; ++j)
                edges.emplace_back(i, j);
        return Graph::from_indices(numbered(n), edges);
    }

    auto cycle(unsigned n) -> Graph
    {
        if (n < 3)
            throw InputError("cycles need at least 3 vertices");
        vector<pair<VertexIndex, VertexIndex>> edges;
        for (VertexIndex i = 0; i < n; ++i)
            edges.emplace_back(i, (i + 1) % n);
        return Graph::from_indices(numbered(n), edges);
    }

    auto complete_swap(unsigned n) -> Z2Graph
    {
        if (n < 2)
            throw InputError("the swap involution needs at least 2 vertices");
        Assignment inv(n);
        for (VertexIndex i = 0; i < n; ++i)
            inv[i] = i;
        std::swap(inv[0], inv[1]);
        return Z2Graph{complete(n), std::move(inv)};
    }

    auto cycle_reflection(unsigned n) -> Z2Graph
    {
        Assignment inv(n);
        for (VertexIndex i = 0; i < n; ++i)
            inv[i] = (n - i) % n;
        return Z2Graph{cycle(n), std::move(inv)};
    }

    auto paper_t() -> Graph
    {
        return Graph{paper_t_vertices,
            {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "a"},
                {"a'", "b'"}, {"b'", "c'"}, {"c'", "d'"}, {"d'", "e'"}, {"e'", "a'"},
                {"a", "a'"}}};
    }

    auto paper_gamma1() -> Z2Graph
    {
        return Z2Graph::from_names(paper_t(),
            {{"a", "a"}, {"b", "e"}, {"c", "d"}, {"d", "c"}, {"e", "b"},
                {"a'", "a'"}, {"b'", "e'"}, {"c'", "d'"}, {"d'", "c'"}, {"e'", "b'"}});
    }

    auto paper_gamma2() -> Z2Graph
    {
        NamedAssignment inv;
        for (const auto * x : {"a", "b", "c", "d", "e"}) {
            inv.emplace(x, string{x} + "'");
            inv.emplace(string{x} + "'", x);
        }
        return Z2Graph::from_names(paper_t(), inv);
    }

    auto paper_f() -> GraphMap
    {
        return GraphMap::from_names(paper_t(), complete(3),
            {{"a", "1"}, {"b", "2"}, {"c", "3"}, {"d", "2"}, {"e", "3"},
                {"a'", "2"}, {"b'", "3"}, {"c'", "1"}, {"d'", "3"}, {"e'", "1"}});
    }

    auto paper_f_gamma2() -> GraphMap
    {
        auto f = paper_f();
        auto gamma = paper_gamma2();
        f.image = compose(f.image, gamma.involution());
        return f;
    }

    auto paper_path_certificate() -> PathCertificate
    {
        // One string per panel; digit k is the colour of vertex k in the order a..e, a'..e'.
        static const vector<string> panels{
            "1232323131",
            "1231323131",
            "1231223131",
            "3231223131",
            "3231223121",
            "3231223123",
            "3231213123",
            "3231212123",
            "3231212323",
            "3131212323",
            "3121212323",
            "3123212323",
            "3123112323",
            "2123112323",
            "2323112323",
            "2313112323",
        };
        PathCertificate certificate{paper_t(), complete(3), {}};
        for (const auto & panel : panels) {
            Assignment colouring;
            for (char c : panel)
                colouring.push_back(static_cast<VertexIndex>(c - '1'));
            certificate.colourings.push_back(std::move(colouring));
        }
        return certificate;
    }

    auto find_builtin(const string & name) -> optional<Builtin>
    {
        if (name == "paper_T")
            return paper_t();
        if (name == "gamma1" || name == "paper_gamma1")
            return paper_gamma1();
        if (name == "gamma2" || name == "paper_gamma2")
            return paper_gamma2();
        if (name == "paper_f")
            return paper_f();
        if (name == "paper_f_gamma2")
            return paper_f_gamma2();

        static const std::regex short_form{R"(([KC])(\d+)(_swap|_reflection)?)"};
        static const std::regex long_form{R"((complete|cycle)\((\d+)\))"};
        std::smatch m;
        if (std::regex_match(name, m, short_form)) {
            auto n = parse_unsigned(m[2]);
            bool is_complete = m[1] == "K";
            string suffix = m[3];
            if (suffix.empty())
                return is_complete ? complete(n) : cycle(n);
            if (is_complete && suffix == "_swap")
                return complete_swap(n);
            if (! is_complete && suffix == "_reflection")
                return cycle_reflection(n);
            return std::nullopt;
        }
        if (std::regex_match(name, m, long_form)) {
            auto n = parse_unsigned(m[2]);
            return m[1] == "complete" ? complete(n) : cycle(n);
        }
        return std::nullopt;
    }

    auto builtin(const string & name) -> Builtin
    {
        auto b = find_builtin(name);
        if (! b)
            throw InputError("unknown built-in '" + name + "'");
        return *b;
    }
}
