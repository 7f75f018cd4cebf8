#ifndef HOMLAB_EXT_INT_HH
#define HOMLAB_EXT_INT_HH

#include <compare>
#include <cstdint>
#include <string>

namespace homlab
{
    /// An integer extended by -infinity and +infinity. Used for chromatic
    /// numbers (+inf for looped graphs), heights and connectivity (-inf for
    /// empty spaces).
    class ExtInt
    {
    public:
        enum class Kind : std::uint8_t
        {
            NegInf,
            Finite,
            PosInf
        };

        constexpr ExtInt() = default;
        constexpr ExtInt(long long v) : _kind(Kind::Finite), _value(v) {}

        static constexpr auto neg_inf() -> ExtInt { return ExtInt{Kind::NegInf}; }
        static constexpr auto pos_inf() -> ExtInt { return ExtInt{Kind::PosInf}; }

        [[nodiscard]] constexpr auto kind() const -> Kind { return _kind; }
        [[nodiscard]] constexpr auto is_finite() const -> bool { return _kind == Kind::Finite; }
        [[nodiscard]] constexpr auto value() const -> long long { return _value; }

        constexpr auto operator<=>(const ExtInt & other) const -> std::strong_ordering
        {
            if (_kind != other._kind)
                return static_cast<int>(_kind) <=> static_cast<int>(other._kind);
            if (_kind == Kind::Finite)
                return _value <=> other._value;
            return std::strong_ordering::equal;
        }

        constexpr auto operator==(const ExtInt & other) const -> bool { return (*this <=> other) == 0; }

        /// Sum with the convention that -inf absorbs everything it meets
        /// except +inf, and the mixed case -inf + +inf is -inf.
        friend constexpr auto operator+(const ExtInt & a, const ExtInt & b) -> ExtInt
        {
            if (a._kind == Kind::NegInf || b._kind == Kind::NegInf)
                return neg_inf();
            if (a._kind == Kind::PosInf || b._kind == Kind::PosInf)
                return pos_inf();
            return ExtInt{a._value + b._value};
        }

        [[nodiscard]] auto to_string() const -> std::string
        {
            switch (_kind) {
            case Kind::NegInf: return "-inf";
            case Kind::PosInf: return "inf";
            case Kind::Finite: break;
            }
            return std::to_string(_value);
        }

    private:
        constexpr explicit ExtInt(Kind k) : _kind(k) {}

        Kind _kind = Kind::Finite;
        long long _value = 0;
    };
}

#endif
