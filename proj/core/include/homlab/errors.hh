#ifndef HOMLAB_ERRORS_HH
#define HOMLAB_ERRORS_HH

#include <stdexcept>
#include <string>

namespace homlab
{
    /// Malformed or inconsistent input: undeclared vertices, bad files, violated preconditions.
    class InputError : public std::runtime_error
    {
    public:
        explicit InputError(const std::string & what) : std::runtime_error(what) {}
    };

    /// A configured size guard was exceeded. Results are never silently truncated.
    class ResourceError : public std::runtime_error
    {
    public:
        explicit ResourceError(const std::string & what) : std::runtime_error(what) {}
    };

    /// An internal invariant failed to hold on a concrete instance.
    class InvariantError : public std::logic_error
    {
    public:
        explicit InvariantError(const std::string & what) : std::logic_error(what) {}
    };
}

#endif
