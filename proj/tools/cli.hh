#ifndef HOMLAB_TOOLS_CLI_HH
#define HOMLAB_TOOLS_CLI_HH

#include <iosfwd>

namespace homlab::cli
{
    enum ExitCode
    {
        ok = 0,
        negative = 1,
        usage_error = 2,
        resource_error = 3
    };

    /// Runs one invocation. Results go to out, diagnostics to err.
    auto run(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int;
}

#endif
