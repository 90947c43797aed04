/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STARHOM_GUARD_CLI_HH
#define STARHOM_GUARD_CLI_HH 1

#include <iosfwd>
#include <string>
#include <vector>

namespace starhom::cli
{
    inline constexpr int exit_found = 0;
    inline constexpr int exit_absent = 1;
    inline constexpr int exit_usage = 2;

    // args excludes the program name
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
