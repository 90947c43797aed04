/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <starhom/budget.hh>
#include <starhom/graph.hh>

using std::chrono::steady_clock;

namespace starhom
{
    namespace
    {
        thread_local std::optional<steady_clock::time_point> deadline;
        thread_local unsigned ticks = 0;
    }

    ScopedDeadline::ScopedDeadline(std::chrono::milliseconds limit) :
        _previous(deadline)
    {
        auto at = steady_clock::now() + limit;
        if (! deadline || at < *deadline)
            deadline = at;
    }

    ScopedDeadline::ScopedDeadline(std::optional<steady_clock::time_point> at) :
        _previous(deadline)
    {
        if (at && (! deadline || *at < *deadline))
            deadline = at;
    }

    ScopedDeadline::~ScopedDeadline()
    {
        deadline = _previous;
    }

    auto current_deadline() -> std::optional<steady_clock::time_point>
    {
        return deadline;
    }

    auto check_deadline() -> void
    {
        if (! deadline || (++ticks & 0x3ff) != 0)
            return;
        if (steady_clock::now() > *deadline)
            throw Error(ErrorKind::budget_exceeded, "time limit reached");
    }
}
