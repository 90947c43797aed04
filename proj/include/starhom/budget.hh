/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STARHOM_GUARD_BUDGET_HH
#define STARHOM_GUARD_BUDGET_HH 1

#include <chrono>
#include <optional>

namespace starhom
{
    /**
     * Installs a wall-clock limit for searches run on this thread. Nested
     * deadlines keep the earlier one.
     */
    class ScopedDeadline
    {
        private:
            std::optional<std::chrono::steady_clock::time_point> _previous;

        public:
            explicit ScopedDeadline(std::chrono::milliseconds limit);
            explicit ScopedDeadline(std::optional<std::chrono::steady_clock::time_point> at);
            ~ScopedDeadline();

            ScopedDeadline(const ScopedDeadline &) = delete;
            auto operator= (const ScopedDeadline &) -> ScopedDeadline & = delete;
    };

    auto current_deadline() -> std::optional<std::chrono::steady_clock::time_point>;

    // cheap; throws budget_exceeded once the deadline has passed
    auto check_deadline() -> void;
}

#endif
