#ifndef CENTERFOCUS_BUDGET_HPP
#define CENTERFOCUS_BUDGET_HPP

#include <atomic>
#include <chrono>
#include <stdexcept>

namespace cf {

class budget_exceeded : public std::runtime_error {
public:
    budget_exceeded() : std::runtime_error("time budget exceeded") {}
};

// Process-wide wall-clock deadline polled by the long-running loops
// (elimination, series matching, probes). Unset means unlimited.
class Budget {
public:
    using clock = std::chrono::steady_clock;

    static void set_seconds(double seconds) {
        const auto d = std::chrono::duration_cast<clock::duration>(std::chrono::duration<double>(seconds));
        deadline().store((clock::now() + d).time_since_epoch().count());
    }

    static void clear() { deadline().store(0); }

    static void check() {
        const auto dl = deadline().load(std::memory_order_relaxed);
        if (dl != 0 && clock::now().time_since_epoch().count() > dl) throw budget_exceeded();
    }

private:
    static std::atomic<clock::rep>& deadline() {
        static std::atomic<clock::rep> d{0};
        return d;
    }
};

}  // namespace cf

#endif  // CENTERFOCUS_BUDGET_HPP
