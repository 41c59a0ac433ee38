#pragma once

#include <chrono>
#include <cstdint>

namespace cubic {

// Node-count plus wall-clock cap for the exact searches. A capped run is
// reported as budget_exceeded, never conflated with a completed search.
struct Budget {
    std::uint64_t max_nodes = 10'000'000;
    std::uint64_t max_millis = 0;  // 0 = no time limit

    static Budget unlimited() { return Budget{UINT64_MAX, 0}; }
};

enum class SearchStatus {
    found,            // object found (witness / optimum)
    exhausted,        // full space searched, nothing found (refutation)
    budget_exceeded,  // stopped early; result inconclusive
};

class BudgetMeter {
public:
    explicit BudgetMeter(const Budget& b)
        : budget_(b), start_(std::chrono::steady_clock::now()) {}

    // Counts one search node; returns false once the budget is blown.
    bool tick() {
        if (++nodes_ > budget_.max_nodes) return false;
        if (budget_.max_millis && (nodes_ & 0xFFF) == 0) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start_)
                          .count();
            if (static_cast<std::uint64_t>(ms) > budget_.max_millis) return false;
        }
        return true;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    Budget budget_;
    std::uint64_t nodes_ = 0;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace cubic
