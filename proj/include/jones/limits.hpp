#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>

namespace jones {

/// A solver hit a configured resource cap (time or cycle count).
class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input is outside the size an exhaustive oracle accepts.
class GuardExceeded : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Deadline {
public:
    using Clock = std::chrono::steady_clock;

    Deadline() = default;
    explicit Deadline(Clock::time_point at) : at_(at) {}
    static Deadline after(std::chrono::milliseconds ms) { return Deadline(Clock::now() + ms); }

    bool expired() const { return at_ && Clock::now() >= *at_; }
    void check() const {
        if (expired()) throw LimitExceeded("time limit exceeded");
    }

    /// Checks the clock only every 1024 calls.
    void poll(std::size_t &counter) const {
        if ((++counter & 1023) == 0) check();
    }

private:
    std::optional<Clock::time_point> at_;
};

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

struct SolverLimits {
    std::size_t cycle_cap = kDefaultCycleCap;
    Deadline deadline;
};

}  // namespace jones
