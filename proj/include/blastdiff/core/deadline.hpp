#pragma once

#include <chrono>
#include <string_view>

#include <fmt/format.h>

#include "blastdiff/core/error.hpp"

namespace blastdiff {

/// Cooperative time limit. A default-constructed deadline never expires.
class Deadline {
public:
    using Clock = std::chrono::steady_clock;

    Deadline() = default;
    /// Non-positive `seconds` means no limit.
    static Deadline after(double seconds) {
        Deadline d;
        if (seconds > 0.0) {
            d.limited_ = true;
            d.seconds_ = seconds;
            d.end_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
        }
        return d;
    }

    bool limited() const { return limited_; }
    bool expired() const { return limited_ && Clock::now() >= end_; }
    void check(std::string_view what) const {
        if (expired()) throw TimeoutError(fmt::format("{}: exceeded time limit of {} s", what, seconds_));
    }

private:
    bool limited_ = false;
    double seconds_ = 0.0;
    Clock::time_point end_{};
};

}  // namespace blastdiff
