#pragma once

#include <chrono>
#include <exception>
#include <string>

#include "riesz/check.hpp"

namespace riesz::check {

/// Counts checks and keeps the first failure for the report.
class Tally {
public:
    Tally(int criterion, std::string title, double limit_seconds)
        : start_(std::chrono::steady_clock::now()) {
        out_.criterion = criterion;
        out_.title = std::move(title);
        out_.limit_seconds = limit_seconds;
    }

    template <typename Describe>
    void check(bool ok, Describe&& describe) {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (first_failure_.empty()) first_failure_ = describe();
    }

    /// Runs `body`, recording an escaped exception as a failure of `context`.
    template <typename Body, typename Context>
    void guard(Body&& body, Context&& context) {
        try {
            body();
        } catch (const std::exception& e) {
            check(false, [&] { return context() + ": " + e.what(); });
        }
    }

    Outcome finish(const std::string& summary) {
        out_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        const bool in_time = out_.seconds <= out_.limit_seconds;
        out_.passed = failures_ == 0 && in_time;
        if (failures_ > 0)
            out_.detail = std::to_string(failures_) + " of " + std::to_string(checks_) + " checks failed; first: " +
                          first_failure_;
        else if (!in_time)
            out_.detail = "over the time limit; " + summary;
        else
            out_.detail = summary + ", " + std::to_string(checks_) + " checks";
        return out_;
    }

private:
    Outcome out_;
    std::chrono::steady_clock::time_point start_;
    long checks_ = 0;
    long failures_ = 0;
    std::string first_failure_;
};

} // namespace riesz::check
