#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace riesz::check {

/// Result of one acceptance criterion.
struct Outcome {
    int criterion = 0;
    std::string title;
    bool passed = false;
    /// Counts on success, the first failure otherwise.
    std::string detail;
    double seconds = 0;
    double limit_seconds = 0;
};

struct Options {
    std::uint32_t seed = 20240611;
    /// (file name, contents) of definition files checked by the parser criterion.
    std::vector<std::pair<std::string, std::string>> corpus;
};

/// Every *.rz file in `dir`, sorted by name.
std::vector<std::pair<std::string, std::string>> load_corpus(const std::filesystem::path& dir);

Outcome lattice_laws(const Options& opt);
Outcome linear_bounded(const Options& opt);
Outcome counterexample(const Options& opt);
Outcome normalization(const Options& opt);
Outcome c00_suite(const Options& opt);
Outcome finite_dimensional(const Options& opt);
Outcome parser_round_trip(const Options& opt);

std::vector<Outcome> run_all(const Options& opt);

/// "PASS 3 counterexample reproduction (12.1 s / 120 s): ..."
std::string format(const Outcome& o);

} // namespace riesz::check
