#include "riesz/check.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace riesz::check {

std::vector<std::pair<std::string, std::string>> load_corpus(const std::filesystem::path& dir) {
    std::vector<std::pair<std::string, std::string>> out;
    if (!std::filesystem::is_directory(dir)) return out;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() != ".rz") continue;
        std::ifstream in(entry.path());
        std::ostringstream text;
        text << in.rdbuf();
        out.emplace_back(entry.path().filename().string(), text.str());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Outcome> run_all(const Options& opt) {
    return {lattice_laws(opt),   linear_bounded(opt),     counterexample(opt),   normalization(opt),
            c00_suite(opt),      finite_dimensional(opt), parser_round_trip(opt)};
}

std::string format(const Outcome& o) {
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", o.seconds, o.limit_seconds);
    return std::string(o.passed ? "PASS" : "FAIL") + " " + std::to_string(o.criterion) + " " + o.title + " (" +
           timing + "): " + o.detail;
}

} // namespace riesz::check
