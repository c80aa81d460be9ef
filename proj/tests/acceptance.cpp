// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Usage: riesz_acceptance [criterion]   (1-7; all when omitted)
#include <cstdlib>
#include <iostream>
#include <string>

#include "riesz/check.hpp"

int main(int argc, char** argv) {
    using namespace riesz::check;
    Options opt;
    opt.corpus = load_corpus(RIESZ_CORPUS_DIR);
    if (opt.corpus.empty()) {
        std::cerr << "no corpus files found in " << RIESZ_CORPUS_DIR << "\n";
        return 1;
    }
    if (const char* seed = std::getenv("RIESZ_SEED")) opt.seed = static_cast<std::uint32_t>(std::strtoul(seed, nullptr, 10));

    using Criterion = Outcome (*)(const Options&);
    const Criterion all[] = {lattice_laws, linear_bounded, counterexample, normalization,
                             c00_suite,    finite_dimensional, parser_round_trip};
    const int only = argc > 1 ? std::stoi(argv[1]) : 0;
    if (only < 0 || only > 7) {
        std::cerr << "criterion must be between 1 and 7\n";
        return 1;
    }
    bool ok = true;
    for (int k = 1; k <= 7; ++k) {
        if (only != 0 && k != only) continue;
        const Outcome o = all[k - 1](opt);
        std::cout << format(o) << std::endl;
        ok = ok && o.passed;
    }
    return ok ? 0 : 1;
}
