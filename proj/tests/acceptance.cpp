// One line per acceptance criterion; exit status 1 if any fails.
#include "g2sc/random.hpp"
#include "g2sc/suites.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv) {
    std::uint64_t seed = g2sc::kDefaultSeed;
    if (argc > 1) seed = std::stoull(argv[1]);
    else if (const char* env = std::getenv("G2SC_SEED")) seed = std::stoull(env);
    std::printf("seed %llu\n", static_cast<unsigned long long>(seed));

    int failed = 0;
    for (int k = 1; k <= g2sc::kNumCriteria; ++k) {
        auto start = std::chrono::steady_clock::now();
        auto r = g2sc::acceptance_criterion(k, seed);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s criterion %2d: %s (%.2fs)\n", r.ok ? "PASS" : "FAIL", k, r.name.c_str(), secs);
        if (!r.ok) {
            ++failed;
            for (const auto& d : r.detail) std::printf("    %s\n", d.c_str());
        }
    }
    std::printf("%d of %d criteria passed\n", g2sc::kNumCriteria - failed, g2sc::kNumCriteria);
    return failed ? 1 : 0;
}
