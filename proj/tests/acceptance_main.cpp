// Prints one PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
// Usage: acceptance [--json] [id ...]

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "primwords/acceptance.hpp"

namespace acc = primwords::acceptance;

int main(int argc, char** argv) {
    bool json = false;
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--json") {
            json = true;
            continue;
        }
        for (int id : acc::resolve_suite(arg)) {
            ids.push_back(id);
        }
    }
    if (ids.empty()) {
        ids = acc::resolve_suite("all");
    }
    const int threads = acc::parallel_thread_count();
    bool all = true;
    for (int id : ids) {
        const auto start = std::chrono::steady_clock::now();
        const auto r = acc::run_criterion(id, threads);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && r.passed;
        std::printf("%s %2d %-20s (%.1fs)\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), secs);
        if (json || !r.passed) {
            std::cout << r.details.dump(2) << "\n";
        }
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
