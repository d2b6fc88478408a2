// Acceptance suite runner: executes every release criterion at its pinned
// tolerance and prints one pass/fail line per criterion. `--only N` runs a
// single criterion (used by the per-criterion ctest entries).

#include "rydnet/acceptance.hpp"

#include <cstdlib>
#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
    using namespace rydnet::acceptance;
    try {
        if (argc == 3 && std::strcmp(argv[1], "--only") == 0) {
            const int id = std::atoi(argv[2]);
            if (id < 1 || id > kCriterionCount) {
                std::cerr << "criterion id must be 1.." << kCriterionCount << "\n";
                return 2;
            }
            return report(std::cout, {run_criterion(id)}) ? 0 : 1;
        }
        if (argc != 1) {
            std::cerr << "usage: " << argv[0] << " [--only N]\n";
            return 2;
        }
        return report(std::cout, run_all()) ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "acceptance: unexpected error: " << e.what() << "\n";
        return 2;
    }
}
