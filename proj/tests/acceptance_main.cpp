// Prints one line per acceptance criterion; exit status 0 only when every selected one passes.
//
//   acceptance                 all criteria
//   acceptance --criterion 5   one criterion
//   acceptance --verbose       also the per-check lines

#include <hyperladder/acceptance.hpp>

#include <CLI11.hpp>

#include <cstdio>

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    int criterion = 0;
    bool verbose = false;
    app.add_option("--criterion", criterion, "run a single criterion")->check(CLI::Range(1, hyperladder::kCriterionCount));
    app.add_flag("--verbose,-v", verbose, "print every sub-check");
    CLI11_PARSE(app, argc, argv);

    bool all = true;
    for (int id = 1; id <= hyperladder::kCriterionCount; ++id) {
        if (criterion != 0 && id != criterion) continue;
        const auto r = hyperladder::run_criterion(id);
        all = all && r.passed;
        std::printf("[%s] criterion %d: %s (%.2f s)\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds);
        for (const auto& line : r.lines)
            if (verbose || line.rfind("FAIL", 0) == 0) std::printf("    %s\n", line.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
