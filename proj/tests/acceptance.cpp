/* Acceptance suite: runs every preset experiment at its pinned
 * parameters and tolerances and prints one pass/fail line per
 * criterion.  Exit status is nonzero if any criterion fails. */

#include "growthlab/experiments.hpp"

#include <cstdio>

int main()
{
    const auto& presets = growthlab::experiment_presets();
    int failures = 0;
    for (std::size_t i = 0; i < presets.size(); ++i) {
        growthlab::ExperimentReport rep;
        try {
            rep = growthlab::run_experiment(presets[i]);
        } catch (const std::exception& e) {
            std::printf("[%2zu/%zu] FAIL %-18s (exception: %s)\n", i + 1, presets.size(),
                        presets[i].c_str(), e.what());
            ++failures;
            continue;
        }
        std::printf("[%2zu/%zu] %s %-18s (%.2f s)\n", i + 1, presets.size(),
                    rep.pass() ? "PASS" : "FAIL", rep.preset.c_str(), rep.wall_seconds);
        for (const auto& a : rep.assertions)
            if (!a.pass || !rep.pass())
                std::printf("        %s %s%s\n", a.pass ? "ok  " : "FAIL", a.name.c_str(),
                            a.detail.empty() ? "" : ("  [" + a.detail + "]").c_str());
        if (!rep.pass())
            ++failures;
    }
    if (failures) {
        std::printf("%d criterion(s) failing\n", failures);
        return 1;
    }
    std::printf("all %zu criteria pass\n", presets.size());
    return 0;
}
