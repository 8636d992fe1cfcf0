#pragma once

#include <string>
#include <vector>

namespace wpalg {

struct CheckResult {
    std::string id;
    bool pass;
    std::string detail;
};

enum class Suite { Quivers, Yoneda, Koszul, Groebner, Tate, All };

Suite suite_from_string(const std::string& s);

/// Runs the selected checks for one p. `max_degree` bounds the per-degree
/// comparisons (Yoneda growth, Hilbert product); growth analyses extend
/// further internally where the method requires longer sequences.
std::vector<CheckResult> run_suite(int p, Suite suite, int max_degree);

}  // namespace wpalg
