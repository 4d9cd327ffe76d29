#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace specht {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // deterministic summary or failure reason
};

/// Runs acceptance criteria 1..9 plus a seeded property spot-check,
/// printing one line per criterion as it completes.
std::vector<CriterionResult> run_acceptance_grid(std::ostream& out, uint64_t seed = 0);

/// Full selftest: the grid above, then the determinism criterion (the grid
/// is re-run silently and the two transcripts must be byte-identical).
std::vector<CriterionResult> run_selftest(std::ostream& out, uint64_t seed = 0);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace specht
