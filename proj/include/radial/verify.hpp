#ifndef RADIAL_VERIFY_HPP
#define RADIAL_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

namespace radial {

struct CriterionResult {
    bool pass = false;
    std::string details;
};

struct Criterion {
    std::string id;
    std::string title;
    std::function<CriterionResult()> run;
};

// The full verification suite, ordered by id. Every check pins its expected
// values and tolerances in code.
const std::vector<Criterion>& acceptance_criteria();

// Runs every criterion, printing one PASS/FAIL line per criterion to the
// stream-like callback; returns true when all pass.
bool run_acceptance(const std::function<void(const std::string&)>& emit);

} // namespace radial

#endif
