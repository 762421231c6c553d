#pragma once

#include <string>
#include <vector>

namespace hirz {

class Workspace;

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;  // failure reason, or a one-line summary of what ran
};

// Fast end-to-end exercises of every module against independently computed
// values.  Stops at the first failure; the last entry of the result names it.
std::vector<CheckResult> run_self_checks();

// Consistency of the contexts stored in a workspace (surface chi(O) against
// the Noether value, curve chi against genus).
std::vector<CheckResult> run_workspace_checks(const Workspace& ws);

}  // namespace hirz
