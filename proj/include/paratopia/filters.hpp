#pragma once

#include <set>
#include <string>
#include <vector>

#include "paratopia/perms.hpp"

namespace paratopia {

// One candidate conjugacy class in standard (12) form: the pair of cycle
// structures (cs of the combined row/column permutation, cs of gamma).
struct StandardCase12 {
    int n = 0;
    CycleStructure beta_cs, gamma_cs;
};

// Standard (123) form: only cs of gamma matters.
struct StandardCase123 {
    int n = 0;
    CycleStructure gamma_cs;
};

enum class FilterVerdict { Excluded, DefinitelyAdmitted, Undecided };

struct FilterReport {
    FilterVerdict verdict = FilterVerdict::Undecided;
    std::string rule;         // first failing rule, or the deciding characterization
    std::string certificate;  // human-readable reason
    std::vector<std::string> rules_run;
    // every exclusion rule whose condition is violated, independent of order
    std::vector<std::string> violated;
};

// Ablation switch; a disabled rule is neither run nor counted.
class RuleMask {
public:
    RuleMask& disable(const std::string& rule) {
        disabled_.insert(rule);
        return *this;
    }
    bool enabled(const std::string& rule) const { return !disabled_.count(rule); }

private:
    std::set<std::string> disabled_;
};

// Exclusion rules R1..R8 in cost order, then the complete characterizations.
// Excluded with the first failing rule; DefinitelyAdmitted when a
// characterization decides positively; Undecided otherwise. A case both
// excluded by a rule and admitted by a characterization is a hard internal
// error (std::logic_error).
FilterReport filters_12(const StandardCase12& c, const RuleMask& mask = {});
FilterReport filters_123(const StandardCase123& c, const RuleMask& mask = {});

// Just the characterization layer (rule ids CHAR-*).
FilterReport decide_characterized_12(const StandardCase12& c);
FilterReport decide_characterized_123(const StandardCase123& c);

// lcm compatibility of a triple's cycle lengths (rows a, columns b, symbol c).
bool lcm_compatible_12(long long a, long long b, long long c);
bool lcm_compatible_123(long long a, long long b, long long c);

// {"verdict": "excluded|admitted|undecided", "rule": .., "certificate": ..,
//  "rules_run": [..]}
std::string filter_report_json(const FilterReport& report);

const std::vector<std::string>& all_rule_ids_12();
const std::vector<std::string>& all_rule_ids_123();

}  // namespace paratopia
