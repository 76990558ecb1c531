#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace rsq {

/// One validation clause: measured metric against its threshold.
struct ClauseResult {
    std::string id;
    std::string name;
    double metric = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::string detail;
};

struct CriterionResult {
    int number = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::vector<ClauseResult> clauses;
};

enum class ValidationScale { Full, Quick };

struct ValidationOptions {
    std::uint64_t seed = 20250801;
    unsigned workers = 1;
    ValidationScale scale = ValidationScale::Quick;
    /// Replaces the threshold of the clause with the given id (testing hook
    /// for the forced-failure fixture).
    std::map<std::string, double> tolerance_overrides;
    /// Restrict to these criterion numbers (empty = all).
    std::vector<int> only;
};

std::vector<CriterionResult> run_validation(const ValidationOptions& opt);

/// Machine-readable verdict (schema: {version, seed, scale, all_pass,
/// criteria:[{number,name,pass,seconds,clauses:[...]}]}).
std::string validation_report_json(const std::vector<CriterionResult>& results,
                                   const ValidationOptions& opt);

bool validation_all_pass(const std::vector<CriterionResult>& results);

} // namespace rsq
