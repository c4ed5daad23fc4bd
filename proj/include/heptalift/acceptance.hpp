#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace heptalift
{

struct CriterionResult
{
    int id = 0;
    std::string name;
    bool ok = false;     ///< the check itself held
    bool in_time = true; ///< finished within the limit
    double seconds = 0;
    double limit = 0;
    std::string detail;

    bool passed() const { return ok && in_time; }
};

struct Criterion
{
    int id;
    std::string name;
    double limit_seconds;
    /// returns a short detail line; throws or returns ok = false on failure
    std::function<bool(std::string&)> run;
};

/// The twelve acceptance criteria with their pinned time limits.
const std::vector<Criterion>& acceptance_criteria();

/// Runs all criteria (or those in `only`), printing one PASS/FAIL line each
/// to `log` when non-null.
std::vector<CriterionResult> run_acceptance(std::FILE* log, const std::vector<int>& only = {});

nlohmann::json to_json(const CriterionResult& r);

} // namespace heptalift
