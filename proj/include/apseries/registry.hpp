#pragma once

#include <map>
#include <string>
#include <vector>

namespace apseries {

// One verified sample of an identity: both sides at the given parameters,
// engine-estimated errors, and the pass/fail decision against the pinned
// tolerance.  Numeric fields are decimal strings so reports serialize
// without precision loss.
struct VerificationReport {
    std::string id;
    std::string params;
    std::string lhs;
    std::string rhs;
    std::string abs_diff;
    std::string lhs_err;
    std::string rhs_err;
    std::string tolerance;
    std::string lhs_method;
    std::string rhs_method;
    std::string status;  // pass | fail | tolerance_not_reached
    long terms_used = 0;
    long precision_bits = 0;
    double wall_time_ms = 0.0;
};

// key=value overrides narrowing a case to a single sample (e.g. r=3, x=1/4)
using ParamMap = std::map<std::string, std::string>;

struct IdentityCase {
    std::string id;
    std::string title;
    std::string params_doc;       // what the default grid sweeps
    std::string default_tolerance;
    std::vector<VerificationReport> (*run)(const ParamMap& params, long precision_bits);
};

const std::vector<IdentityCase>& identity_cases();
const IdentityCase* find_case(const std::string& id);

struct SuiteOptions {
    std::vector<std::string> ids;  // empty -> every registered case
    int jobs = 1;
    long precision_bits = 256;
};

// Runs the selected cases (optionally on a thread pool); reports are
// returned in registry order regardless of scheduling.
std::vector<VerificationReport> run_suite(const SuiteOptions& opt);

// 0 all pass, 1 any fail, otherwise 2 if anything missed its tolerance
int exit_code_for(const std::vector<VerificationReport>& reports);

std::string format_json(const std::vector<VerificationReport>& reports);
std::string format_csv(const std::vector<VerificationReport>& reports);
std::string format_text(const std::vector<VerificationReport>& reports);

}  // namespace apseries
