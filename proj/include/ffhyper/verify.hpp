#pragma once

#include <string>
#include <vector>

namespace ffh {

enum class CheckStatus { Pass, Warn, Fail };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

std::vector<CheckResult> verify_fields(int threads = 1);
std::vector<CheckResult> verify_identities(int threads = 1);
std::vector<CheckResult> verify_schoof(int threads = 1);
std::vector<CheckResult> verify_eichler(int threads = 1);
std::vector<CheckResult> verify_rc(int threads = 1);
std::vector<CheckResult> verify_clausen(int threads = 1);
std::vector<CheckResult> verify_suite(const std::string& suite,
                                      int threads = 1);

// true iff no Fail (Warn allowed)
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace ffh
