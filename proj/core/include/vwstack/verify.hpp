#ifndef VWSTACK_VERIFY_HPP
#define VWSTACK_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace vwstack {

inline constexpr int kCriterionCount = 11;
inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct VerifyOptions {
    std::uint64_t seed = kDefaultSeed;
    /// When nonzero, the library-side value of that criterion is corrupted
    /// before comparison, so the criterion must report FAIL.
    int perturb_criterion = 0;

    std::int64_t root_stack_order = 12;
    std::int64_t gerby_order = 8;
    std::int64_t eta_theta_order = 30;
    std::int64_t p112_emin = -20;
    std::int64_t theta_order = 16;
    std::int64_t gottsche_order = 50;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // may span several lines
    double seconds = 0;
};

CriterionResult run_criterion(int id, const VerifyOptions& options);
std::vector<CriterionResult> run_all(const VerifyOptions& options);

/// One "PASS|FAIL  id  name" line per criterion followed by indented detail
/// lines. Timings are appended only when requested, so the default report is
/// byte-identical across runs.
std::string report_table(const std::vector<CriterionResult>& results, bool with_timings = false);
std::string report_json(const std::vector<CriterionResult>& results, const VerifyOptions& options);

} // namespace vwstack

#endif
