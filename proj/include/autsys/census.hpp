#pragma once

// Property census over every small system: the acceptance criteria, each run
// exhaustively or on a seeded sample and reported as one pass/fail line.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "autsys/system.hpp"

namespace autsys::census {

struct Options {
    /// Largest ground of the exhaustive census.
    std::size_t max_n = 4;
    /// Random systems checked at n = 5 for the P4 criterion.
    std::size_t random_samples = 1000;
    std::uint64_t seed = 20100901;
};

struct Result {
    int id = 0;
    std::string title;
    bool passed = false;
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string detail; // first failure, if any
    double seconds = 0.0;
};

/// Every normalized system on 0..max_n elements.
std::vector<AutonomousSystem> systems(std::size_t max_n);

Result poset_characterization(const std::vector<AutonomousSystem>& census);
Result p3_extraction(const std::vector<AutonomousSystem>& census);
Result p4_theorem(const std::vector<AutonomousSystem>& census, const Options& options);
Result hex6_separation();
Result canonical_order_properties(const std::vector<AutonomousSystem>& census);
Result quotient_maximality(const std::vector<AutonomousSystem>& census);
Result join_least_upper_bound();
Result poset_round_trip(const std::vector<AutonomousSystem>& census);
Result fixture_checks();
Result enumerator_cross_validation();

/// Runs all ten criteria in order; `report` sees each result as it finishes.
std::vector<Result> run_all(const Options& options, const std::function<void(const Result&)>& report = {});

/// "[PASS] 1. title (checked N, 0 failures, 1.2 s)".
std::string format(const Result& result);

} // namespace autsys::census
