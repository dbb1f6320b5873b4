#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "autsys/ops.hpp"
#include "autsys/order.hpp"
#include "autsys/system.hpp"

namespace autsys {

/// The n-point path on v1..vn whose members are unions of a prefix and a
/// suffix of the path. Throws InvalidN for n < 1 or n > 64.
AutonomousSystem p_n(int n);

/// A chain of reductions from `source`; `intermediates[i]` is the result of
/// `steps[i]`. `final_iso` maps the last system onto the target template.
struct WitnessSequence {
    AutonomousSystem source;
    std::vector<ReductionStep> steps;
    std::vector<AutonomousSystem> intermediates;
    Bijection final_iso;

    const AutonomousSystem& final_system() const { return intermediates.empty() ? source : intermediates.back(); }
    /// No quotient steps.
    bool is_subdot() const;
};

/// x <_A y and y <_B x.
struct BidirectionalPair {
    Element x;
    Element y;
    Subset a;
    Subset b;

    friend bool operator==(const BidirectionalPair&, const BidirectionalPair&) = default;
};

/// Same as is_poset(system).witness.
std::optional<NonIntersectingPair> find_nonintersecting_pair(const AutonomousSystem& system);

/// Builds a subdot isomorphic to P3 from members a, b whose intersection is
/// not a member. Throws PreconditionFailed otherwise.
WitnessSequence extract_p3(const AutonomousSystem& system, Subset a, Subset b);

/// First (x, y, A, B) in the scan x, y by index, then A, B in family order.
std::optional<BidirectionalPair> find_bidirectional_pair(const AutonomousSystem& system);

/// Builds an induced minor isomorphic to P4 (dotting, restricting, then one
/// four-cell quotient). Throws PreconditionFailed if the pair is not
/// bidirectional in `system`.
WitnessSequence extract_p4(const AutonomousSystem& system, const BidirectionalPair& pair);

struct SearchOptions {
    /// Largest source ground accepted.
    std::size_t bound = 6;
    /// Only allow quotients whose image has a nonempty member.
    bool require_induced = false;
};

/// Breadth-first search over single-element deletions and contractions,
/// memoized up to isomorphism. Throws SearchBoundExceeded.
std::optional<WitnessSequence> subdot_reachable(const AutonomousSystem& system, const AutonomousSystem& target,
                                                const SearchOptions& options = {});

/// As subdot_reachable, with quotient steps over every non-discrete partition.
std::optional<WitnessSequence> induced_minor(const AutonomousSystem& system, const AutonomousSystem& target,
                                             const SearchOptions& options = {});

/// Replays the steps comparing every intermediate, then checks the final
/// isomorphism onto `target`.
bool verify_witness(const WitnessSequence& witness, const AutonomousSystem& target);

} // namespace autsys
