#pragma once

#include "autsys/quotient.hpp"
#include "autsys/system.hpp"

namespace autsys {

/// P/C: ground P−C, family of traces A−C.
AutonomousSystem contraction(const AutonomousSystem& system, Subset c);

/// P\C: ground P−C, members of P disjoint from C.
AutonomousSystem deletion(const AutonomousSystem& system, Subset c);

/// P|X = contraction(P, ground − X).
AutonomousSystem restrict_to(const AutonomousSystem& system, Subset x);

/// P.X = deletion(P, ground − X).
AutonomousSystem dot(const AutonomousSystem& system, Subset x);

enum class StepKind { Delete, Contract, Quotient };

const char* to_string(StepKind kind) noexcept;

/// One elementary reduction. `operand` is used by Delete/Contract and
/// `partition` by Quotient; both refer to the ground the step applies to.
struct ReductionStep {
    StepKind kind = StepKind::Delete;
    Subset operand;
    std::optional<Partition> partition;

    static ReductionStep remove(Subset c) { return {StepKind::Delete, c, std::nullopt}; }
    static ReductionStep contract(Subset c) { return {StepKind::Contract, c, std::nullopt}; }
    static ReductionStep quotient(Partition p) { return {StepKind::Quotient, Subset{}, std::move(p)}; }

    friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

/// Throws ElementOutside when the operand does not fit the system, and
/// MalformedPartition for a foreign partition.
AutonomousSystem apply_step(const AutonomousSystem& system, const ReductionStep& step);

} // namespace autsys
