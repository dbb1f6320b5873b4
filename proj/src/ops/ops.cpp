#include "autsys/ops.hpp"

#include "autsys/error.hpp"
#include "autsys/kernels.hpp"

namespace autsys {
namespace {

void require_inside(const AutonomousSystem& system, Subset c)
{
    if (!c.subset_of(system.ground()))
        throw Error(ErrorKind::ElementOutside, "operand reaches outside the ground");
}

} // namespace

AutonomousSystem contraction(const AutonomousSystem& system, Subset c)
{
    require_inside(system, c);
    if (c.empty())
        return system;
    // Packing out C's bits yields the trace A−C over the remaining indices.
    std::vector<Subset> traces(system.family().size());
    kernels::compress(system.family(), c, traces);
    return AutonomousSystem(AutonomousSystem::Trusted{}, system.names(system.ground() - c), std::move(traces));
}

AutonomousSystem deletion(const AutonomousSystem& system, Subset c)
{
    require_inside(system, c);
    if (c.empty())
        return system;
    std::vector<Subset> kept;
    for (Subset m : system.family())
        if (!m.intersects(c))
            kept.push_back(m);
    std::vector<Subset> packed(kept.size());
    kernels::compress(kept, c, packed);
    return AutonomousSystem(AutonomousSystem::Trusted{}, system.names(system.ground() - c), std::move(packed));
}

AutonomousSystem restrict_to(const AutonomousSystem& system, Subset x)
{
    require_inside(system, x);
    return contraction(system, system.ground() - x);
}

AutonomousSystem dot(const AutonomousSystem& system, Subset x)
{
    require_inside(system, x);
    return deletion(system, system.ground() - x);
}

const char* to_string(StepKind kind) noexcept
{
    switch (kind) {
    case StepKind::Delete: return "delete";
    case StepKind::Contract: return "contract";
    case StepKind::Quotient: return "quotient";
    }
    return "unknown";
}

AutonomousSystem apply_step(const AutonomousSystem& system, const ReductionStep& step)
{
    switch (step.kind) {
    case StepKind::Delete:
        return deletion(system, step.operand);
    case StepKind::Contract:
        return contraction(system, step.operand);
    case StepKind::Quotient:
        if (!step.partition)
            throw Error(ErrorKind::MalformedPartition, "quotient step without a partition");
        return quotient_by_partition(system, *step.partition);
    }
    throw Error(ErrorKind::MalformedInput, "unknown step kind");
}

} // namespace autsys
