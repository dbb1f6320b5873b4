#include "autsys/minors.hpp"

#include <string>

#include "autsys/error.hpp"

namespace autsys {
namespace {

// Applies steps to a running system and records them.
class Tracer {
public:
    explicit Tracer(const AutonomousSystem& source) : witness_{source, {}, {}, {}} {}

    const AutonomousSystem& current() const { return witness_.final_system(); }

    /// Applies the step; returns the previous system for translating operands.
    /// Deleting or contracting nothing is skipped.
    AutonomousSystem apply(ReductionStep step)
    {
        AutonomousSystem before = current();
        if (step.kind != StepKind::Quotient && step.operand.empty())
            return before;
        AutonomousSystem after = apply_step(before, step);
        witness_.steps.push_back(std::move(step));
        witness_.intermediates.push_back(std::move(after));
        return before;
    }

    AutonomousSystem dot_to(Subset keep) { return apply(ReductionStep::remove(current().ground() - keep)); }
    AutonomousSystem restrict_to(Subset keep) { return apply(ReductionStep::contract(current().ground() - keep)); }

    WitnessSequence finish(const AutonomousSystem& target)
    {
        auto iso = isomorphic(current(), target);
        if (!iso)
            throw std::logic_error("extraction ended at a system not isomorphic to the template");
        witness_.final_iso = std::move(*iso);
        return std::move(witness_);
    }

private:
    WitnessSequence witness_;
};

void require(bool condition, const char* what)
{
    if (!condition)
        throw std::logic_error(std::string("extraction invariant failed: ") + what);
}

Element moved(Element x, const AutonomousSystem& from, const AutonomousSystem& to)
{
    return to.element(from.label(x));
}

} // namespace

std::optional<NonIntersectingPair> find_nonintersecting_pair(const AutonomousSystem& system)
{
    return is_poset(system).witness;
}

WitnessSequence extract_p3(const AutonomousSystem& system, Subset a, Subset b)
{
    if (!system.is_member(a) || !system.is_member(b))
        throw Error(ErrorKind::PreconditionFailed, "both sets must be members");
    if (system.is_member(a & b))
        throw Error(ErrorKind::PreconditionFailed, "the intersection is a member");

    Tracer t(system);
    auto prev = t.dot_to(a | b);
    a = translate(a, prev, t.current());
    b = translate(b, prev, t.current());

    const Subset meet = a & b;
    const Subset stuck = meet - autonomous_part(t.current(), meet);
    require(!stuck.empty(), "intersection has a nonautonomous part");
    Element x = stuck.first();

    const Subset a1 = (a - b).with(x);
    const Subset b1 = (b - a).with(x);
    prev = t.restrict_to(a1 | b1);
    const Subset a1r = translate(a1, prev, t.current());
    const Subset b1r = translate(b1, prev, t.current());
    x = moved(x, prev, t.current());
    require(t.current().is_member(a1r) && t.current().is_member(b1r), "A' and B' are members after restriction");
    require(!is_axiom(t.current(), x), "{x} is not a member after restriction");

    const Subset a2 = min_aut_containing(t.current(), a1r, x);
    const Subset b2 = min_aut_containing(t.current(), b1r, x);
    prev = t.dot_to(a2 | b2);
    const Subset a2d = translate(a2, prev, t.current());
    const Subset b2d = translate(b2, prev, t.current());
    x = moved(x, prev, t.current());
    require((a2d & b2d) == Subset::single(x), "A'' and B'' meet exactly in x");
    require(!is_axiom(t.current(), x), "{x} is not a member after dotting");

    const CanonicalOrder order_a = canonical_order(t.current(), a2d);
    const CanonicalOrder order_b = canonical_order(t.current(), b2d);
    require(order_a.is_maximum(x) && order_b.is_maximum(x), "x is the canonical maximum of A'' and B''");
    const Subset below_a = order_a.down_set(x).without(x);
    const Subset below_b = order_b.down_set(x).without(x);
    require(!below_a.empty() && !below_b.empty(), "x has predecessors in both contexts");
    const Element pa = below_a.first();
    const Element pb = below_b.first();

    t.restrict_to(Subset::single(pa).with(pb).with(x));
    return t.finish(p_n(3));
}

std::optional<BidirectionalPair> find_bidirectional_pair(const AutonomousSystem& system)
{
    const std::size_t n = system.size();
    // orders[i]: canonical order of the i-th member, computed once.
    std::vector<CanonicalOrder> orders;
    orders.reserve(system.family().size());
    for (Subset m : system.family())
        orders.push_back(canonical_order(system, m));

    for (unsigned xi = 0; xi < n; ++xi)
        for (unsigned yi = 0; yi < n; ++yi) {
            if (xi == yi)
                continue;
            const Element x{xi}, y{yi};
            for (const auto& oa : orders) {
                if (!oa.less(x, y))
                    continue;
                for (const auto& ob : orders)
                    if (ob.less(y, x))
                        return BidirectionalPair{x, y, oa.carrier(), ob.carrier()};
                break; // no B for this (x, y)
            }
        }
    return std::nullopt;
}

WitnessSequence extract_p4(const AutonomousSystem& system, const BidirectionalPair& pair)
{
    Subset a = pair.a, b = pair.b;
    Element x = pair.x, y = pair.y;
    if (x.index >= system.size() || y.index >= system.size() || x == y)
        throw Error(ErrorKind::PreconditionFailed, "x and y must be distinct elements");
    if (!system.is_member(a) || !system.is_member(b))
        throw Error(ErrorKind::PreconditionFailed, "A and B must be members");
    if (!canonical_order(system, a).less(x, y) || !canonical_order(system, b).less(y, x))
        throw Error(ErrorKind::PreconditionFailed, "need x <_A y and y <_B x");

    Tracer t(system);
    auto prev = t.dot_to(a | b);
    a = translate(a, prev, t.current());
    b = translate(b, prev, t.current());
    x = moved(x, prev, t.current());
    y = moved(y, prev, t.current());

    const Subset xy = Subset::single(x).with(y);
    const Subset a1 = (a - b) | xy;
    const Subset b1 = (b - a) | xy;
    prev = t.restrict_to(a1 | b1);
    const Subset a1r = translate(a1, prev, t.current());
    const Subset b1r = translate(b1, prev, t.current());
    x = moved(x, prev, t.current());
    y = moved(y, prev, t.current());
    require(canonical_order(t.current(), a1r).less(x, y), "x <_A' y after restriction");
    require(canonical_order(t.current(), b1r).less(y, x), "y <_B' x after restriction");

    const Subset a2 = min_aut_containing(t.current(), a1r, y);
    const Subset b2 = min_aut_containing(t.current(), b1r, x);
    prev = t.dot_to(a2 | b2);
    const Subset a2d = translate(a2, prev, t.current());
    const Subset b2d = translate(b2, prev, t.current());
    x = moved(x, prev, t.current());
    y = moved(y, prev, t.current());
    const Subset pxy = Subset::single(x).with(y);

    require((a2d & b2d) == pxy, "A'' and B'' meet exactly in {x, y}");
    const CanonicalOrder order_a = canonical_order(t.current(), a2d);
    const CanonicalOrder order_b = canonical_order(t.current(), b2d);
    require(order_a.is_maximum(y) && order_b.is_maximum(x), "y and x are canonical maxima");
    require(order_a.less(x, y) && order_b.less(y, x), "x <_A'' y and y <_B'' x");
    require(!is_axiom(t.current(), x) && !is_axiom(t.current(), y), "neither x nor y is an axiom");
    require(!(a2d - pxy).empty() && !(b2d - pxy).empty(), "both outer cells are nonempty");

    const AutonomousSystem& cur = t.current();
    Partition cells = Partition::of(cur, {a2d - pxy, b2d - pxy, Subset::single(x), Subset::single(y)});
    require(is_homomorphism_induced(cur, cells), "the four-cell partition is homomorphism induced");
    t.apply(ReductionStep::quotient(std::move(cells)));
    return t.finish(p_n(4));
}

} // namespace autsys
