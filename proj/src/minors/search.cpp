#include <algorithm>
#include <string>
#include <unordered_set>

#include "autsys/error.hpp"
#include "autsys/minors.hpp"

namespace autsys {

AutonomousSystem p_n(int n)
{
    if (n < 1 || n > static_cast<int>(kMaxGround))
        throw Error(ErrorKind::InvalidN, "path length must be between 1 and 64, got " + std::to_string(n));
    const auto count = static_cast<unsigned>(n);
    std::vector<std::string> labels;
    for (unsigned i = 1; i <= count; ++i)
        labels.push_back("v" + std::to_string(i));
    // Bits follow path position; make() re-sorts by label.
    std::vector<Subset> family;
    for (unsigned prefix = 0; prefix <= count; ++prefix)
        for (unsigned suffix = 0; suffix <= count; ++suffix) {
            Subset s = Subset::full(prefix);
            for (unsigned k = count - suffix; k < count; ++k)
                s = s.with(Element{k});
            family.push_back(s);
        }
    return AutonomousSystem::make(std::move(labels), family);
}

bool WitnessSequence::is_subdot() const
{
    return std::none_of(steps.begin(), steps.end(), [](const ReductionStep& s) { return s.kind == StepKind::Quotient; });
}

namespace {

// Calls visit(cells) for every partition of {0..n-1} with at least one
// non-singleton cell, in restricted-growth-string order.
template <typename Visit>
void for_each_coarse_partition(std::size_t n, Visit&& visit)
{
    std::vector<unsigned> rgs(n, 0);
    std::vector<Subset> cells;
    auto emit = [&] {
        unsigned blocks = 0;
        for (unsigned v : rgs)
            blocks = std::max(blocks, v + 1);
        if (blocks == n)
            return;
        cells.assign(blocks, Subset{});
        for (unsigned i = 0; i < n; ++i)
            cells[rgs[i]] = cells[rgs[i]].with(Element{i});
        visit(cells);
    };
    auto rec = [&](auto&& self, std::size_t i, unsigned max_used) -> void {
        if (i == n) {
            emit();
            return;
        }
        for (unsigned v = 0; v <= max_used + 1; ++v) {
            rgs[i] = v;
            self(self, i + 1, std::max(max_used, v));
        }
    };
    if (n < 2)
        return;
    rgs[0] = 0;
    rec(rec, 1, 0);
}

// Default cell names, disambiguated if a merged name collides.
Partition named_partition(const AutonomousSystem& system, const std::vector<Subset>& cells)
{
    std::vector<std::string> labels;
    for (Subset cell : cells) {
        std::string name;
        for (Element x : cell) {
            if (!name.empty())
                name += '+';
            name += system.label(x);
        }
        labels.push_back(std::move(name));
    }
    auto taken = [&](const std::string& s, std::size_t self) {
        for (std::size_t j = 0; j < labels.size(); ++j)
            if (j != self && labels[j] == s)
                return true;
        return false;
    };
    for (std::size_t i = 0; i < labels.size(); ++i)
        while (cells[i].size() > 1 && taken(labels[i], i))
            labels[i] = "(" + labels[i] + ")";
    return Partition::of(system, cells, std::move(labels));
}

struct Node {
    AutonomousSystem system;
    std::ptrdiff_t parent;
    std::optional<ReductionStep> step;
};

WitnessSequence rebuild(const std::vector<Node>& nodes, std::size_t leaf, const AutonomousSystem& target)
{
    std::vector<std::size_t> path;
    for (auto i = static_cast<std::ptrdiff_t>(leaf); i > 0; i = nodes[static_cast<std::size_t>(i)].parent)
        path.push_back(static_cast<std::size_t>(i));
    std::reverse(path.begin(), path.end());
    WitnessSequence w{nodes[0].system, {}, {}, {}};
    for (std::size_t i : path) {
        w.steps.push_back(*nodes[i].step);
        w.intermediates.push_back(nodes[i].system);
    }
    w.final_iso = *isomorphic(w.final_system(), target);
    return w;
}

std::optional<WitnessSequence> search(const AutonomousSystem& system, const AutonomousSystem& target,
                                      const SearchOptions& options, bool with_quotients)
{
    if (system.size() > options.bound)
        throw Error(ErrorKind::SearchBoundExceeded, "ground has " + std::to_string(system.size()) +
                                                        " elements; search bound is " +
                                                        std::to_string(options.bound));
    const CanonicalKey goal = canonical_key(target);
    std::vector<Node> nodes{{system, -1, std::nullopt}};
    if (canonical_key(system) == goal)
        return rebuild(nodes, 0, target);

    // Every reduction shrinks or keeps both the ground and the family size.
    auto viable = [&](const AutonomousSystem& s) {
        return s.size() >= target.size() && s.family().size() >= target.family().size();
    };
    if (!viable(system))
        return std::nullopt;

    std::unordered_set<CanonicalKey, CanonicalKeyHash> seen{canonical_key(system)};
    std::optional<std::size_t> hit;

    auto offer = [&](std::size_t parent, AutonomousSystem child, ReductionStep step) {
        if (hit || !viable(child))
            return;
        CanonicalKey key = canonical_key(child);
        const bool found = key == goal;
        if (!seen.insert(std::move(key)).second)
            return;
        nodes.push_back({std::move(child), static_cast<std::ptrdiff_t>(parent), std::move(step)});
        if (found)
            hit = nodes.size() - 1;
    };

    for (std::size_t i = 0; i < nodes.size() && !hit; ++i) {
        const AutonomousSystem current = nodes[i].system;
        for (Element e : current.ground()) {
            const Subset one = Subset::single(e);
            offer(i, deletion(current, one), ReductionStep::remove(one));
            offer(i, contraction(current, one), ReductionStep::contract(one));
        }
        if (!with_quotients)
            continue;
        for_each_coarse_partition(current.size(), [&](const std::vector<Subset>& cells) {
            if (hit)
                return;
            Partition p = named_partition(current, cells);
            AutonomousSystem image = quotient_by_partition(current, p);
            if (options.require_induced && image.family().size() < 2)
                return;
            offer(i, std::move(image), ReductionStep::quotient(std::move(p)));
        });
    }
    if (!hit)
        return std::nullopt;
    return rebuild(nodes, *hit, target);
}

} // namespace

std::optional<WitnessSequence> subdot_reachable(const AutonomousSystem& system, const AutonomousSystem& target,
                                                const SearchOptions& options)
{
    return search(system, target, options, false);
}

std::optional<WitnessSequence> induced_minor(const AutonomousSystem& system, const AutonomousSystem& target,
                                             const SearchOptions& options)
{
    return search(system, target, options, true);
}

bool verify_witness(const WitnessSequence& witness, const AutonomousSystem& target)
{
    if (witness.steps.size() != witness.intermediates.size())
        return false;
    AutonomousSystem current = witness.source;
    for (std::size_t i = 0; i < witness.steps.size(); ++i) {
        try {
            current = apply_step(current, witness.steps[i]);
        } catch (const Error&) {
            return false;
        }
        if (current != witness.intermediates[i])
            return false;
    }
    return is_isomorphism(current, target, witness.final_iso);
}

} // namespace autsys
