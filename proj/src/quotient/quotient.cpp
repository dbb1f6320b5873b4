#include "autsys/quotient.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "autsys/error.hpp"

namespace autsys {
namespace {

std::string joined(const AutonomousSystem& system, Subset cell)
{
    std::string out;
    for (Element x : cell) {
        if (!out.empty())
            out += '+';
        out += system.label(x);
    }
    return out;
}

// Closes `family` under pairwise union.
std::vector<Subset> union_closure(std::vector<Subset> family)
{
    std::unordered_set<std::uint64_t> seen;
    std::vector<Subset> out;
    for (Subset s : family)
        if (seen.insert(s.bits()).second)
            out.push_back(s);
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            const Subset u = out[i] | out[j];
            if (seen.insert(u.bits()).second)
                out.push_back(u);
        }
    return out;
}

} // namespace

Partition Partition::of(const AutonomousSystem& system, std::vector<Subset> cells, std::vector<std::string> labels)
{
    if (!labels.empty() && labels.size() != cells.size())
        throw Error(ErrorKind::MalformedPartition, "cell label count differs from cell count");
    Subset covered;
    for (Subset cell : cells) {
        if (cell.empty())
            throw Error(ErrorKind::MalformedPartition, "empty cell");
        if (!cell.subset_of(system.ground()))
            throw Error(ErrorKind::MalformedPartition, "cell reaches outside the ground");
        if (cell.intersects(covered))
            throw Error(ErrorKind::MalformedPartition, "cells overlap");
        covered |= cell;
    }
    if (covered != system.ground())
        throw Error(ErrorKind::MalformedPartition, "cells do not cover the ground");
    if (labels.empty())
        for (Subset cell : cells)
            labels.push_back(joined(system, cell));

    std::vector<std::size_t> order(cells.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return cells[a].first() < cells[b].first(); });

    Partition p;
    p.ground_size_ = system.size();
    for (std::size_t i : order) {
        p.cells_.push_back(cells[i]);
        p.labels_.push_back(std::move(labels[i]));
    }
    auto sorted = p.labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorKind::MalformedPartition, "duplicate cell label");
    if (std::any_of(sorted.begin(), sorted.end(), [](const std::string& s) { return s.empty(); }))
        throw Error(ErrorKind::MalformedPartition, "empty cell label");
    return p;
}

Partition Partition::from_names(const AutonomousSystem& system, const std::vector<std::vector<std::string>>& cells,
                                std::vector<std::string> labels)
{
    std::vector<Subset> sets;
    for (const auto& names : cells) {
        Subset s;
        for (const auto& name : names) {
            auto x = system.find(name);
            if (!x)
                throw Error(ErrorKind::MalformedPartition, "unknown element '" + name + "'");
            if (s.contains(*x))
                throw Error(ErrorKind::MalformedPartition, "element '" + name + "' repeated in a cell");
            s = s.with(*x);
        }
        sets.push_back(s);
    }
    return of(system, std::move(sets), std::move(labels));
}

Partition Partition::discrete(const AutonomousSystem& system)
{
    std::vector<Subset> cells;
    for (Element x : system.ground())
        cells.push_back(Subset::single(x));
    return of(system, std::move(cells));
}

GroundMap::GroundMap(std::vector<std::string> source, std::vector<std::string> target,
                     std::vector<unsigned> assignment)
{
    if (source.size() != assignment.size())
        throw Error(ErrorKind::MalformedMap, "assignment length differs from source size");
    if (source.size() > kMaxGround || target.size() > kMaxGround)
        throw Error(ErrorKind::MalformedMap, "ground too large");
    for (unsigned t : assignment)
        if (t >= target.size())
            throw Error(ErrorKind::MalformedMap, "image index out of range");

    std::vector<unsigned> torder(target.size());
    std::iota(torder.begin(), torder.end(), 0U);
    std::sort(torder.begin(), torder.end(), [&](unsigned a, unsigned b) { return target[a] < target[b]; });
    std::vector<unsigned> tpos(target.size());
    for (unsigned i = 0; i < torder.size(); ++i) {
        tpos[torder[i]] = i;
        target_.push_back(target[torder[i]]);
    }
    if (std::adjacent_find(target_.begin(), target_.end()) != target_.end())
        throw Error(ErrorKind::MalformedMap, "duplicate target label");

    std::vector<unsigned> sorder(source.size());
    std::iota(sorder.begin(), sorder.end(), 0U);
    std::sort(sorder.begin(), sorder.end(), [&](unsigned a, unsigned b) { return source[a] < source[b]; });
    for (unsigned i : sorder) {
        source_.push_back(source[i]);
        assignment_.push_back(tpos[assignment[i]]);
    }
    if (std::adjacent_find(source_.begin(), source_.end()) != source_.end())
        throw Error(ErrorKind::MalformedMap, "duplicate source label");

    fibers_.assign(target_.size(), Subset{});
    for (unsigned i = 0; i < assignment_.size(); ++i)
        fibers_[assignment_[i]] = fibers_[assignment_[i]].with(Element{i});
}

GroundMap GroundMap::collapse(const AutonomousSystem& system, const Partition& partition)
{
    if (partition.ground_size() != system.size())
        throw Error(ErrorKind::MalformedPartition, "partition belongs to a ground of another size");
    std::vector<unsigned> assignment(system.size());
    for (unsigned c = 0; c < partition.cells().size(); ++c)
        for (Element x : partition.cells()[c])
            assignment[x.index] = c;
    return GroundMap(system.labels(), partition.labels(), std::move(assignment));
}

Subset GroundMap::preimage(Subset target_set) const
{
    Subset out;
    for (Element t : target_set)
        out |= fibers_[t.index];
    return out;
}

bool GroundMap::is_surjective() const
{
    return std::none_of(fibers_.begin(), fibers_.end(), [](Subset f) { return f.empty(); });
}

bool is_homomorphism(const AutonomousSystem& p, const AutonomousSystem& q, const GroundMap& f)
{
    if (f.source() != p.labels() || f.target() != q.labels())
        throw Error(ErrorKind::MalformedMap, "map grounds do not match the systems");
    return std::all_of(q.family().begin(), q.family().end(),
                       [&](Subset m) { return p.is_member(f.preimage(m)); });
}

AutonomousSystem join(std::span<const AutonomousSystem> systems)
{
    if (systems.empty())
        throw Error(ErrorKind::EmptyInput, "join of no systems");
    std::vector<std::string> labels;
    for (const auto& s : systems)
        labels.insert(labels.end(), s.labels().begin(), s.labels().end());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    if (labels.size() > kMaxGround)
        throw Error(ErrorKind::TooLarge, "joined ground exceeds 64 elements");

    const AutonomousSystem frame(AutonomousSystem::Trusted{}, labels, {Subset{}});
    std::vector<Subset> family;
    for (const auto& s : systems)
        for (Subset m : s.family())
            family.push_back(translate(m, s, frame));
    return AutonomousSystem(AutonomousSystem::Trusted{}, std::move(labels), union_closure(std::move(family)));
}

AutonomousSystem quotient_by_map(const AutonomousSystem& system, const GroundMap& f)
{
    if (f.source() != system.labels())
        throw Error(ErrorKind::MalformedMap, "map source differs from the system's ground");
    if (!f.is_surjective())
        throw Error(ErrorKind::NotSurjective, "quotient map must be onto its target");

    const Subset target = Subset::full(f.target().size());
    std::vector<Subset> family{Subset{}};
    std::unordered_set<std::uint64_t> seen{0};
    for (std::size_t i = 0; i < family.size(); ++i) {
        const Subset current = family[i];
        for (Element t : target - current) {
            const Subset next = current.with(t);
            if (seen.count(next.bits()) || !system.is_member(f.preimage(next)))
                continue;
            seen.insert(next.bits());
            family.push_back(next);
        }
    }
    return AutonomousSystem(AutonomousSystem::Trusted{}, f.target(), std::move(family));
}

AutonomousSystem quotient_by_partition(const AutonomousSystem& system, const Partition& partition)
{
    return quotient_by_map(system, GroundMap::collapse(system, partition));
}

bool is_homomorphism_induced(const AutonomousSystem& system, const Partition& partition)
{
    return quotient_by_partition(system, partition).family().size() > 1;
}

} // namespace autsys
