#include "autsys/order.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "autsys/error.hpp"
#include "autsys/kernels.hpp"

namespace autsys {

CanonicalOrder::CanonicalOrder(Subset carrier, std::vector<Subset> down_sets)
    : carrier_(carrier), down_sets_(std::move(down_sets))
{
}

bool CanonicalOrder::is_maximum(Element x) const
{
    return carrier_.contains(x) && down_sets_[x.index] == carrier_;
}

bool CanonicalOrder::is_down_closed(Subset s) const
{
    if (!s.subset_of(carrier_))
        return false;
    for (Element y : s)
        if (!down_sets_[y.index].subset_of(s))
            return false;
    return true;
}

std::vector<std::pair<Element, Element>> CanonicalOrder::strict_pairs() const
{
    std::vector<std::pair<Element, Element>> out;
    for (Element y : carrier_)
        for (Element x : down_sets_[y.index].without(y))
            out.emplace_back(x, y);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<Element, Element>> CanonicalOrder::covering_pairs() const
{
    std::vector<std::pair<Element, Element>> out;
    for (auto [x, y] : strict_pairs()) {
        // z strictly between x and y: z < y and x < z
        bool covered = true;
        for (Element z : down_sets_[y.index].without(y).without(x))
            if (down_sets_[z.index].contains(x)) {
                covered = false;
                break;
            }
        if (covered)
            out.emplace_back(x, y);
    }
    return out;
}

CanonicalOrder canonical_order(const AutonomousSystem& system, Subset a)
{
    if (!system.is_member(a))
        throw Error(ErrorKind::NotAutonomous, "canonical order needs a member of the family");
    std::vector<Subset> down(system.size());
    for (Element y : a)
        down[y.index] = kernels::meet_containing(system.family(), a, Subset::single(y), a);
    return CanonicalOrder(a, std::move(down));
}

Subset min_aut_containing(const AutonomousSystem& system, Subset a, Element x)
{
    if (!system.is_member(a))
        throw Error(ErrorKind::NotAutonomous, "min_aut_containing needs a member of the family");
    if (!a.contains(x))
        throw Error(ErrorKind::ElementOutside, "element '" + (x.index < system.size() ? system.label(x) : "?") +
                                                   "' is not in the given set");
    for (Subset m : system.family())
        if (m.contains(x) && m.subset_of(a))
            return m;
    return a; // unreachable: a itself qualifies
}

PosetCheck is_poset(const AutonomousSystem& system)
{
    const auto family = system.family();
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (!system.is_member(family[i] & family[j]))
                return PosetCheck{false, NonIntersectingPair{family[i], family[j]}};
    return PosetCheck{};
}

PartialOrder::PartialOrder(std::vector<std::string> labels, std::vector<Subset> down_sets)
    : labels_(std::move(labels)), down_sets_(std::move(down_sets))
{
}

PartialOrder PartialOrder::from_pairs(std::vector<std::string> labels,
                                      const std::vector<std::pair<std::string, std::string>>& pairs)
{
    if (labels.size() > kMaxGround)
        throw Error(ErrorKind::MalformedInput, "too many points");
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        throw Error(ErrorKind::MalformedInput, "duplicate point label");
    auto index = [&](const std::string& name) {
        auto it = std::lower_bound(labels.begin(), labels.end(), name);
        if (it == labels.end() || *it != name)
            throw Error(ErrorKind::MalformedInput, "unknown point '" + name + "'");
        return Element{static_cast<unsigned>(it - labels.begin())};
    };

    const std::size_t n = labels.size();
    std::vector<Subset> down(n);
    for (unsigned i = 0; i < n; ++i)
        down[i] = Subset::single(Element{i});
    for (const auto& [lo, hi] : pairs)
        down[index(hi).index] = down[index(hi).index].with(index(lo));
    for (unsigned k = 0; k < n; ++k)
        for (unsigned y = 0; y < n; ++y)
            if (down[y].contains(Element{k}))
                down[y] |= down[k];
    for (unsigned y = 0; y < n; ++y)
        for (Element x : down[y].without(Element{y}))
            if (down[x.index].contains(Element{y}))
                throw Error(ErrorKind::MalformedInput, "relation has a cycle through '" + labels[y] + "'");
    return PartialOrder(std::move(labels), std::move(down));
}

std::vector<std::pair<Element, Element>> PartialOrder::strict_pairs() const
{
    std::vector<std::pair<Element, Element>> out;
    for (unsigned y = 0; y < size(); ++y)
        for (Element x : down_sets_[y].without(Element{y}))
            out.emplace_back(x, Element{y});
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<PartialOrder> to_poset(const AutonomousSystem& system)
{
    const AutonomousSystem normal = normalize(system);
    if (!is_poset(normal))
        return std::nullopt;
    const Subset ground = normal.ground();
    std::vector<Subset> down(normal.size());
    for (Element y : ground)
        down[y.index] = kernels::meet_containing(normal.family(), ground, Subset::single(y), ground);
    return PartialOrder(normal.labels(), std::move(down));
}

AutonomousSystem from_poset(const PartialOrder& order, std::size_t max_carrier)
{
    if (order.size() > max_carrier)
        throw Error(ErrorKind::TooLarge, "poset has " + std::to_string(order.size()) + " points; bound is " +
                                             std::to_string(max_carrier));
    const Subset ground = Subset::full(order.size());
    std::vector<Subset> family{Subset{}};
    std::unordered_set<std::uint64_t> seen{0};
    // Grow down-sets by adding an element whose strict predecessors are present.
    for (std::size_t i = 0; i < family.size(); ++i) {
        const Subset current = family[i];
        for (Element x : ground - current) {
            if (!(order.down_set(x).without(x)).subset_of(current))
                continue;
            const Subset next = current.with(x);
            if (seen.insert(next.bits()).second)
                family.push_back(next);
        }
    }
    return AutonomousSystem(AutonomousSystem::Trusted{}, order.labels(), std::move(family));
}

} // namespace autsys
