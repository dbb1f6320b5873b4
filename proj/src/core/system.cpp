#include "autsys/system.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "autsys/error.hpp"
#include "autsys/kernels.hpp"

namespace autsys {
namespace {

void sort_unique(std::vector<Subset>& family)
{
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
}

// Sorts labels and rewrites the family to the sorted indices.
std::pair<std::vector<std::string>, std::vector<Subset>> canonicalize(std::vector<std::string> labels,
                                                                     std::span<const Subset> family)
{
    if (labels.size() > kMaxGround)
        throw Error(ErrorKind::MalformedInput, "ground has " + std::to_string(labels.size()) +
                                                   " elements; at most 64 are supported");
    std::vector<unsigned> order(labels.size());
    std::iota(order.begin(), order.end(), 0U);
    std::sort(order.begin(), order.end(), [&](unsigned a, unsigned b) { return labels[a] < labels[b]; });
    for (std::size_t i = 1; i < order.size(); ++i)
        if (labels[order[i - 1]] == labels[order[i]])
            throw Error(ErrorKind::MalformedInput, "duplicate label '" + labels[order[i]] + "'");

    std::vector<unsigned> position(labels.size());
    std::vector<std::string> sorted(labels.size());
    for (unsigned i = 0; i < order.size(); ++i) {
        position[order[i]] = i;
        sorted[i] = std::move(labels[order[i]]);
    }

    const Subset ground = Subset::full(sorted.size());
    std::vector<Subset> out;
    out.reserve(family.size());
    for (Subset s : family) {
        if (!s.subset_of(ground))
            throw Error(ErrorKind::MalformedInput, "subset references an element outside the ground");
        Subset mapped;
        for (Element x : s)
            mapped = mapped.with(Element{position[x.index]});
        out.push_back(mapped);
    }
    sort_unique(out);
    return {std::move(sorted), std::move(out)};
}

ValidationReport check(std::vector<std::string> labels, std::vector<Subset> family)
{
    ValidationReport report;
    report.ground = std::move(labels);
    auto member = [&](Subset s) { return std::binary_search(family.begin(), family.end(), s); };

    report.missing_empty = !member(Subset{});
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (!member(family[i] | family[j]))
                report.union_violations.emplace_back(family[i], family[j]);
    for (Subset a : family) {
        if (a.empty())
            continue;
        bool removable = false;
        for (Element x : a)
            if (member(a.without(x))) {
                removable = true;
                break;
            }
        if (!removable)
            report.accessibility_violations.push_back(a);
    }
    return report;
}

} // namespace

ValidationReport validate(const std::vector<std::string>& labels, std::span<const Subset> family)
{
    auto [sorted, mapped] = canonicalize(labels, family);
    return check(std::move(sorted), std::move(mapped));
}

AutonomousSystem::AutonomousSystem() : family_{Subset{}} {}

AutonomousSystem::AutonomousSystem(Trusted, std::vector<std::string> labels, std::vector<Subset> family)
    : labels_(std::move(labels)), family_(std::move(family))
{
    sort_unique(family_);
}

AutonomousSystem AutonomousSystem::make(std::vector<std::string> labels, std::span<const Subset> family)
{
    auto [sorted, mapped] = canonicalize(std::move(labels), family);
    ValidationReport report = check(sorted, mapped);
    if (!report.ok()) {
        std::string what = "family violates the axioms:";
        if (report.missing_empty)
            what += " empty set missing;";
        if (!report.union_violations.empty())
            what += " " + std::to_string(report.union_violations.size()) + " union violation(s);";
        if (!report.accessibility_violations.empty())
            what += " " + std::to_string(report.accessibility_violations.size()) + " inaccessible set(s);";
        throw Error(ErrorKind::MalformedInput, what);
    }
    return AutonomousSystem(Trusted{}, std::move(sorted), std::move(mapped));
}

AutonomousSystem AutonomousSystem::make(std::vector<std::string> labels,
                                        const std::vector<std::vector<std::string>>& family)
{
    std::unordered_map<std::string, unsigned> index;
    for (unsigned i = 0; i < labels.size(); ++i)
        index.emplace(labels[i], i);
    std::vector<Subset> sets;
    sets.reserve(family.size());
    for (const auto& names : family) {
        Subset s;
        for (const auto& name : names) {
            auto it = index.find(name);
            if (it == index.end())
                throw Error(ErrorKind::MalformedInput, "unknown element '" + name + "'");
            s = s.with(Element{it->second});
        }
        sets.push_back(s);
    }
    return make(std::move(labels), sets);
}

std::optional<Element> AutonomousSystem::find(std::string_view label) const
{
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label)
        return std::nullopt;
    return Element{static_cast<unsigned>(it - labels_.begin())};
}

Element AutonomousSystem::element(std::string_view label) const
{
    if (auto x = find(label))
        return *x;
    throw Error(ErrorKind::ElementOutside, "no element '" + std::string(label) + "' in the ground");
}

bool AutonomousSystem::is_member(Subset s) const
{
    return std::binary_search(family_.begin(), family_.end(), s);
}

Subset AutonomousSystem::subset(const std::vector<std::string>& names) const
{
    Subset s;
    for (const auto& name : names)
        s = s.with(element(name));
    return s;
}

std::vector<std::string> AutonomousSystem::names(Subset s) const
{
    std::vector<std::string> out;
    for (Element x : s)
        out.push_back(labels_[x.index]);
    return out;
}

Subset autonomous_part(const AutonomousSystem& system, Subset x)
{
    return kernels::union_within(system.family(), x);
}

AutonomousSystem normalize(const AutonomousSystem& system)
{
    const Subset keep = autonomous_part(system, system.ground());
    const Subset drop = system.ground() - keep;
    if (drop.empty())
        return system;
    std::vector<Subset> family(system.family().size());
    kernels::compress(system.family(), drop, family);
    return AutonomousSystem(AutonomousSystem::Trusted{}, system.names(keep), std::move(family));
}

std::vector<Element> full_chain(const AutonomousSystem& system, Subset a)
{
    if (!system.is_member(a))
        throw Error(ErrorKind::NotAutonomous, "full_chain needs a member of the family");
    std::vector<Element> removed;
    removed.reserve(a.size());
    Subset rest = a;
    while (!rest.empty()) {
        bool progressed = false;
        for (Element x : rest) {
            if (system.is_member(rest.without(x))) {
                removed.push_back(x);
                rest = rest.without(x);
                progressed = true;
                break;
            }
        }
        if (!progressed)
            throw Error(ErrorKind::NotAutonomous, "member without a removable element");
    }
    std::reverse(removed.begin(), removed.end());
    return removed;
}

bool is_axiom(const AutonomousSystem& system, Element x)
{
    return system.is_member(Subset::single(x));
}

Subset translate(Subset s, const AutonomousSystem& from, const AutonomousSystem& to)
{
    Subset out;
    for (Element x : s)
        if (auto y = to.find(from.label(x)))
            out = out.with(*y);
    return out;
}

} // namespace autsys
