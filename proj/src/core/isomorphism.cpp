#include "autsys/system.hpp"

#include <algorithm>
#include <functional>

namespace autsys {
namespace {

// Per-element invariant: how many members of each size contain the element.
using Signature = std::vector<std::uint32_t>;

std::vector<Signature> signatures(const AutonomousSystem& system)
{
    const std::size_t n = system.size();
    std::vector<Signature> sig(n, Signature(n + 1, 0));
    for (Subset m : system.family()) {
        const std::size_t size = m.size();
        for (Element x : m)
            ++sig[x.index][size];
    }
    return sig;
}

Subset image_of(Subset s, const Bijection& map)
{
    Subset out;
    for (Element x : s)
        out = out.with(Element{map[x.index]});
    return out;
}

} // namespace

bool is_isomorphism(const AutonomousSystem& from, const AutonomousSystem& to, const Bijection& map)
{
    if (from.size() != to.size() || map.size() != from.size() || from.family().size() != to.family().size())
        return false;
    std::vector<bool> hit(to.size(), false);
    for (unsigned target : map) {
        if (target >= to.size() || hit[target])
            return false;
        hit[target] = true;
    }
    // Injective on sets and equal cardinalities: into implies onto.
    return std::all_of(from.family().begin(), from.family().end(),
                       [&](Subset m) { return to.is_member(image_of(m, map)); });
}

std::optional<Bijection> isomorphic(const AutonomousSystem& p, const AutonomousSystem& q)
{
    const std::size_t n = p.size();
    if (n != q.size() || p.family().size() != q.family().size())
        return std::nullopt;

    const auto sig_p = signatures(p);
    const auto sig_q = signatures(q);
    {
        auto a = sig_p, b = sig_q;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            return std::nullopt;
    }

    // Members of p whose highest element is k become checkable once 0..k are mapped.
    std::vector<std::vector<Subset>> closes_at(n);
    for (Subset m : p.family())
        if (!m.empty())
            closes_at[63 - std::countl_zero(m.bits())].push_back(m);

    Bijection map(n, 0);
    std::vector<bool> used(n, false);
    std::function<bool(unsigned)> assign = [&](unsigned k) -> bool {
        if (k == n)
            return true;
        for (unsigned t = 0; t < n; ++t) {
            if (used[t] || sig_q[t] != sig_p[k])
                continue;
            map[k] = t;
            bool ok = std::all_of(closes_at[k].begin(), closes_at[k].end(),
                                  [&](Subset m) { return q.is_member(image_of(m, map)); });
            if (!ok)
                continue;
            used[t] = true;
            if (assign(k + 1))
                return true;
            used[t] = false;
        }
        return false;
    };
    if (!assign(0))
        return std::nullopt;
    return map;
}

CanonicalKey canonical_key(const AutonomousSystem& system)
{
    const std::size_t n = system.size();
    const auto sig = signatures(system);

    std::vector<unsigned> order(n);
    for (unsigned i = 0; i < n; ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](unsigned a, unsigned b) { return sig[a] < sig[b]; });

    // Blocks of equal signature occupy consecutive canonical positions; only
    // permutations inside a block are tried.
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i + 1;
        while (j < n && sig[order[j]] == sig[order[i]])
            ++j;
        blocks.emplace_back(i, j);
        i = j;
    }

    CanonicalKey best{n, {}};
    std::vector<std::uint64_t> scratch(system.family().size());
    Bijection position(n);
    bool have_best = false;

    auto evaluate = [&] {
        for (std::size_t i = 0; i < n; ++i)
            position[order[i]] = static_cast<unsigned>(i);
        for (std::size_t i = 0; i < scratch.size(); ++i)
            scratch[i] = image_of(system.family()[i], position).bits();
        std::sort(scratch.begin(), scratch.end());
        if (!have_best || scratch < best.family) {
            best.family = scratch;
            have_best = true;
        }
    };

    std::function<void(std::size_t)> walk = [&](std::size_t b) {
        if (b == blocks.size()) {
            evaluate();
            return;
        }
        auto first = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
        auto last = order.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
        std::sort(first, last);
        do {
            walk(b + 1);
        } while (std::next_permutation(first, last));
    };
    walk(0);
    return best;
}

std::size_t CanonicalKeyHash::operator()(const CanonicalKey& key) const noexcept
{
    std::size_t h = std::hash<std::size_t>{}(key.size);
    for (std::uint64_t w : key.family)
        h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

} // namespace autsys
