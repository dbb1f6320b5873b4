#include "autsys/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace autsys::oracle {

bool contains(const Family& family, Mask s)
{
    return std::binary_search(family.begin(), family.end(), s);
}

bool is_subfamily(const Family& small, const Family& big)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool is_valid(const Family& family, std::size_t n)
{
    const Mask ground = n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    if (!contains(family, 0))
        return false;
    for (Mask a : family) {
        if (a & ~ground)
            return false;
        for (Mask b : family)
            if (!contains(family, a | b))
                return false;
        if (a == 0)
            continue;
        bool removable = false;
        for (std::size_t i = 0; i < n; ++i)
            if (((a >> i) & 1U) && contains(family, a & ~(Mask{1} << i)))
                removable = true;
        if (!removable)
            return false;
    }
    return true;
}

std::vector<Family> all_valid_families(std::size_t n, bool normalized)
{
    if (n > 4)
        throw std::invalid_argument("naive family enumeration is limited to n <= 4");
    const std::size_t subsets = std::size_t{1} << n;
    const Mask full = subsets - 1;
    std::vector<Family> out;
    // choice bit k selects subset k + 1 (the empty set is always present)
    const std::uint64_t choices = std::uint64_t{1} << (subsets - 1);
    for (std::uint64_t pick = 0; pick < choices; ++pick) {
        Family f{0};
        for (std::size_t k = 0; k + 1 < subsets; ++k)
            if ((pick >> k) & 1U)
                f.push_back(k + 1);
        if (normalized && !contains(f, full))
            continue;
        if (is_valid(f, n))
            out.push_back(std::move(f));
    }
    return out;
}

Family union_closure(Family seeds)
{
    std::set<Mask> current(seeds.begin(), seeds.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Mask> snapshot(current.begin(), current.end());
        for (Mask a : snapshot)
            for (Mask b : snapshot)
                grew |= current.insert(a | b).second;
    }
    return Family(current.begin(), current.end());
}

Family maximal_quotient(const Family& source, const std::vector<unsigned>& assignment, std::size_t m)
{
    auto preimage = [&](Mask t) {
        Mask out = 0;
        for (std::size_t i = 0; i < assignment.size(); ++i)
            if ((t >> assignment[i]) & 1U)
                out |= Mask{1} << i;
        return out;
    };
    static const std::vector<std::vector<Family>> small = [] {
        std::vector<std::vector<Family>> c;
        for (std::size_t k = 0; k <= 3; ++k)
            c.push_back(all_valid_families(k, false));
        return c;
    }();
    const std::vector<Family> candidates = m <= 3 ? small[m] : all_valid_families(m, false);
    Family gathered{0};
    for (const Family& candidate : candidates) {
        bool homomorphism = std::all_of(candidate.begin(), candidate.end(),
                                        [&](Mask t) { return contains(source, preimage(t)); });
        if (homomorphism)
            gathered.insert(gathered.end(), candidate.begin(), candidate.end());
    }
    return union_closure(std::move(gathered));
}

std::vector<std::vector<Mask>> all_strict_orders(std::size_t n)
{
    if (n > 4)
        throw std::invalid_argument("naive order enumeration is limited to n <= 4");
    std::vector<std::pair<unsigned, unsigned>> slots; // (x, y) meaning x < y
    for (unsigned x = 0; x < n; ++x)
        for (unsigned y = 0; y < n; ++y)
            if (x != y)
                slots.emplace_back(x, y);
    std::vector<std::vector<Mask>> out;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << slots.size()); ++pick) {
        std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
        for (std::size_t k = 0; k < slots.size(); ++k)
            if ((pick >> k) & 1U)
                less[slots[k].first][slots[k].second] = true;
        bool ok = true;
        for (unsigned x = 0; x < n && ok; ++x)
            for (unsigned y = 0; y < n && ok; ++y)
                for (unsigned z = 0; z < n && ok; ++z)
                    if (less[x][y] && less[y][z] && !less[x][z])
                        ok = false;
        for (unsigned x = 0; x < n && ok; ++x)
            if (less[x][x])
                ok = false;
        if (!ok)
            continue;
        std::vector<Mask> below(n, 0);
        for (unsigned x = 0; x < n; ++x)
            for (unsigned y = 0; y < n; ++y)
                if (less[x][y])
                    below[y] |= Mask{1} << x;
        out.push_back(std::move(below));
    }
    return out;
}

Family down_sets(const std::vector<Mask>& strictly_below)
{
    const std::size_t n = strictly_below.size();
    Family out;
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
        bool closed = true;
        for (std::size_t y = 0; y < n; ++y)
            if (((s >> y) & 1U) && (strictly_below[y] & ~s))
                closed = false;
        if (closed)
            out.push_back(s);
    }
    return out;
}

bool context_leq(const Family& family, Mask a, unsigned x, unsigned y)
{
    for (Mask m : family)
        if ((m & ~a) == 0 && ((m >> y) & 1U) && !((m >> x) & 1U))
            return false;
    return true;
}

Mask meet_above(const Family& family, Mask a, Mask s)
{
    Mask out = a;
    for (Mask m : family)
        if ((m & ~a) == 0 && (s & ~m) == 0)
            out &= m;
    return out;
}

std::vector<std::vector<unsigned>> set_partitions(std::size_t n, std::size_t max_cells)
{
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cell(n, 0);
    auto rec = [&](auto&& self, std::size_t i, unsigned used) -> void {
        if (i == n) {
            out.push_back(cell);
            return;
        }
        for (unsigned c = 0; c <= used && c < max_cells; ++c) {
            cell[i] = c;
            self(self, i + 1, std::max(used, c + 1));
        }
    };
    rec(rec, 0, 0);
    return out;
}

} // namespace autsys::oracle
