#pragma once

// Brute-force reference computations used to check the library. Nothing here
// calls into the library's algorithms: families are plain sorted vectors of
// masks and every property is checked by direct enumeration.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace autsys::oracle {

using Mask = std::uint64_t;
using Family = std::vector<Mask>; // sorted, duplicate-free

bool contains(const Family& family, Mask s);
bool is_subfamily(const Family& small, const Family& big);

/// Contains ∅, closed under pairwise union, every nonempty member has a
/// removable element.
bool is_valid(const Family& family, std::size_t n);

/// Every valid family on n points (n ≤ 4) by filtering all families of
/// subsets; `normalized` additionally requires the full ground.
std::vector<Family> all_valid_families(std::size_t n, bool normalized);

/// Smallest union-closed family containing `seeds`, by fixpoint iteration.
Family union_closure(Family seeds);

/// Union-closure of the union of every valid family on the m-point target for
/// which each member's preimage under `assignment` lies in `source`.
Family maximal_quotient(const Family& source, const std::vector<unsigned>& assignment, std::size_t m);

/// Strict order relations on n points: strictly_below[y] = {x : x < y}.
/// Enumerates every irreflexive transitive relation (n ≤ 4).
std::vector<std::vector<Mask>> all_strict_orders(std::size_t n);

/// Subsets closed downward under `strictly_below`.
Family down_sets(const std::vector<Mask>& strictly_below);

/// x ≤_A y by scanning the family.
bool context_leq(const Family& family, Mask a, unsigned x, unsigned y);

/// Intersection of all members inside `a` that contain `s`.
Mask meet_above(const Family& family, Mask a, Mask s);

/// Set partitions of {0..n-1} into at most `max_cells` cells, as
/// cell-index assignments.
std::vector<std::vector<unsigned>> set_partitions(std::size_t n, std::size_t max_cells);

} // namespace autsys::oracle
