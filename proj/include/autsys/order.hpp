#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "autsys/system.hpp"

namespace autsys {

/// The context order on a member A: x ≤_A y iff every member inside A that
/// contains y also contains x ("y needs x within A"). Strict x <_A y means
/// x ≤_A y and x ≠ y.
class CanonicalOrder {
public:
    /// `down_sets[y]` = {x : x ≤ y} for y in the carrier, empty otherwise.
    CanonicalOrder(Subset carrier, std::vector<Subset> down_sets);

    Subset carrier() const { return carrier_; }
    Subset down_set(Element y) const { return down_sets_[y.index]; }
    bool leq(Element x, Element y) const { return carrier_.contains(y) && down_sets_[y.index].contains(x); }
    bool less(Element x, Element y) const { return x != y && leq(x, y); }

    /// True iff y ≤ x for every y in the carrier.
    bool is_maximum(Element x) const;
    bool is_down_closed(Subset s) const;

    std::vector<std::pair<Element, Element>> strict_pairs() const;
    /// Strict pairs with nothing strictly between them.
    std::vector<std::pair<Element, Element>> covering_pairs() const;

private:
    Subset carrier_;
    std::vector<Subset> down_sets_;
};

/// Throws NotAutonomous unless `a` is a member.
CanonicalOrder canonical_order(const AutonomousSystem& system, Subset a);

/// Numerically least member B ⊆ a with x ∈ B. It is inclusion-minimal because
/// every proper subset of B has a smaller mask.
/// Throws NotAutonomous or ElementOutside.
Subset min_aut_containing(const AutonomousSystem& system, Subset a, Element x);

/// Two members whose intersection is not a member.
struct NonIntersectingPair {
    Subset a;
    Subset b;

    friend bool operator==(const NonIntersectingPair&, const NonIntersectingPair&) = default;
};

struct PosetCheck {
    bool poset = true;
    std::optional<NonIntersectingPair> witness;

    explicit operator bool() const { return poset; }
};

/// Pairwise intersection closure of the family. On failure the witness is the
/// first offending pair (a before b, both in family order).
PosetCheck is_poset(const AutonomousSystem& system);

/// A reflexive, transitive, antisymmetric relation on labeled points.
/// Points are indexed in sorted-label order.
class PartialOrder {
public:
    /// Reflexive-transitive closure of `pairs` (x, y meaning x ≤ y). Throws
    /// MalformedInput on duplicate or unknown labels and on cycles.
    static PartialOrder from_pairs(std::vector<std::string> labels,
                                   const std::vector<std::pair<std::string, std::string>>& pairs);

    /// `down_sets[y]` must already be a closed order over sorted labels.
    PartialOrder(std::vector<std::string> labels, std::vector<Subset> down_sets);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    Subset down_set(Element y) const { return down_sets_[y.index]; }
    bool leq(Element x, Element y) const { return down_sets_[y.index].contains(x); }

    std::vector<std::pair<Element, Element>> strict_pairs() const;

    friend bool operator==(const PartialOrder&, const PartialOrder&) = default;

private:
    std::vector<std::string> labels_;
    std::vector<Subset> down_sets_;
};

/// Largest carrier accepted by from_poset; the family can reach 2^n sets.
inline constexpr std::size_t kDefaultPosetBound = 20;

/// The order whose down-sets are exactly the family, computed on the
/// normalized system: x ≤ y iff every member containing y contains x.
/// nullopt when the family is not intersection-closed.
std::optional<PartialOrder> to_poset(const AutonomousSystem& system);

/// System of all down-closed subsets. Throws TooLarge beyond `max_carrier`.
AutonomousSystem from_poset(const PartialOrder& order, std::size_t max_carrier = kDefaultPosetBound);

} // namespace autsys
