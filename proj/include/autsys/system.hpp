#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "autsys/subset.hpp"

namespace autsys {

/// Itemized axiom violations of a candidate family. Subsets refer to the
/// sorted-label ground stored alongside them.
struct ValidationReport {
    std::vector<std::string> ground;
    std::vector<std::pair<Subset, Subset>> union_violations;
    std::vector<Subset> accessibility_violations;
    bool missing_empty = false;

    bool ok() const { return union_violations.empty() && accessibility_violations.empty() && !missing_empty; }
};

/// A finite autonomous system: a ground set of labeled elements and a family
/// of autonomous subsets that contains the empty set, is closed under union,
/// and is accessible (every nonempty member loses some element and stays a
/// member). Element indices follow the sorted order of the labels; the family
/// is kept sorted by mask and duplicate-free.
///
/// Values are immutable once built.
class AutonomousSystem {
public:
    /// Tag for constructors that skip axiom checks; only for results that are
    /// valid by construction.
    struct Trusted {};

    /// Empty ground, family {∅}.
    AutonomousSystem();

    /// Builds from labels and subsets whose bits index into `labels` as given.
    /// Throws MalformedInput on duplicate or too many labels and on any axiom
    /// violation.
    static AutonomousSystem make(std::vector<std::string> labels, std::span<const Subset> family);

    /// Builds from labels and sets of labels. Throws MalformedInput on an
    /// unknown label or an axiom violation.
    static AutonomousSystem make(std::vector<std::string> labels,
                                 const std::vector<std::vector<std::string>>& family);

    /// `labels` must already be sorted and distinct; `family` indexes into it.
    AutonomousSystem(Trusted, std::vector<std::string> labels, std::vector<Subset> family);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(Element x) const { return labels_[x.index]; }
    std::optional<Element> find(std::string_view label) const;
    Element element(std::string_view label) const; // throws ElementOutside

    Subset ground() const { return Subset::full(labels_.size()); }
    std::span<const Subset> family() const { return family_; }
    bool is_member(Subset s) const;

    /// Subset named by labels; throws ElementOutside on an unknown label.
    Subset subset(const std::vector<std::string>& names) const;
    std::vector<std::string> names(Subset s) const;

    friend bool operator==(const AutonomousSystem&, const AutonomousSystem&) = default;

private:
    std::vector<std::string> labels_;
    std::vector<Subset> family_;
};

/// Checks the three axioms; duplicates in `family` are ignored. Bits index
/// into `labels` as given; the report is expressed over the sorted labels.
/// Throws MalformedInput on bad labels (duplicates, more than 64) and on a
/// subset with bits beyond the ground.
ValidationReport validate(const std::vector<std::string>& labels, std::span<const Subset> family);

/// Largest family member inside `x`.
Subset autonomous_part(const AutonomousSystem& system, Subset x);

/// Restricts the ground to its autonomous part.
AutonomousSystem normalize(const AutonomousSystem& system);

/// Ordering of `a` whose every prefix is a member, removing the lowest
/// removable element at each step. Throws NotAutonomous.
std::vector<Element> full_chain(const AutonomousSystem& system, Subset a);

/// True iff {x} is a member.
bool is_axiom(const AutonomousSystem& system, Element x);

/// `image[i]` is the target index of source element i.
using Bijection = std::vector<unsigned>;

/// True iff `map` is a bijection carrying `from`'s family exactly onto `to`'s.
bool is_isomorphism(const AutonomousSystem& from, const AutonomousSystem& to, const Bijection& map);

/// Some isomorphism from `p` to `q`, or nullopt. The search tries target
/// elements in increasing index order, so `p` against itself yields the
/// identity.
std::optional<Bijection> isomorphic(const AutonomousSystem& p, const AutonomousSystem& q);

/// Isomorphism-invariant key: equal keys iff isomorphic systems.
struct CanonicalKey {
    std::size_t size = 0;
    std::vector<std::uint64_t> family;

    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};

CanonicalKey canonical_key(const AutonomousSystem& system);

struct CanonicalKeyHash {
    std::size_t operator()(const CanonicalKey& key) const noexcept;
};

/// Rewrites `s` from `from`'s indices to `to`'s, matching by label. Elements
/// whose label is absent from `to` are dropped.
Subset translate(Subset s, const AutonomousSystem& from, const AutonomousSystem& to);

} // namespace autsys
