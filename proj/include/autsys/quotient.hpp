#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "autsys/system.hpp"

namespace autsys {

/// A partition of a system's ground into labeled cells. Cells are kept in
/// order of their lowest element.
class Partition {
public:
    /// Cells over `system`'s ground. When `labels` is empty each cell is named
    /// by its element labels joined with '+'. Throws MalformedPartition unless
    /// the nonempty cells partition the ground and the labels are distinct and
    /// nonempty.
    static Partition of(const AutonomousSystem& system, std::vector<Subset> cells,
                        std::vector<std::string> labels = {});

    static Partition from_names(const AutonomousSystem& system,
                                const std::vector<std::vector<std::string>>& cells,
                                std::vector<std::string> labels = {});

    /// All singleton cells, each named after its element.
    static Partition discrete(const AutonomousSystem& system);

    std::size_t ground_size() const { return ground_size_; }
    const std::vector<Subset>& cells() const { return cells_; }
    const std::vector<std::string>& labels() const { return labels_; }
    bool is_discrete() const { return cells_.size() == ground_size_; }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    Partition() = default;

    std::size_t ground_size_ = 0;
    std::vector<Subset> cells_;
    std::vector<std::string> labels_;
};

/// A total function between labeled grounds. Both label lists are stored
/// sorted; the assignment is rewritten to match.
class GroundMap {
public:
    /// `assignment[i]` is the index into `target` of `source[i]`. Throws
    /// MalformedMap unless this is a function between two duplicate-free
    /// label lists.
    GroundMap(std::vector<std::string> source, std::vector<std::string> target, std::vector<unsigned> assignment);

    /// The surjection sending each element to the label of its cell.
    static GroundMap collapse(const AutonomousSystem& system, const Partition& partition);

    const std::vector<std::string>& source() const { return source_; }
    const std::vector<std::string>& target() const { return target_; }
    Element image(Element x) const { return Element{assignment_[x.index]}; }
    Subset preimage(Subset target_set) const;
    bool is_surjective() const;

private:
    std::vector<std::string> source_;
    std::vector<std::string> target_;
    std::vector<unsigned> assignment_;
    std::vector<Subset> fibers_;
};

/// True iff the preimage of every member of `q` is a member of `p`.
/// Throws MalformedMap when the map's grounds differ from the systems'.
bool is_homomorphism(const AutonomousSystem& p, const AutonomousSystem& q, const GroundMap& f);

/// Least upper bound: union-closure of all families embedded over the union
/// of the grounds. Throws EmptyInput.
AutonomousSystem join(std::span<const AutonomousSystem> systems);

/// The quotient structure on f's target: every target set whose preimage is a
/// member and that can be reached from ∅ by single insertions through such
/// sets. Throws MalformedMap or NotSurjective.
AutonomousSystem quotient_by_map(const AutonomousSystem& system, const GroundMap& f);

/// Throws MalformedPartition when the partition belongs to another ground.
AutonomousSystem quotient_by_partition(const AutonomousSystem& system, const Partition& partition);

/// True iff the quotient has a nonempty member.
bool is_homomorphism_induced(const AutonomousSystem& system, const Partition& partition);

} // namespace autsys
