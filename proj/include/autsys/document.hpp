#pragma once

// The system document format:
//
//   {
//     "ground": ["a", "b"],
//     "autonomous": [
//       [],
//       ["a"],
//       ["a", "b"]
//     ]
//   }
//
// The empty set is implicit on input. Canonical output sorts labels, lists
// every member (the empty set first), orders members by size and then
// lexicographically by their sorted labels, and uses exactly the layout above.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "autsys/minors.hpp"
#include "autsys/order.hpp"
#include "autsys/system.hpp"

namespace autsys {

/// A system, or the report explaining why the document's family is not one.
/// Throws ParseError on malformed text, wrong shapes, duplicate ground
/// labels, and unknown labels.
std::variant<AutonomousSystem, ValidationReport> parse_system(std::string_view text);

/// Like parse_system but throws MalformedInput when the axioms fail.
AutonomousSystem read_system(std::string_view text);

/// An order document {"points": [...], "less_than": [[x, y], ...]}, the
/// shape written by to_json(PartialOrder). Throws ParseError on bad shapes
/// and MalformedInput on cycles or unknown points.
PartialOrder read_poset(std::string_view text);

/// Canonical text, newline-terminated.
std::string serialize(const AutonomousSystem& system);

/// Members of `system` in canonical output order.
std::vector<Subset> canonical_member_order(const AutonomousSystem& system);

nlohmann::json to_json(const AutonomousSystem& system);
nlohmann::json to_json(const ValidationReport& report);
nlohmann::json to_json(const PartialOrder& order);
nlohmann::json to_json(const AutonomousSystem& system, const CanonicalOrder& order);
nlohmann::json to_json(const ReductionStep& step, const AutonomousSystem& applied_to);
nlohmann::json to_json(const WitnessSequence& witness, const AutonomousSystem& target);

/// One human-readable line per step.
std::vector<std::string> narrate(const WitnessSequence& witness);

/// Graphviz source: nodes are the carrier's elements, edges the covering
/// pairs (lower to upper).
std::string hasse_dot(const AutonomousSystem& system, const CanonicalOrder& order);

} // namespace autsys
