#pragma once

// Named example systems.

#include "autsys/system.hpp"

namespace autsys::fixtures {

/// P3 on v1, v2, v3 (same as p_n(3)).
AutonomousSystem p3();

/// The four-point path a - x - y - b.
AutonomousSystem p4();

/// Two-element chain p < q: {∅, {p}, {p,q}}.
AutonomousSystem chain2();

/// Six points a1, a2, x, y, b1, b2; members are unions of {a1}, {a2}, {b1},
/// {b2}, {a1,x}, {a2,x}, {b1,y}, {b2,y}, {a1,a2,x,y}, {b1,b2,x,y}. Has P4 as
/// an induced minor but not as a subdot.
AutonomousSystem hex6();

} // namespace autsys::fixtures
