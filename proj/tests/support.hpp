#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "autsys/error.hpp"
#include "autsys/system.hpp"

namespace testing {

using Names = std::vector<std::vector<std::string>>;

/// The family as sets of labels, so expectations read like the math.
inline std::set<std::set<std::string>> sets(const autsys::AutonomousSystem& s)
{
    std::set<std::set<std::string>> out;
    for (autsys::Subset m : s.family()) {
        auto names = s.names(m);
        out.emplace(names.begin(), names.end());
    }
    return out;
}

inline std::set<std::set<std::string>> sets(const Names& family)
{
    std::set<std::set<std::string>> out{{}};
    for (const auto& m : family)
        out.emplace(m.begin(), m.end());
    return out;
}

inline autsys::ErrorKind kind_of(const std::function<void()>& body)
{
    try {
        body();
    } catch (const autsys::Error& e) {
        return e.kind();
    }
    FAIL("expected an autsys::Error");
    return autsys::ErrorKind::MalformedInput;
}

} // namespace testing
