#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "autsys/system.hpp"

namespace autsys {

/// Largest n accepted by the exhaustive enumerator.
inline constexpr std::size_t kMaxEnumerate = 5;
/// Largest n accepted by the random generators.
inline constexpr std::size_t kMaxRandom = 10;

/// Labels e1..en used by the generators.
std::vector<std::string> default_labels(std::size_t n);

/// Every labeled autonomous system on e1..en (with the full ground a member
/// when `normalized`), each exactly once, in a fixed order. Backtracks over
/// subsets in order of size, keeping the chosen family union-closed and
/// accessible. Throws TooLarge for n > kMaxEnumerate.
void enumerate_all(std::size_t n, bool normalized, const std::function<void(const AutonomousSystem&)>& sink);

std::vector<AutonomousSystem> enumerate_all(std::size_t n, bool normalized);

enum class GenMethod { FromRandomPoset, ChainClosure, SubdotOfLarger };

const char* to_string(GenMethod method) noexcept;
/// Throws MalformedInput on an unknown name.
GenMethod parse_gen_method(const std::string& name);

struct GenSpec {
    std::size_t n = 4;
    bool normalized = true;
    std::uint64_t seed = 0;
    GenMethod method = GenMethod::ChainClosure;
};

/// Deterministic in the spec. Throws TooLarge for n > kMaxRandom.
AutonomousSystem random_system(const GenSpec& spec);

} // namespace autsys
