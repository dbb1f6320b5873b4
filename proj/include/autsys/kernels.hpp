#pragma once

// Family-wide mask kernels. Every operation over "all members of a family"
// that reduces to independent per-word bit arithmetic lives here, with a
// portable scalar reference and an AVX2/BMI2 variant chosen at runtime.

#include <cstddef>
#include <span>

#include "autsys/subset.hpp"

namespace autsys::kernels {

enum class Backend { Scalar, Avx2 };

const char* to_string(Backend backend) noexcept;

struct Table {
    Backend backend;

    /// OR of all members m with m ⊆ within.
    Subset (*union_within)(std::span<const Subset> family, Subset within);

    /// AND of `init` with every member m such that m ⊆ within and
    /// required ⊆ m. Returns `init` when no member qualifies.
    Subset (*meet_containing)(std::span<const Subset> family, Subset within, Subset required, Subset init);

    /// out[i] = members[i] with the `drop` bits removed and the remaining bits
    /// packed downward (parallel bit extract over ~drop).
    void (*compress)(std::span<const Subset> members, Subset drop, std::span<Subset> out);
};

bool supported(Backend backend) noexcept;

/// Throws std::invalid_argument if the backend is not available here.
const Table& table(Backend backend);

/// Fastest supported backend, resolved once per process.
const Table& active() noexcept;

inline Subset union_within(std::span<const Subset> family, Subset within)
{
    return active().union_within(family, within);
}

inline Subset meet_containing(std::span<const Subset> family, Subset within, Subset required, Subset init)
{
    return active().meet_containing(family, within, required, init);
}

inline void compress(std::span<const Subset> members, Subset drop, std::span<Subset> out)
{
    active().compress(members, drop, out);
}

namespace detail {
const Table& scalar_table() noexcept;
#if defined(AUTSYS_HAVE_AVX2)
const Table& avx2_table() noexcept;
#endif
} // namespace detail

} // namespace autsys::kernels
