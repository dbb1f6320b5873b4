#include "autsys/kernels.hpp"

namespace autsys::kernels {
namespace {

Subset union_within_scalar(std::span<const Subset> family, Subset within)
{
    Subset acc;
    for (Subset m : family)
        if (m.subset_of(within))
            acc |= m;
    return acc;
}

Subset meet_containing_scalar(std::span<const Subset> family, Subset within, Subset required, Subset init)
{
    Subset acc = init;
    for (Subset m : family)
        if (m.subset_of(within) && required.subset_of(m))
            acc &= m;
    return acc;
}

std::uint64_t extract_bits(std::uint64_t value, std::uint64_t mask)
{
    std::uint64_t out = 0;
    for (std::uint64_t bit = 1; mask != 0; bit <<= 1) {
        std::uint64_t low = mask & -mask;
        if (value & low)
            out |= bit;
        mask ^= low;
    }
    return out;
}

void compress_scalar(std::span<const Subset> members, Subset drop, std::span<Subset> out)
{
    const std::uint64_t keep = ~drop.bits();
    for (std::size_t i = 0; i < members.size(); ++i)
        out[i] = Subset{extract_bits(members[i].bits(), keep)};
}

constexpr Table kScalar{Backend::Scalar, &union_within_scalar, &meet_containing_scalar, &compress_scalar};

} // namespace

const Table& detail::scalar_table() noexcept { return kScalar; }

} // namespace autsys::kernels
