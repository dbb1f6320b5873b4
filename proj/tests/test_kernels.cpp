#include <random>
#include <vector>

#include <doctest.h>

#include "autsys/kernels.hpp"

using namespace autsys;
namespace k = autsys::kernels;

namespace {

std::vector<Subset> random_masks(std::mt19937_64& rng, std::size_t count, unsigned width)
{
    const std::uint64_t mask = width >= 64 ? ~0ULL : (1ULL << width) - 1;
    std::vector<Subset> out(count);
    for (auto& s : out)
        s = Subset{rng() & rng() & mask};
    return out;
}

} // namespace

TEST_CASE("the active backend is supported")
{
    CHECK(k::supported(k::Backend::Scalar));
    CHECK(k::supported(k::active().backend));
}

TEST_CASE("scalar and AVX2 kernels agree")
{
    if (!k::supported(k::Backend::Avx2)) {
        MESSAGE("AVX2 not available; only the scalar kernels were exercised");
        return;
    }
    const k::Table& s = k::table(k::Backend::Scalar);
    const k::Table& v = k::table(k::Backend::Avx2);
    std::mt19937_64 rng(11);
    for (std::size_t len : {0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 63, 64, 100, 1023}) {
        for (unsigned width : {3U, 8U, 33U, 64U}) {
            const auto family = random_masks(rng, len, width);
            for (int trial = 0; trial < 8; ++trial) {
                const Subset within{rng()};
                const Subset required{rng() & rng() & rng()};
                const Subset init{rng()};
                CHECK(s.union_within(family, within) == v.union_within(family, within));
                CHECK(s.meet_containing(family, within, required, init) ==
                      v.meet_containing(family, within, required, init));
                CHECK(s.union_within(family, Subset::full(64)) == v.union_within(family, Subset::full(64)));
                CHECK(s.meet_containing(family, Subset::full(64), Subset{}, init) ==
                      v.meet_containing(family, Subset::full(64), Subset{}, init));

                std::vector<Subset> a(len), b(len);
                const Subset drop{rng() & rng()};
                s.compress(family, drop, a);
                v.compress(family, drop, b);
                CHECK(a == b);
            }
        }
    }
}

TEST_CASE("scalar reference semantics")
{
    const k::Table& s = k::table(k::Backend::Scalar);
    const std::vector<Subset> family{Subset{0b0001}, Subset{0b0011}, Subset{0b0110}, Subset{0b1000}};
    CHECK(s.union_within(family, Subset{0b0111}) == Subset{0b0111});
    CHECK(s.union_within(family, Subset{0b0011}) == Subset{0b0011});
    CHECK(s.union_within({}, Subset{0b1111}) == Subset{});
    CHECK(s.meet_containing(family, Subset{0b1111}, Subset{0b0001}, Subset{0b1111}) == Subset{0b0001});
    CHECK(s.meet_containing(family, Subset{0b1111}, Subset{0b0100}, Subset{0b1111}) == Subset{0b0110});
    CHECK(s.meet_containing(family, Subset{0b0001}, Subset{0b0100}, Subset{0b1010}) == Subset{0b1010});

    std::vector<Subset> out(family.size());
    s.compress(family, Subset{0b0010}, out);
    CHECK(out == std::vector<Subset>{Subset{0b001}, Subset{0b001}, Subset{0b010}, Subset{0b100}});
}
