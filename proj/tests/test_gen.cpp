#include <set>

#include "autsys/gen.hpp"
#include "autsys/oracle.hpp"
#include "autsys/order.hpp"
#include "support.hpp"

using namespace autsys;
using testing::kind_of;

namespace {

oracle::Family masks(const AutonomousSystem& s)
{
    oracle::Family f;
    for (Subset m : s.family())
        f.push_back(m.bits());
    return f;
}

} // namespace

TEST_CASE("small enumeration counts")
{
    CHECK(enumerate_all(1, true).size() == 1);
    CHECK(enumerate_all(2, true).size() == 3);
    CHECK(enumerate_all(0, true).size() == 1);
    CHECK(enumerate_all(0, false).size() == 1);
    CHECK(kind_of([] { enumerate_all(kMaxEnumerate + 1, false); }) == ErrorKind::TooLarge);
}

TEST_CASE("enumeration matches the naive filter")
{
    for (std::size_t n = 0; n <= 4; ++n)
        for (bool normalized : {false, true}) {
            std::set<oracle::Family> fast;
            for (const auto& s : enumerate_all(n, normalized))
                CHECK(fast.insert(masks(s)).second);
            const auto slow = oracle::all_valid_families(n, normalized);
            CHECK(fast == std::set<oracle::Family>(slow.begin(), slow.end()));
        }
}

TEST_CASE("enumeration order is stable")
{
    const auto first = enumerate_all(3, false);
    const auto second = enumerate_all(3, false);
    CHECK(first == second);
}

TEST_CASE("random systems")
{
    for (GenMethod method : {GenMethod::FromRandomPoset, GenMethod::ChainClosure, GenMethod::SubdotOfLarger})
        for (std::uint64_t seed = 0; seed < 50; ++seed)
            for (bool normalized : {false, true}) {
                const GenSpec spec{1 + seed % kMaxRandom, normalized, seed, method};
                const auto s = random_system(spec);
                CHECK(s == random_system(spec));
                CHECK(s.size() == spec.n);
                CHECK(validate(s.labels(), s.family()).ok());
                if (normalized)
                    CHECK(s.is_member(s.ground()));
                if (method == GenMethod::FromRandomPoset)
                    CHECK(is_poset(s));
            }
    CHECK(kind_of([] { random_system({kMaxRandom + 1, true, 0, GenMethod::ChainClosure}); }) == ErrorKind::TooLarge);
}

TEST_CASE("method names round trip")
{
    for (GenMethod m : {GenMethod::FromRandomPoset, GenMethod::ChainClosure, GenMethod::SubdotOfLarger})
        CHECK(parse_gen_method(to_string(m)) == m);
    CHECK(kind_of([] { parse_gen_method("uniform"); }) == ErrorKind::MalformedInput);
}
