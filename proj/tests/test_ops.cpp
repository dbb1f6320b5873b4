#include "autsys/fixtures.hpp"
#include "autsys/gen.hpp"
#include "autsys/minors.hpp"
#include "autsys/ops.hpp"
#include "support.hpp"

using namespace autsys;
using testing::kind_of;
using testing::sets;

TEST_CASE("contraction")
{
    const auto p4 = fixtures::p4();
    const auto c = contraction(p4, p4.subset({"a"}));
    CHECK(sets(c) == testing::sets({{"b"}, {"x"}, {"y", "b"}, {"x", "y"}, {"x", "b"}, {"x", "y", "b"}}));
    const auto iso = isomorphic(p_n(3), c);
    REQUIRE(iso);
    // v1 -> x, v2 -> y, v3 -> b, or the mirror image
    CHECK(c.label(Element{(*iso)[1]}) == "y");

    const auto p3 = p_n(3);
    CHECK(contraction(p3, Subset{}) == p3);
    CHECK(sets(contraction(p3, p3.subset({"v2"}))) == testing::sets({{"v1"}, {"v3"}, {"v1", "v3"}}));
}

TEST_CASE("deletion")
{
    const auto p4 = fixtures::p4();
    CHECK(sets(deletion(p4, p4.subset({"a"}))) == testing::sets({{"b"}, {"y", "b"}, {"x", "y", "b"}}));
    const auto p3 = p_n(3);
    CHECK(deletion(p3, Subset{}) == p3);
    CHECK(sets(deletion(p3, p3.subset({"v2"}))) == testing::sets({{"v1"}, {"v3"}, {"v1", "v3"}}));
}

TEST_CASE("restrict and dot")
{
    const auto p4 = fixtures::p4();
    CHECK(restrict_to(p4, p4.subset({"x", "y", "b"})) == contraction(p4, p4.subset({"a"})));
    CHECK(restrict_to(p4, p4.ground()) == p4);
    CHECK(restrict_to(p4, Subset{}) == AutonomousSystem{});

    const auto hex = fixtures::hex6();
    CHECK(dot(hex, hex.ground()) == hex);
    CHECK(sets(dot(p4, p4.subset({"a", "x", "y"}))) == testing::sets({{"a"}, {"a", "x"}, {"a", "x", "y"}}));
    CHECK(dot(p4, Subset{}) == AutonomousSystem{});
}

TEST_CASE("operands must lie in the ground")
{
    const auto p3 = p_n(3);
    const Subset outside = Subset::single(Element{5});
    CHECK(kind_of([&] { contraction(p3, outside); }) == ErrorKind::ElementOutside);
    CHECK(kind_of([&] { deletion(p3, outside); }) == ErrorKind::ElementOutside);
    CHECK(kind_of([&] { apply_step(p3, ReductionStep::remove(outside)); }) == ErrorKind::ElementOutside);
}

TEST_CASE("apply_step dispatches")
{
    const auto p4 = fixtures::p4();
    const Subset a = p4.subset({"a"});
    CHECK(apply_step(p4, ReductionStep::remove(a)) == deletion(p4, a));
    CHECK(apply_step(p4, ReductionStep::contract(a)) == contraction(p4, a));
    CHECK(std::string(to_string(StepKind::Quotient)) == "quotient");
}

// Property: results are valid systems, and operations on disjoint operands
// compose the way their definitions say.
TEST_CASE("reductions preserve the axioms and compose")
{
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto& s : enumerate_all(n, false)) {
            const Subset g = s.ground();
            for (std::uint64_t c = 0; c <= g.bits(); ++c) {
                const Subset cs{c};
                const auto del = deletion(s, cs);
                const auto con = contraction(s, cs);
                CHECK(validate(del.labels(), del.family()).ok());
                CHECK(validate(con.labels(), con.family()).ok());
                CHECK(del.size() == n - cs.size());
                // deleting is never richer than contracting
                for (Subset m : del.family())
                    CHECK(con.is_member(m));

                // split c into a low element and the rest; doing them in turn matches doing c at once
                if (cs.empty())
                    continue;
                const Subset first = Subset::single(cs.first());
                const Subset rest = cs - first;
                const auto d1 = deletion(s, first);
                const auto c1 = contraction(s, first);
                CHECK(deletion(d1, translate(rest, s, d1)) == del);
                CHECK(contraction(c1, translate(rest, s, c1)) == con);
            }
        }
}
