#include "autsys/fixtures.hpp"
#include "autsys/gen.hpp"
#include "autsys/minors.hpp"
#include "support.hpp"

using namespace autsys;
using testing::kind_of;
using testing::sets;

TEST_CASE("path systems")
{
    CHECK(sets(p_n(3)) == testing::sets({{"v1"}, {"v3"}, {"v1", "v3"}, {"v1", "v2"}, {"v2", "v3"}, {"v1", "v2", "v3"}}));
    CHECK(sets(p_n(1)) == testing::sets({{"v1"}}));
    CHECK(isomorphic(p_n(4), fixtures::p4()) == Bijection{0, 2, 3, 1}); // v1..v4 onto a, x, y, b
    CHECK(p_n(64).size() == 64);
    CHECK(kind_of([] { p_n(0); }) == ErrorKind::InvalidN);
    CHECK(kind_of([] { p_n(65); }) == ErrorKind::InvalidN);
}

TEST_CASE("non-intersecting pairs")
{
    const auto p3 = p_n(3);
    const auto pair = find_nonintersecting_pair(p3);
    REQUIRE(pair);
    CHECK(pair->a == p3.subset({"v1", "v2"}));
    CHECK(pair->b == p3.subset({"v2", "v3"}));
    CHECK_FALSE(find_nonintersecting_pair(fixtures::chain2()));

    const auto hex = fixtures::hex6();
    const auto hp = find_nonintersecting_pair(hex);
    REQUIRE(hp);
    CHECK(hp->a == hex.subset({"a1", "x"}));
    CHECK(hp->b == hex.subset({"a2", "x"}));
}

TEST_CASE("P3 extraction")
{
    const auto p3 = p_n(3);
    const auto w = extract_p3(p3, p3.subset({"v1", "v2"}), p3.subset({"v2", "v3"}));
    CHECK(w.is_subdot());
    CHECK(verify_witness(w, p3));
    CHECK(w.final_system() == p3);

    const auto hex = fixtures::hex6();
    const auto hw = extract_p3(hex, hex.subset({"a1", "x"}), hex.subset({"a2", "x"}));
    CHECK(hw.is_subdot());
    CHECK(verify_witness(hw, p3));
    const auto& last = hw.final_system();
    CHECK(last.labels() == std::vector<std::string>{"a1", "a2", "x"});
    CHECK(sets(last) == testing::sets({{"a1"}, {"a2"}, {"a1", "a2"}, {"a1", "x"}, {"a2", "x"}, {"a1", "a2", "x"}}));
    CHECK(hw.final_iso == Bijection{0, 2, 1}); // a1 -> v1, a2 -> v3, x -> v2

    const auto chain = fixtures::chain2();
    CHECK(kind_of([&] { extract_p3(chain, chain.subset({"p"}), chain.ground()); }) ==
          ErrorKind::PreconditionFailed);
}

TEST_CASE("bidirectional pairs")
{
    const auto p4 = fixtures::p4();
    const auto pair = find_bidirectional_pair(p4);
    REQUIRE(pair);
    CHECK(*pair == BidirectionalPair{p4.element("x"), p4.element("y"), p4.subset({"a", "x", "y"}),
                                     p4.subset({"x", "y", "b"})});

    const auto hex = fixtures::hex6();
    const auto hp = find_bidirectional_pair(hex);
    REQUIRE(hp);
    CHECK(*hp == BidirectionalPair{hex.element("x"), hex.element("y"), hex.subset({"a1", "a2", "x", "y"}),
                                   hex.subset({"b1", "b2", "x", "y"})});

    for (std::size_t n = 0; n <= 4; ++n)
        for (const auto& s : enumerate_all(n, false))
            if (is_poset(s))
                CHECK_FALSE(find_bidirectional_pair(s));
}

TEST_CASE("P4 extraction")
{
    const auto p4 = fixtures::p4();
    const auto w = extract_p4(p4, *find_bidirectional_pair(p4));
    CHECK(verify_witness(w, p_n(4)));

    const auto hex = fixtures::hex6();
    const auto hw = extract_p4(hex, *find_bidirectional_pair(hex));
    CHECK(verify_witness(hw, p_n(4)));
    CHECK_FALSE(hw.is_subdot());
    REQUIRE_FALSE(hw.steps.empty());
    CHECK(hw.steps.back().kind == StepKind::Quotient);
    CHECK(hw.steps.back().partition->cells().size() == 4);

    const auto chain = fixtures::chain2();
    const BidirectionalPair fake{Element{0}, Element{1}, chain.ground(), chain.ground()};
    CHECK(kind_of([&] { extract_p4(chain, fake); }) == ErrorKind::PreconditionFailed);
}

TEST_CASE("subdot search")
{
    const auto p4 = fixtures::p4();
    const auto p3 = p_n(3);
    const auto w = subdot_reachable(p4, p3);
    REQUIRE(w);
    REQUIRE(w->steps.size() == 1);
    CHECK(w->steps[0].kind == StepKind::Contract);
    CHECK(verify_witness(*w, p3));

    CHECK_FALSE(subdot_reachable(fixtures::hex6(), p_n(4)));

    const auto self = subdot_reachable(p4, p4);
    REQUIRE(self);
    CHECK(self->steps.empty());

    SearchOptions tight;
    tight.bound = 5;
    CHECK(kind_of([&] { subdot_reachable(fixtures::hex6(), p3, tight); }) == ErrorKind::SearchBoundExceeded);
}

TEST_CASE("induced-minor search")
{
    const auto hex = fixtures::hex6();
    const auto p4 = p_n(4);
    const auto w = induced_minor(hex, p4);
    REQUIRE(w);
    CHECK_FALSE(w->is_subdot());
    CHECK(verify_witness(*w, p4));

    SearchOptions strict;
    strict.require_induced = true;
    CHECK(induced_minor(hex, p4, strict));

    for (std::size_t n = 0; n <= 4; ++n)
        for (const auto& s : enumerate_all(n, true))
            if (is_poset(s))
                CHECK_FALSE(induced_minor(s, p_n(3)));

    const auto self = induced_minor(hex, hex);
    REQUIRE(self);
    CHECK(self->steps.empty());
}

TEST_CASE("verify_witness rejects tampering")
{
    const auto hex = fixtures::hex6();
    const auto p4 = p_n(4);
    const auto good = extract_p4(hex, *find_bidirectional_pair(hex));
    REQUIRE(verify_witness(good, p4));

    SUBCASE("corrupted intermediate")
    {
        auto bad = good;
        bad.intermediates.front() = fixtures::chain2();
        CHECK_FALSE(verify_witness(bad, p4));
    }
    SUBCASE("wrong final isomorphism")
    {
        auto bad = good;
        std::swap(bad.final_iso[0], bad.final_iso[1]);
        CHECK_FALSE(verify_witness(bad, p4));
    }
    SUBCASE("truncated steps")
    {
        auto bad = good;
        bad.steps.pop_back();
        CHECK_FALSE(verify_witness(bad, p4));
    }
    SUBCASE("wrong target")
    {
        CHECK_FALSE(verify_witness(good, p_n(3)));
    }
    SUBCASE("short final iso")
    {
        auto bad = good;
        bad.final_iso.pop_back();
        CHECK_FALSE(verify_witness(bad, p4));
    }
}
