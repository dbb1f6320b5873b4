#include "autsys/fixtures.hpp"
#include "autsys/minors.hpp"
#include "autsys/quotient.hpp"
#include "support.hpp"

using namespace autsys;
using testing::kind_of;
using testing::sets;

TEST_CASE("homomorphisms")
{
    const auto p3 = p_n(3);
    CHECK(is_homomorphism(p3, p3, GroundMap(p3.labels(), p3.labels(), {0, 1, 2})));

    const auto hex = fixtures::hex6();
    const auto p4 = fixtures::p4();
    // hex labels sorted: a1 a2 b1 b2 x y; p4 labels sorted: a b x y
    const GroundMap f(hex.labels(), p4.labels(), {0, 0, 1, 1, 2, 3});
    CHECK(is_homomorphism(hex, p4, f));

    const auto point = AutonomousSystem::make({"z"}, {{}, {"z"}});
    CHECK(is_homomorphism(fixtures::chain2(), point, GroundMap({"p", "q"}, {"z"}, {0, 0})));

    // sending the middle of P3 to an axiom breaks the preimage of {z}
    const auto two = AutonomousSystem::make({"m", "z"}, {{}, {"z"}, {"m", "z"}});
    CHECK_FALSE(is_homomorphism(p3, two, GroundMap(p3.labels(), {"m", "z"}, {0, 1, 0})));
}

TEST_CASE("ground maps")
{
    CHECK(kind_of([] { GroundMap({"a", "b"}, {"z"}, {0}); }) == ErrorKind::MalformedMap);
    CHECK(kind_of([] { GroundMap({"a"}, {"z"}, {1}); }) == ErrorKind::MalformedMap);
    CHECK(kind_of([] { GroundMap({"a", "a"}, {"z"}, {0, 0}); }) == ErrorKind::MalformedMap);

    const GroundMap f({"b", "a"}, {"y", "x"}, {0, 1}); // b -> y, a -> x
    CHECK(f.source() == std::vector<std::string>{"a", "b"});
    CHECK(f.image(Element{0}) == Element{0});
    CHECK(f.image(Element{1}) == Element{1});
    CHECK_FALSE(GroundMap({"a"}, {"x", "y"}, {0}).is_surjective());
}

TEST_CASE("join")
{
    const auto left = AutonomousSystem::make({"p", "q"}, {{}, {"p"}, {"p", "q"}});
    const auto right = AutonomousSystem::make({"p", "q"}, {{}, {"q"}, {"p", "q"}});
    const AutonomousSystem both[] = {left, right};
    CHECK(sets(join(both)) == testing::sets({{"p"}, {"q"}, {"p", "q"}}));

    const AutonomousSystem twice[] = {left, left};
    CHECK(join(twice) == left);

    const auto other = AutonomousSystem::make({"r", "s"}, {{}, {"r"}, {"r", "s"}});
    const AutonomousSystem chains[] = {fixtures::chain2(), other};
    const auto product = join(chains);
    CHECK(product.size() == 4);
    CHECK(product.family().size() == 9); // 3 down-sets times 3 down-sets
    CHECK(product.is_member(product.subset({"p", "r", "s"})));
    CHECK_FALSE(product.is_member(product.subset({"q"})));

    CHECK(kind_of([] { join(std::span<const AutonomousSystem>{}); }) == ErrorKind::EmptyInput);
}

TEST_CASE("quotients")
{
    const auto hex = fixtures::hex6();
    const auto cells = Partition::from_names(hex, {{"a1", "a2"}, {"x"}, {"y"}, {"b1", "b2"}});
    CHECK(cells.labels() == std::vector<std::string>{"a1+a2", "b1+b2", "x", "y"});
    const auto q = quotient_by_partition(hex, cells);
    CHECK(isomorphic(q, fixtures::p4()));
    CHECK(is_homomorphism_induced(hex, cells));

    const auto p3 = p_n(3);
    CHECK(quotient_by_partition(p3, Partition::discrete(p3)) == p3);

    const auto chain = fixtures::chain2();
    const auto point = quotient_by_map(chain, GroundMap(chain.labels(), {"z"}, {0, 0}));
    CHECK(sets(point) == testing::sets({{"z"}}));

    const auto merged = quotient_by_partition(p3, Partition::from_names(p3, {{"v1", "v3"}, {"v2"}}, {"al", "m"}));
    CHECK(sets(merged) == testing::sets({{"al"}, {"al", "m"}}));
    CHECK(is_homomorphism_induced(p3, Partition::from_names(p3, {{"v1", "v3"}, {"v2"}})));

    const auto three = AutonomousSystem::make({"p", "q", "r"}, {{}, {"p"}, {"p", "q"}, {"p", "q", "r"}});
    const auto split = Partition::from_names(three, {{"p", "r"}, {"q"}});
    CHECK(quotient_by_partition(three, split).family().size() == 1);
    CHECK_FALSE(is_homomorphism_induced(three, split));
}

TEST_CASE("partition and map errors")
{
    const auto p3 = p_n(3);
    CHECK(kind_of([&] { Partition::from_names(p3, {{"v1"}, {"v2"}}); }) == ErrorKind::MalformedPartition);
    CHECK(kind_of([&] { Partition::from_names(p3, {{"v1", "v2"}, {"v2", "v3"}}); }) ==
          ErrorKind::MalformedPartition);
    CHECK(kind_of([&] { Partition::from_names(p3, {{"v1"}, {}, {"v2", "v3"}}); }) ==
          ErrorKind::MalformedPartition);
    CHECK(kind_of([&] { Partition::from_names(p3, {{"v1"}, {"v2", "v3"}}, {"s", "s"}); }) ==
          ErrorKind::MalformedPartition);
    CHECK(kind_of([&] { quotient_by_map(p3, GroundMap(p3.labels(), {"x", "y"}, {0, 0, 0})); }) ==
          ErrorKind::NotSurjective);
    const auto hex = fixtures::hex6();
    CHECK(kind_of([&] { quotient_by_partition(p3, Partition::discrete(hex)); }) == ErrorKind::MalformedPartition);
}
