#include "autsys/fixtures.hpp"
#include "autsys/minors.hpp"
#include "autsys/order.hpp"
#include "support.hpp"

using namespace autsys;
using testing::kind_of;
using testing::sets;

namespace {

std::vector<std::pair<std::string, std::string>> named(const AutonomousSystem& s, const CanonicalOrder& order)
{
    std::vector<std::pair<std::string, std::string>> out;
    for (auto [x, y] : order.strict_pairs())
        out.emplace_back(s.label(x), s.label(y));
    std::sort(out.begin(), out.end());
    return out;
}

using Pairs = std::vector<std::pair<std::string, std::string>>;

} // namespace

TEST_CASE("canonical order on P4")
{
    const auto p4 = fixtures::p4();
    const auto chain = canonical_order(p4, p4.subset({"a", "x", "y"}));
    CHECK(named(p4, chain) == Pairs{{"a", "x"}, {"a", "y"}, {"x", "y"}});
    CHECK(chain.is_maximum(p4.element("y")));
    CHECK(chain.covering_pairs().size() == 2);

    CHECK(canonical_order(p4, p4.ground()).strict_pairs().empty());
    CHECK(kind_of([&] { canonical_order(p4, p4.subset({"x"})); }) == ErrorKind::NotAutonomous);
}

TEST_CASE("canonical order on a chain")
{
    const auto chain = fixtures::chain2();
    CHECK(named(chain, canonical_order(chain, chain.ground())) == Pairs{{"p", "q"}});
}

TEST_CASE("minimal member containing an element")
{
    const auto p3 = p_n(3);
    CHECK(min_aut_containing(p3, p3.ground(), p3.element("v2")) == p3.subset({"v1", "v2"}));

    const auto p4 = fixtures::p4();
    CHECK(min_aut_containing(p4, p4.subset({"a", "x", "y"}), p4.element("y")) == p4.subset({"a", "x", "y"}));
    CHECK(min_aut_containing(p4, p4.ground(), p4.element("a")) == p4.subset({"a"}));
    CHECK(kind_of([&] { min_aut_containing(p4, p4.subset({"a"}), p4.element("x")); }) ==
          ErrorKind::ElementOutside);
}

TEST_CASE("poset detection")
{
    CHECK(is_poset(fixtures::chain2()));
    const auto power = AutonomousSystem::make({"p", "q"}, {{}, {"p"}, {"q"}, {"p", "q"}});
    CHECK(is_poset(power));

    const auto p3 = p_n(3);
    const auto check = is_poset(p3);
    CHECK_FALSE(check.poset);
    REQUIRE(check.witness);
    CHECK(check.witness->a == p3.subset({"v1", "v2"}));
    CHECK(check.witness->b == p3.subset({"v2", "v3"}));
}

TEST_CASE("to_poset")
{
    const auto chain = to_poset(fixtures::chain2());
    REQUIRE(chain);
    CHECK(chain->strict_pairs() == std::vector<std::pair<Element, Element>>{{Element{0}, Element{1}}});

    const auto power = AutonomousSystem::make({"p", "q"}, {{}, {"p"}, {"q"}, {"p", "q"}});
    REQUIRE(to_poset(power));
    CHECK(to_poset(power)->strict_pairs().empty());

    CHECK_FALSE(to_poset(p_n(3)));
}

TEST_CASE("from_poset")
{
    CHECK(from_poset(PartialOrder::from_pairs({"p", "q"}, {{"p", "q"}})) == fixtures::chain2());
    CHECK(sets(from_poset(PartialOrder::from_pairs({"p", "q"}, {}))) == testing::sets({{"p"}, {"q"}, {"p", "q"}}));
    CHECK(sets(from_poset(PartialOrder::from_pairs({"p", "q", "r"}, {{"p", "r"}, {"q", "r"}}))) ==
          testing::sets({{"p"}, {"q"}, {"p", "q"}, {"p", "q", "r"}}));

    std::vector<std::string> wide;
    for (int i = 0; i < 21; ++i)
        wide.push_back("w" + std::to_string(i));
    CHECK(kind_of([&] { from_poset(PartialOrder::from_pairs(wide, {})); }) == ErrorKind::TooLarge);
}

TEST_CASE("partial orders from pairs")
{
    const auto order = PartialOrder::from_pairs({"c", "a", "b"}, {{"a", "b"}, {"b", "c"}});
    CHECK(order.labels() == std::vector<std::string>{"a", "b", "c"});
    CHECK(order.leq(Element{0}, Element{2})); // closed transitively
    CHECK(kind_of([] { PartialOrder::from_pairs({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }) ==
          ErrorKind::MalformedInput);
    CHECK(kind_of([] { PartialOrder::from_pairs({"a"}, {{"a", "z"}}); }) == ErrorKind::MalformedInput);
}

TEST_CASE("to_poset works on the normalized system")
{
    // r lies in no member; the order is over {p, q}
    const auto loose = AutonomousSystem::make({"p", "q", "r"}, {{}, {"p"}, {"p", "q"}});
    const auto order = to_poset(loose);
    REQUIRE(order);
    CHECK(order->labels() == std::vector<std::string>{"p", "q"});
}
