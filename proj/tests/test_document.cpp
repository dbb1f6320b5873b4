#include "autsys/document.hpp"
#include "autsys/fixtures.hpp"
#include "autsys/gen.hpp"
#include "support.hpp"

using namespace autsys;

TEST_CASE("canonical serialization")
{
    const auto chain = fixtures::chain2();
    CHECK(serialize(chain) == "{\n"
                              "  \"ground\": [\"p\", \"q\"],\n"
                              "  \"autonomous\": [\n"
                              "    [],\n"
                              "    [\"p\"],\n"
                              "    [\"p\", \"q\"]\n"
                              "  ]\n"
                              "}\n");
}

TEST_CASE("parsing")
{
    SUBCASE("empty set is implicit")
    {
        const auto s = read_system(R"({"ground": ["q", "p"], "autonomous": [["p"], ["q", "p"]]})");
        CHECK(s == fixtures::chain2());
    }
    SUBCASE("duplicates are merged")
    {
        const auto s = read_system(R"({"ground": ["p"], "autonomous": [["p"], ["p", "p"], []]})");
        CHECK(s.family().size() == 2);
    }
    SUBCASE("axiom failures come back as a report")
    {
        const auto parsed = parse_system(R"({"ground": ["p", "q"], "autonomous": [["p"], ["q"]]})");
        REQUIRE(std::holds_alternative<ValidationReport>(parsed));
        CHECK(std::get<ValidationReport>(parsed).union_violations.size() == 1);
        CHECK(testing::kind_of([] { read_system(R"({"ground": ["p", "q"], "autonomous": [["p"], ["q"]]})"); }) ==
              ErrorKind::MalformedInput);
    }
}

TEST_CASE("parse errors carry positions")
{
    auto position = [](const char* text) -> std::pair<std::size_t, std::size_t> {
        try {
            parse_system(text);
        } catch (const ParseError& e) {
            return {e.line(), e.column()};
        }
        FAIL("expected a parse error");
        return {0, 0};
    };
    CHECK(position("{\n  \"ground\": [\"p\"],\n  \"autonomous\": [[\"z\"]]\n}") == std::pair<std::size_t, std::size_t>{3, 19});
    CHECK(position("{\"ground\": [\"p\"], \"autonomous\": [], \"extra\": 1}").second == 37);
    CHECK(position("{\"ground\": [\"p\", \"p\"], \"autonomous\": []}").first == 1);
    CHECK(position("{\"ground\": [\"p\"],\n \"autonomous\": [[\"p\"]") .first == 2);
    CHECK(position("[]") == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(position("{\"ground\": [1], \"autonomous\": []}").first == 1);
}

TEST_CASE("parse after serialize is the identity")
{
    for (std::size_t n = 0; n <= 3; ++n)
        for (const auto& s : enumerate_all(n, false)) {
            const std::string text = serialize(s);
            CHECK(read_system(text) == s);
            CHECK(serialize(read_system(text)) == text);
        }
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto s = random_system({8, seed % 2 == 0, seed, GenMethod::SubdotOfLarger});
        CHECK(read_system(serialize(s)) == s);
    }
}

TEST_CASE("poset documents")
{
    const auto order = read_poset(R"({"points": ["b", "x", "y"], "less_than": [["b", "y"], ["y", "x"]]})");
    CHECK(order.leq(Element{0}, Element{1}));
    CHECK(read_poset(to_json(order).dump()) == order);
    CHECK(testing::kind_of([] { read_poset(R"({"points": ["a"], "less_than": [["a"]]})"); }) ==
          ErrorKind::ParseError);
    CHECK(testing::kind_of([] { read_poset(R"({"points": ["a", "b"], "less_than": [["a", "b"], ["b", "a"]]})"); }) ==
          ErrorKind::MalformedInput);
}

TEST_CASE("diagrams")
{
    const auto p4 = fixtures::p4();
    const std::string dot = hasse_dot(p4, canonical_order(p4, p4.subset({"a", "x", "y"})));
    CHECK(dot.find("\"a\" -> \"x\"") != std::string::npos);
    CHECK(dot.find("\"x\" -> \"y\"") != std::string::npos);
    CHECK(dot.find("\"a\" -> \"y\"") == std::string::npos); // not a covering pair
}
