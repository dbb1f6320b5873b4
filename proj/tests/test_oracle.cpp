// The oracle is the reference for other tests, so it gets its own checks
// against hand-computed values.

#include <doctest.h>

#include "autsys/oracle.hpp"

using namespace autsys::oracle;

TEST_CASE("naive family enumeration")
{
    // labeled antimatroids with the ground feasible: 1, 1, 3, 22, 485
    const std::size_t known[] = {1, 1, 3, 22, 485};
    for (std::size_t n = 0; n <= 4; ++n)
        CHECK(all_valid_families(n, true).size() == known[n]);
    CHECK(all_valid_families(1, false).size() == 2);
    CHECK(is_valid({0, 1, 3}, 2));
    CHECK_FALSE(is_valid({0, 3}, 2));
    CHECK_FALSE(is_valid({0, 1, 2}, 2));
    CHECK_FALSE(is_valid({1}, 1));
}

TEST_CASE("union closure and quotients")
{
    CHECK(union_closure({0, 1, 2}) == Family{0, 1, 2, 3});
    // P3 on bits v1=1, v2=2, v3=4; merge v1 and v3 into cell 0, v2 into cell 1
    const Family p3{0, 1, 3, 4, 5, 6, 7};
    CHECK(maximal_quotient(p3, {0, 1, 0}, 2) == Family{0, 1, 3});
    CHECK(maximal_quotient(p3, {0, 0, 0}, 1) == Family{0, 1});
}

TEST_CASE("orders and contexts")
{
    CHECK(all_strict_orders(2).size() == 3);
    CHECK(all_strict_orders(3).size() == 19);
    CHECK(all_strict_orders(4).size() == 219);
    // chain 0 < 1: below[1] = {0}
    CHECK(down_sets({0, 1}) == Family{0, 1, 3});

    const Family chain{0, 1, 3};
    CHECK(context_leq(chain, 3, 0, 1));
    CHECK_FALSE(context_leq(chain, 3, 1, 0));
    CHECK(meet_above(chain, 3, 2) == 3);
    CHECK(meet_above(chain, 3, 1) == 1);

    CHECK(set_partitions(3, 3).size() == 5);
    CHECK(set_partitions(4, 2).size() == 8);
    CHECK(set_partitions(0, 3).size() == 1);
}
