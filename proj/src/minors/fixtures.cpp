#include "autsys/fixtures.hpp"

#include "autsys/minors.hpp"

namespace autsys::fixtures {

AutonomousSystem p3() { return p_n(3); }

AutonomousSystem p4()
{
    return AutonomousSystem::make({"a", "x", "y", "b"},
                                  {{},
                                   {"a"},
                                   {"b"},
                                   {"a", "b"},
                                   {"a", "x"},
                                   {"y", "b"},
                                   {"a", "x", "b"},
                                   {"a", "y", "b"},
                                   {"a", "x", "y"},
                                   {"x", "y", "b"},
                                   {"a", "x", "y", "b"}});
}

AutonomousSystem chain2() { return AutonomousSystem::make({"p", "q"}, {{}, {"p"}, {"p", "q"}}); }

AutonomousSystem hex6()
{
    const std::vector<std::vector<std::string>> generators{
        {"a1"}, {"a2"}, {"b1"}, {"b2"}, {"a1", "x"}, {"a2", "x"}, {"b1", "y"}, {"b2", "y"},
        {"a1", "a2", "x", "y"}, {"b1", "b2", "y", "x"}};
    std::vector<std::vector<std::string>> family{{}};
    for (unsigned pick = 1; pick < (1U << generators.size()); ++pick) {
        std::vector<std::string> set;
        for (unsigned g = 0; g < generators.size(); ++g)
            if ((pick >> g) & 1U)
                set.insert(set.end(), generators[g].begin(), generators[g].end());
        family.push_back(std::move(set));
    }
    return AutonomousSystem::make({"a1", "a2", "x", "y", "b1", "b2"}, family);
}

} // namespace autsys::fixtures
