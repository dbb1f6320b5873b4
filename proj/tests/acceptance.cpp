// Acceptance census: one line per criterion, nonzero exit if any fails.

#include <cstdio>
#include <cstdlib>
#include <exception>

#include "autsys/census.hpp"

int main()
{
    try {
        bool all = true;
        autsys::census::run_all({}, [&](const autsys::census::Result& r) {
            std::printf("%s\n", autsys::census::format(r).c_str());
            std::fflush(stdout);
            all = all && r.passed;
        });
        std::printf("%s\n", all ? "all criteria passed" : "some criteria FAILED");
        return all ? EXIT_SUCCESS : EXIT_FAILURE;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance aborted: %s\n", e.what());
        return EXIT_FAILURE;
    }
}
