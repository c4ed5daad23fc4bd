#include <cstdio>

#include "heptalift/acceptance.hpp"

int main()
{
    auto results = heptalift::run_acceptance(stdout);
    int failed = 0;
    for (const auto& r : results)
        failed += r.passed() ? 0 : 1;
    std::printf("%d of %zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
    return failed == 0 ? 0 : 1;
}
