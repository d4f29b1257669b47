#include <iostream>
#include <vector>

#include "liaison/acceptance.hpp"

int main() {
    std::vector<liaison::CriterionResult> rs = liaison::run_acceptance_suite(std::cout);
    bool ok = liaison::acceptance_passed(rs);
    std::cout << (ok ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << "\n";
    return ok ? 0 : 1;
}
