#pragma once

#include <string>
#include <vector>

#include <cstdint>

namespace sexticnet::verify {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// The eleven acceptance checks, in order.  Every tolerance is exact; the only
// randomness flows from the seed.
std::vector<CriterionResult> run_all(uint64_t seed);

CriterionResult run_criterion(int number, uint64_t seed);

int criterion_count();
std::string criterion_name(int number);

}  // namespace sexticnet::verify
