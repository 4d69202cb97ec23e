#pragma once

#include "toledo/mgnclasses.hpp"

#include <string>
#include <vector>

namespace toledo {

// tau_{g,n} at level 5, q -> exp(2 pi i/5), every point colored t = e_1.
H2Class level5_tau(int g, int n);

struct ScalarCheck {
    std::string name;
    Rational value, expected;
    bool pass = false;
};

// tau = factor * K for (0,5); tau = factor * c^*K^E otherwise, both reduced.
struct UniformizationReport {
    int g = 0, n = 0;
    Rational factor;
    H2Class tau, rhs;
    bool proportional = false;
    std::vector<ScalarCheck> extra;
    bool passed() const;
};

// Cases (0,5), (1,2), (1,3), (2,1).
UniformizationReport uniformization_check(int g, int n);

}  // namespace toledo
