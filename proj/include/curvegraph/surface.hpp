#pragma once

#include <cstdlib>
#include <string>

#include "curvegraph/errors.hpp"

namespace curvegraph {

// Orientable surface of genus g with n punctures and b boundary components.
struct Surface {
    int genus = 0;
    int punctures = 0;
    int boundary = 0;
};

inline int euler_characteristic(const Surface& s) {
    return 2 - 2 * s.genus - s.punctures - s.boundary;
}

// Complexity 3g - 3 + n + b; boundary components count like punctures here.
inline int complexity(const Surface& s) {
    return 3 * s.genus - 3 + s.punctures + s.boundary;
}

inline bool is_closed(const Surface& s) {
    return s.punctures == 0 && s.boundary == 0;
}

// Ceilings on the size of a bigon-free bivalent graph carrying a filling pair:
// real branches are capped by 9|chi| on a closed surface and 3|chi| otherwise,
// infinitesimal ones by 24|chi| - 8n where only genuine punctures enter the
// correction term.
struct BranchBudget {
    long long max_real = 0;
    long long max_infinitesimal = 0;
};

inline BranchBudget branch_budget(const Surface& s) {
    if (complexity(s) < 2)
        throw PreconditionError("branch budget needs complexity >= 2, got " +
                                std::to_string(complexity(s)));
    long long abs_chi = std::abs(euler_characteristic(s));
    BranchBudget b;
    b.max_real = (is_closed(s) ? 9 : 3) * abs_chi;
    b.max_infinitesimal = 24 * abs_chi - 8 * s.punctures;
    return b;
}

} // namespace curvegraph
