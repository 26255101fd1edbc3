#pragma once

#include "hodge/bipoly.hpp"

#include <string>
#include <vector>

namespace hodge {

/// One mismatched monomial between two polynomials.
struct TermDiff {
    int eu = 0;
    int ev = 0;
    Int a;
    Int b;

    friend bool operator==(const TermDiff&, const TermDiff&) = default;
};

/// Result of a consistency check. `diff` carries term-level mismatches of a
/// polynomial comparison; `failures` carries scalar mismatches (point counts
/// and the like). passed is true exactly when both are empty.
struct CheckReport {
    std::string name;
    bool passed = true;
    std::vector<TermDiff> diff;
    std::vector<std::string> failures;

    void fail(const std::string& what) {
        passed = false;
        failures.push_back(what);
    }
};

/// Term-by-term comparison of a against b.
CheckReport diff_report(const std::string& name, const BiPoly& a, const BiPoly& b);

} // namespace hodge
