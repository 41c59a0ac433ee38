#pragma once

#include "cubic/cores.hpp"
#include "cubic/factors.hpp"

namespace cubic {

// Oddness: minimum number of odd circuits over all 2-factors; in a cubic
// graph the 2-factors are exactly the complements of perfect matchings.
// Weak oddness: minimum number of odd components over complements of joins
// (isolated J-vertices count). Both require a bridgeless input.
struct OddnessResult {
    int value = 0;
    EdgeSubset witness;  // the matching (resp. join) achieving the minimum
};

OddnessResult oddness(const CubicGraph& g);
OddnessResult weak_oddness(const CubicGraph& g);

struct ParityReport {
    int oddness = 0;
    int weak_oddness = 0;
    EdgeSubset oddness_witness;
    EdgeSubset weak_oddness_witness;
};

ParityReport parity_report(const CubicGraph& g);

// Both sides of the odd-component bound: sum over the triple of the odd
// component counts of the join complements against l2. `holds` is a theorem,
// so false signals an implementation bug somewhere upstream.
struct Theorem4Check {
    long long lhs = 0;
    long long rhs = 0;
    bool holds = false;
};

Theorem4Check check_odd_component_bound(const CoverTriple& t);

}  // namespace cubic
