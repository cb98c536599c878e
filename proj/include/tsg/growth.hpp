#pragma once

// Growth-rate analysis of trivial-summand sequences.
//
// A GrowthSeries holds a_k = TS(V^{⊗ step·k}) for k = 1..K. Finite data never
// pins down the limsup; estimate() reports the best observed root as a lower
// bound and dim V as the upper bound, with the Fekete flag telling whether the
// observed roots converge to the limit from below.

#include "tsg/numeric.hpp"

#include <cstdint>
#include <vector>

namespace tsg {

struct GrowthSeries {
    unsigned step = 1;
    std::vector<BigInt> values; // values[k-1] = a_k
    std::uint64_t dim_v = 1;
};

struct GrowthEstimate {
    double lower = 0.0;
    double upper = 0.0;
    bool fekete_ok = false;
};

/// a_k^{1/(step·k)} via logarithms; 0 where a_k = 0.
std::vector<double> nth_root_sequence(const GrowthSeries& s);

/// a_{l+k} >= a_l·a_k for every l, k with l + k <= K.
bool fekete_check(const GrowthSeries& s);

/// Throws PreconditionError on an empty series.
GrowthEstimate estimate(const GrowthSeries& s);

} // namespace tsg
