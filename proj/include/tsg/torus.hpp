#pragma once

// Zero-weight counts for one-dimensional torus actions on V^{⊗n} and the
// Bernstein tail bound that controls them.

#include "tsg/numeric.hpp"

#include <vector>

namespace tsg {

/// Weights k_1..k_m of t ↦ diag(t^{k_1}, ..., t^{k_m}).
struct TorusWeights {
    std::vector<long> k;

    std::size_t rank() const noexcept { return k.size(); }
    long sum() const;
};

/// Parameters fed to Bernstein's inequality for Z_n = Σ (k̄/m − X_i).
struct BernsteinInput {
    Rational t; // n·k̄/(m+1)
    Rational v; // n·E[Y²]
    Rational b; // max_i (k̄/m − k_i)
};

struct BernsteinBound {
    double bound = 1.0; // exp(−t²/(2(v + b·t/3)))
    BernsteinInput input;
};

/// #{(a_1..a_n) ∈ {1..m}^n : Σ k_{a_i} = 0}. DP over partial sums in
/// [−n·max|k|, n·max|k|], parallel over the sum range.
BigInt zero_weight_count(const TorusWeights& w, int n);

/// Same count with a plain sequential DP; kept as the reference for tests
/// and benchmarks.
BigInt zero_weight_count_serial(const TorusWeights& w, int n);

/// zero_weight_count / m^n.
Rational zero_weight_probability(const TorusWeights& w, int n);

/// Throws InapplicableBound when Σ k_i <= 0.
BernsteinBound bernstein_zero_bound(const TorusWeights& w, int n);

/// (mn)!/(n!)^m: dimension of the zero-weight space of V^{⊗mn} for the
/// diagonal torus of SL_m.
BigInt diagonal_zero_count(int m, int n);

} // namespace tsg
