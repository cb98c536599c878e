#pragma once

// Decomposition of V^{⊗n} for the natural representation V of SL_m, built by
// repeatedly tensoring with V (Pieri's rule: add one box).

#include "tsg/growth.hpp"
#include "tsg/partitions.hpp"

#include <functional>
#include <map>
#include <optional>
#include <utility>

namespace tsg {

/// Multiplicities of the irreducible summands of V^{⊗n}, keyed by the size-n
/// partition and iterated in descending lexicographic order.
struct Decomposition {
    using Map = std::map<Partition, BigInt, std::greater<>>;

    int m = 1;
    int n = 0;
    Map mults;

    /// {∅: 1} at exponent 0.
    static Decomposition unit(int m);

    /// Merge keys that differ by full columns; keys become SlWeight
    /// representatives (last part 0).
    Map canonical() const;

    BigInt total_multiplicity() const;
    BigInt total_dimension() const;
};

/// Tensor with V. Parallel over the keys of the result: each target μ pulls
/// the multiplicities of the partitions μ − e_i.
Decomposition pieri_step(const Decomposition& d);

/// Reference implementation: each source λ pushes to every λ + e_i.
Decomposition pieri_step_serial(const Decomposition& d);

Decomposition tensor_power_decomposition(int m, int n);

/// Multiplicity of the trivial class in V^{⊗N}: the rectangle (N/m)^m when
/// m | N, otherwise 0.
BigInt trivial_multiplicity(int m, int N);

struct MeanMassReport {
    BigInt total_close;
    BigInt total_far;
    BigInt dim_close; // Σ mult·dim over close keys
    BigInt dim_far;
    std::size_t close_keys = 0;
    /// Close key of largest multiplicity; ties go to the lexicographically
    /// smallest partition. Empty when no key is close to the mean.
    std::optional<std::pair<Partition, BigInt>> max_close_witness;
};

MeanMassReport mean_mass_report(const Decomposition& d, RationalExponent theta = {});

/// a_l = TS(V^{⊗ m·l}) for l = 1..max_n; step m, dim_v m.
GrowthSeries ts_series_sl(int m, int max_n);

} // namespace tsg
