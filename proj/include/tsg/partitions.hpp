#pragma once

// Dominant weights of SL_m as partitions with at most m parts.

#include "tsg/numeric.hpp"

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace tsg {

/// Weakly decreasing tuple of non-negative integers, stored zero-padded to
/// its rank m.
class Partition {
public:
    Partition() = default;

    /// Throws InvalidPartition unless `parts` is weakly decreasing,
    /// non-negative and has at most `rank` entries.
    Partition(std::vector<int> parts, int rank);

    int rank() const noexcept { return static_cast<int>(parts_.size()); }
    std::span<const int> parts() const noexcept { return parts_; }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
    int size() const noexcept { return size_; }

    /// Number of nonzero parts.
    int length() const noexcept;

    /// Conjugate shape padded to rank max(part, 1); used by the
    /// hook-length identity f^λ = f^λ'.
    Partition conjugate() const;

    /// "(3,1)", trailing zeros dropped; the empty partition prints as "∅".
    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Class of a partition modulo full columns (1,...,1); the representative has
/// last coordinate 0.
struct SlWeight {
    Partition canonical;

    int rank() const noexcept { return canonical.rank(); }
    friend auto operator<=>(const SlWeight&, const SlWeight&) = default;
    friend bool operator==(const SlWeight&, const SlWeight&) = default;
};

struct DualWeightResult {
    Partition dual;
    long excess = 0; // m·λ₁ − n
};

SlWeight canonicalize(const std::vector<int>& parts, int rank);
SlWeight canonicalize(const Partition& lambda);

/// ∏_{i<j} (λ_i − λ_j + j − i)/(j − i).
BigInt weyl_dimension(const Partition& lambda);

/// Highest weight of the dual representation, shifted by λ₁ full columns:
/// (λ₁−λ_m, ..., λ₁−λ₂, 0). Throws PreconditionError if size(lambda) != n.
DualWeightResult dual_weight(const Partition& lambda, int n);

/// |x_i − n/m| < n^θ for every i, decided with exact integer arithmetic as
/// |m·x_i − n|^den < n^num · m^den.
bool is_close_to_mean(std::span<const int> parts, int n, int m, RationalExponent theta = {});

/// Number of standard Young tableaux of the shape, n!/∏ hooks.
BigInt hook_syt_count(const Partition& lambda);

/// All partitions of n with at most m parts, in descending lexicographic order.
std::vector<Partition> partitions_of(int n, int m);

} // namespace tsg
