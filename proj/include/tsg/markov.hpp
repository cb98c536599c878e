#pragma once

// Dimension-ratio vectors Q(V) and the column-stochastic matrices P(S) of
// additive maps on R(Z/pZ). Everything is exact rational arithmetic.

#include "tsg/modular_fusion.hpp"
#include "tsg/numeric.hpp"

#include <string>
#include <vector>

namespace tsg {

/// Probability vector; entries sum to exactly 1.
struct RatioVector {
    int p = 0;
    std::vector<Rational> entries;

    friend bool operator==(const RatioVector&, const RatioVector&) = default;
};

/// p×p non-negative integer matrix of an additive map, column j = image of V_j.
class IntegerRingMap {
public:
    explicit IntegerRingMap(int p);
    IntegerRingMap(int p, const std::vector<std::vector<long>>& rows);

    int p() const noexcept { return p_; }
    const BigInt& operator()(int r, int c) const { return data_[index(r, c)]; }
    BigInt& operator()(int r, int c) { return data_[index(r, c)]; }

    FusionVector column(int c) const;
    IntegerRingMap compose(const IntegerRingMap& inner) const; // this ∘ inner

    friend bool operator==(const IntegerRingMap&, const IntegerRingMap&) = default;

private:
    std::size_t index(int r, int c) const
    {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(p_) + static_cast<std::size_t>(c);
    }

    int p_;
    std::vector<BigInt> data_;
};

/// Column-stochastic p×p rational matrix.
class TransitionMatrix {
public:
    /// Throws PreconditionError on a negative entry or a column that does not
    /// sum to 1.
    TransitionMatrix(int p, std::vector<Rational> row_major);

    static TransitionMatrix identity(int p);

    int p() const noexcept { return p_; }
    const Rational& operator()(int r, int c) const { return data_[index(r, c)]; }

    TransitionMatrix operator*(const TransitionMatrix& rhs) const;
    RatioVector operator*(const RatioVector& v) const;
    TransitionMatrix pow(unsigned n) const;

    RatioVector column(int c) const;
    std::string to_string() const; // rows "[a, b, ...]", one per line

    friend bool operator==(const TransitionMatrix&, const TransitionMatrix&) = default;

private:
    std::size_t index(int r, int c) const
    {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(p_) + static_cast<std::size_t>(c);
    }

    int p_;
    std::vector<Rational> data_;
};

/// Entry i = (i+1)·a_i / dim V. Throws PreconditionError on the zero vector.
RatioVector q_of(const FusionVector& v);

/// Column i = q_of(S(V_i)). Throws PreconditionError on a zero column.
TransitionMatrix p_of_map(const IntegerRingMap& s);

/// [S] of V ↦ V ⊗ w: column j is w ⊗ V_j.
IntegerRingMap fusion_matrix(const FusionVector& w);

/// P(V ↦ V ⊗ w), built column by column through q_of.
TransitionMatrix p_of_tensor_by(const FusionVector& w);

/// The same matrix by conjugation, D·[S]·D⁻¹/dim w with D = diag(1..p).
TransitionMatrix p_of_tensor_by_conjugation(const FusionVector& w);

/// max_i of the non-projective mass Σ_{r<p−1} P(T^{p−1})_{r,i}, where T is
/// tensoring by w. Throws PreconditionError if some column of P(T^{p−1})
/// has a zero projective entry.
Rational decay_rate(const FusionVector& w);

/// Σ of the first p−1 entries.
Rational non_projective_mass(const RatioVector& v);

/// The p = 2 counterexample map [[2,1],[0,1]].
IntegerRingMap example_map();

} // namespace tsg
