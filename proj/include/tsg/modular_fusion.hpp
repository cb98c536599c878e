#pragma once

// The representation ring of Z/pZ over a field of characteristic p. V_i is
// the indecomposable of dimension i+1 (a single unipotent Jordan block), so
// R = Z V_0 ⊕ ... ⊕ Z V_{p-1}.

#include "tsg/growth.hpp"
#include "tsg/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace tsg {

class FusionVector {
public:
    /// Zero element of R(Z/pZ). Throws PreconditionError unless p is prime.
    explicit FusionVector(int p);
    FusionVector(int p, std::vector<BigInt> coeffs);

    /// count·V_index.
    static FusionVector basis(int p, int index, const BigInt& count = 1);

    int p() const noexcept { return p_; }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    const BigInt& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    BigInt& operator[](int i) { return coeffs_[static_cast<std::size_t>(i)]; }

    BigInt dimension() const;
    bool is_zero() const;

    FusionVector& operator+=(const FusionVector& other);
    friend FusionVector operator+(FusionVector a, const FusionVector& b) { return a += b; }
    friend FusionVector operator*(const BigInt& c, FusionVector v);
    friend bool operator==(const FusionVector&, const FusionVector&) = default;

    /// "V0 + 3·V4" in ascending index; "0" for the zero element.
    std::string to_string() const;

    /// Inverse of to_string, also accepting "3*V4" and "3V4" terms.
    static FusionVector parse(int p, const std::string& text);

private:
    int p_;
    std::vector<BigInt> coeffs_;
};

/// V_m ⊗ V_n by the closed form: the Clebsch-Gordan ladder when
/// m + n <= p − 1, otherwise d·V_{p−1} ⊕ V_{m−d} ⊗ V_{n−d} with d = m+n−p+2
/// and V_j = 0 for j < 0.
FusionVector fuse_basis(int p, int m, int n);

/// Bilinear extension of fuse_basis.
FusionVector fuse(const FusionVector& a, const FusionVector& b);

/// v^{⊗n} by repeated squaring; n = 0 gives V_0.
FusionVector tensor_power(const FusionVector& v, unsigned n);

/// Multiplicity of V_0.
BigInt ts(const FusionVector& v);

/// Dense square matrix over the field with p elements.
class FpMatrix {
public:
    FpMatrix(int p, int dim);

    static FpMatrix identity(int p, int dim);
    /// Unipotent Jordan block of size `dim` (ones on the diagonal and the
    /// superdiagonal).
    static FpMatrix jordan_block(int p, int dim);

    int p() const noexcept { return p_; }
    int dim() const noexcept { return dim_; }
    std::uint32_t operator()(int r, int c) const { return data_[index(r, c)]; }
    void set(int r, int c, long value);

    FpMatrix operator*(const FpMatrix& rhs) const;
    FpMatrix operator-(const FpMatrix& rhs) const;
    FpMatrix kronecker(const FpMatrix& rhs) const;

    /// Gaussian elimination with modular inverses.
    int rank() const;

private:
    std::size_t index(int r, int c) const
    {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(c);
    }

    int p_;
    int dim_;
    std::vector<std::uint32_t> data_;
};

/// V_m ⊗ V_n read off the Jordan form of J_{m+1} ⊗ J_{n+1} over F_p: with
/// N = g − I, the number of blocks of size >= s is rank N^{s−1} − rank N^s.
FusionVector jordan_oracle(int p, int m, int n);

/// ts(v^{⊗ step·k}) for k = 1..max_k.
GrowthSeries ts_series_modular(const FusionVector& v, unsigned step, unsigned max_k);

} // namespace tsg
