#pragma once

// Finite-group characters over C: tensor powers, decompositions, and the
// facts about faithful and regular representations.

#include "tsg/numeric.hpp"

#include <complex>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tsg {

/// a + b·i with rational a, b.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational conj() const { return {re, -im}; }
    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
    std::string to_string() const;

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b)
    {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

/// Values on conjugacy classes. `exact` is present when every value is a
/// Gaussian rational; `approx` is always filled.
class ClassFunction {
public:
    ClassFunction() = default;
    explicit ClassFunction(std::vector<GaussianRational> exact);
    explicit ClassFunction(std::vector<std::complex<double>> approx);

    /// Same value on every class.
    static ClassFunction constant(std::size_t classes, long value);

    std::size_t size() const noexcept { return approx_.size(); }
    bool is_exact() const noexcept { return exact_.has_value(); }
    const std::vector<std::complex<double>>& approx() const noexcept { return approx_; }
    const std::vector<GaussianRational>& exact() const { return *exact_; }

    ClassFunction operator*(const ClassFunction& rhs) const;
    ClassFunction operator+(const ClassFunction& rhs) const;

private:
    std::vector<std::complex<double>> approx_;
    std::optional<std::vector<GaussianRational>> exact_;
};

struct Irrep {
    std::string name;
    ClassFunction character;
};

class CharacterTable {
public:
    /// Validates: class sizes sum to the order, the identity class comes first
    /// (size 1), Σ dim² = |G|, and the rows are orthonormal within 1e−9.
    CharacterTable(std::string name, long order, std::vector<long> class_sizes, std::vector<Irrep> irreps);

    /// Text format: "<order> <classes>", a line of class sizes, then one line
    /// per irrep: a name followed by one value "a", "a+bi" or "bi" per class
    /// with rational a, b. Blank lines and '#' comments are ignored.
    static CharacterTable parse(std::istream& in, std::string name = "table");
    static CharacterTable parse_file(const std::string& path);
    static CharacterTable builtin(const std::string& name);
    static std::vector<std::string> builtin_names();

    const std::string& name() const noexcept { return name_; }
    long order() const noexcept { return order_; }
    const std::vector<long>& class_sizes() const noexcept { return class_sizes_; }
    const std::vector<Irrep>& irreps() const noexcept { return irreps_; }
    std::size_t class_count() const noexcept { return class_sizes_.size(); }

    /// Throws PreconditionError on an unknown name.
    std::size_t index_of(const std::string& irrep) const;
    std::size_t trivial_index() const;
    std::vector<long> dimensions() const;

    /// |G| at the identity, 0 elsewhere.
    ClassFunction regular_character() const;

    /// Serialises into the text format accepted by parse (exact tables only).
    std::string to_text() const;

private:
    std::string name_;
    long order_;
    std::vector<long> class_sizes_;
    std::vector<Irrep> irreps_;
};

/// Either exact or approximate value of an inner product.
struct InnerProduct {
    std::optional<GaussianRational> exact;
    std::complex<double> approx;
};

/// (1/|G|) Σ_c |c|·f(c)·conj(g(c)).
InnerProduct inner_product(const CharacterTable& t, const ClassFunction& f, const ClassFunction& g);

/// Multiplicities ⟨f, χ_i⟩. Throws InvalidCharacter if one is negative or
/// not an integer (exactly, or within 1e−6 on the float path).
std::vector<long> decompose(const CharacterTable& t, const ClassFunction& f);

/// Pointwise f^d; d = 0 gives the trivial character.
ClassFunction tensor_power_char(const ClassFunction& f, unsigned d);

/// f(c) = f(e) only at the identity class.
bool is_faithful(const CharacterTable& t, const ClassFunction& f);

/// Least d in [1, max_d] with irrep `target` in f^d; nullopt if none.
/// Throws PreconditionError if f is not faithful.
std::optional<unsigned> first_power_containing(const CharacterTable& t, const ClassFunction& f,
                                               std::size_t target, unsigned max_d);

struct RegularCheck {
    bool ok = false;
    long degree = 0;
    std::vector<long> multiplicities; // of f·χ_reg
    long trivial_summands = 0;
};

/// f ⊗ regular = degree(f) copies of the regular representation, with
/// exactly degree(f) trivial summands.
RegularCheck regular_tensor_check(const CharacterTable& t, const ClassFunction& f);

struct RegularPower {
    std::optional<unsigned> power;   // least N with (1+f)^N ⊇ regular
    bool monotone_next = false;      // N+1 and N+2 also contain it
};

/// Throws PreconditionError if f is not faithful; power is empty when no
/// N <= cap works.
RegularPower min_power_containing_regular(const CharacterTable& t, const ClassFunction& f, unsigned cap);

} // namespace tsg
