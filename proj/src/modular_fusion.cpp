#include "tsg/modular_fusion.hpp"

#include "tsg/errors.hpp"

#include <cctype>
#include <cstdlib>
#include <utility>

namespace tsg {

namespace {

void require_prime(int p)
{
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
        throw PreconditionError("p = " + std::to_string(p) + " is not prime");
}

void require_index(int p, int i)
{
    if (i < 0 || i > p - 1)
        throw PreconditionError("index " + std::to_string(i) + " outside [0, " + std::to_string(p - 1) + "]");
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p)
{
    // Fermat; p is prime.
    std::uint64_t result = 1;
    std::uint64_t base = a % p;
    for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1U)
            result = result * base % p;
        base = base * base % p;
    }
    return static_cast<std::uint32_t>(result);
}

} // namespace

FusionVector::FusionVector(int p) : p_(p)
{
    require_prime(p);
    coeffs_.assign(static_cast<std::size_t>(p), BigInt(0));
}

FusionVector::FusionVector(int p, std::vector<BigInt> coeffs) : p_(p), coeffs_(std::move(coeffs))
{
    require_prime(p);
    if (coeffs_.size() != static_cast<std::size_t>(p))
        throw PreconditionError("fusion vector needs exactly p coefficients");
    for (const auto& c : coeffs_)
        if (sgn(c) < 0)
            throw PreconditionError("fusion vector coefficients must be non-negative");
}

FusionVector FusionVector::basis(int p, int index, const BigInt& count)
{
    FusionVector v(p);
    require_index(p, index);
    v[index] = count;
    return v;
}

BigInt FusionVector::dimension() const
{
    BigInt dim = 0;
    for (int i = 0; i < p_; ++i)
        dim += (i + 1) * coeffs_[static_cast<std::size_t>(i)];
    return dim;
}

bool FusionVector::is_zero() const
{
    for (const auto& c : coeffs_)
        if (sgn(c) != 0)
            return false;
    return true;
}

FusionVector& FusionVector::operator+=(const FusionVector& other)
{
    if (other.p_ != p_)
        throw PreconditionError("fusion vectors over different primes");
    for (int i = 0; i < p_; ++i)
        coeffs_[static_cast<std::size_t>(i)] += other.coeffs_[static_cast<std::size_t>(i)];
    return *this;
}

FusionVector operator*(const BigInt& c, FusionVector v)
{
    for (auto& x : v.coeffs_)
        x *= c;
    return v;
}

std::string FusionVector::to_string() const
{
    std::string out;
    for (int i = 0; i < p_; ++i) {
        const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
        if (sgn(c) == 0)
            continue;
        if (!out.empty())
            out += " + ";
        if (c != 1)
            out += c.get_str() + "·";
        out += "V" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

FusionVector FusionVector::parse(int p, const std::string& text)
{
    FusionVector out(p);
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    if (s == "0")
        return out;
    // Normalise the middle dot to '*'.
    for (std::size_t pos; (pos = s.find("·")) != std::string::npos;)
        s.replace(pos, std::string("·").size(), "*");

    std::size_t pos = 0;
    auto fail = [&](const std::string& why) -> FusionVector {
        throw PreconditionError("cannot parse fusion vector '" + text + "': " + why);
    };
    if (s.empty())
        return fail("empty");
    while (pos < s.size()) {
        BigInt count = 1;
        const std::size_t digits_begin = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos > digits_begin) {
            count = BigInt(s.substr(digits_begin, pos - digits_begin));
            if (pos < s.size() && s[pos] == '*')
                ++pos;
        }
        if (pos >= s.size() || (s[pos] != 'V' && s[pos] != 'v'))
            return fail("expected 'V'");
        ++pos;
        const std::size_t idx_begin = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == idx_begin)
            return fail("missing index after 'V'");
        const long index = std::strtol(s.substr(idx_begin, pos - idx_begin).c_str(), nullptr, 10);
        if (index < 0 || index > p - 1)
            return fail("index out of range");
        out[static_cast<int>(index)] += count;
        if (pos < s.size()) {
            if (s[pos] != '+')
                return fail("expected '+'");
            ++pos;
            if (pos == s.size())
                return fail("trailing '+'");
        }
    }
    return out;
}

FusionVector fuse_basis(int p, int m, int n)
{
    require_prime(p);
    require_index(p, m);
    require_index(p, n);
    FusionVector out(p);
    // Each pass either finishes with the ladder or peels off d projective
    // summands and continues with strictly smaller indices.
    while (m >= 0 && n >= 0) {
        if (m + n <= p - 1) {
            for (int j = std::abs(m - n); j <= m + n; j += 2)
                out[j] += 1;
            break;
        }
        const int d = m + n - (p - 2);
        out[p - 1] += d;
        m -= d;
        n -= d;
    }
    return out;
}

FusionVector fuse(const FusionVector& a, const FusionVector& b)
{
    if (a.p() != b.p())
        throw PreconditionError("fuse: operands over different primes");
    const int p = a.p();
    FusionVector out(p);
    for (int i = 0; i < p; ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (int j = 0; j < p; ++j) {
            if (sgn(b[j]) == 0)
                continue;
            const BigInt weight = a[i] * b[j];
            const FusionVector term = fuse_basis(p, i, j);
            for (int k = 0; k < p; ++k)
                out[k] += weight * term[k];
        }
    }
    return out;
}

FusionVector tensor_power(const FusionVector& v, unsigned n)
{
    FusionVector result = FusionVector::basis(v.p(), 0);
    FusionVector base = v;
    while (n > 0) {
        if (n & 1U)
            result = fuse(result, base);
        n >>= 1;
        if (n > 0)
            base = fuse(base, base);
    }
    return result;
}

BigInt ts(const FusionVector& v) { return v[0]; }

FpMatrix::FpMatrix(int p, int dim) : p_(p), dim_(dim)
{
    require_prime(p);
    if (dim < 0)
        throw PreconditionError("negative matrix dimension");
    data_.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), 0);
}

FpMatrix FpMatrix::identity(int p, int dim)
{
    FpMatrix out(p, dim);
    for (int i = 0; i < dim; ++i)
        out.set(i, i, 1);
    return out;
}

FpMatrix FpMatrix::jordan_block(int p, int dim)
{
    FpMatrix out = identity(p, dim);
    for (int i = 0; i + 1 < dim; ++i)
        out.set(i, i + 1, 1);
    return out;
}

void FpMatrix::set(int r, int c, long value)
{
    const long reduced = ((value % p_) + p_) % p_;
    data_[index(r, c)] = static_cast<std::uint32_t>(reduced);
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const
{
    FpMatrix out(p_, dim_);
    for (int i = 0; i < dim_; ++i)
        for (int k = 0; k < dim_; ++k) {
            const std::uint64_t a = (*this)(i, k);
            if (a == 0)
                continue;
            for (int j = 0; j < dim_; ++j)
                out.data_[out.index(i, j)] =
                    static_cast<std::uint32_t>((out.data_[out.index(i, j)] + a * rhs(k, j)) % static_cast<std::uint64_t>(p_));
        }
    return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& rhs) const
{
    FpMatrix out(p_, dim_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = static_cast<std::uint32_t>((data_[i] + static_cast<std::uint32_t>(p_) - rhs.data_[i]) % static_cast<std::uint32_t>(p_));
    return out;
}

FpMatrix FpMatrix::kronecker(const FpMatrix& rhs) const
{
    FpMatrix out(p_, dim_ * rhs.dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < rhs.dim_; ++k)
                for (int l = 0; l < rhs.dim_; ++l)
                    out.set(i * rhs.dim_ + k, j * rhs.dim_ + l,
                            static_cast<long>((*this)(i, j)) * static_cast<long>(rhs(k, l)));
    return out;
}

int FpMatrix::rank() const
{
    std::vector<std::uint32_t> a = data_;
    const auto p = static_cast<std::uint64_t>(p_);
    auto at = [&](int r, int c) -> std::uint32_t& { return a[index(r, c)]; };
    int rank = 0;
    for (int col = 0; col < dim_ && rank < dim_; ++col) {
        int pivot = -1;
        for (int r = rank; r < dim_; ++r)
            if (at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        for (int c = 0; c < dim_; ++c)
            std::swap(at(pivot, c), at(rank, c));
        const std::uint64_t inv = mod_inverse(at(rank, col), static_cast<std::uint32_t>(p_));
        for (int c = 0; c < dim_; ++c)
            at(rank, c) = static_cast<std::uint32_t>(at(rank, c) * inv % p);
        for (int r = 0; r < dim_; ++r) {
            if (r == rank || at(r, col) == 0)
                continue;
            const std::uint64_t factor = at(r, col);
            for (int c = 0; c < dim_; ++c)
                at(r, c) = static_cast<std::uint32_t>((at(r, c) + (p - factor) * at(rank, c)) % p);
        }
        ++rank;
    }
    return rank;
}

FusionVector jordan_oracle(int p, int m, int n)
{
    require_prime(p);
    require_index(p, m);
    require_index(p, n);
    const FpMatrix g = FpMatrix::jordan_block(p, m + 1).kronecker(FpMatrix::jordan_block(p, n + 1));
    const int dim = g.dim();
    const FpMatrix nilpotent = g - FpMatrix::identity(p, dim);

    // ranks[s] = rank N^s, until it reaches 0.
    std::vector<int> ranks{dim};
    FpMatrix power = FpMatrix::identity(p, dim);
    while (ranks.back() > 0) {
        power = power * nilpotent;
        ranks.push_back(power.rank());
    }
    // at_least[s] = #blocks of size >= s.
    const auto max_size = static_cast<int>(ranks.size()) - 1;
    if (max_size > p)
        throw Error("jordan_oracle: block larger than p (not a Z/pZ representation)");
    FusionVector out(p);
    for (int s = 1; s <= max_size; ++s) {
        const int at_least = ranks[static_cast<std::size_t>(s - 1)] - ranks[static_cast<std::size_t>(s)];
        const int at_least_next = s + 1 <= max_size ? ranks[static_cast<std::size_t>(s)] - ranks[static_cast<std::size_t>(s + 1)] : 0;
        out[s - 1] = at_least - at_least_next;
    }
    return out;
}

GrowthSeries ts_series_modular(const FusionVector& v, unsigned step, unsigned max_k)
{
    if (step < 1)
        throw PreconditionError("ts_series_modular: step must be at least 1");
    if (v.is_zero())
        throw PreconditionError("ts_series_modular: zero seed");
    GrowthSeries s;
    s.step = step;
    s.dim_v = v.dimension().get_ui();
    const FusionVector stride = tensor_power(v, step);
    FusionVector acc = FusionVector::basis(v.p(), 0);
    for (unsigned k = 1; k <= max_k; ++k) {
        acc = fuse(acc, stride);
        s.values.push_back(ts(acc));
    }
    return s;
}

} // namespace tsg
