#include "tsg/markov.hpp"

#include "tsg/errors.hpp"

namespace tsg {

IntegerRingMap::IntegerRingMap(int p) : p_(p)
{
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
        throw PreconditionError("p = " + std::to_string(p) + " is not prime");
    data_.assign(static_cast<std::size_t>(p) * static_cast<std::size_t>(p), BigInt(0));
}

IntegerRingMap::IntegerRingMap(int p, const std::vector<std::vector<long>>& rows) : IntegerRingMap(p)
{
    if (rows.size() != static_cast<std::size_t>(p))
        throw PreconditionError("ring map needs p rows");
    for (int r = 0; r < p; ++r) {
        if (rows[static_cast<std::size_t>(r)].size() != static_cast<std::size_t>(p))
            throw PreconditionError("ring map needs p columns");
        for (int c = 0; c < p; ++c) {
            const long x = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (x < 0)
                throw PreconditionError("ring map entries must be non-negative");
            (*this)(r, c) = x;
        }
    }
}

FusionVector IntegerRingMap::column(int c) const
{
    std::vector<BigInt> coeffs;
    coeffs.reserve(static_cast<std::size_t>(p_));
    for (int r = 0; r < p_; ++r)
        coeffs.push_back((*this)(r, c));
    return FusionVector(p_, std::move(coeffs));
}

IntegerRingMap IntegerRingMap::compose(const IntegerRingMap& inner) const
{
    if (inner.p_ != p_)
        throw PreconditionError("compose: maps over different primes");
    IntegerRingMap out(p_);
    for (int i = 0; i < p_; ++i)
        for (int k = 0; k < p_; ++k)
            for (int j = 0; j < p_; ++j)
                out(i, j) += (*this)(i, k) * inner(k, j);
    return out;
}

TransitionMatrix::TransitionMatrix(int p, std::vector<Rational> row_major) : p_(p), data_(std::move(row_major))
{
    if (p < 1 || data_.size() != static_cast<std::size_t>(p) * static_cast<std::size_t>(p))
        throw PreconditionError("transition matrix must be p×p");
    for (int c = 0; c < p_; ++c) {
        Rational sum = 0;
        for (int r = 0; r < p_; ++r) {
            if (sgn((*this)(r, c)) < 0)
                throw PreconditionError("transition matrix has a negative entry");
            sum += (*this)(r, c);
        }
        if (sum != 1)
            throw PreconditionError("column " + std::to_string(c) + " sums to " + sum.get_str());
    }
}

TransitionMatrix TransitionMatrix::identity(int p)
{
    std::vector<Rational> data(static_cast<std::size_t>(p) * static_cast<std::size_t>(p), Rational(0));
    for (int i = 0; i < p; ++i)
        data[static_cast<std::size_t>(i) * static_cast<std::size_t>(p) + static_cast<std::size_t>(i)] = 1;
    return TransitionMatrix(p, std::move(data));
}

TransitionMatrix TransitionMatrix::operator*(const TransitionMatrix& rhs) const
{
    if (rhs.p_ != p_)
        throw PreconditionError("matrix dimensions differ");
    std::vector<Rational> out(data_.size(), Rational(0));
    for (int i = 0; i < p_; ++i)
        for (int k = 0; k < p_; ++k) {
            const Rational& a = (*this)(i, k);
            if (sgn(a) == 0)
                continue;
            for (int j = 0; j < p_; ++j)
                out[index(i, j)] += a * rhs(k, j);
        }
    return TransitionMatrix(p_, std::move(out));
}

RatioVector TransitionMatrix::operator*(const RatioVector& v) const
{
    if (v.p != p_ || v.entries.size() != static_cast<std::size_t>(p_))
        throw PreconditionError("vector dimension differs");
    RatioVector out{p_, std::vector<Rational>(static_cast<std::size_t>(p_), Rational(0))};
    for (int i = 0; i < p_; ++i)
        for (int k = 0; k < p_; ++k)
            out.entries[static_cast<std::size_t>(i)] += (*this)(i, k) * v.entries[static_cast<std::size_t>(k)];
    return out;
}

TransitionMatrix TransitionMatrix::pow(unsigned n) const
{
    TransitionMatrix result = identity(p_);
    TransitionMatrix base = *this;
    while (n > 0) {
        if (n & 1U)
            result = result * base;
        n >>= 1;
        if (n > 0)
            base = base * base;
    }
    return result;
}

RatioVector TransitionMatrix::column(int c) const
{
    RatioVector out{p_, {}};
    for (int r = 0; r < p_; ++r)
        out.entries.push_back((*this)(r, c));
    return out;
}

std::string TransitionMatrix::to_string() const
{
    std::string out;
    for (int r = 0; r < p_; ++r) {
        out += "[";
        for (int c = 0; c < p_; ++c) {
            if (c)
                out += ", ";
            out += (*this)(r, c).get_str();
        }
        out += "]\n";
    }
    return out;
}

RatioVector q_of(const FusionVector& v)
{
    const BigInt dim = v.dimension();
    if (sgn(dim) == 0)
        throw PreconditionError("Q is undefined on the zero representation");
    RatioVector out{v.p(), {}};
    for (int i = 0; i < v.p(); ++i) {
        Rational r(BigInt((i + 1) * v[i]), dim);
        r.canonicalize();
        out.entries.push_back(r);
    }
    return out;
}

TransitionMatrix p_of_map(const IntegerRingMap& s)
{
    const int p = s.p();
    std::vector<Rational> data(static_cast<std::size_t>(p) * static_cast<std::size_t>(p));
    for (int c = 0; c < p; ++c) {
        const FusionVector col = s.column(c);
        if (col.is_zero())
            throw PreconditionError("P(S) undefined: column " + std::to_string(c) + " of [S] is zero");
        const RatioVector q = q_of(col);
        for (int r = 0; r < p; ++r)
            data[static_cast<std::size_t>(r) * static_cast<std::size_t>(p) + static_cast<std::size_t>(c)] =
                q.entries[static_cast<std::size_t>(r)];
    }
    return TransitionMatrix(p, std::move(data));
}

IntegerRingMap fusion_matrix(const FusionVector& w)
{
    const int p = w.p();
    IntegerRingMap out(p);
    for (int j = 0; j < p; ++j) {
        const FusionVector col = fuse(w, FusionVector::basis(p, j));
        for (int r = 0; r < p; ++r)
            out(r, j) = col[r];
    }
    return out;
}

TransitionMatrix p_of_tensor_by(const FusionVector& w)
{
    if (w.is_zero())
        throw PreconditionError("cannot tensor by the zero representation");
    return p_of_map(fusion_matrix(w));
}

TransitionMatrix p_of_tensor_by_conjugation(const FusionVector& w)
{
    if (w.is_zero())
        throw PreconditionError("cannot tensor by the zero representation");
    const int p = w.p();
    const IntegerRingMap s = fusion_matrix(w);
    const BigInt dim = w.dimension();
    std::vector<Rational> data(static_cast<std::size_t>(p) * static_cast<std::size_t>(p));
    for (int r = 0; r < p; ++r)
        for (int c = 0; c < p; ++c) {
            Rational x(BigInt((r + 1) * s(r, c)), BigInt((c + 1) * dim));
            x.canonicalize();
            data[static_cast<std::size_t>(r) * static_cast<std::size_t>(p) + static_cast<std::size_t>(c)] = x;
        }
    return TransitionMatrix(p, std::move(data));
}

Rational non_projective_mass(const RatioVector& v)
{
    Rational sum = 0;
    for (int i = 0; i + 1 < v.p; ++i)
        sum += v.entries[static_cast<std::size_t>(i)];
    return sum;
}

Rational decay_rate(const FusionVector& w)
{
    const int p = w.p();
    const TransitionMatrix step = p_of_tensor_by(tensor_power(w, static_cast<unsigned>(p - 1)));
    Rational worst = 0;
    for (int c = 0; c < p; ++c) {
        if (sgn(step(p - 1, c)) == 0)
            throw PreconditionError("decay_rate: w^{⊗(p-1)} ⊗ V_" + std::to_string(c) +
                                    " has no projective summand");
        const Rational mass = non_projective_mass(step.column(c));
        if (mass > worst)
            worst = mass;
    }
    return worst;
}

IntegerRingMap example_map() { return IntegerRingMap(2, {{2, 1}, {0, 1}}); }

} // namespace tsg
