#include "tsg/torus.hpp"

#include "tsg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace tsg {

long TorusWeights::sum() const { return std::accumulate(k.begin(), k.end(), 0L); }

namespace {

void check(const TorusWeights& w, int n)
{
    if (w.k.empty())
        throw PreconditionError("torus weights must be non-empty");
    if (n < 0)
        throw PreconditionError("tensor exponent must be non-negative");
}

long max_abs(const TorusWeights& w)
{
    long out = 0;
    for (long x : w.k)
        out = std::max(out, std::labs(x));
    return out;
}

} // namespace

BigInt zero_weight_count(const TorusWeights& w, int n)
{
    check(w, n);
    const long reach = static_cast<long>(n) * max_abs(w);
    const long width = 2 * reach + 1;
    std::vector<BigInt> cur(static_cast<std::size_t>(width), 0);
    std::vector<BigInt> next(static_cast<std::size_t>(width), 0);
    cur[static_cast<std::size_t>(reach)] = 1;

    for (int step = 0; step < n; ++step) {
#pragma omp parallel for schedule(static)
        for (long s = 0; s < width; ++s) {
            BigInt acc = 0;
            for (long ki : w.k) {
                const long from = s - ki;
                if (from >= 0 && from < width)
                    acc += cur[static_cast<std::size_t>(from)];
            }
            next[static_cast<std::size_t>(s)] = std::move(acc);
        }
        std::swap(cur, next);
    }
    return cur[static_cast<std::size_t>(reach)];
}

BigInt zero_weight_count_serial(const TorusWeights& w, int n)
{
    check(w, n);
    const long reach = static_cast<long>(n) * max_abs(w);
    const long width = 2 * reach + 1;
    std::vector<BigInt> cur(static_cast<std::size_t>(width), 0);
    cur[static_cast<std::size_t>(reach)] = 1;
    for (int step = 0; step < n; ++step) {
        std::vector<BigInt> next(static_cast<std::size_t>(width), 0);
        for (long s = 0; s < width; ++s) {
            if (sgn(cur[static_cast<std::size_t>(s)]) == 0)
                continue;
            for (long ki : w.k) {
                const long to = s + ki;
                if (to >= 0 && to < width)
                    next[static_cast<std::size_t>(to)] += cur[static_cast<std::size_t>(s)];
            }
        }
        cur = std::move(next);
    }
    return cur[static_cast<std::size_t>(reach)];
}

Rational zero_weight_probability(const TorusWeights& w, int n)
{
    Rational out(zero_weight_count(w, n), power(BigInt(static_cast<long>(w.rank())), static_cast<unsigned long>(n)));
    out.canonicalize();
    return out;
}

BernsteinBound bernstein_zero_bound(const TorusWeights& w, int n)
{
    check(w, n);
    const long total = w.sum();
    if (total <= 0)
        throw InapplicableBound("Bernstein bound needs a positive weight sum, got " + std::to_string(total));

    const auto m = static_cast<long>(w.rank());
    const Rational mean(total, m);
    Rational second_moment = 0;
    Rational b;
    bool first = true;
    for (long ki : w.k) {
        const Rational y = mean - ki;
        second_moment += y * y;
        if (first || y > b)
            b = y;
        first = false;
    }
    second_moment /= m;

    BernsteinBound out;
    out.input.t = Rational(static_cast<long>(n) * total, m + 1);
    out.input.t.canonicalize();
    out.input.v = second_moment * n;
    out.input.b = b;

    const Rational denom = 2 * (out.input.v + out.input.b * out.input.t / 3);
    if (sgn(denom) <= 0) {
        // Every Y_i is 0, so Z_n = 0 < t and the tail probability vanishes.
        out.bound = 0.0;
        return out;
    }
    const Rational exponent = out.input.t * out.input.t / denom;
    out.bound = std::exp(-exponent.get_d());
    return out;
}

BigInt diagonal_zero_count(int m, int n)
{
    if (m < 1 || n < 0)
        throw PreconditionError("diagonal_zero_count: need m >= 1 and n >= 0");
    return factorial(static_cast<unsigned long>(m) * static_cast<unsigned long>(n)) /
           power(factorial(static_cast<unsigned long>(n)), static_cast<unsigned long>(m));
}

} // namespace tsg
