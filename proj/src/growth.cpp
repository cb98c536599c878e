#include "tsg/growth.hpp"

#include "tsg/errors.hpp"

#include <algorithm>
#include <cmath>

namespace tsg {

std::vector<double> nth_root_sequence(const GrowthSeries& s)
{
    std::vector<double> out;
    out.reserve(s.values.size());
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        const BigInt& a = s.values[i];
        if (sgn(a) <= 0) {
            out.push_back(0.0);
            continue;
        }
        const double n = static_cast<double>(s.step) * static_cast<double>(i + 1);
        out.push_back(std::exp(log_of(a) / n));
    }
    return out;
}

bool fekete_check(const GrowthSeries& s)
{
    const std::size_t len = s.values.size();
    for (std::size_t l = 1; l <= len; ++l)
        for (std::size_t k = 1; l + k <= len; ++k)
            if (s.values[l + k - 1] < s.values[l - 1] * s.values[k - 1])
                return false;
    return true;
}

GrowthEstimate estimate(const GrowthSeries& s)
{
    if (s.values.empty())
        throw PreconditionError("estimate: empty series");
    if (s.dim_v < 1)
        throw PreconditionError("estimate: dim_v must be positive");
    const auto roots = nth_root_sequence(s);
    GrowthEstimate est;
    est.lower = *std::max_element(roots.begin(), roots.end());
    est.upper = static_cast<double>(s.dim_v);
    est.fekete_ok = fekete_check(s);
    return est;
}

} // namespace tsg
