#include "oracles.hpp"

#include "tsg/pieri.hpp"

#include <doctest.h>

using namespace tsg;

namespace {

Decomposition make(int m, int n, std::initializer_list<std::pair<std::vector<int>, long>> entries)
{
    Decomposition d;
    d.m = m;
    d.n = n;
    for (const auto& [parts, mult] : entries)
        d.mults.emplace(Partition(parts, m), BigInt(mult));
    return d;
}

} // namespace

TEST_SUITE("pieri")
{
    TEST_CASE("pieri_step examples")
    {
        const Decomposition unit = Decomposition::unit(2);
        CHECK(pieri_step(unit).mults == make(2, 1, {{{1}, 1}}).mults);
        CHECK(pieri_step(make(2, 1, {{{1}, 1}})).mults == make(2, 2, {{{2}, 1}, {{1, 1}, 1}}).mults);
        CHECK(pieri_step(make(2, 2, {{{2}, 1}, {{1, 1}, 1}})).mults == make(2, 3, {{{3}, 1}, {{2, 1}, 2}}).mults);
        CHECK(pieri_step(unit).n == 1);
    }

    TEST_CASE("tensor_power_decomposition examples")
    {
        CHECK(tensor_power_decomposition(2, 2).mults == make(2, 2, {{{2}, 1}, {{1, 1}, 1}}).mults);
        CHECK(tensor_power_decomposition(2, 4).mults == make(2, 4, {{{4}, 1}, {{3, 1}, 3}, {{2, 2}, 2}}).mults);
        CHECK(tensor_power_decomposition(3, 3).mults ==
              make(3, 3, {{{3}, 1}, {{2, 1}, 2}, {{1, 1, 1}, 1}}).mults);
        CHECK(tensor_power_decomposition(1, 5).mults == make(1, 5, {{{5}, 1}}).mults);
    }

    TEST_CASE("iteration order is descending lexicographic")
    {
        const auto d = tensor_power_decomposition(3, 4);
        std::vector<std::string> keys;
        for (const auto& [lambda, mult] : d.mults)
            keys.push_back(lambda.to_string());
        CHECK(keys == std::vector<std::string>{"(4)", "(3,1)", "(2,2)", "(2,1,1)"});
    }

    TEST_CASE("parallel and serial steps agree")
    {
        for (int m = 1; m <= 5; ++m) {
            Decomposition a = Decomposition::unit(m);
            Decomposition b = a;
            for (int n = 0; n < 16; ++n) {
                a = pieri_step(a);
                b = pieri_step_serial(b);
                REQUIRE(a.mults == b.mults);
            }
        }
    }

    TEST_CASE("canonical merge")
    {
        const auto merged = tensor_power_decomposition(2, 4).canonical();
        CHECK(merged.size() == 3);
        CHECK(merged.at(Partition({4}, 2)) == 1);
        CHECK(merged.at(Partition({2}, 2)) == 3);
        CHECK(merged.at(Partition({}, 2)) == 2);
    }

    TEST_CASE("trivial multiplicity")
    {
        CHECK(trivial_multiplicity(2, 3) == 0);
        CHECK(trivial_multiplicity(2, 4) == 2);
        CHECK(trivial_multiplicity(3, 3) == 1);
        CHECK(trivial_multiplicity(3, 0) == 1);
    }

    TEST_CASE("dimension conservation and oracle equivalence")
    {
        for (int m = 1; m <= 4; ++m) {
            Decomposition d = Decomposition::unit(m);
            for (int n = 0; n <= 14; ++n) {
                CHECK(d.total_dimension() == power(BigInt(m), static_cast<unsigned long>(n)));
                if (n <= 12)
                    for (const auto& [lambda, mult] : d.mults) {
                        CHECK(lambda.size() == n);
                        CHECK(mult == hook_syt_count(lambda));
                        CHECK(mult == oracle::syt_by_corners({lambda.parts().begin(), lambda.parts().end()}));
                    }
                d = pieri_step(d);
            }
        }
    }

    TEST_CASE("mean mass report: m=2 n=2")
    {
        const auto r = mean_mass_report(tensor_power_decomposition(2, 2));
        CHECK(r.close_keys == 2);
        CHECK(r.total_far == 0);
        REQUIRE(r.max_close_witness);
        // tie between (2) and (1,1): lexicographically smallest wins
        CHECK(r.max_close_witness->first == Partition({1, 1}, 2));
        CHECK(r.max_close_witness->second == 1);
    }

    TEST_CASE("mean mass report: m=2 n=10")
    {
        const auto r = mean_mass_report(tensor_power_decomposition(2, 10));
        CHECK(r.dim_close + r.dim_far == 1024);
        // Σ f^λ over two-row shapes of 10 is C(10,5).
        CHECK(r.total_close + r.total_far == 252);
        // Close shapes (9,1)..(5,5); far: (10). Oracle multiplicities 9,35,75,90,42.
        CHECK(r.total_far == 1);
        CHECK(r.close_keys == 5);
        REQUIRE(r.max_close_witness);
        CHECK(r.max_close_witness->first == Partition({6, 4}, 2));
        CHECK(r.max_close_witness->second == 90);
    }

    TEST_CASE("mean mass report: empty close set")
    {
        // n = 0: n^θ = 0, so nothing is strictly within it.
        const auto r = mean_mass_report(Decomposition::unit(2));
        CHECK_FALSE(r.max_close_witness);
        CHECK(r.total_far == 1);
    }

    TEST_CASE("mean mass domination and witness pigeonhole")
    {
        for (int m = 2; m <= 3; ++m) {
            Decomposition d = Decomposition::unit(m);
            for (int n = 1; n <= 60; ++n) {
                d = pieri_step(d);
                const auto r = mean_mass_report(d);
                CHECK(r.total_close + r.total_far == d.total_multiplicity());
                CHECK(r.dim_close + r.dim_far == power(BigInt(m), static_cast<unsigned long>(n)));
                if (r.max_close_witness)
                    CHECK(r.max_close_witness->second * static_cast<unsigned long>(r.close_keys) >= r.total_close);
                if (n >= 40)
                    CHECK(Rational(r.dim_close, power(BigInt(m), static_cast<unsigned long>(n))) > Rational(1, 2));
            }
        }
    }

    TEST_CASE("ts_series_sl")
    {
        auto s = ts_series_sl(2, 4);
        CHECK(s.values == std::vector<BigInt>{1, 2, 5, 14});
        CHECK(s.step == 2);
        CHECK(s.dim_v == 2);
        s = ts_series_sl(3, 2);
        CHECK(s.values == std::vector<BigInt>{1, 5});
        CHECK(ts_series_sl(2, 1).values == std::vector<BigInt>{1});
        for (int m = 2; m <= 3; ++m) {
            const auto series = ts_series_sl(m, 6);
            for (std::size_t l = 0; l < series.values.size(); ++l) {
                CHECK(series.values[l] > 0);
                CHECK(series.values[l] == trivial_multiplicity(m, m * static_cast<int>(l + 1)));
            }
        }
    }
}
